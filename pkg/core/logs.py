import logging
import sys

_FORMAT = "[%(name)s] %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """Route library diagnostics to stderr; reports own stdout."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))

    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(level.upper())
