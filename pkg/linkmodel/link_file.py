import logging
from pathlib import Path

from core.errors import ConfigError, InvalidLink, InvalidWeight
from lie.root_systems import check_dominant_integral
from models.root_system import RootSystem
from models.surface_link import OUTER, LoopSpec, SurfaceLink

logger = logging.getLogger(__name__)

"""
Link description files.

    # comment
    genus=<int>
    genus_face=<loop id|outer>          (optional, default outer)
    loop <id> parent=<id|outer> winding=<int> color=<c1,...,cr> plus=<inner|outer>

Colors are Dynkin labels (fundamental-weight coordinates).
"""

HEADER_KEYS = {"genus", "genus_face"}
LOOP_KEYS = {"parent", "winding", "color", "plus"}
REQUIRED_LOOP_KEYS = {"parent", "winding", "color"}


def _parse_int(value: str, field: str, line_no: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(field, f"line {line_no}: expected an integer, got {value!r}")


def parse_color(rs: RootSystem, text: str, field: str = "color"):
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        labels = tuple(int(p) for p in parts)
    except ValueError:
        raise ConfigError(field, f"expected comma-separated integers, got {text!r}")
    try:
        labels = check_dominant_integral(rs, labels, field)
    except InvalidWeight as e:
        raise ConfigError(field, str(e))
    return rs.from_labels(labels)


def _split_pairs(tokens: list[str], allowed: set[str], line_no: int) -> dict[str, str]:
    pairs = {}
    for token in tokens:
        if "=" not in token:
            raise ConfigError("link file", f"line {line_no}: expected key=value, got {token!r}")
        key, value = token.split("=", 1)
        if key not in allowed:
            raise ConfigError("link file", f"line {line_no}: unknown key {key!r}")
        if key in pairs:
            raise ConfigError("link file", f"line {line_no}: repeated key {key!r}")
        pairs[key] = value
    return pairs


def parse_link(text: str, rs: RootSystem) -> SurfaceLink:
    genus = None
    genus_face = OUTER
    loops = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        tokens = line.split()
        if tokens[0] == "loop":
            if len(tokens) < 2 or "=" in tokens[1]:
                raise ConfigError("link file", f"line {line_no}: loop record needs an id")
            pairs = _split_pairs(tokens[2:], LOOP_KEYS, line_no)
            missing = REQUIRED_LOOP_KEYS - pairs.keys()
            if missing:
                raise ConfigError("link file", f"line {line_no}: missing {', '.join(sorted(missing))}")

            plus = pairs.get("plus", "inner")
            if plus not in ("inner", "outer"):
                raise ConfigError("plus", f"line {line_no}: expected inner or outer, got {plus!r}")

            try:
                loops.append(LoopSpec(
                    id=tokens[1],
                    parent=pairs["parent"],
                    winding=_parse_int(pairs["winding"], "winding", line_no),
                    color=parse_color(rs, pairs["color"]),
                    inner_is_plus=plus == "inner",
                ))
            except InvalidLink as e:
                raise ConfigError("link file", f"line {line_no}: {e}")
            continue

        pairs = _split_pairs(tokens, HEADER_KEYS, line_no)
        if "genus" in pairs:
            genus = _parse_int(pairs["genus"], "genus", line_no)
        if "genus_face" in pairs:
            genus_face = pairs["genus_face"]

    if genus is None:
        raise ConfigError("link file", "missing genus=<int> header")

    link = SurfaceLink(genus=genus, loops=tuple(loops), genus_face=genus_face)
    logger.info("parsed link: genus %d, %d loops", link.genus, len(link.loops))
    return link


def load_link(path: str | Path, rs: RootSystem) -> SurfaceLink:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError("link", f"cannot read {path}: {e}")
    return parse_link(text, rs)
