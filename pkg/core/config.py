from functools import lru_cache

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()

"""
Runtime settings.

Every cap and tolerance used by the library can be overridden through the
environment (prefix QINV_) or a local .env file. Operations that take an
explicit override always prefer it over these values.
"""

VERSION = "0.1.0"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="QINV_",
        env_file=".env",
        extra="ignore",
    )

    # |W(E6)|; E7 and E8 are rejected unless raised explicitly
    weyl_cap: int = 51840

    # maximal number of face colorings in a shadow state sum
    term_budget: int = 2_000_000

    identity_tolerance: float = 1e-9
    integer_tolerance: float = 1e-7
    dimension_tolerance: float = 1e-6

    threads: int = 1
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    return Settings()
