from typing import Literal, Optional

from pydantic import BaseModel, ValidationError, field_validator, model_validator

from core.errors import ConfigError
from data.series import SERIES, is_valid_type, rank_constraint

COMMANDS = ("smatrix", "fusion", "verlinde-dim", "fiber", "torus-knot", "rosso-jones", "shadow", "check")
KNOT_COMMANDS = ("torus-knot", "rosso-jones")

Command = Literal["smatrix", "fusion", "verlinde-dim", "fiber", "torus-knot", "rosso-jones", "shadow", "check"]


class RunConfig(BaseModel):
    """One command line run. Colors stay as text until the root system is known."""

    group: str
    level: int
    command: Command
    output_format: Literal["table", "csv"] = "table"

    link: Optional[str] = None
    p: Optional[int] = None
    q: Optional[int] = None
    colors: list[str] = []
    fiber_color: Optional[str] = None
    genus: int = 0

    weyl_cap: Optional[int] = None
    term_budget: Optional[int] = None
    threads: Optional[int] = None
    identity_tolerance: Optional[float] = None
    integer_tolerance: Optional[float] = None
    dimension_tolerance: Optional[float] = None

    @field_validator("group")
    @classmethod
    def _check_group(cls, value: str) -> str:
        name = value.strip().upper()
        if len(name) < 2 or name[0] not in SERIES or not name[1:].isdigit():
            raise ValueError(f"expected a series letter and a rank such as A1, B2 or G2, got {value!r}")
        series, rank = name[0], int(name[1:])
        if not is_valid_type(series, rank):
            raise ValueError(f"{name} is not a simple Lie algebra ({series} needs {rank_constraint(series)})")
        return name

    @field_validator("level")
    @classmethod
    def _check_level(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"level must be a positive integer, got {value}")
        return value

    @field_validator("genus")
    @classmethod
    def _check_genus(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"genus must be nonnegative, got {value}")
        return value

    @field_validator("weyl_cap", "term_budget", "threads")
    @classmethod
    def _check_positive(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError(f"must be a positive integer, got {value}")
        return value

    @field_validator("identity_tolerance", "integer_tolerance", "dimension_tolerance")
    @classmethod
    def _check_tolerance(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and not value > 0:
            raise ValueError(f"tolerance must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def _check_command_inputs(self) -> "RunConfig":
        if self.command in KNOT_COMMANDS:
            for name in ("p", "q"):
                if getattr(self, name) is None:
                    raise ValueError(f"[{name}] --{name} is required for {self.command}")
            if len(self.colors) != 1:
                raise ValueError(f"[colors] {self.command} takes exactly one --color, got {len(self.colors)}")
        if self.fiber_color is not None and self.command != "torus-knot":
            raise ValueError("[fiber_color] --fiber-color only applies to torus-knot")
        if self.command == "shadow" and not self.link:
            raise ValueError("[link] --link is required for shadow")
        return self

    @property
    def series(self) -> str:
        return self.group[0]

    @property
    def rank(self) -> int:
        return int(self.group[1:])


def _field_of(error: dict) -> tuple[str, str]:
    message = str(error.get("msg", "")).removeprefix("Value error, ")
    if error.get("loc"):
        return str(error["loc"][0]), message
    # model level errors carry their field in brackets
    if message.startswith("[") and "]" in message:
        field, _, rest = message[1:].partition("]")
        return field, rest.strip()
    return "config", message


def build_run_config(**values) -> RunConfig:
    try:
        return RunConfig(**values)
    except ValidationError as e:
        field, message = _field_of(e.errors()[0])
        raise ConfigError(field, message) from e
