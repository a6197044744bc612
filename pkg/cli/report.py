import io

import pandas as pd

from core.config import VERSION
from models.run_config import RunConfig

"""
Report rendering.

A report is a header line echoing the run, followed by one table. Tables
are pandas DataFrames whose columns are fixed per command, so csv output
always has the same header row for a given command.
"""


def format_complex(z: complex) -> str:
    re, im = float(z.real) + 0.0, float(z.imag) + 0.0
    sign = "-" if im < 0 else "+"
    return f"{re:.12g}{sign}{abs(im):.12g}i"


def format_real(x: float) -> str:
    return f"{float(x) + 0.0:.12g}"


def format_labels(labels) -> str:
    return "(" + ",".join(str(int(a)) for a in labels) + ")"


def header(config: RunConfig) -> str:
    return (
        f"# group={config.group} series={config.series} rank={config.rank} "
        f"level={config.level} command={config.command} version={VERSION}"
    )


def key_value_table(rows: list[tuple[str, str]]) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=["quantity", "value"])


def render(config: RunConfig, table: pd.DataFrame, footer: list[str] | None = None) -> str:
    out = io.StringIO()
    out.write(header(config) + "\n")
    if config.output_format == "csv":
        table.to_csv(out, index=False, lineterminator="\n")
    else:
        out.write(table.to_string(index=False) + "\n")
    for line in footer or []:
        out.write(line + "\n")
    return out.getvalue()
