"""Deterministic CSV/JSON serialization.

Numbers are written with Python's shortest round-trip representation, so
identical inputs always produce byte-identical files.
"""

from __future__ import annotations

import json
import math
import sys
from contextlib import contextmanager
from typing import IO, Iterable, Sequence

from .verify import ComplexSeries

__all__ = ["format_float", "export_csv", "write_table", "export_json", "open_dest"]


def format_float(x: float) -> str:
    """Shortest round-trip decimal form; non-finite values print as nan/inf."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    return repr(x)


@contextmanager
def open_dest(destination: str | None):
    """Yield a text handle for a path, or stdout for None/'-'. LF endings."""
    if destination is None or destination == "-":
        yield sys.stdout
    else:
        with open(destination, "w", newline="\n") as fh:
            yield fh


def write_table(columns: Sequence[str], rows: Iterable[Sequence[float]], fh: IO[str]) -> None:
    fh.write(",".join(columns) + "\n")
    for row in rows:
        fh.write(",".join(format_float(v) for v in row) + "\n")


def export_csv(series: ComplexSeries, destination: str | None) -> None:
    """The t,re,im layout used by every series-producing command."""
    rows = (
        (float(t), v.real, v.imag)
        for t, v in zip(series.grid.points, series.values)
    )
    with open_dest(destination) as fh:
        write_table(("t", "re", "im"), rows, fh)


def export_json(payload: dict, destination: str | None) -> None:
    with open_dest(destination) as fh:
        json.dump(payload, fh, sort_keys=True)
        fh.write("\n")


def series_payload(series: ComplexSeries) -> dict:
    """The JSON shape shared by series commands: grid plus [re, im] pairs."""
    return {
        "grid": {"t0": series.grid.t0, "t1": series.grid.t1, "n": series.grid.n},
        "values": [[v.real, v.imag] for v in series.values],
    }
