"""Tabular sweep results and their CSV serialization."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterator, TextIO

import numpy as np

from .numeric import format_number


@dataclass(frozen=True)
class SweepSeries:
    """Ordered rows of (independent variable, dependent values...).

    ``data`` has one row per grid point and one column per entry of
    ``columns``. Undefined values (phases at vanishing amplitudes) are NaN.
    """

    columns: tuple[str, ...]
    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float)
        if data.ndim != 2 or data.shape[1] != len(self.columns):
            raise ValueError(
                f"data shape {data.shape} does not match {len(self.columns)} columns"
            )
        object.__setattr__(self, "data", data)

    def __len__(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, name: str) -> np.ndarray:
        return self.data[:, self.columns.index(name)]

    def rows(self) -> Iterator[tuple[float, ...]]:
        for row in self.data:
            yield tuple(float(v) for v in row)

    def write_csv(self, stream: TextIO, header: tuple[str, ...] | None = None) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header or self.columns)
        for row in self.data:
            writer.writerow([format_number(v) for v in row])

    def to_csv(self, header: tuple[str, ...] | None = None) -> str:
        buf = io.StringIO()
        self.write_csv(buf, header)
        return buf.getvalue()
