"""Inequality check records and CSV-ready tables."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

PROB_TOL = 1e-12
ENTROPY_TOL = 1e-9


@dataclass
class IneqReport:
    """Outcome of one inequality check; ``passed`` iff ``slack >= -tolerance``.

    ``slack`` is oriented so that a non-negative value means the inequality
    holds: ``lhs - rhs`` for ``lhs >= rhs`` checks, ``rhs - lhs`` for
    ``lhs <= rhs`` checks.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    tolerance: float
    params: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return bool(self.slack >= -self.tolerance) and not math.isnan(self.slack)

    @classmethod
    def ge(cls, name, lhs, rhs, tolerance, params=None, seed=None) -> "IneqReport":
        """Report for ``lhs >= rhs``."""
        lhs, rhs = float(lhs), float(rhs)
        return cls(name, lhs, rhs, lhs - rhs, tolerance, dict(params or {}), seed)

    @classmethod
    def le(cls, name, lhs, rhs, tolerance, params=None, seed=None) -> "IneqReport":
        """Report for ``lhs <= rhs``."""
        lhs, rhs = float(lhs), float(rhs)
        return cls(name, lhs, rhs, rhs - lhs, tolerance, dict(params or {}), seed)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tolerance": self.tolerance,
            "params": self.params,
            "seed": self.seed,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: lhs={self.lhs:.12g} rhs={self.rhs:.12g} slack={self.slack:.3e}"


@dataclass
class Table:
    """Rows of a scan with a fixed column header."""

    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)

    def append(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} values, got {len(values)}")
        self.rows.append(tuple(values))

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]

    def to_records(self) -> list[dict[str, Any]]:
        return [dict(zip(self.columns, r)) for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_value(v) for v in row])
        return buf.getvalue()


def format_value(v) -> str:
    """17 significant digits for floats, plain text otherwise."""
    if isinstance(v, bool) or v is None:
        return str(v).lower() if isinstance(v, bool) else ""
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        if math.isnan(v):
            return "nan"
        return format(v, ".17g")
    return str(v)


def all_passed(reports: Sequence[IneqReport]) -> bool:
    return all(r.passed for r in reports)
