"""Report types and serialization shared by the prediction and experiment layers.

Schema rules: stable field order, floats rounded to 15 significant
digits before serialization (so JSON round-trips are value-identical),
a schema_version field in every JSON document, and byte-identical
output for identical inputs apart from the timestamp field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

SCHEMA_VERSION = 1

__all__ = [
    "PredictionReport",
    "ZeroRow",
    "ExtremesReport",
    "emit_report",
    "SCHEMA_VERSION",
]


def _round15(x):
    if isinstance(x, np.generic):
        x = x.item()
    if isinstance(x, float):
        if math.isfinite(x):
            return float(f"{x:.15g}")
        return x
    if isinstance(x, complex):
        return {"re": _round15(x.real), "im": _round15(x.imag)}
    if isinstance(x, dict):
        return {k: _round15(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round15(v) for v in x]
    return x


@dataclass(frozen=True)
class PredictionReport:
    """Numeric-vs-predicted comparison with a pass verdict.

    Two-sided by default: pass iff |ratio - 1| <= tolerance.  With
    one_sided set, the test is numeric <= predicted (ratio <= 1 up to
    tolerance slack), used for upper bounds.
    """

    label: str
    numeric: float
    predicted: float
    ratio: float
    tolerance: float
    passed: bool
    one_sided: bool = False

    @classmethod
    def compare(cls, label: str, numeric: float, predicted: float,
                tolerance: float) -> "PredictionReport":
        ratio = numeric / predicted if predicted != 0.0 else math.inf
        return cls(label, float(numeric), float(predicted), float(ratio),
                   tolerance, bool(abs(ratio - 1.0) <= tolerance))

    @classmethod
    def upper_bound(cls, label: str, numeric: float, bound: float,
                    slack: float = 1e-12) -> "PredictionReport":
        ratio = numeric / bound if bound != 0.0 else math.inf
        ok = bool(numeric <= bound * (1.0 + slack) + slack)
        return cls(label, float(numeric), float(bound), float(ratio),
                   slack, ok, one_sided=True)

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "numeric": self.numeric,
            "predicted": self.predicted,
            "ratio": self.ratio,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "one_sided": self.one_sided,
        }


@dataclass(frozen=True)
class ZeroRow:
    """Per-zero line of an extremes run: raw and gamma^(1/3)-normalized size."""

    index: int
    gamma: float
    zprime_abs: float
    zprime_norm: float     # |zeta'(rho)| * gamma^(1/3)
    weight: float          # |A(rho)|^2

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "gamma": self.gamma,
            "zprime_abs": self.zprime_abs,
            "zprime_norm": self.zprime_norm,
            "weight": self.weight,
        }


@dataclass
class ExtremesReport:
    """Outcome of a large- or small-values experiment over one zero range."""

    mode: str
    config: dict
    S1: complex | None = None
    S2: float | None = None
    S3: complex | None = None
    S1_predicted: float | None = None
    S2_predicted: float | None = None
    S3_predicted: float | None = None
    weighted_bound: float | None = None
    bound_kind: str = ""
    extreme_row: ZeroRow | None = None
    rows: list[ZeroRow] = field(default_factory=list)
    checks: list[PredictionReport] = field(default_factory=list)
    effective_theta: float | None = None
    timestamp: str = ""

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "mode": self.mode,
            "config": self.config,
            "S1": self.S1,
            "S2": self.S2,
            "S3": self.S3,
            "S1_predicted": self.S1_predicted,
            "S2_predicted": self.S2_predicted,
            "S3_predicted": self.S3_predicted,
            "weighted_bound": self.weighted_bound,
            "bound_kind": self.bound_kind,
            "effective_theta": self.effective_theta,
            "extreme_row": self.extreme_row.as_dict() if self.extreme_row else None,
            "rows": [r.as_dict() for r in self.rows],
            "checks": [c.as_dict() for c in self.checks],
            "all_pass": self.all_passed,
            "timestamp": self.timestamp,
        }


def _csv_escape(v) -> str:
    s = str(v)
    if "," in s or '"' in s or "\n" in s:
        s = '"' + s.replace('"', '""') + '"'
    return s


def _rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return "\n"
    cols = list(rows[0].keys())
    lines = [",".join(cols)]
    for row in rows:
        lines.append(",".join(_csv_escape(_round15(row.get(c))) for c in cols))
    return "\n".join(lines) + "\n"


def emit_report(report, format: str = "json") -> str:
    """Serialize a report (or a list of PredictionReport) for output.

    JSON carries the whole structure; CSV carries the tabular part
    (per-zero rows for extremes runs, one line per check otherwise).
    """
    if format not in ("json", "csv"):
        raise ValueError(f"unknown report format {format!r}")
    if isinstance(report, PredictionReport):
        report = [report]
    if isinstance(report, list):
        dicts = [r.as_dict() for r in report]
        if format == "json":
            doc = {"schema_version": SCHEMA_VERSION, "checks": _round15(dicts)}
            return json.dumps(doc, indent=2) + "\n"
        return _rows_to_csv(dicts)
    if isinstance(report, ExtremesReport):
        if format == "json":
            return json.dumps(_round15(report.as_dict()), indent=2) + "\n"
        rows = [r.as_dict() for r in report.rows]
        if not rows:
            rows = [c.as_dict() for c in report.checks]
        return _rows_to_csv(rows)
    raise TypeError(f"cannot serialize {type(report).__name__}")
