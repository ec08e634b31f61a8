"""Bound reports: the uniform record every inequality check produces.

A report never silently skips a check: the verdict is PASS, FAIL,
EQUALITY (a PASS whose slack is below tolerance), or NOT_APPLICABLE when
a validity precondition of the bound is unmet.  Slack is sign-adjusted so
that nonnegative always means the inequality holds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

PASS = "PASS"
FAIL = "FAIL"
EQUALITY = "EQUALITY"
NOT_APPLICABLE = "NOT_APPLICABLE"

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: dict
    bound: float
    measured: float
    slack: float
    verdict: str
    pairs_or_subset: tuple | None = None

    @property
    def holds(self) -> bool | None:
        """True/False for decided verdicts, None when not applicable."""
        if self.verdict == NOT_APPLICABLE:
            return None
        return self.verdict in (PASS, EQUALITY)


def evaluate(
    name: str,
    params: dict,
    bound: float,
    measured: float,
    direction: str = "upper",
    tolerance: float = DEFAULT_TOLERANCE,
    applicable: bool = True,
    pairs_or_subset=None,
) -> BoundReport:
    """Build a report for ``measured <= bound`` / ``>=`` / ``==``.

    direction: "upper" checks measured <= bound, "lower" checks
    measured >= bound, "equality" checks |measured - bound| small.  The
    comparison tolerance scales with the bound: tolerance * (1 + |bound|).
    """
    bound = float(bound)
    measured = float(measured)
    if direction == "upper":
        slack = bound - measured
    elif direction == "lower":
        slack = measured - bound
    elif direction == "equality":
        slack = -abs(bound - measured)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    tol = tolerance * (1.0 + abs(bound))
    if not applicable:
        verdict = NOT_APPLICABLE
    elif abs(bound - measured) <= tol:
        verdict = EQUALITY
    elif slack >= -tol:
        verdict = PASS
    else:
        verdict = FAIL
    if pairs_or_subset is not None:
        pairs_or_subset = tuple(
            tuple(p) if isinstance(p, (tuple, list)) else int(p)
            for p in pairs_or_subset
        )
    return BoundReport(name, dict(params), bound, measured, slack, verdict,
                       pairs_or_subset)


def report_to_dict(report: BoundReport, include_selection: bool = True) -> dict:
    """Plain-dict view with a fixed field order for stable serialization."""
    out = {
        "name": report.name,
        "params": dict(report.params),
        "bound": report.bound,
        "measured": report.measured,
        "slack": report.slack,
        "verdict": report.verdict,
        "holds": report.holds,
    }
    if include_selection and report.pairs_or_subset is not None:
        out["pairs_or_subset"] = [list(p) if isinstance(p, tuple) else p
                                  for p in report.pairs_or_subset]
    return out


def format_float(x: float) -> str:
    """17-significant-digit decimal form, enough to round-trip a double."""
    return f"{float(x):.17g}"


def dumps(value) -> str:
    """Deterministic JSON: insertion-ordered keys, floats at 17 digits."""
    pieces: list[str] = []
    _emit(value, pieces)
    return "".join(pieces)


def _emit(value, out: list[str]) -> None:
    if value is None or isinstance(value, bool):
        out.append(json.dumps(value))
    elif isinstance(value, float):
        out.append(format_float(value))
    elif isinstance(value, (int,)):
        out.append(str(value))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, dict):
        out.append("{")
        for i, (k, v) in enumerate(value.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(k)))
            out.append(": ")
            _emit(v, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, v in enumerate(value):
            if i:
                out.append(", ")
            _emit(v, out)
        out.append("]")
    elif isinstance(value, np.integer):
        out.append(str(int(value)))
    elif isinstance(value, np.floating):
        out.append(format_float(float(value)))
    else:
        raise TypeError(f"cannot serialize {type(value)!r}")
