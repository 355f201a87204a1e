"""CheckReport records produced by the verification suites."""

import json
import math
from dataclasses import dataclass, field

__all__ = ["MARGIN_TOL", "CheckReport", "check", "record", "not_applicable"]

MARGIN_TOL = 1e-12


def _jsonable(v):
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    if hasattr(v, "item"):
        return v.item()
    return v


@dataclass
class CheckReport:
    """One evaluated inequality ``lhs <= rhs``.

    ``passed`` is None for exploratory or not-applicable checks; the reason is
    in ``validity_note``.
    """

    check_id: str
    params: dict = field(default_factory=dict)
    lhs: float = math.nan
    rhs: float = math.nan
    margin: float = math.nan
    passed: bool | None = None
    validity_note: str = ""

    @property
    def asserted(self):
        return self.passed is not None

    @property
    def failed(self):
        return self.passed is False

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "margin": _jsonable(self.margin),
            "pass": self.passed,
            "validity_note": self.validity_note,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=False)

    def line(self):
        status = {True: "pass", False: "FAIL", None: "info"}[self.passed]
        params = " ".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}"
                          for k, v in self.params.items())
        text = f"{status:4s} {self.check_id} {params} lhs={self.lhs:.12g} rhs={self.rhs:.12g} margin={self.margin:.3e}"
        if self.validity_note:
            text += f" ({self.validity_note})"
        return text


def check(check_id, lhs, rhs, strict=False, note="", rtol=0.0, **params):
    """Asserted check of lhs <= rhs (lhs < rhs with ``strict``).

    ``rtol`` widens the non-strict test to margin >= -rtol |rhs| for
    comparisons whose true gap is below double precision.
    """
    lhs, rhs = float(lhs), float(rhs)
    margin = rhs - lhs
    ok = margin > 0 if strict else margin >= -max(MARGIN_TOL, rtol * abs(rhs))
    return CheckReport(check_id, params, lhs, rhs, margin, bool(ok), note)


def record(check_id, lhs, rhs, note="exploratory", **params):
    """Exploratory comparison; the margin is reported but never asserted."""
    lhs, rhs = float(lhs), float(rhs)
    return CheckReport(check_id, params, lhs, rhs, rhs - lhs, None, note)


def not_applicable(check_id, note, **params):
    return CheckReport(check_id, params, passed=None, validity_note=f"not applicable: {note}")
