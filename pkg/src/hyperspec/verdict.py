"""Three-way (plus vacuous) outcome of a numerically checked strict inequality."""

from __future__ import annotations

import enum

from .spectral import DEFAULT_TOL, strictness_threshold


class Verdict(str, enum.Enum):
    STRICT_PASS = "StrictPass"
    INDISTINGUISHABLE = "Indistinguishable"
    VIOLATION = "Violation"
    VACUOUS = "Vacuous"

    def __str__(self):
        return self.value

    @property
    def ok(self) -> bool:
        return self in (Verdict.STRICT_PASS, Verdict.VACUOUS)


def classify(gap: float, tol: float = DEFAULT_TOL) -> Verdict:
    """Gap oriented so that the claimed direction is positive."""
    threshold = strictness_threshold(tol)
    if gap > threshold:
        return Verdict.STRICT_PASS
    if gap < -threshold:
        return Verdict.VIOLATION
    return Verdict.INDISTINGUISHABLE
