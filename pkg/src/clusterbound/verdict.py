from __future__ import annotations

from enum import Enum


class Verdict(str, Enum):
    CERTIFIED_STRICT = "CERTIFIED_STRICT"
    CERTIFIED_NONSTRICT = "CERTIFIED_NONSTRICT"
    INCONCLUSIVE = "INCONCLUSIVE"
    REFUTED = "REFUTED"


class DivergentRegimeError(ValueError):
    """Raised when the convergence condition cannot be verified."""
