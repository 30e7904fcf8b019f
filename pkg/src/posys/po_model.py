"""Baseline lifetime distributions and the proportional-odds transform.

A lifetime Y follows the proportional-odds (PO) transform of a baseline X
with constant ``alpha > 0`` when the odds-of-survival functions are
proportional, ``odds_Y(t) = alpha * odds_X(t)``.  In terms of the baseline
survival function ``S`` this is the Marshall-Olkin form

    S_alpha(t) = alpha * S(t) / (1 - (1 - alpha) * S(t)),

from which all derived lifetime functions follow in closed form:

    density           alpha * f(t) / (1 - (1 - alpha) * S(t))^2
    hazard            r(t) / (1 - (1 - alpha) * S(t))
    reversed hazard   alpha * rt(t) / (1 - (1 - alpha) * S(t))
    odds              alpha * S(t) / (1 - S(t))

The hazard ratio to the baseline, 1 / (1 - (1 - alpha) * S(t)), is monotone
(increasing for alpha > 1, decreasing for alpha < 1) and tends to one as t
grows, which is the model's distinguishing feature versus a proportional
hazard factor that never fades.

All evaluators accept a scalar time or an array of times and return a
matching shape.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError

__all__ = [
    "Baseline",
    "Exponential",
    "Weibull",
    "baseline_from_dict",
    "po_survival",
    "po_cdf",
    "po_density",
    "po_hazard",
    "po_reversed_hazard",
    "po_odds",
]

# Values of alpha within this distance of 1 are snapped to exactly 1,
# removing cancellation noise in 1 - (1-alpha)*S.
ALPHA_UNIT_SNAP = 1e-15


def _times(t, *, strictly_positive: bool = False) -> tuple[np.ndarray, bool]:
    arr = np.asarray(t, dtype=np.float64)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if strictly_positive:
        if np.any(arr <= 0.0):
            raise DomainError("time must be > 0 for this quantity")
    elif np.any(arr < 0.0):
        raise DomainError("time must be >= 0")
    return arr, scalar


def _ret(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


class Baseline(ABC):
    """A parametric baseline lifetime distribution on [0, inf)."""

    @abstractmethod
    def sf(self, t):
        """Survival function S(t); S(0) = 1, nonincreasing, -> 0."""

    @abstractmethod
    def pdf(self, t):
        """Density f(t) = -dS/dt."""

    @abstractmethod
    def hazard(self, t):
        """Hazard rate r(t) = f(t) / S(t), in closed form."""

    @abstractmethod
    def isf(self, p: float) -> float:
        """Time t with S(t) = p, for p in (0, 1)."""

    @abstractmethod
    def to_dict(self) -> dict:
        """Serializable description used by scenario files."""

    def cdf(self, t):
        arr, scalar = _times(t)
        return _ret(1.0 - np.atleast_1d(self.sf(arr)), scalar)

    def reversed_hazard(self, t):
        """Reversed hazard rt(t) = f(t) / (1 - S(t)); diverges at t -> 0."""
        arr, scalar = _times(t, strictly_positive=True)
        s = np.atleast_1d(self.sf(arr))
        f = np.atleast_1d(self.pdf(arr))
        return _ret(f / (1.0 - s), scalar)

    def odds(self, t):
        """Odds of survival S(t) / (1 - S(t))."""
        arr, scalar = _times(t, strictly_positive=True)
        s = np.atleast_1d(self.sf(arr))
        return _ret(s / (1.0 - s), scalar)


@dataclass(frozen=True)
class Exponential(Baseline):
    """Exponential lifetime with the given failure rate (per unit time)."""

    rate: float

    def __post_init__(self):
        if not (self.rate > 0 and math.isfinite(self.rate)):
            raise DomainError(f"rate must be finite and > 0, got {self.rate}")

    def sf(self, t):
        arr, scalar = _times(t)
        return _ret(np.exp(-self.rate * arr), scalar)

    def pdf(self, t):
        arr, scalar = _times(t)
        return _ret(self.rate * np.exp(-self.rate * arr), scalar)

    def hazard(self, t):
        arr, scalar = _times(t)
        return _ret(np.full(arr.shape, self.rate), scalar)

    def isf(self, p: float) -> float:
        if not 0.0 < p < 1.0:
            raise DomainError("probability must lie in (0, 1)")
        return -math.log(p) / self.rate

    def to_dict(self) -> dict:
        return {"family": "exponential", "rate": self.rate}


@dataclass(frozen=True)
class Weibull(Baseline):
    """Weibull lifetime: S(t) = exp(-(t/scale)^shape)."""

    shape: float
    scale: float

    def __post_init__(self):
        if not (self.shape > 0 and math.isfinite(self.shape)):
            raise DomainError(f"shape must be finite and > 0, got {self.shape}")
        if not (self.scale > 0 and math.isfinite(self.scale)):
            raise DomainError(f"scale must be finite and > 0, got {self.scale}")

    def sf(self, t):
        arr, scalar = _times(t)
        return _ret(np.exp(-((arr / self.scale) ** self.shape)), scalar)

    def pdf(self, t):
        arr, scalar = _times(t)
        z = arr / self.scale
        with np.errstate(divide="ignore", invalid="ignore"):
            # z**(shape-1) diverges at t=0 for shape<1 and is 0^0 at shape=1
            lead = (self.shape / self.scale) * z ** (self.shape - 1.0)
        if self.shape == 1.0:
            lead = np.where(arr == 0.0, self.shape / self.scale, lead)
        return _ret(lead * np.exp(-(z**self.shape)), scalar)

    def hazard(self, t):
        arr, scalar = _times(t)
        z = arr / self.scale
        with np.errstate(divide="ignore", invalid="ignore"):
            h = (self.shape / self.scale) * z ** (self.shape - 1.0)
        if self.shape == 1.0:
            h = np.where(arr == 0.0, self.shape / self.scale, h)
        return _ret(h, scalar)

    def isf(self, p: float) -> float:
        if not 0.0 < p < 1.0:
            raise DomainError("probability must lie in (0, 1)")
        return self.scale * (-math.log(p)) ** (1.0 / self.shape)

    def to_dict(self) -> dict:
        return {"family": "weibull", "shape": self.shape, "scale": self.scale}


_FAMILIES = {"exponential": Exponential, "weibull": Weibull}


def baseline_from_dict(spec: dict) -> Baseline:
    """Rebuild a baseline from its ``to_dict`` form."""
    if not isinstance(spec, dict) or "family" not in spec:
        raise DomainError(f"baseline spec must be a mapping with a 'family' key, got {spec!r}")
    family = str(spec["family"]).lower()
    if family not in _FAMILIES:
        raise DomainError(f"unknown baseline family {family!r}; known: {sorted(_FAMILIES)}")
    kwargs = {k: float(v) for k, v in spec.items() if k != "family"}
    try:
        return _FAMILIES[family](**kwargs)
    except TypeError as exc:
        raise DomainError(f"bad parameters for {family} baseline: {exc}") from None


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (alpha > 0 and math.isfinite(alpha)):
        raise DomainError(f"proportionality constant must be finite and > 0, got {alpha}")
    if abs(alpha - 1.0) < ALPHA_UNIT_SNAP:
        return 1.0
    return alpha


def po_survival(alpha: float, base: Baseline, t):
    """Survival of the PO-transformed lifetime; equals the baseline at alpha=1."""
    alpha = _check_alpha(alpha)
    arr, scalar = _times(t)
    s = np.atleast_1d(base.sf(arr))
    if alpha == 1.0:
        return _ret(s, scalar)
    return _ret(alpha * s / ((1.0 - s) + alpha * s), scalar)


def po_cdf(alpha: float, base: Baseline, t):
    """Distribution function of the PO-transformed lifetime."""
    alpha = _check_alpha(alpha)
    arr, scalar = _times(t)
    s = np.atleast_1d(base.sf(arr))
    if alpha == 1.0:
        return _ret(1.0 - s, scalar)
    return _ret((1.0 - s) / ((1.0 - s) + alpha * s), scalar)


def po_density(alpha: float, base: Baseline, t):
    """Density of the PO-transformed lifetime."""
    alpha = _check_alpha(alpha)
    arr, scalar = _times(t)
    f = np.atleast_1d(base.pdf(arr))
    if alpha == 1.0:
        return _ret(f, scalar)
    s = np.atleast_1d(base.sf(arr))
    return _ret(alpha * f / ((1.0 - s) + alpha * s) ** 2, scalar)


def po_hazard(alpha: float, base: Baseline, t):
    """Hazard rate of the PO-transformed lifetime.

    Raises :class:`RangeError` where the baseline survival has underflowed
    to zero, since the hazard is no longer meaningfully evaluable there.
    """
    alpha = _check_alpha(alpha)
    arr, scalar = _times(t)
    s = np.atleast_1d(base.sf(arr))
    if np.any(s == 0.0):
        bad = float(arr[np.argmax(s == 0.0)])
        raise RangeError(f"survival underflowed to 0 at t={bad!r}; hazard not evaluable")
    r = np.atleast_1d(base.hazard(arr))
    if alpha == 1.0:
        return _ret(r, scalar)
    return _ret(r / ((1.0 - s) + alpha * s), scalar)


def po_reversed_hazard(alpha: float, base: Baseline, t):
    """Reversed hazard rate of the PO-transformed lifetime (t > 0)."""
    alpha = _check_alpha(alpha)
    arr, scalar = _times(t, strictly_positive=True)
    rt = np.atleast_1d(base.reversed_hazard(arr))
    if alpha == 1.0:
        return _ret(rt, scalar)
    s = np.atleast_1d(base.sf(arr))
    return _ret(alpha * rt / ((1.0 - s) + alpha * s), scalar)


def po_odds(alpha: float, base: Baseline, t):
    """Odds of survival of the PO-transformed lifetime: alpha times the baseline odds."""
    alpha = _check_alpha(alpha)
    arr, scalar = _times(t, strictly_positive=True)
    return _ret(alpha * np.atleast_1d(base.odds(arr)), scalar)
