"""Vector preorders on positive parameter vectors.

Five preorders are provided, all defined through the increasing arrangement
``x_(1) <= x_(2) <= ... <= x_(n)`` of a vector:

* ``majorizes``: every prefix sum of x is <= the matching prefix sum of y
  and the total sums agree,
* ``weak_supermajorizes``: every prefix sum of x is <= that of y,
* ``weak_submajorizes``: every suffix sum of x is >= that of y,
* ``p_larger``: every prefix product of x is <= that of y,
* ``reciprocally_majorizes``: every prefix sum of reciprocals of x is >=
  that of y.

The implications majorizes => weak_supermajorizes => p_larger =>
reciprocally_majorizes hold for strictly positive vectors.

Predicates accept :class:`ParamVector` or any one-dimensional sequence of
reals and sort internally; callers never pre-sort.  Comparisons carry a small
absolute slack (``TOL_SUM``) so that floating-point noise cannot flip an
exact relation.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError

__all__ = [
    "TOL_SUM",
    "ParamVector",
    "OutlierSpec",
    "expand_outlier",
    "majorizes",
    "weak_supermajorizes",
    "weak_submajorizes",
    "p_larger",
    "reciprocally_majorizes",
]

# Absolute slack for prefix-sum comparisons and the total-sum equality.
TOL_SUM = 1e-9


@dataclass(frozen=True)
class ParamVector:
    """An ordered vector of strictly positive proportionality constants."""

    values: tuple[float, ...]

    def __init__(self, values: Sequence[float]):
        vals = tuple(float(v) for v in values)
        if len(vals) < 1:
            raise DomainError("parameter vector must have at least one entry")
        if any(not np.isfinite(v) or v <= 0.0 for v in vals):
            raise DomainError(f"parameter vector entries must be finite and > 0, got {vals}")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


@dataclass(frozen=True)
class OutlierSpec:
    """Two-block parameter vector: n1 copies of lambda1 then n2 of lambda2."""

    lambda1: float
    lambda2: float
    n1: int
    n2: int

    def __post_init__(self):
        if self.lambda1 <= 0 or self.lambda2 <= 0:
            raise DomainError("outlier block values must be > 0")
        if self.n1 < 1 or self.n2 < 1:
            raise DomainError("outlier block sizes must be >= 1")

    def expand(self) -> ParamVector:
        return ParamVector((self.lambda1,) * self.n1 + (self.lambda2,) * self.n2)


def expand_outlier(spec: OutlierSpec) -> ParamVector:
    """Expand a two-block spec into the explicit parameter vector."""
    return spec.expand()


def _sorted_pair(x, y, *, positive: bool) -> tuple[np.ndarray, np.ndarray]:
    xs = np.sort(np.asarray(x if not isinstance(x, ParamVector) else x.values, dtype=np.float64))
    ys = np.sort(np.asarray(y if not isinstance(y, ParamVector) else y.values, dtype=np.float64))
    if xs.ndim != 1 or ys.ndim != 1 or xs.size < 1 or ys.size < 1:
        raise DimensionError("operands must be non-empty one-dimensional vectors")
    if xs.size != ys.size:
        raise DimensionError(f"length mismatch: {xs.size} vs {ys.size}")
    if positive and (np.any(xs <= 0.0) or np.any(ys <= 0.0)):
        raise DomainError("this preorder requires strictly positive entries")
    return xs, ys


def majorizes(x, y, *, tol: float = TOL_SUM) -> bool:
    """True iff x majorizes y (prefix-sum dominance with equal totals)."""
    xs, ys = _sorted_pair(x, y, positive=False)
    px, py = np.cumsum(xs), np.cumsum(ys)
    return bool(np.all(px[:-1] <= py[:-1] + tol) and abs(px[-1] - py[-1]) <= tol)


def weak_supermajorizes(x, y, *, tol: float = TOL_SUM) -> bool:
    """True iff every increasing-arrangement prefix sum of x is <= that of y."""
    xs, ys = _sorted_pair(x, y, positive=False)
    return bool(np.all(np.cumsum(xs) <= np.cumsum(ys) + tol))


def weak_submajorizes(x, y, *, tol: float = TOL_SUM) -> bool:
    """True iff every increasing-arrangement suffix sum of x is >= that of y."""
    xs, ys = _sorted_pair(x, y, positive=False)
    sx = np.cumsum(xs[::-1])
    sy = np.cumsum(ys[::-1])
    return bool(np.all(sx >= sy - tol))


def p_larger(x, y, *, tol: float = TOL_SUM) -> bool:
    """True iff every increasing-arrangement prefix product of x is <= that of y.

    Products are compared through prefix sums of logarithms, so the slack
    acts multiplicatively (a relative tolerance on the products).
    """
    xs, ys = _sorted_pair(x, y, positive=True)
    return bool(np.all(np.cumsum(np.log(xs)) <= np.cumsum(np.log(ys)) + tol))


def reciprocally_majorizes(x, y, *, tol: float = TOL_SUM) -> bool:
    """True iff every prefix sum of reciprocals of x is >= that of y."""
    xs, ys = _sorted_pair(x, y, positive=True)
    return bool(np.all(np.cumsum(1.0 / xs) >= np.cumsum(1.0 / ys) - tol))
