"""Grid-based verification of stochastic orders between two system lifetimes.

Six relations are checked pointwise over an evaluation grid:

* ``st``   -- survival of A <= survival of B everywhere,
* ``hr``   -- hazard of A >= hazard of B everywhere,
* ``rhr``  -- reversed hazard of A <= reversed hazard of B everywhere,
* ``lr``   -- density ratio density_A/density_B nonincreasing,
* ``ageing_hr``  -- hazard_A/hazard_B nondecreasing (A ages faster than B),
* ``ageing_rhr`` -- reversed_hazard_B/reversed_hazard_A nondecreasing
  (A ages faster than B in reversed-hazard terms).

A verdict of ``holds`` is grid evidence, not an analytic proof; every
verdict records the grid it was computed on so callers can refine.
Violating points are reported as witnesses.  Grid points where a compared
quantity is not representable (underflow) are skipped and counted; a
verdict with more than 5% skipped points is flagged degraded.

Inequality checks carry an absolute slack of ``TOL_PROB`` on probabilities
and a relative slack of ``TOL_RATE`` on rates; monotonicity checks allow a
relative slip of ``TOL_MONO`` between adjacent grid points.  All slacks sit
far above double-precision noise and far below the effect sizes of the
lifetimes compared here (~1e-2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .errors import EvaluationError, GridError
from .systems import SystemModel, Topology

__all__ = [
    "TOL_PROB",
    "TOL_RATE",
    "TOL_MONO",
    "GridSpec",
    "DEFAULT_GRID",
    "Witness",
    "OrderVerdict",
    "MonotoneVerdict",
    "RELATIONS",
    "check_st",
    "check_hr",
    "check_rhr",
    "check_lr",
    "check_ageing_hr",
    "check_ageing_rhr",
    "check_order",
    "detect_nonmonotone",
]

TOL_PROB = 1e-9   # absolute, on probabilities
TOL_RATE = 1e-9   # relative, on rates
TOL_MONO = 1e-10  # relative, between adjacent grid points
_DEGRADED_FRACTION = 0.05

RELATIONS = ("st", "hr", "rhr", "lr", "ageing_hr", "ageing_rhr")


@dataclass(frozen=True)
class GridSpec:
    """A finite evaluation grid standing in for a "for all t" quantifier."""

    t_min: float
    t_max: float
    count: int
    spacing: Literal["linear", "logarithmic"] = "logarithmic"

    def __post_init__(self):
        if not (self.t_min > 0 and np.isfinite(self.t_min)):
            raise GridError(f"t_min must be finite and > 0, got {self.t_min}")
        if not (self.t_max > self.t_min and np.isfinite(self.t_max)):
            raise GridError(f"t_max must be finite and > t_min, got {self.t_max}")
        if int(self.count) != self.count or self.count < 2:
            raise GridError(f"count must be an integer >= 2, got {self.count}")
        if self.spacing not in ("linear", "logarithmic"):
            raise GridError(f"spacing must be 'linear' or 'logarithmic', got {self.spacing!r}")

    def points(self) -> np.ndarray:
        if self.spacing == "linear":
            return np.linspace(self.t_min, self.t_max, int(self.count))
        return np.geomspace(self.t_min, self.t_max, int(self.count))

    def refined(self, factor: int = 2) -> "GridSpec":
        return GridSpec(self.t_min, self.t_max, int(self.count) * factor, self.spacing)

    def to_dict(self) -> dict:
        return {"t_min": self.t_min, "t_max": self.t_max,
                "count": int(self.count), "spacing": self.spacing}


DEFAULT_GRID = GridSpec(1e-3, 20.0, 2000, "logarithmic")


@dataclass(frozen=True)
class Witness:
    """A grid point where the defining inequality (or monotone step) fails."""

    t: float
    lhs: float
    rhs: float


@dataclass(frozen=True)
class OrderVerdict:
    relation: str
    holds: bool
    witnesses: tuple[Witness, ...]
    grid: GridSpec
    skipped: tuple[float, ...] = ()
    degraded: bool = False

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "holds": self.holds,
            "witnesses": [{"t": w.t, "lhs": w.lhs, "rhs": w.rhs} for w in self.witnesses],
            "grid": self.grid.to_dict(),
            "skipped_count": len(self.skipped),
            "degraded": self.degraded,
        }


@dataclass(frozen=True)
class MonotoneVerdict:
    classification: Literal["monotone_up", "monotone_down", "nonmonotone"]
    witness: tuple[tuple[float, float], tuple[float, float], tuple[float, float]] | None
    grid: GridSpec

    def to_dict(self) -> dict:
        wit = None
        if self.witness is not None:
            wit = [{"t": t, "value": v} for t, v in self.witness]
        return {"classification": self.classification, "witness": wit,
                "grid": self.grid.to_dict()}


# -- lenient curve evaluation -------------------------------------------------

def _masked(model: SystemModel, quantity: str, ts: np.ndarray) -> np.ndarray:
    """Evaluate a lifetime function on the grid, NaN where unevaluable.

    Only hazards can become unevaluable on a positive grid (they raise once
    the deciding survival has underflowed to zero); the other quantities
    degrade to 0 there.
    """
    out = np.full(ts.shape, np.nan)
    ok = np.ones(ts.shape, dtype=bool)
    if quantity == "hazard":
        ok &= np.atleast_1d(model.base.sf(ts)) > 0.0
        if model.topology is Topology.PARALLEL:
            ok &= np.atleast_1d(model.survival(ts)) > 0.0
    if ok.any():
        out[ok] = getattr(model, quantity)(ts[ok])
    return out


def _finish(relation, grid, ts, valid, bad_idx, lhs, rhs) -> OrderVerdict:
    witnesses = tuple(Witness(float(ts[i]), float(lhs[i]), float(rhs[i])) for i in bad_idx)
    skipped = tuple(float(t) for t in ts[~valid])
    degraded = len(skipped) > _DEGRADED_FRACTION * len(ts)
    return OrderVerdict(relation, len(witnesses) == 0, witnesses, grid, skipped, degraded)


def _pointwise(relation, a, b, grid, quantity, direction) -> OrderVerdict:
    ts = grid.points()
    la = _masked(a, quantity, ts)
    lb = _masked(b, quantity, ts)
    valid = np.isfinite(la) & np.isfinite(lb)
    if quantity == "survival":
        slack = TOL_PROB
    else:
        slack = TOL_RATE * np.maximum(np.abs(la), np.abs(lb))
    if direction == "le":
        bad = valid & (la > lb + slack)
    else:
        bad = valid & (la < lb - slack)
    return _finish(relation, grid, ts, valid, np.flatnonzero(bad), la, lb)


def check_st(a: SystemModel, b: SystemModel, grid: GridSpec = DEFAULT_GRID) -> OrderVerdict:
    """A is stochastically smaller than B: survival_A <= survival_B on the grid."""
    return _pointwise("st", a, b, grid, "survival", "le")


def check_hr(a: SystemModel, b: SystemModel, grid: GridSpec = DEFAULT_GRID) -> OrderVerdict:
    """A is smaller in hazard rate: hazard_A >= hazard_B on the grid."""
    return _pointwise("hr", a, b, grid, "hazard", "ge")


def check_rhr(a: SystemModel, b: SystemModel, grid: GridSpec = DEFAULT_GRID) -> OrderVerdict:
    """A is smaller in reversed hazard rate: rhr_A <= rhr_B on the grid."""
    return _pointwise("rhr", a, b, grid, "reversed_hazard", "le")


def _ratio_monotone(relation, grid, ts, log_num, log_den, want) -> OrderVerdict:
    """Check a positive ratio for monotonicity, given log numerator/denominator.

    ``want`` is "nonincreasing" or "nondecreasing".  Points where either
    log is non-finite (the quantity underflowed or is undefined) are
    excluded and recorded.
    """
    valid = np.isfinite(log_num) & np.isfinite(log_den)
    logratio = np.full(ts.shape, np.nan)
    logratio[valid] = log_num[valid] - log_den[valid]
    idx = np.flatnonzero(valid)
    slack = np.log1p(TOL_MONO)
    bad_idx: list[int] = []
    if idx.size >= 2:
        d = np.diff(logratio[idx])
        if want == "nonincreasing":
            bad = d > slack
        else:
            bad = d < -slack
        bad_idx = [int(idx[k + 1]) for k in np.flatnonzero(bad)]
    ratio = np.exp(logratio)
    witnesses = tuple(
        Witness(float(ts[i]), float(ratio[idx[np.searchsorted(idx, i) - 1]]), float(ratio[i]))
        for i in bad_idx
    )
    skipped = tuple(float(t) for t in ts[~valid])
    degraded = len(skipped) > _DEGRADED_FRACTION * len(ts)
    return OrderVerdict(relation, len(witnesses) == 0, witnesses, grid, skipped, degraded)


def _log_of(values: np.ndarray) -> np.ndarray:
    """Log of rate values for ratio checks; subnormal magnitudes become NaN.

    A subnormal double keeps too few significant bits for a relative
    comparison, so such points are excluded rather than trusted.
    """
    out = np.where(np.abs(values) < np.finfo(float).tiny, np.nan, values)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.log(out)


def check_lr(a: SystemModel, b: SystemModel, grid: GridSpec = DEFAULT_GRID) -> OrderVerdict:
    """A is smaller in likelihood ratio: density_A/density_B nonincreasing.

    The ratio is formed from log densities, which survive far into the tail
    where the densities themselves underflow; points whose density is a
    true zero are excluded.  Witnesses carry the ratio at the previous
    retained grid point (lhs) and at the violating point (rhs).
    """
    ts = grid.points()
    la = np.atleast_1d(a.log_density(ts))
    lb = np.atleast_1d(b.log_density(ts))
    return _ratio_monotone("lr", grid, ts, la, lb, "nonincreasing")


def check_ageing_hr(a: SystemModel, b: SystemModel, grid: GridSpec = DEFAULT_GRID) -> OrderVerdict:
    """A ages faster than B in hazard-rate terms: hazard_A/hazard_B nondecreasing."""
    ts = grid.points()
    ra = _masked(a, "hazard", ts)
    rb = _masked(b, "hazard", ts)
    return _ratio_monotone("ageing_hr", grid, ts, _log_of(ra), _log_of(rb), "nondecreasing")


def check_ageing_rhr(a: SystemModel, b: SystemModel, grid: GridSpec = DEFAULT_GRID) -> OrderVerdict:
    """A ages faster than B in reversed-hazard terms: rhr_B/rhr_A nondecreasing."""
    ts = grid.points()
    ra = _masked(a, "reversed_hazard", ts)
    rb = _masked(b, "reversed_hazard", ts)
    return _ratio_monotone("ageing_rhr", grid, ts, _log_of(rb), _log_of(ra), "nondecreasing")


_CHECKS: dict[str, Callable[..., OrderVerdict]] = {
    "st": check_st,
    "hr": check_hr,
    "rhr": check_rhr,
    "lr": check_lr,
    "ageing_hr": check_ageing_hr,
    "ageing_rhr": check_ageing_rhr,
}


def check_order(relation: str, a: SystemModel, b: SystemModel,
                grid: GridSpec = DEFAULT_GRID) -> OrderVerdict:
    """Dispatch to one of the six relation checks by name."""
    if relation not in _CHECKS:
        raise GridError(f"unknown relation {relation!r}; known: {RELATIONS}")
    return _CHECKS[relation](a, b, grid)


# -- monotonicity classification ----------------------------------------------

def _witness_triple(ts, ys):
    """Pick indices a < b < c with ys[a] < ys[b] > ys[c] or the mirror pattern."""
    d = np.diff(ys)
    slack = TOL_MONO * np.maximum(np.abs(ys[:-1]), np.abs(ys[1:]))
    sign = np.zeros(d.shape, dtype=int)
    sign[d > slack] = 1
    sign[d < -slack] = -1
    nz = np.flatnonzero(sign)
    for k1, k2 in zip(nz[:-1], nz[1:]):
        if sign[k1] == sign[k2]:
            continue
        lo, hi = int(k1), int(k2) + 1
        window = ys[lo:hi + 1]
        if sign[k1] > 0:  # rise then fall around a peak
            b = lo + int(np.argmax(window))
            a = lo + int(np.argmin(ys[lo:b + 1]))
            c = b + int(np.argmin(ys[b:hi + 1]))
        else:  # fall then rise around a valley
            b = lo + int(np.argmin(window))
            a = lo + int(np.argmax(ys[lo:b + 1]))
            c = b + int(np.argmax(ys[b:hi + 1]))
        return tuple((float(ts[i]), float(ys[i])) for i in (a, b, c))
    return None


def detect_nonmonotone(f: Callable[[np.ndarray], np.ndarray],
                       grid: GridSpec = DEFAULT_GRID) -> MonotoneVerdict:
    """Classify a function of time as monotone up/down or nonmonotone.

    Monotonicity is non-strict with a relative slip of ``TOL_MONO`` between
    adjacent points, so a constant classifies as monotone_up.  A nonmonotone
    verdict carries three (t, value) pairs exhibiting a rise-then-fall or
    fall-then-rise.  Non-finite values raise :class:`EvaluationError`.
    """
    ts = grid.points()
    try:
        ys = np.asarray(f(ts), dtype=np.float64)
        if ys.shape != ts.shape:
            raise ValueError
    except Exception:
        ys = np.asarray([float(f(float(t))) for t in ts], dtype=np.float64)
    if not np.all(np.isfinite(ys)):
        bad = float(ts[int(np.argmin(np.isfinite(ys)))])
        raise EvaluationError(f"non-finite value on grid at t={bad!r}", t=bad)
    d = np.diff(ys)
    slack = TOL_MONO * np.maximum(np.abs(ys[:-1]), np.abs(ys[1:]))
    rises = bool(np.any(d > slack))
    falls = bool(np.any(d < -slack))
    if rises and falls:
        return MonotoneVerdict("nonmonotone", _witness_triple(ts, ys), grid)
    if falls:
        return MonotoneVerdict("monotone_down", None, grid)
    return MonotoneVerdict("monotone_up", None, grid)
