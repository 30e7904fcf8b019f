"""Series and parallel systems of independent proportional-odds components.

A system couples one baseline lifetime with a vector of proportionality
constants, one per component.  The closed forms are

    series   survival(t) = prod_i  po_survival(l_i, t)
             hazard(t)   = sum_i   po_hazard(l_i, t)
    parallel cdf(t)      = prod_i  po_cdf(l_i, t)
             reversed_hazard(t) = sum_i po_reversed_hazard(l_i, t)

with densities recovered as survival*hazard (series) and cdf*reversed_hazard
(parallel).  Densities come from these closed forms, never from numeric
differentiation, so likelihood-ratio curves stay smooth.

Products are accumulated in log space, so a survival that underflows simply
evaluates to 0.  All evaluators are pure, accept scalars or arrays of times,
and are safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels as _k
from .errors import DomainError, RangeError
from .majorization import OutlierSpec, ParamVector
from .po_model import Baseline, _ret, _times

__all__ = [
    "Topology",
    "SystemModel",
    "homogeneous_series_survival",
    "homogeneous_parallel_survival",
]


class Topology(str, Enum):
    SERIES = "series"
    PARALLEL = "parallel"


def _as_params(params) -> ParamVector:
    if isinstance(params, ParamVector):
        return params
    if isinstance(params, OutlierSpec):
        return params.expand()
    return ParamVector(params)


@dataclass(frozen=True)
class SystemModel:
    """A series or parallel system over one baseline and one parameter vector."""

    topology: Topology
    base: Baseline
    params: ParamVector

    def __post_init__(self):
        object.__setattr__(self, "topology", Topology(self.topology))
        object.__setattr__(self, "params", _as_params(self.params))

    @classmethod
    def series(cls, base: Baseline, params) -> "SystemModel":
        return cls(Topology.SERIES, base, params)

    @classmethod
    def parallel(cls, base: Baseline, params) -> "SystemModel":
        return cls(Topology.PARALLEL, base, params)

    @classmethod
    def homogeneous(cls, topology, base: Baseline, lam: float, n: int) -> "SystemModel":
        if int(n) != n or n < 1:
            raise DomainError(f"component count must be a positive integer, got {n}")
        return cls(topology, base, ParamVector((float(lam),) * int(n)))

    @property
    def n(self) -> int:
        return len(self.params)

    def _lam(self) -> np.ndarray:
        return self.params.as_array()

    # -- lifetime functions -------------------------------------------------

    def survival(self, t):
        """System survival probability at time t (t >= 0)."""
        arr, scalar = _times(t)
        s = np.atleast_1d(self.base.sf(arr))
        if self.topology is Topology.SERIES:
            out = np.exp(_k.series_log_sf(self._lam(), s))
        else:
            out = -np.expm1(_k.parallel_log_cdf(self._lam(), s))
        return _ret(out, scalar)

    def cdf(self, t):
        """System failure probability at time t (t >= 0)."""
        arr, scalar = _times(t)
        s = np.atleast_1d(self.base.sf(arr))
        if self.topology is Topology.SERIES:
            out = -np.expm1(_k.series_log_sf(self._lam(), s))
        else:
            out = np.exp(_k.parallel_log_cdf(self._lam(), s))
        return _ret(out, scalar)

    def hazard(self, t):
        """System hazard rate.

        Series systems accept t >= 0 and sum the component hazards; parallel
        systems need t > 0 and use density/survival.  Raises
        :class:`RangeError` where the required survival has underflowed to 0.
        """
        if self.topology is Topology.SERIES:
            arr, scalar = _times(t)
            s = np.atleast_1d(self.base.sf(arr))
            if np.any(s == 0.0):
                bad = float(arr[np.argmax(s == 0.0)])
                raise RangeError(f"baseline survival underflowed at t={bad!r}; hazard not evaluable")
            out = np.atleast_1d(self.base.hazard(arr)) * _k.series_hazard_factor(self._lam(), s)
            return _ret(out, scalar)
        arr, scalar = _times(t, strictly_positive=True)
        s = np.atleast_1d(self.base.sf(arr))
        log_cdf = _k.parallel_log_cdf(self._lam(), s)
        sf = -np.expm1(log_cdf)
        if np.any(sf == 0.0):
            bad = float(arr[np.argmax(sf == 0.0)])
            raise RangeError(f"system survival underflowed at t={bad!r}; hazard not evaluable")
        rhr = np.atleast_1d(self.base.reversed_hazard(arr)) * _k.parallel_rhr_factor(self._lam(), s)
        return _ret(np.exp(log_cdf) * rhr / sf, scalar)

    def reversed_hazard(self, t):
        """System reversed hazard rate (t > 0).

        Parallel systems sum the component reversed hazards; series systems
        use density/cdf.
        """
        arr, scalar = _times(t, strictly_positive=True)
        s = np.atleast_1d(self.base.sf(arr))
        if self.topology is Topology.PARALLEL:
            out = np.atleast_1d(self.base.reversed_hazard(arr)) * _k.parallel_rhr_factor(self._lam(), s)
            return _ret(out, scalar)
        log_sf = _k.series_log_sf(self._lam(), s)
        density = np.exp(log_sf) * np.atleast_1d(self.base.hazard(arr)) * _k.series_hazard_factor(self._lam(), s)
        return _ret(density / (-np.expm1(log_sf)), scalar)

    def density(self, t):
        """System lifetime density (series: t >= 0, parallel: t > 0).

        Evaluates to 0 once the deciding survival (series) or the baseline
        density (parallel) has decayed below the double range.
        """
        if self.topology is Topology.SERIES:
            arr, scalar = _times(t)
            s = np.atleast_1d(self.base.sf(arr))
            out = (np.exp(_k.series_log_sf(self._lam(), s))
                   * np.atleast_1d(self.base.hazard(arr))
                   * _k.series_hazard_factor(self._lam(), s))
            return _ret(out, scalar)
        arr, scalar = _times(t, strictly_positive=True)
        s = np.atleast_1d(self.base.sf(arr))
        out = (np.exp(_k.parallel_log_cdf(self._lam(), s))
               * np.atleast_1d(self.base.reversed_hazard(arr))
               * _k.parallel_rhr_factor(self._lam(), s))
        return _ret(out, scalar)

    def log_density(self, t):
        """Natural log of the lifetime density (series: t >= 0, parallel: t > 0).

        Deep-tail densities leave the double range long before their
        logarithms do, so likelihood-ratio work should ratio in log space;
        -inf marks points where the density itself is a true zero.
        """
        if self.topology is Topology.SERIES:
            arr, scalar = _times(t)
            s = np.atleast_1d(self.base.sf(arr))
            with np.errstate(divide="ignore"):
                out = (_k.series_log_sf(self._lam(), s)
                       + np.log(np.atleast_1d(self.base.hazard(arr)))
                       + np.log(_k.series_hazard_factor(self._lam(), s)))
            return _ret(out, scalar)
        arr, scalar = _times(t, strictly_positive=True)
        s = np.atleast_1d(self.base.sf(arr))
        with np.errstate(divide="ignore"):
            out = (_k.parallel_log_cdf(self._lam(), s)
                   + np.log(np.atleast_1d(self.base.reversed_hazard(arr)))
                   + np.log(_k.parallel_rhr_factor(self._lam(), s)))
        return _ret(out, scalar)

    def to_dict(self) -> dict:
        return {
            "topology": self.topology.value,
            "baseline": self.base.to_dict(),
            "params": list(self.params.values),
        }


def _check_hom_args(lam: float, n: int):
    if not lam > 0:
        raise DomainError(f"proportionality constant must be > 0, got {lam}")
    if int(n) != n or n < 1:
        raise DomainError(f"component count must be a positive integer, got {n}")


def homogeneous_series_survival(lam: float, n: int, base: Baseline, t):
    """Survival of a series system of n identical PO components."""
    _check_hom_args(lam, n)
    arr, scalar = _times(t)
    s = np.atleast_1d(base.sf(arr))
    with np.errstate(divide="ignore"):
        log_factor = np.log(lam) + np.log(s) - np.log((1.0 - s) + lam * s)
    return _ret(np.exp(n * log_factor), scalar)


def homogeneous_parallel_survival(lam: float, n: int, base: Baseline, t):
    """Survival of a parallel system of n identical PO components."""
    _check_hom_args(lam, n)
    arr, scalar = _times(t)
    s = np.atleast_1d(base.sf(arr))
    with np.errstate(divide="ignore"):
        log_factor = np.log1p(-s) - np.log1p(-(1.0 - lam) * s)
    return _ret(-np.expm1(n * log_factor), scalar)
