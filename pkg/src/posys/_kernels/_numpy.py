"""NumPy implementation of the hot evaluation kernels.

All kernels take the vector of proportionality constants ``lams`` (shape
``(n,)``) and precomputed baseline survival values ``sbar`` (shape ``(m,)``,
entries in ``[0, 1]``) and return an ``(m,)`` float64 array.

The per-component denominator ``1 - (1-l)*s`` is evaluated as
``(1-s) + l*s``: a sum of two nonnegative terms, so it never cancels and is
exact at the endpoints s=0 and s=1.  Product-form quantities accumulate in
log space, so long products degrade to ``exp(-inf) == 0`` instead of raising
or losing the tail.
"""

import numpy as np

BACKEND = "numpy"


def po_sf(alpha, sbar):
    """Survival of a single proportional-odds component: a*s / ((1-s) + a*s)."""
    sbar = np.asarray(sbar, dtype=np.float64)
    return alpha * sbar / ((1.0 - sbar) + alpha * sbar)


def series_log_sf(lams, sbar):
    """log survival of a series system: sum_i log(l_i s / ((1-s) + l_i s))."""
    lams = np.asarray(lams, dtype=np.float64)
    sbar = np.asarray(sbar, dtype=np.float64)
    den = (1.0 - sbar)[None, :] + lams[:, None] * sbar[None, :]
    with np.errstate(divide="ignore"):
        terms = np.log(lams)[:, None] + np.log(sbar)[None, :] - np.log(den)
    return terms.sum(axis=0)


def series_hazard_factor(lams, sbar):
    """sum_i 1 / ((1-s) + l_i s); the series hazard is this times r(t)."""
    lams = np.asarray(lams, dtype=np.float64)
    sbar = np.asarray(sbar, dtype=np.float64)
    den = (1.0 - sbar)[None, :] + lams[:, None] * sbar[None, :]
    return (1.0 / den).sum(axis=0)


def parallel_log_cdf(lams, sbar):
    """log cdf of a parallel system: sum_i log((1-s) / (1 - (1-l_i) s)).

    Formed from log1p so that the tiny log-cdf deficit survives when the
    component survivals drop below double epsilon (where (1-s) + l*s would
    round to 1 and lose it).
    """
    lams = np.asarray(lams, dtype=np.float64)
    sbar = np.asarray(sbar, dtype=np.float64)
    lbar = 1.0 - lams[:, None]
    with np.errstate(divide="ignore"):
        terms = np.log1p(-sbar)[None, :] - np.log1p(-lbar * sbar[None, :])
    return terms.sum(axis=0)


def parallel_rhr_factor(lams, sbar):
    """sum_i l_i / ((1-s) + l_i s); the parallel reversed hazard is this times rt(t)."""
    lams = np.asarray(lams, dtype=np.float64)
    sbar = np.asarray(sbar, dtype=np.float64)
    den = (1.0 - sbar)[None, :] + lams[:, None] * sbar[None, :]
    return (lams[:, None] / den).sum(axis=0)
