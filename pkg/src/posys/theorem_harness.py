"""Comparison-theorem harness: hypotheses, conclusions, sweeps, counterexamples.

Each registered case couples a decidable hypothesis on the component
parameters with the order check its conclusion asserts, so that a randomly
generated instance *satisfying* the hypothesis must produce a verdict that
holds on the evaluation grid.  Any inconsistent outcome points at a bug in
this artifact, not at the mathematics.

Registered theorem ids and their conclusions (first system built from the
``lam`` side, second from the ``mu``/homogeneous side):

=======  ========  ==========================================================
id       topology  hypothesis  =>  conclusion
=======  ========  ==========================================================
T3.1     series    lam p-larger mu            => first st-smaller than second
C3.1     series    common >= geometric mean   => heterogeneous st-smaller
T3.2     series    lam weakly supermajorizes  => first hr-smaller
C3.2     series    common >= arithmetic mean  => heterogeneous hr-smaller
T3.3     series    two-block majorization, monotone blocks => second ages
                   faster (hazard-rate ratio of second to first rises)
T3.4     series    max first-block <= min second-block     => second ages faster
T3.5     series    shared tail block, weak supermajorization => second ages faster
T3.6     series    weak supermajorization, interleaved blocks => second ages faster
T3.7     series    common >= arithmetic mean  => homogeneous ages faster
T3.8     series    T3.3-style or T3.6-style hypothesis => first lr-smaller
T3.9     series    common >= arithmetic mean  => heterogeneous lr-smaller
T4.1     parallel  lam weakly supermajorizes  => first rhr-smaller
C4.1     parallel  common >= arithmetic mean  => heterogeneous rhr-smaller
T4.2     parallel  common == geometric mean   => heterogeneous st-LARGER
T4.3     parallel  lam1 <= eta <= mu1 (shared tail) => first ages faster (rhr)
T4.4     parallel  lam1 <= eta <= mu1 (shared tail) => first lr-smaller
=======  ========  ==========================================================

The counterexample registry reproduces the eight documented failure cases
(quantitative value tables and the nonmonotone ratio curves) that show which
hypothesis relaxations do *not* work.

Known gap: T3.5's claim is false on part of its stated hypothesis.  When
the shared block parameter sits below both first-block values, the
hazard-rate ratio of the two series systems is nonmonotone (dips on the
order of 1e-2), so sweeps over the full hypothesis report those instances
as inconsistent.  That is the correct outcome, not a checker defect; see
the README for the analysis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import DomainError, GenerationError
from .majorization import (
    OutlierSpec,
    ParamVector,
    majorizes,
    p_larger,
    reciprocally_majorizes,
    weak_supermajorizes,
)
from .order_checks import (
    DEFAULT_GRID,
    GridSpec,
    MonotoneVerdict,
    OrderVerdict,
    check_ageing_hr,
    check_ageing_rhr,
    check_hr,
    check_lr,
    check_rhr,
    check_st,
    detect_nonmonotone,
)
from .po_model import Baseline, Exponential, Weibull
from .systems import SystemModel, Topology

__all__ = [
    "VectorPair",
    "HomogeneousRef",
    "OutlierPair",
    "CommonEtaPair",
    "TheoremCase",
    "Condition",
    "HypothesisReport",
    "TheoremReport",
    "SweepReport",
    "THEOREM_IDS",
    "theorem_branches",
    "describe_theorem",
    "hypothesis",
    "build_systems",
    "verify",
    "generate_case",
    "sweep",
    "ValueCheck",
    "CounterexampleReport",
    "COUNTEREXAMPLE_IDS",
    "reproduce_counterexample",
]


# -- case inputs ---------------------------------------------------------------

@dataclass(frozen=True)
class VectorPair:
    """Two free parameter vectors of equal length."""

    lam: ParamVector
    mu: ParamVector

    def __post_init__(self):
        if len(self.lam) != len(self.mu):
            raise DomainError("parameter vectors must have equal length")


@dataclass(frozen=True)
class HomogeneousRef:
    """A heterogeneous vector compared against n copies of a common value."""

    lam: ParamVector
    lam_hom: float

    def __post_init__(self):
        if not self.lam_hom > 0:
            raise DomainError("common parameter must be > 0")


@dataclass(frozen=True)
class OutlierPair:
    """Two two-block vectors sharing the block sizes n1, n2."""

    lam1: float
    lam2: float
    mu1: float
    mu2: float
    n1: int
    n2: int

    @property
    def lam_spec(self) -> OutlierSpec:
        return OutlierSpec(self.lam1, self.lam2, self.n1, self.n2)

    @property
    def mu_spec(self) -> OutlierSpec:
        return OutlierSpec(self.mu1, self.mu2, self.n1, self.n2)


@dataclass(frozen=True)
class CommonEtaPair:
    """Two-block vectors whose second blocks share the same value eta."""

    lam1: float
    mu1: float
    eta: float
    n1: int
    n2: int

    @property
    def lam_spec(self) -> OutlierSpec:
        return OutlierSpec(self.lam1, self.eta, self.n1, self.n2)

    @property
    def mu_spec(self) -> OutlierSpec:
        return OutlierSpec(self.mu1, self.eta, self.n1, self.n2)


CaseInputs = Union[VectorPair, HomogeneousRef, OutlierPair, CommonEtaPair]


@dataclass(frozen=True)
class TheoremCase:
    id: str
    baseline: Baseline
    inputs: CaseInputs
    grid: GridSpec = DEFAULT_GRID


@dataclass(frozen=True)
class Condition:
    name: str
    holds: bool


@dataclass(frozen=True)
class HypothesisReport:
    holds: bool
    conditions: tuple[Condition, ...]

    def to_dict(self) -> dict:
        return {"holds": self.holds,
                "conditions": [{"name": c.name, "holds": c.holds} for c in self.conditions]}


@dataclass(frozen=True)
class TheoremReport:
    id: str
    hypothesis: HypothesisReport
    conclusion: OrderVerdict
    consistent: bool

    def to_dict(self) -> dict:
        return {"id": self.id, "hypothesis": self.hypothesis.to_dict(),
                "conclusion": self.conclusion.to_dict(), "consistent": self.consistent}


@dataclass(frozen=True)
class SweepReport:
    theorem_id: str
    trials: int
    seed: int
    consistent_count: int
    branch_counts: dict
    failures: tuple[TheoremReport, ...]

    @property
    def all_consistent(self) -> bool:
        return self.consistent_count == self.trials

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "trials": self.trials,
            "seed": self.seed,
            "consistent_count": self.consistent_count,
            "all_consistent": self.all_consistent,
            "branch_counts": dict(self.branch_counts),
            "failures": [f.to_dict() for f in self.failures],
        }


# -- hypothesis predicates -------------------------------------------------------

def _cond(name: str, holds) -> Condition:
    return Condition(name, bool(holds))


def _expect(case: TheoremCase, kind: type) -> CaseInputs:
    if not isinstance(case.inputs, kind):
        raise DomainError(f"theorem {case.id} needs {kind.__name__} inputs, "
                          f"got {type(case.inputs).__name__}")
    return case.inputs


def _hyp_t31(case):
    inp = _expect(case, VectorPair)
    return (_cond("lam p-larger than mu", p_larger(inp.lam, inp.mu)),)


def _hyp_c31(case):
    inp = _expect(case, HomogeneousRef)
    gm = math.exp(float(np.mean(np.log(inp.lam.as_array()))))
    return (_cond("common parameter >= geometric mean", inp.lam_hom >= gm - 1e-12),)


def _hyp_t32(case):
    inp = _expect(case, VectorPair)
    return (_cond("lam weakly supermajorizes mu", weak_supermajorizes(inp.lam, inp.mu)),)


def _hyp_mean(case):
    inp = _expect(case, HomogeneousRef)
    am = float(np.mean(inp.lam.as_array()))
    return (_cond("common parameter >= arithmetic mean", inp.lam_hom >= am - 1e-12),)


def _blocks_monotone(inp: OutlierPair) -> bool:
    increasing = inp.lam1 <= inp.lam2 and inp.mu1 <= inp.mu2 and inp.n1 >= inp.n2
    decreasing = inp.lam1 >= inp.lam2 and inp.mu1 >= inp.mu2 and inp.n1 <= inp.n2
    return increasing or decreasing


def _chain_interleaved(inp: OutlierPair) -> bool:
    ascending = inp.lam1 <= inp.mu1 <= inp.mu2 <= inp.lam2 and inp.n1 >= inp.n2
    descending = inp.lam1 >= inp.mu1 >= inp.mu2 >= inp.lam2 and inp.n1 <= inp.n2
    return ascending or descending


def _hyp_t33(case):
    inp = _expect(case, OutlierPair)
    return (
        _cond("expanded lam majorizes expanded mu",
              majorizes(inp.lam_spec.expand(), inp.mu_spec.expand())),
        _cond("blocks monotone the same way, larger block on the small side",
              _blocks_monotone(inp)),
    )


def _hyp_t34(case):
    inp = _expect(case, OutlierPair)
    return (_cond("max(lam blocks) <= min(mu blocks)",
                  max(inp.lam1, inp.lam2) <= min(inp.mu1, inp.mu2)),)


def _hyp_t35(case):
    inp = _expect(case, CommonEtaPair)
    return (_cond("expanded lam weakly supermajorizes expanded mu (shared tail)",
                  weak_supermajorizes(inp.lam_spec.expand(), inp.mu_spec.expand())),)


def _hyp_t36(case):
    inp = _expect(case, OutlierPair)
    return (
        _cond("expanded lam weakly supermajorizes expanded mu",
              weak_supermajorizes(inp.lam_spec.expand(), inp.mu_spec.expand())),
        _cond("mu blocks nested between lam blocks, larger block first",
              _chain_interleaved(inp)),
    )


def _hyp_t38(case):
    inp = _expect(case, OutlierPair)
    t33 = _hyp_t33(case)
    t36 = _hyp_t36(case)
    conds = tuple(_cond("majorization branch: " + c.name, c.holds) for c in t33)
    conds += tuple(_cond("weak-supermajorization branch: " + c.name, c.holds) for c in t36)
    return conds


def _hyp_t42(case):
    inp = _expect(case, HomogeneousRef)
    gm = math.exp(float(np.mean(np.log(inp.lam.as_array()))))
    return (_cond("common parameter equals geometric mean (1e-12 relative)",
                  abs(inp.lam_hom - gm) <= 1e-12 * gm),)


def _hyp_t43(case):
    inp = _expect(case, CommonEtaPair)
    return (_cond("lam1 <= eta <= mu1", inp.lam1 <= inp.eta <= inp.mu1),)


def _holds_all(conds):
    return all(c.holds for c in conds)


def _holds_t38(conds):
    return (conds[0].holds and conds[1].holds) or (conds[2].holds and conds[3].holds)


# -- conclusion checks -----------------------------------------------------------

def _concl_st(x, y, grid):
    return check_st(x, y, grid)


def _concl_st_swapped(x, y, grid):
    return check_st(y, x, grid)


def _concl_hr(x, y, grid):
    return check_hr(x, y, grid)


def _concl_second_ages_faster(x, y, grid):
    # hazard-rate ratio of the second system to the first must rise
    return check_ageing_hr(y, x, grid)


def _concl_lr(x, y, grid):
    return check_lr(x, y, grid)


def _concl_rhr(x, y, grid):
    return check_rhr(x, y, grid)


def _concl_first_ages_faster_rhr(x, y, grid):
    return check_ageing_rhr(x, y, grid)


# -- randomized instance generators ---------------------------------------------

def _random_baseline(rng: np.random.Generator) -> Baseline:
    if rng.integers(0, 2) == 0:
        return Exponential(rate=float(rng.uniform(0.6, 2.4)))
    return Weibull(shape=float(rng.uniform(0.9, 2.5)), scale=float(rng.uniform(0.6, 2.5)))


def spread_transfers(values: np.ndarray, rng: np.random.Generator,
                     transfers: int, floor: float) -> np.ndarray:
    """Apply sum-preserving transfers from smaller to larger entries.

    Each step moves mass from a (weakly) smaller entry to a larger one, so
    the result majorizes the input; entries stay above ``floor``.
    """
    out = np.array(values, dtype=np.float64)
    n = len(out)
    for _ in range(transfers):
        i, j = rng.integers(0, n, size=2)
        if i == j:
            continue
        lo, hi = (i, j) if out[i] <= out[j] else (j, i)
        room = out[lo] - floor
        if room <= 0:
            continue
        delta = rng.uniform(0.0, 0.9 * room)
        out[lo] -= delta
        out[hi] += delta
    return out


def _gen_vector_pair_p_larger(rng) -> VectorPair:
    n = int(rng.integers(2, 7))
    mu = rng.uniform(0.5, 5.0, size=n)
    logs = spread_transfers(np.log(mu), rng, int(rng.integers(1, 4)), math.log(0.05))
    logs = logs - rng.uniform(0.0, 0.3, size=n)
    return VectorPair(ParamVector(np.exp(logs)), ParamVector(mu))


def _gen_vector_pair_weak_super(rng) -> VectorPair:
    n = int(rng.integers(2, 7))
    mu = rng.uniform(0.5, 5.0, size=n)
    lam = spread_transfers(mu, rng, int(rng.integers(1, 4)), 0.05)
    lam = lam - rng.uniform(0.0, 1.0, size=n) * np.maximum(lam - 0.05, 0.0) * 0.5
    return VectorPair(ParamVector(lam), ParamVector(mu))


def _gen_hom(rng, *, mean_kind: str, slack: bool) -> HomogeneousRef:
    n = int(rng.integers(2, 7))
    lam = rng.uniform(0.5, 5.0, size=n)
    ref = (math.exp(float(np.mean(np.log(lam)))) if mean_kind == "geometric"
           else float(np.mean(lam)))
    lam_hom = ref * (1.0 + rng.uniform(0.0, 0.6)) if slack else ref
    return HomogeneousRef(ParamVector(lam), lam_hom)


def _gen_outlier_majorized(rng) -> OutlierPair:
    """Two-block pair with equal weighted sums and monotone blocks."""
    if rng.integers(0, 2) == 0:  # increasing blocks, n1 >= n2
        n2 = int(rng.integers(1, 4))
        n1 = n2 + int(rng.integers(0, 4))
        mu1 = float(rng.uniform(0.5, 3.0))
        mu2 = mu1 + float(rng.uniform(0.0, 2.0))
        lam1 = mu1 * float(rng.uniform(0.3, 1.0))
        lam2 = (n1 * mu1 + n2 * mu2 - n1 * lam1) / n2
    else:  # decreasing blocks, n1 <= n2
        n1 = int(rng.integers(1, 4))
        n2 = n1 + int(rng.integers(0, 4))
        mu2 = float(rng.uniform(0.5, 3.0))
        mu1 = mu2 + float(rng.uniform(0.0, 2.0))
        lam1 = mu1 + float(rng.uniform(0.0, 0.5 * n2 * mu2 / n1))
        lam2 = (n1 * mu1 + n2 * mu2 - n1 * lam1) / n2
    return OutlierPair(lam1, lam2, mu1, mu2, n1, n2)


def _gen_outlier_separated(rng) -> OutlierPair:
    lam1, lam2 = rng.uniform(0.3, 2.5, size=2)
    gap = float(rng.uniform(0.05, 2.5))
    mu1 = max(lam1, lam2) + gap
    mu2 = max(lam1, lam2) + float(rng.uniform(0.05, 2.5))
    return OutlierPair(float(lam1), float(lam2), mu1, mu2,
                       int(rng.integers(1, 5)), int(rng.integers(1, 5)))


def _gen_common_eta_weak_super(rng) -> CommonEtaPair:
    lam1 = float(rng.uniform(0.3, 3.0))
    mu1 = lam1 + float(rng.uniform(0.0, 2.0))
    eta = float(rng.uniform(0.3, 4.0))
    return CommonEtaPair(lam1, mu1, eta, int(rng.integers(1, 4)), int(rng.integers(1, 4)))


def _gen_outlier_interleaved(rng) -> OutlierPair:
    """Weakly supermajorizing two-block pair with nested mu blocks."""
    if rng.integers(0, 2) == 0:  # ascending chain, n1 >= n2
        n2 = int(rng.integers(1, 4))
        n1 = n2 + int(rng.integers(0, 4))
        lam1 = float(rng.uniform(0.3, 2.0))
        mu1 = lam1 + float(rng.uniform(0.05, 1.5))
        mu2 = mu1 + float(rng.uniform(0.0, 1.5))
        lam2 = mu2 + float(rng.uniform(0.0, n1 * (mu1 - lam1) / n2))
    else:  # descending chain, n1 <= n2
        n1 = int(rng.integers(1, 4))
        n2 = n1 + int(rng.integers(0, 4))
        lam2 = float(rng.uniform(0.3, 2.0))
        mu2 = lam2 + float(rng.uniform(0.05, 1.5))
        mu1 = mu2 + float(rng.uniform(0.0, 1.5))
        lam1 = mu1 + float(rng.uniform(0.0, n2 * (mu2 - lam2) / n1))
    return OutlierPair(lam1, lam2, mu1, mu2, n1, n2)


def _gen_common_eta_ordered(rng) -> CommonEtaPair:
    lam1 = float(rng.uniform(0.2, 2.0))
    eta = lam1 + float(rng.uniform(0.0, 2.0))
    mu1 = eta + float(rng.uniform(0.0, 2.0))
    return CommonEtaPair(lam1, mu1, eta, int(rng.integers(1, 4)), int(rng.integers(1, 4)))


# -- registry --------------------------------------------------------------------

@dataclass(frozen=True)
class _TheoremDef:
    topology: Topology
    input_kind: type
    description: str
    conditions: Callable[[TheoremCase], tuple[Condition, ...]]
    holds: Callable[[tuple[Condition, ...]], bool]
    conclusion: Callable[[SystemModel, SystemModel, GridSpec], OrderVerdict]
    generators: dict


_REGISTRY: dict[str, _TheoremDef] = {
    "T3.1": _TheoremDef(
        Topology.SERIES, VectorPair,
        "p-larger parameters give a stochastically smaller series lifetime",
        _hyp_t31, _holds_all, _concl_st,
        {None: _gen_vector_pair_p_larger}),
    "C3.1": _TheoremDef(
        Topology.SERIES, HomogeneousRef,
        "a homogeneous series with common parameter >= the geometric mean "
        "stochastically dominates the heterogeneous one",
        _hyp_c31, _holds_all, _concl_st,
        {None: lambda rng: _gen_hom(rng, mean_kind="geometric", slack=True)}),
    "T3.2": _TheoremDef(
        Topology.SERIES, VectorPair,
        "weak supermajorization of parameters gives hazard-rate dominance for series",
        _hyp_t32, _holds_all, _concl_hr,
        {None: _gen_vector_pair_weak_super}),
    "C3.2": _TheoremDef(
        Topology.SERIES, HomogeneousRef,
        "a homogeneous series with common parameter >= the arithmetic mean "
        "dominates the heterogeneous one in hazard rate",
        _hyp_mean, _holds_all, _concl_hr,
        {None: lambda rng: _gen_hom(rng, mean_kind="arithmetic", slack=True)}),
    "T3.3": _TheoremDef(
        Topology.SERIES, OutlierPair,
        "two-block majorization with monotone blocks makes the second series "
        "system age faster in hazard-rate terms",
        _hyp_t33, _holds_all, _concl_second_ages_faster,
        {None: _gen_outlier_majorized}),
    "T3.4": _TheoremDef(
        Topology.SERIES, OutlierPair,
        "fully separated blocks make the second series system age faster",
        _hyp_t34, _holds_all, _concl_second_ages_faster,
        {None: _gen_outlier_separated}),
    "T3.5": _TheoremDef(
        Topology.SERIES, CommonEtaPair,
        "with a shared second block, weak supermajorization makes the second "
        "series system age faster",
        _hyp_t35, _holds_all, _concl_second_ages_faster,
        {None: _gen_common_eta_weak_super}),
    "T3.6": _TheoremDef(
        Topology.SERIES, OutlierPair,
        "weak supermajorization with nested blocks makes the second series "
        "system age faster",
        _hyp_t36, _holds_all, _concl_second_ages_faster,
        {None: _gen_outlier_interleaved}),
    "T3.7": _TheoremDef(
        Topology.SERIES, HomogeneousRef,
        "a homogeneous series with common parameter >= the arithmetic mean "
        "ages faster than the heterogeneous one",
        _hyp_mean, _holds_all, _concl_second_ages_faster,
        {None: lambda rng: _gen_hom(rng, mean_kind="arithmetic", slack=True)}),
    "T3.8": _TheoremDef(
        Topology.SERIES, OutlierPair,
        "two-block series systems are likelihood-ratio ordered under either "
        "the majorization or the weak-supermajorization hypothesis",
        _hyp_t38, _holds_t38, _concl_lr,
        {"majorization": _gen_outlier_majorized,
         "weak_supermajorization": _gen_outlier_interleaved}),
    "T3.9": _TheoremDef(
        Topology.SERIES, HomogeneousRef,
        "a homogeneous series with common parameter >= the arithmetic mean "
        "dominates the heterogeneous one in likelihood ratio",
        _hyp_mean, _holds_all, _concl_lr,
        {None: lambda rng: _gen_hom(rng, mean_kind="arithmetic", slack=True)}),
    "T4.1": _TheoremDef(
        Topology.PARALLEL, VectorPair,
        "weak supermajorization of parameters gives reversed-hazard dominance "
        "for parallel systems",
        _hyp_t32, _holds_all, _concl_rhr,
        {None: _gen_vector_pair_weak_super}),
    "C4.1": _TheoremDef(
        Topology.PARALLEL, HomogeneousRef,
        "a homogeneous parallel system with common parameter >= the arithmetic "
        "mean dominates the heterogeneous one in reversed hazard",
        _hyp_mean, _holds_all, _concl_rhr,
        {None: lambda rng: _gen_hom(rng, mean_kind="arithmetic", slack=True)}),
    "T4.2": _TheoremDef(
        Topology.PARALLEL, HomogeneousRef,
        "a homogeneous parallel system at exactly the geometric mean is "
        "stochastically dominated by the heterogeneous one",
        _hyp_t42, _holds_all, _concl_st_swapped,
        {None: lambda rng: _gen_hom(rng, mean_kind="geometric", slack=False)}),
    "T4.3": _TheoremDef(
        Topology.PARALLEL, CommonEtaPair,
        "with a shared second block and lam1 <= eta <= mu1, the first parallel "
        "system ages faster in reversed-hazard terms",
        _hyp_t43, _holds_all, _concl_first_ages_faster_rhr,
        {None: _gen_common_eta_ordered}),
    "T4.4": _TheoremDef(
        Topology.PARALLEL, CommonEtaPair,
        "with a shared second block and lam1 <= eta <= mu1, the first parallel "
        "system is smaller in likelihood ratio",
        _hyp_t43, _holds_all, _concl_lr,
        {None: _gen_common_eta_ordered}),
}

THEOREM_IDS = tuple(_REGISTRY)


def describe_theorem(theorem_id: str) -> str:
    return _get(theorem_id).description


def theorem_branches(theorem_id: str) -> tuple:
    return tuple(_get(theorem_id).generators)


def _get(theorem_id: str) -> _TheoremDef:
    if theorem_id not in _REGISTRY:
        raise DomainError(f"unknown theorem id {theorem_id!r}; known: {list(_REGISTRY)}")
    return _REGISTRY[theorem_id]


def hypothesis(case: TheoremCase) -> HypothesisReport:
    """Evaluate the theorem's hypothesis with a per-condition breakdown."""
    t = _get(case.id)
    conds = t.conditions(case)
    return HypothesisReport(t.holds(conds), conds)


def build_systems(case: TheoremCase) -> tuple[SystemModel, SystemModel]:
    """Materialize the two compared systems (first = lam side)."""
    t = _get(case.id)
    inp = _expect(case, t.input_kind)
    if isinstance(inp, VectorPair):
        return (SystemModel(t.topology, case.baseline, inp.lam),
                SystemModel(t.topology, case.baseline, inp.mu))
    if isinstance(inp, HomogeneousRef):
        return (SystemModel(t.topology, case.baseline, inp.lam),
                SystemModel.homogeneous(t.topology, case.baseline,
                                        inp.lam_hom, len(inp.lam)))
    return (SystemModel(t.topology, case.baseline, inp.lam_spec.expand()),
            SystemModel(t.topology, case.baseline, inp.mu_spec.expand()))


def verify(case: TheoremCase) -> TheoremReport:
    """Check hypothesis and conclusion; consistent unless a satisfied
    hypothesis meets a failing conclusion."""
    t = _get(case.id)
    hyp = hypothesis(case)
    first, second = build_systems(case)
    verdict = t.conclusion(first, second, case.grid)
    return TheoremReport(case.id, hyp, verdict, (not hyp.holds) or verdict.holds)


def generate_case(theorem_id: str, rng: np.random.Generator,
                  branch: str | None = None, grid: GridSpec = DEFAULT_GRID,
                  max_attempts: int = 8) -> TheoremCase:
    """Draw a random instance satisfying the hypothesis (constructively)."""
    t = _get(theorem_id)
    if branch is None and len(t.generators) == 1:
        branch = next(iter(t.generators))
    if branch not in t.generators:
        raise DomainError(f"{theorem_id} has branches {tuple(t.generators)}, got {branch!r}")
    gen = t.generators[branch]
    for _ in range(max_attempts):
        case = TheoremCase(theorem_id, _random_baseline(rng), gen(rng), grid)
        if hypothesis(case).holds:
            return case
    raise GenerationError(
        f"could not construct a hypothesis-satisfying instance for {theorem_id}"
        f" (branch {branch!r}) in {max_attempts} attempts")


def sweep(theorem_id: str, n_trials: int, seed: int,
          grid: GridSpec = DEFAULT_GRID, branch: str | None = None) -> SweepReport:
    """Verify ``n_trials`` random hypothesis-satisfying instances.

    For theorems with several generator branches the branches alternate
    unless one is pinned via ``branch``.
    """
    if n_trials < 1:
        raise DomainError("n_trials must be >= 1")
    t = _get(theorem_id)
    branches = (branch,) if branch is not None else tuple(t.generators)
    if branch is not None and branch not in t.generators:
        raise DomainError(f"{theorem_id} has branches {tuple(t.generators)}, got {branch!r}")
    rng = np.random.default_rng(seed)
    consistent = 0
    branch_counts: dict = {}
    failures: list[TheoremReport] = []
    for trial in range(n_trials):
        b = branches[trial % len(branches)]
        case = generate_case(theorem_id, rng, branch=b, grid=grid)
        report = verify(case)
        key = b if b is not None else "default"
        branch_counts[key] = branch_counts.get(key, 0) + 1
        if report.consistent:
            consistent += 1
        else:
            failures.append(report)
    return SweepReport(theorem_id, n_trials, seed, consistent,
                       branch_counts, tuple(failures))


# -- counterexample reproduction ---------------------------------------------

@dataclass(frozen=True)
class ValueCheck:
    """One reported scalar compared against its documented reference."""

    label: str
    t: float
    computed: float
    reference: float
    tol: float

    @property
    def ok(self) -> bool:
        return abs(self.computed - self.reference) <= self.tol

    def to_dict(self) -> dict:
        return {"label": self.label, "t": self.t, "computed": self.computed,
                "reference": self.reference, "tol": self.tol, "ok": self.ok}


@dataclass(frozen=True)
class CounterexampleReport:
    id: str
    description: str
    first: SystemModel
    second: SystemModel
    facts: tuple[Condition, ...]
    values: tuple[ValueCheck, ...]
    verdicts: tuple[tuple[str, OrderVerdict, bool], ...]  # (name, verdict, expected holds)
    monotonicity: tuple[tuple[str, MonotoneVerdict], ...]
    curves: dict
    grid: GridSpec

    @property
    def values_ok(self) -> bool:
        return all(v.ok for v in self.values)

    @property
    def demonstrates(self) -> bool:
        orders = all(v.holds == expected for _, v, expected in self.verdicts)
        mono = all(m.classification == "nonmonotone" and m.witness is not None
                   for _, m in self.monotonicity)
        return orders and mono

    @property
    def ok(self) -> bool:
        return self.values_ok and self.demonstrates

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
            "facts": [{"name": c.name, "holds": c.holds} for c in self.facts],
            "values": [v.to_dict() for v in self.values],
            "verdicts": [{"name": n, "expected_holds": e, "verdict": v.to_dict()}
                         for n, v, e in self.verdicts],
            "monotonicity": [{"name": n, "verdict": m.to_dict()}
                             for n, m in self.monotonicity],
            "curves": {name: {"points": len(ts)} for name, (ts, _) in self.curves.items()},
            "grid": self.grid.to_dict(),
            "values_ok": self.values_ok,
            "demonstrates": self.demonstrates,
            "ok": self.ok,
        }


_CE_VALUE_GRID = GridSpec(0.01, 5.0, 1000, "linear")
_CE_FIGURE_GRID = GridSpec(0.01, 3.0, 1000, "linear")


def _ce31() -> CounterexampleReport:
    base = Exponential(2.0)
    first = SystemModel.series(base, (2.2, 3.0, 5.0))
    second = SystemModel.series(base, (2.8, 3.2, 3.3))
    grid = _CE_VALUE_GRID
    values = tuple(
        ValueCheck(label, t, float(sys.survival(t)), ref, 1e-4)
        for (label, t, sys, ref) in (
            ("series survival, first system", 0.2, first, 0.63929),
            ("series survival, second system", 0.2, second, 0.641646),
            ("series survival, first system", 0.8, first, 0.0861549),
            ("series survival, second system", 0.8, second, 0.084394),
        ))
    facts = (
        _cond("first reciprocally majorizes second",
              reciprocally_majorizes(first.params, second.params)),
        _cond("first p-larger than second", p_larger(first.params, second.params)),
    )
    return CounterexampleReport(
        "CE3.1",
        "reciprocal majorization alone does not give stochastic ordering of "
        "series lifetimes: the survival curves cross",
        first, second, facts, values,
        (("first st-smaller than second", check_st(first, second, grid), False),),
        (), {}, grid)


def _ce32() -> CounterexampleReport:
    base = Exponential(1.2)
    first = SystemModel.series(base, (2.0, 3.0, 5.0))
    second = SystemModel.series(base, (2.8, 3.2, 3.4))
    grid = _CE_VALUE_GRID

    def norm_hazard(sys: SystemModel, t: float) -> float:
        # hazard in units of the baseline hazard; the documented table is
        # normalized this way, with the early column tabulated at t=0.25
        return float(sys.hazard(t)) / float(base.hazard(t))

    values = tuple(
        ValueCheck(label, t, norm_hazard(sys, t), ref, 1e-3)
        for (label, t, sys, ref) in (
            ("series hazard over baseline hazard, first system", 0.25, first, 1.2297),
            ("series hazard over baseline hazard, second system", 0.25, second, 1.1687),
            ("series hazard over baseline hazard, first system", 1.8, first, 2.3935),
            ("series hazard over baseline hazard, second system", 1.8, second, 2.4089),
        ))
    facts = (
        _cond("first p-larger than second", p_larger(first.params, second.params)),
        _cond("first weakly supermajorizes second",
              weak_supermajorizes(first.params, second.params)),
    )
    return CounterexampleReport(
        "CE3.2",
        "p-larger parameters alone do not give hazard-rate ordering of series "
        "lifetimes: the hazards cross",
        first, second, facts, values,
        (("first hr-smaller than second", check_hr(first, second, grid), False),),
        (), {}, grid)


def _ce41(sub: str) -> CounterexampleReport:
    base = Exponential(1.8)
    if sub == "a":
        first = SystemModel.parallel(base, (2.0, 3.0, 5.0))
        second = SystemModel.parallel(base, (2.6, 3.2, 3.7))
        t_ref, ref_first, ref_second = 1.5, 0.471629, 0.459619
        verdicts = (("first st-smaller than second",
                     check_st(first, second, _CE_VALUE_GRID), False),)
        note = "the heterogeneous parallel system is not st-dominated"
    else:
        first = SystemModel.parallel(base, (2.5, 3.0, 5.0))
        second = SystemModel.parallel(base, (3.0, 3.8, 4.4))
        t_ref, ref_first, ref_second = 1.2, 0.67176, 0.69449
        verdicts = (("second st-smaller than first",
                     check_st(second, first, _CE_VALUE_GRID), False),)
        note = "nor does it st-dominate"
    values = (
        ValueCheck("parallel survival, first system", t_ref,
                   float(first.survival(t_ref)), ref_first, 1e-4),
        ValueCheck("parallel survival, second system", t_ref,
                   float(second.survival(t_ref)), ref_second, 1e-4),
    )
    facts = (
        _cond("first p-larger than second", p_larger(first.params, second.params)),
        _cond("first weakly supermajorizes second",
              weak_supermajorizes(first.params, second.params)),
    )
    return CounterexampleReport(
        f"CE4.1{sub}",
        "p-larger parameters do not stochastically order parallel lifetimes: " + note,
        first, second, facts, values, verdicts, (), {}, _CE_VALUE_GRID)


def _ratio_curve(grid: GridSpec, num_sys: SystemModel, den_sys: SystemModel,
                 quantity: str):
    ts = grid.points()
    num = np.atleast_1d(getattr(num_sys, quantity)(ts))
    den = np.atleast_1d(getattr(den_sys, quantity)(ts))
    return ts, num / den


def _ce42() -> CounterexampleReport:
    base = Exponential(2.0)
    first = SystemModel.parallel(base, OutlierSpec(2.0, 6.0, 2, 4).expand())
    second = SystemModel.parallel(base, OutlierSpec(3.0, 5.5, 2, 4).expand())
    grid = _CE_FIGURE_GRID
    ts, rhr_ratio = _ratio_curve(grid, second, first, "reversed_hazard")
    _, dens_ratio = _ratio_curve(grid, second, first, "density")
    mono_rhr = detect_nonmonotone(lambda t: second.reversed_hazard(t) / first.reversed_hazard(t), grid)
    mono_dens = detect_nonmonotone(lambda t: second.density(t) / first.density(t), grid)
    facts = (_cond("expanded first majorizes expanded second",
                   majorizes(first.params, second.params)),)
    return CounterexampleReport(
        "CE4.2",
        "two-block majorization does not give relative ageing (reversed hazard) "
        "or likelihood-ratio ordering of parallel systems: both ratios turn",
        first, second, facts, (),
        (("first ages faster than second (reversed hazard)",
          check_ageing_rhr(first, second, grid), False),
         ("first lr-smaller than second", check_lr(first, second, grid), False)),
        (("reversed-hazard ratio of second to first", mono_rhr),
         ("density ratio of second to first", mono_dens)),
        {"reversed_hazard_ratio": (ts, rhr_ratio), "density_ratio": (ts, dens_ratio)},
        grid)


def _ce43(sub: str) -> CounterexampleReport:
    if sub == "a":
        base = Weibull(shape=2.0, scale=0.8)
        lam_hom = 3.6
        grid = _CE_FIGURE_GRID
    else:
        base = Weibull(shape=2.0, scale=3.0)
        lam_hom = 3.4
        # the turn sits near t ~ 3 for this scale, so the window is wider
        grid = GridSpec(0.01, 8.0, 1000, "linear")
    first = SystemModel.parallel(base, (2.0, 3.0, 4.0, 5.0))
    second = SystemModel.homogeneous(Topology.PARALLEL, base, lam_hom, 4)
    ts, ratio = _ratio_curve(grid, second, first, "reversed_hazard")
    mono = detect_nonmonotone(lambda t: second.reversed_hazard(t) / first.reversed_hazard(t), grid)
    facts = (_cond("common parameter >= arithmetic mean",
                   lam_hom >= float(np.mean(first.params.as_array()))),)
    return CounterexampleReport(
        f"CE4.3{sub}",
        "a heterogeneous parallel system and a homogeneous one need not be "
        "ordered by relative ageing in reversed hazard, whatever the mean "
        "condition does",
        first, second, facts, (),
        (("first ages faster than second (reversed hazard)",
          check_ageing_rhr(first, second, grid), False),),
        (("reversed-hazard ratio of homogeneous to heterogeneous", mono),),
        {"reversed_hazard_ratio": (ts, ratio)}, grid)


def _ce44() -> CounterexampleReport:
    base = Exponential(2.0)
    pair = CommonEtaPair(lam1=0.2, mu1=0.4, eta=0.9, n1=1, n2=1)
    first = SystemModel.parallel(base, pair.lam_spec.expand())
    second = SystemModel.parallel(base, pair.mu_spec.expand())
    grid = _CE_FIGURE_GRID
    ts, ratio = _ratio_curve(grid, second, first, "reversed_hazard")
    mono = detect_nonmonotone(lambda t: second.reversed_hazard(t) / first.reversed_hazard(t), grid)
    facts = (
        _cond("lam1 <= eta <= mu1", pair.lam1 <= pair.eta <= pair.mu1),
        _cond("lam1 <= mu1 <= eta", pair.lam1 <= pair.mu1 <= pair.eta),
    )
    return CounterexampleReport(
        "CE4.4",
        "with both first-block parameters below the shared one, the parallel "
        "relative-ageing conclusion fails: the reversed-hazard ratio turns",
        first, second, facts, (),
        (("first ages faster than second (reversed hazard)",
          check_ageing_rhr(first, second, grid), False),),
        (("reversed-hazard ratio of second to first", mono),),
        {"reversed_hazard_ratio": (ts, ratio)}, grid)


_COUNTEREXAMPLES: dict[str, Callable[[], CounterexampleReport]] = {
    "CE3.1": _ce31,
    "CE3.2": _ce32,
    "CE4.1a": lambda: _ce41("a"),
    "CE4.1b": lambda: _ce41("b"),
    "CE4.2": _ce42,
    "CE4.3a": lambda: _ce43("a"),
    "CE4.3b": lambda: _ce43("b"),
    "CE4.4": _ce44,
}

COUNTEREXAMPLE_IDS = tuple(_COUNTEREXAMPLES)


def reproduce_counterexample(case_id: str) -> CounterexampleReport:
    """Recompute a documented counterexample with its baked-in parameters."""
    if case_id not in _COUNTEREXAMPLES:
        raise DomainError(f"unknown counterexample {case_id!r}; known: {list(_COUNTEREXAMPLES)}")
    return _COUNTEREXAMPLES[case_id]()
