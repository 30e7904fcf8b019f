"""Proportional-odds lifetimes of series and parallel systems.

The package evaluates proportional-odds (Marshall-Olkin) transforms of
baseline lifetimes, builds series/parallel systems of independent
heterogeneous components, decides majorization-type preorders on parameter
vectors, checks stochastic orders between system lifetimes on evaluation
grids, and verifies a catalogue of comparison theorems and counterexamples
numerically.
"""

from ._kernels import BACKEND as kernel_backend
from .errors import (
    DimensionError,
    DomainError,
    EvaluationError,
    GenerationError,
    GridError,
    PosysError,
    RangeError,
)
from .majorization import (
    OutlierSpec,
    ParamVector,
    expand_outlier,
    majorizes,
    p_larger,
    reciprocally_majorizes,
    weak_submajorizes,
    weak_supermajorizes,
)
from .order_checks import (
    DEFAULT_GRID,
    GridSpec,
    MonotoneVerdict,
    OrderVerdict,
    Witness,
    check_ageing_hr,
    check_ageing_rhr,
    check_hr,
    check_lr,
    check_order,
    check_rhr,
    check_st,
    detect_nonmonotone,
)
from .po_model import (
    Baseline,
    Exponential,
    Weibull,
    baseline_from_dict,
    po_cdf,
    po_density,
    po_hazard,
    po_odds,
    po_reversed_hazard,
    po_survival,
)
from .systems import (
    SystemModel,
    Topology,
    homogeneous_parallel_survival,
    homogeneous_series_survival,
)
from .theorem_harness import (
    COUNTEREXAMPLE_IDS,
    THEOREM_IDS,
    CommonEtaPair,
    CounterexampleReport,
    HomogeneousRef,
    OutlierPair,
    SweepReport,
    TheoremCase,
    TheoremReport,
    VectorPair,
    describe_theorem,
    hypothesis,
    reproduce_counterexample,
    sweep,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "kernel_backend",
    "__version__",
    # errors
    "PosysError", "DomainError", "DimensionError", "RangeError",
    "GridError", "EvaluationError", "GenerationError",
    # majorization
    "ParamVector", "OutlierSpec", "expand_outlier",
    "majorizes", "weak_supermajorizes", "weak_submajorizes",
    "p_larger", "reciprocally_majorizes",
    # model
    "Baseline", "Exponential", "Weibull", "baseline_from_dict",
    "po_survival", "po_cdf", "po_density", "po_hazard",
    "po_reversed_hazard", "po_odds",
    # systems
    "SystemModel", "Topology",
    "homogeneous_series_survival", "homogeneous_parallel_survival",
    # order checks
    "GridSpec", "DEFAULT_GRID", "OrderVerdict", "Witness", "MonotoneVerdict",
    "check_st", "check_hr", "check_rhr", "check_lr",
    "check_ageing_hr", "check_ageing_rhr", "check_order", "detect_nonmonotone",
    # theorem harness
    "THEOREM_IDS", "COUNTEREXAMPLE_IDS", "TheoremCase", "TheoremReport",
    "SweepReport", "CounterexampleReport", "VectorPair", "HomogeneousRef",
    "OutlierPair", "CommonEtaPair", "describe_theorem", "hypothesis",
    "verify", "sweep", "reproduce_counterexample",
]
