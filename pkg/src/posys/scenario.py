"""Scenario files: named systems plus a task list, as a YAML key-value tree.

A scenario carries one default baseline and grid, a mapping of named
systems, and an ordered task list.  Tasks mirror the CLI subcommands:

.. code-block:: yaml

    baseline: {family: exponential, rate: 2.0}
    grid: {t_min: 0.001, t_max: 20.0, count: 2000, spacing: logarithmic}
    systems:
      worst_first: {topology: series, params: [2.2, 3.0, 5.0]}
      steadier:    {topology: series, params: [2.8, 3.2, 3.3]}
    tasks:
      - {task: eval-curves, systems: [worst_first, steadier]}
      - {task: check-order, relation: st, a: worst_first, b: steadier}
      - {task: verify-theorem, theorem: T3.2, lam: [1, 4], mu: [2, 3]}
      - {task: reproduce, case: CE3.1}
      - {task: sweep, theorem: T3.1, trials: 100, seed: 42}

Systems may override the scenario baseline with their own ``baseline`` key.
Parsing and serialization round-trip.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import yaml

from .errors import DomainError, GridError
from .majorization import ParamVector
from .order_checks import DEFAULT_GRID, GridSpec
from .po_model import Baseline, baseline_from_dict
from .systems import SystemModel, Topology
from .theorem_harness import CommonEtaPair, HomogeneousRef, OutlierPair, VectorPair

__all__ = ["Scenario", "load_scenario", "parse_scenario", "dump_scenario",
           "case_inputs_from_mapping"]

TASK_KINDS = ("eval-curves", "check-order", "verify-theorem", "reproduce", "sweep")


@dataclass(frozen=True)
class Scenario:
    baseline: Baseline
    grid: GridSpec
    systems: dict[str, SystemModel] = field(default_factory=dict)
    tasks: tuple[dict, ...] = ()

    def system(self, name: str) -> SystemModel:
        if name not in self.systems:
            raise DomainError(f"scenario defines no system named {name!r}; "
                              f"known: {sorted(self.systems)}")
        return self.systems[name]

    def to_dict(self) -> dict:
        return {
            "baseline": self.baseline.to_dict(),
            "grid": self.grid.to_dict(),
            "systems": {name: _system_entry(sys, self.baseline)
                        for name, sys in self.systems.items()},
            "tasks": [dict(t) for t in self.tasks],
        }


def _system_entry(sys: SystemModel, default_base: Baseline) -> dict:
    entry = {"topology": sys.topology.value, "params": list(sys.params.values)}
    if sys.base != default_base:
        entry["baseline"] = sys.base.to_dict()
    return entry


def _grid_from_dict(d: dict) -> GridSpec:
    try:
        return GridSpec(float(d["t_min"]), float(d["t_max"]), int(d["count"]),
                        str(d.get("spacing", "logarithmic")))
    except KeyError as exc:
        raise GridError(f"grid spec missing key {exc}") from None


def parse_scenario(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise DomainError("scenario document must be a mapping")
    if "baseline" not in doc:
        raise DomainError("scenario must define a baseline")
    baseline = baseline_from_dict(doc["baseline"])
    grid = _grid_from_dict(doc["grid"]) if "grid" in doc else DEFAULT_GRID
    systems: dict[str, SystemModel] = {}
    for name, entry in (doc.get("systems") or {}).items():
        base = baseline_from_dict(entry["baseline"]) if "baseline" in entry else baseline
        systems[str(name)] = SystemModel(Topology(entry["topology"]), base,
                                         ParamVector(entry["params"]))
    tasks = []
    for task in doc.get("tasks") or ():
        kind = task.get("task")
        if kind not in TASK_KINDS:
            raise DomainError(f"unknown task kind {kind!r}; known: {TASK_KINDS}")
        _validate_task_refs(task, systems)
        tasks.append(dict(task))
    return Scenario(baseline, grid, systems, tuple(tasks))


def _validate_task_refs(task: dict, systems: dict):
    kind = task["task"]
    if kind == "eval-curves":
        names = task.get("systems") or list(systems)
        missing = [n for n in names if n not in systems]
    elif kind == "check-order":
        missing = [n for n in (task.get("a"), task.get("b"))
                   if n is not None and n not in systems]
    else:
        missing = []
    if missing:
        raise DomainError(f"task {kind!r} references undefined systems {missing}")


def load_scenario(path) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scenario(yaml.safe_load(fh))


def dump_scenario(scenario: Scenario) -> str:
    return yaml.safe_dump(scenario.to_dict(), sort_keys=True)


def case_inputs_from_mapping(theorem_id: str, m: dict):
    """Build theorem-case inputs from flat mapping keys.

    Accepted shapes: ``lam``+``mu`` (vector pair), ``lam``+``lam_hom``
    (heterogeneous vs homogeneous), ``l1,l2,m1,m2,n1,n2`` (two-block pair),
    ``l1,m1,eta,n1,n2`` (two-block pair with a shared second block).
    """
    has = {k for k, v in m.items() if v is not None}
    if {"lam", "mu"} <= has:
        return VectorPair(ParamVector(m["lam"]), ParamVector(m["mu"]))
    if {"lam", "lam_hom"} <= has:
        return HomogeneousRef(ParamVector(m["lam"]), float(m["lam_hom"]))
    if {"l1", "l2", "m1", "m2", "n1", "n2"} <= has:
        return OutlierPair(float(m["l1"]), float(m["l2"]), float(m["m1"]),
                           float(m["m2"]), int(m["n1"]), int(m["n2"]))
    if {"l1", "m1", "eta", "n1", "n2"} <= has:
        return CommonEtaPair(float(m["l1"]), float(m["m1"]), float(m["eta"]),
                             int(m["n1"]), int(m["n2"]))
    raise DomainError(
        f"cannot build inputs for {theorem_id} from keys {sorted(has)}; "
        "provide lam+mu, lam+lam_hom, l1/l2/m1/m2/n1/n2, or l1/m1/eta/n1/n2")
