"""Command-line front end.

Subcommands: ``eval`` (lifetime curves as CSV), ``check`` (one order
relation between two systems), ``verify`` (one theorem case), ``reproduce``
(a documented counterexample), ``sweep`` (randomized theorem validation),
``majorize`` (vector preorder queries), and ``run`` (execute a scenario
file).  Reports are JSON on stdout with numbers printed to 9 significant
digits; identical inputs produce byte-identical output.

Exit codes: 0 success / relation holds / consistent; 1 an order check
failed, a sweep found an inconsistency, or a reproduction did not match;
2 usage or configuration error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import numpy as np

from . import __version__
from ._kernels import BACKEND
from .errors import DimensionError, DomainError, GridError, PosysError
from .majorization import (
    majorizes,
    p_larger,
    reciprocally_majorizes,
    weak_submajorizes,
    weak_supermajorizes,
)
from .order_checks import DEFAULT_GRID, RELATIONS, GridSpec, check_order
from .po_model import baseline_from_dict
from .scenario import case_inputs_from_mapping, load_scenario
from .systems import SystemModel, Topology
from .theorem_harness import (
    COUNTEREXAMPLE_IDS,
    THEOREM_IDS,
    TheoremCase,
    describe_theorem,
    generate_case,
    reproduce_counterexample,
    sweep as run_sweep,
    theorem_branches,
    verify as verify_case,
)

_MAJORIZE_RELATIONS = {
    "m": majorizes,
    "wsup": weak_supermajorizes,
    "wsub": weak_submajorizes,
    "p": p_larger,
    "rm": reciprocally_majorizes,
}


def _fmt(x: float) -> str:
    return f"{float(x):.9g}"


def _rounded(obj):
    """Clamp every float to 9 significant digits for stable output."""
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


def _emit(report: dict, out: str | None, filename: str) -> None:
    text = json.dumps(_rounded(report), indent=2, sort_keys=True)
    click.echo(text)
    if out is not None:
        path = Path(out) / filename
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")


def _parse_baseline(spec: str):
    try:
        family, _, rest = spec.partition(":")
        params = {}
        if rest:
            for item in rest.split(","):
                key, _, value = item.partition("=")
                params[key.strip()] = float(value)
        return baseline_from_dict({"family": family.strip().lower(), **params})
    except (ValueError, DomainError) as exc:
        raise click.UsageError(
            f"bad baseline {spec!r} (expected e.g. 'exponential:rate=2' or "
            f"'weibull:shape=2,scale=0.8'): {exc}")


def _parse_grid(spec: str | None) -> GridSpec:
    if spec is None:
        return DEFAULT_GRID
    try:
        kind, t_min, t_max, count = spec.split(":")
        spacing = {"log": "logarithmic", "logarithmic": "logarithmic",
                   "linear": "linear", "lin": "linear"}[kind.strip().lower()]
        return GridSpec(float(t_min), float(t_max), int(count), spacing)
    except (KeyError, ValueError, GridError) as exc:
        raise click.UsageError(
            f"bad grid {spec!r} (expected e.g. 'log:1e-3:20:2000' or "
            f"'linear:0.01:5:1000'): {exc}")


def _parse_values(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.replace(",", " ").split()]
    except ValueError as exc:
        raise click.UsageError(f"bad number list {text!r}: {exc}")
    if not values:
        raise click.UsageError(f"empty number list {text!r}")
    return values


def _usage_guard(fn):
    """Translate configuration errors into exit code 2."""
    import functools

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (DomainError, DimensionError, GridError) as exc:
            raise click.UsageError(str(exc))
        except PosysError as exc:
            raise click.ClickException(str(exc))
    return wrapper


@click.group()
@click.version_option(__version__, message=f"%(prog)s %(version)s (kernels: {BACKEND})")
def main():
    """Proportional-odds system lifetimes: curves, order checks, theorem
    verification, counterexample reproduction."""


def _write_curves(system: SystemModel, name: str, grid: GridSpec, out: str) -> Path:
    ts = grid.points()
    columns = {
        "t": ts,
        "survival": np.atleast_1d(system.survival(ts)),
        "cdf": np.atleast_1d(system.cdf(ts)),
        "density": np.atleast_1d(system.density(ts)),
        "hazard": np.atleast_1d(system.hazard(ts)),
        "reversed_hazard": np.atleast_1d(system.reversed_hazard(ts)),
    }
    path = Path(out) / f"{name}.csv"
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        fh.write(",".join(columns) + "\n")
        for row in zip(*columns.values()):
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    return path


@main.command("eval")
@click.option("--scenario", "scenario_path", type=click.Path(exists=True), default=None)
@click.argument("names", nargs=-1)
@click.option("--baseline", "baseline_spec", default=None,
              help="Inline baseline, e.g. 'exponential:rate=2'.")
@click.option("--topology", type=click.Choice(["series", "parallel"]), default=None)
@click.option("--params", default=None, help="Comma-separated component parameters.")
@click.option("--name", default="system", show_default=True)
@click.option("--grid", "grid_spec", default=None, help="kind:t_min:t_max:count")
@click.option("--out", default=".", show_default=True, type=click.Path())
@_usage_guard
def eval_cmd(scenario_path, names, baseline_spec, topology, params, name, grid_spec, out):
    """Write per-system lifetime curves (t, survival, cdf, density, hazard,
    reversed_hazard) as CSV."""
    written = []
    if scenario_path is not None:
        scenario = load_scenario(scenario_path)
        grid = _parse_grid(grid_spec) if grid_spec else scenario.grid
        targets = names or tuple(scenario.systems)
        for sys_name in targets:
            written.append(_write_curves(scenario.system(sys_name), sys_name, grid, out))
    else:
        if baseline_spec is None or topology is None or params is None:
            raise click.UsageError("need --scenario, or --baseline/--topology/--params")
        system = SystemModel(Topology(topology), _parse_baseline(baseline_spec),
                             _parse_values(params))
        written.append(_write_curves(system, name, _parse_grid(grid_spec), out))
    for path in written:
        click.echo(str(path))


_RELATION_ALIASES = {"age-hr": "ageing_hr", "age-rhr": "ageing_rhr"}


@main.command("check")
@click.option("--relation", type=click.Choice(RELATIONS + tuple(_RELATION_ALIASES)),
              required=True)
@click.option("--scenario", "scenario_path", type=click.Path(exists=True), default=None)
@click.argument("names", nargs=-1)
@click.option("--baseline", "baseline_spec", default=None)
@click.option("--topology", type=click.Choice(["series", "parallel"]), default=None)
@click.option("--params-a", default=None, help="First system parameters.")
@click.option("--params-b", default=None, help="Second system parameters.")
@click.option("--grid", "grid_spec", default=None)
@click.option("--out", default=None, type=click.Path())
@_usage_guard
def check_cmd(relation, scenario_path, names, baseline_spec, topology,
              params_a, params_b, grid_spec, out):
    """Check one order relation between two systems; exit 1 if it fails."""
    if scenario_path is not None:
        scenario = load_scenario(scenario_path)
        if len(names) != 2:
            raise click.UsageError("give exactly two system names with --scenario")
        a, b = (scenario.system(n) for n in names)
        grid = _parse_grid(grid_spec) if grid_spec else scenario.grid
    else:
        if baseline_spec is None or topology is None or params_a is None or params_b is None:
            raise click.UsageError(
                "need --scenario with two names, or --baseline/--topology/--params-a/--params-b")
        base = _parse_baseline(baseline_spec)
        a = SystemModel(Topology(topology), base, _parse_values(params_a))
        b = SystemModel(Topology(topology), base, _parse_values(params_b))
        grid = _parse_grid(grid_spec)
    relation = _RELATION_ALIASES.get(relation, relation)
    verdict = check_order(relation, a, b, grid)
    report = {"first": a.to_dict(), "second": b.to_dict(),
              "verdict": verdict.to_dict()}
    _emit(report, out, f"check_{relation}.json")
    sys.exit(0 if verdict.holds else 1)


@main.command("verify")
@click.option("--theorem", type=click.Choice(THEOREM_IDS), required=True)
@click.option("--baseline", "baseline_spec", default="exponential:rate=1")
@click.option("--lam", default=None, help="Heterogeneous parameters (vector shapes).")
@click.option("--mu", default=None, help="Second parameter vector.")
@click.option("--lam-hom", type=float, default=None, help="Common parameter value.")
@click.option("--l1", type=float, default=None)
@click.option("--l2", type=float, default=None)
@click.option("--m1", type=float, default=None)
@click.option("--m2", type=float, default=None)
@click.option("--eta", type=float, default=None)
@click.option("--n1", type=int, default=None)
@click.option("--n2", type=int, default=None)
@click.option("--sample", is_flag=True, help="Draw a random hypothesis-satisfying case.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--grid", "grid_spec", default=None)
@click.option("--out", default=None, type=click.Path())
@_usage_guard
def verify_cmd(theorem, baseline_spec, lam, mu, lam_hom, l1, l2, m1, m2, eta,
               n1, n2, sample, seed, grid_spec, out):
    """Verify one theorem case; exit 1 on an inconsistent outcome."""
    grid = _parse_grid(grid_spec)
    if sample:
        case = generate_case(theorem, np.random.default_rng(seed), grid=grid)
    else:
        mapping = {"lam": _parse_values(lam) if lam else None,
                   "mu": _parse_values(mu) if mu else None,
                   "lam_hom": lam_hom, "l1": l1, "l2": l2, "m1": m1, "m2": m2,
                   "eta": eta, "n1": n1, "n2": n2}
        inputs = case_inputs_from_mapping(theorem, mapping)
        case = TheoremCase(theorem, _parse_baseline(baseline_spec), inputs, grid)
    report = verify_case(case)
    payload = report.to_dict()
    payload["description"] = describe_theorem(theorem)
    _emit(payload, out, f"verify_{theorem}.json")
    sys.exit(0 if report.consistent else 1)


@main.command("reproduce")
@click.option("--case", "case_id", type=click.Choice(COUNTEREXAMPLE_IDS), required=True)
@click.option("--out", default=None, type=click.Path())
@_usage_guard
def reproduce_cmd(case_id, out):
    """Recompute a documented counterexample; exit 1 if values or verdicts
    do not match the documented behaviour."""
    report = reproduce_counterexample(case_id)
    _emit(report.to_dict(), out, f"reproduce_{case_id.replace('.', '_')}.json")
    if out is not None:
        for curve_name, (ts, values) in report.curves.items():
            path = Path(out) / f"{case_id.replace('.', '_')}_{curve_name}.csv"
            with path.open("w", encoding="utf-8") as fh:
                fh.write("t,ratio\n")
                for t, v in zip(ts, values):
                    fh.write(f"{_fmt(t)},{_fmt(v)}\n")
    sys.exit(0 if report.ok else 1)


@main.command("sweep")
@click.option("--theorem", type=click.Choice(THEOREM_IDS), required=True)
@click.option("--trials", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--branch", default=None, help="Pin one hypothesis branch.")
@click.option("--grid", "grid_spec", default=None)
@click.option("--out", default=None, type=click.Path())
@_usage_guard
def sweep_cmd(theorem, trials, seed, branch, grid_spec, out):
    """Verify many random hypothesis-satisfying instances; exit 1 if any
    turn out inconsistent."""
    report = run_sweep(theorem, trials, seed, grid=_parse_grid(grid_spec), branch=branch)
    payload = report.to_dict()
    payload["description"] = describe_theorem(theorem)
    payload["branches"] = list(theorem_branches(theorem))
    _emit(payload, out, f"sweep_{theorem}.json")
    sys.exit(0 if report.all_consistent else 1)


class _MajorizeCommand(click.Command):
    """Keeps the literal ``--`` separator that click would otherwise eat."""

    def parse_args(self, ctx, args):
        if "--" in args:
            split = args.index("--")
            ctx.meta["second_vector"] = list(args[split + 1:])
            args = args[:split]
        return super().parse_args(ctx, args)


@main.command("majorize", cls=_MajorizeCommand,
              context_settings={"ignore_unknown_options": True})
@click.option("--relation", type=click.Choice(sorted(_MAJORIZE_RELATIONS)), required=True)
@click.argument("tokens", nargs=-1, type=click.UNPROCESSED)
@click.pass_context
@_usage_guard
def majorize_cmd(ctx, relation, tokens):
    """Evaluate a vector preorder: x... -- y... (or two comma-separated
    lists); prints the verdict, exit 1 when the relation does not hold."""
    tokens = list(tokens)
    second = ctx.meta.get("second_vector")
    if second is not None:
        try:
            x = [float(v) for v in tokens]
            y = [float(v) for v in second]
        except ValueError as exc:
            raise click.UsageError(f"bad vector entry: {exc}")
    elif len(tokens) == 2:
        x, y = _parse_values(tokens[0]), _parse_values(tokens[1])
    else:
        raise click.UsageError("give 'x... -- y...' or two comma-separated lists")
    if not x or not y:
        raise click.UsageError("both vectors need at least one entry")
    result = _MAJORIZE_RELATIONS[relation](x, y)
    click.echo(json.dumps({"relation": relation, "x": _rounded(x), "y": _rounded(y),
                           "holds": result}, sort_keys=True))
    sys.exit(0 if result else 1)


@main.command("run")
@click.argument("scenario_path", type=click.Path(exists=True))
@click.option("--out", default=".", show_default=True, type=click.Path())
@_usage_guard
def run_cmd(scenario_path, out):
    """Execute every task in a scenario file; exit 1 if any task reports a
    failed check or an inconsistency."""
    scenario = load_scenario(scenario_path)
    all_ok = True
    results = []
    for index, task in enumerate(scenario.tasks):
        kind = task["task"]
        entry: dict = {"task": kind, "index": index}
        grid = _grid_override(task, scenario.grid)
        if kind == "eval-curves":
            for name in task.get("systems") or sorted(scenario.systems):
                _write_curves(scenario.system(name), name, grid, out)
            entry["ok"] = True
        elif kind == "check-order":
            verdict = check_order(task["relation"], scenario.system(task["a"]),
                                  scenario.system(task["b"]), grid)
            entry["verdict"] = verdict.to_dict()
            entry["ok"] = verdict.holds
        elif kind == "verify-theorem":
            baseline = (baseline_from_dict(task["baseline"])
                        if "baseline" in task else scenario.baseline)
            inputs = case_inputs_from_mapping(task["theorem"], task)
            report = verify_case(TheoremCase(task["theorem"], baseline, inputs, grid))
            entry["report"] = report.to_dict()
            entry["ok"] = report.consistent
        elif kind == "reproduce":
            report = reproduce_counterexample(task["case"])
            entry["report"] = report.to_dict()
            entry["ok"] = report.ok
        elif kind == "sweep":
            report = run_sweep(task["theorem"], int(task["trials"]),
                               int(task.get("seed", 0)), grid=grid,
                               branch=task.get("branch"))
            entry["report"] = report.to_dict()
            entry["ok"] = report.all_consistent
        results.append(entry)
        all_ok = all_ok and entry["ok"]
    _emit({"scenario": str(scenario_path), "tasks": results, "ok": all_ok},
          out, "run_report.json")
    sys.exit(0 if all_ok else 1)


def _grid_override(task: dict, default: GridSpec) -> GridSpec:
    if "grid" not in task:
        return default
    g = task["grid"]
    return GridSpec(float(g["t_min"]), float(g["t_max"]), int(g["count"]),
                    str(g.get("spacing", "logarithmic")))


if __name__ == "__main__":
    main()
