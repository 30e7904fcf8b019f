"""Tests for hypothesis encodings, verification, and sweeps."""

import numpy as np
import pytest

from posys import (
    CommonEtaPair,
    DomainError,
    Exponential,
    HomogeneousRef,
    OutlierPair,
    ParamVector,
    TheoremCase,
    VectorPair,
    describe_theorem,
    hypothesis,
    sweep,
    verify,
)
from posys.order_checks import GridSpec
from posys.theorem_harness import THEOREM_IDS, build_systems, generate_case, theorem_branches

EXP1 = Exponential(1.0)


def _case(tid, inputs, baseline=EXP1, grid=None):
    return TheoremCase(tid, baseline, inputs, grid) if grid else TheoremCase(tid, baseline, inputs)


class TestHypothesis:
    def test_p_larger_pair(self):
        case = _case("T3.1", VectorPair(ParamVector((2, 3, 5)), ParamVector((2.8, 3.2, 3.4))))
        report = hypothesis(case)
        assert report.holds
        assert all(c.holds for c in report.conditions)

    def test_p_larger_rejected_pair(self):
        case = _case("T3.1", VectorPair(ParamVector((2.2, 3, 5)), ParamVector((2.8, 3.2, 3.3))))
        assert not hypothesis(case).holds

    def test_degenerate_separated_blocks(self):
        case = _case("T3.4", OutlierPair(1.7, 1.7, 1.7, 1.7, 2, 3))
        assert hypothesis(case).holds

    def test_geometric_mean_must_be_exact(self):
        lam = ParamVector((2.0, 8.0))
        assert hypothesis(_case("T4.2", HomogeneousRef(lam, 4.0))).holds
        assert not hypothesis(_case("T4.2", HomogeneousRef(lam, 4.0000001))).holds

    def test_two_branch_breakdown(self):
        case = _case("T3.8", OutlierPair(1.0, 5.0, 2.0, 4.0, 2, 2))
        report = hypothesis(case)
        names = [c.name for c in report.conditions]
        assert sum(n.startswith("majorization branch") for n in names) == 2
        assert sum(n.startswith("weak-supermajorization branch") for n in names) == 2

    def test_wrong_input_shape_rejected(self):
        with pytest.raises(DomainError):
            hypothesis(_case("T3.1", HomogeneousRef(ParamVector((1, 2)), 2.0)))

    def test_unknown_id_rejected(self):
        with pytest.raises(DomainError):
            hypothesis(_case("T9.9", VectorPair(ParamVector((1,)), ParamVector((1,)))))


class TestBuildSystems:
    def test_vector_pair_topology(self):
        case = _case("T4.1", VectorPair(ParamVector((1, 2)), ParamVector((2, 2))))
        first, second = build_systems(case)
        assert first.topology.value == "parallel"
        assert first.params.values == (1, 2) and second.params.values == (2, 2)

    def test_homogeneous_expansion(self):
        case = _case("T3.7", HomogeneousRef(ParamVector((2, 3, 5)), 4.0))
        _, hom = build_systems(case)
        assert hom.params.values == (4.0, 4.0, 4.0)

    def test_outlier_expansion(self):
        case = _case("T4.3", CommonEtaPair(1.0, 3.0, 2.0, 2, 1))
        first, second = build_systems(case)
        assert first.params.values == (1.0, 1.0, 2.0)
        assert second.params.values == (3.0, 3.0, 2.0)


class TestVerify:
    def test_weak_supermajorization_gives_hazard_dominance(self):
        case = _case("T3.2", VectorPair(ParamVector((1, 4)), ParamVector((2, 3))))
        report = verify(case)
        assert report.hypothesis.holds and report.conclusion.holds and report.consistent

    def test_vacuous_when_hypothesis_fails(self):
        case = _case("T3.2", VectorPair(ParamVector((3, 3)), ParamVector((1, 1))))
        report = verify(case)
        assert not report.hypothesis.holds
        assert report.consistent

    def test_shared_block_reversed_hazard_ageing(self):
        case = _case("T4.3", CommonEtaPair(1.0, 3.0, 2.0, 2, 2))
        report = verify(case)
        assert report.consistent and report.hypothesis.holds

    def test_geometric_mean_st_direction(self):
        case = _case("T4.2", HomogeneousRef(ParamVector((2.0, 8.0)), 4.0))
        report = verify(case)
        assert report.consistent and report.conclusion.holds

    def test_shared_parameter_below_both_blocks_breaks_series_ageing(self):
        # the relative-ageing conclusion genuinely fails in this corner of
        # the stated hypothesis; the harness must detect the inconsistency
        case = _case(
            "T3.5",
            CommonEtaPair(lam1=2.6182143837607326, mu1=4.01295044187946,
                          eta=0.6484561871843033, n1=3, n2=2),
            baseline=Exponential(1.389981191553694))
        report = verify(case)
        assert report.hypothesis.holds
        assert not report.conclusion.holds
        assert not report.consistent

    def test_report_serialization(self):
        case = _case("T3.2", VectorPair(ParamVector((1, 4)), ParamVector((2, 3))))
        d = verify(case).to_dict()
        assert d["id"] == "T3.2" and d["consistent"] is True
        assert d["hypothesis"]["conditions"]


class TestGenerators:
    @pytest.mark.parametrize("tid", THEOREM_IDS)
    def test_generated_cases_satisfy_hypothesis(self, tid):
        rng = np.random.default_rng(5)
        for branch in theorem_branches(tid):
            for _ in range(25):
                case = generate_case(tid, rng, branch=branch)
                assert hypothesis(case).holds, (tid, branch, case.inputs)

    def test_unknown_branch_rejected(self):
        with pytest.raises(DomainError):
            generate_case("T3.8", np.random.default_rng(0), branch="nope")


class TestSweep:
    def test_deterministic_given_seed(self):
        a = sweep("T3.2", 30, seed=11)
        b = sweep("T3.2", 30, seed=11)
        assert a.to_dict() == b.to_dict()

    @pytest.mark.parametrize("tid", ["T3.1", "T3.3", "T4.1", "T4.4"])
    def test_small_sweeps_consistent(self, tid):
        report = sweep(tid, 40, seed=9)
        assert report.all_consistent
        assert report.trials == 40

    def test_branch_pinning(self):
        report = sweep("T3.8", 10, seed=2, branch="weak_supermajorization")
        assert report.branch_counts == {"weak_supermajorization": 10}
        alternating = sweep("T3.8", 10, seed=2)
        assert set(alternating.branch_counts) == {"majorization", "weak_supermajorization"}

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            sweep("T3.2", 0, seed=1)
        with pytest.raises(DomainError):
            sweep("T0.0", 10, seed=1)

    def test_failures_carry_reports(self):
        # a coarse sampling of the known failing hypothesis corner
        report = sweep("T3.5", 40, seed=42)
        if not report.all_consistent:
            failing = report.failures[0]
            assert failing.hypothesis.holds and not failing.conclusion.holds


def test_descriptions_exist_for_all_ids():
    for tid in THEOREM_IDS:
        assert describe_theorem(tid)


def test_grid_is_recorded_on_conclusion():
    grid = GridSpec(0.01, 4.0, 300, "linear")
    case = _case("T3.2", VectorPair(ParamVector((1, 4)), ParamVector((2, 3))), grid=grid)
    assert verify(case).conclusion.grid == grid
