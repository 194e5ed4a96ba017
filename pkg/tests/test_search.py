"""Assignment checking and the exhaustive coloring search.

Counts and statuses are cross-checked against naive 2^n enumeration;
witnesses must round-trip through check_assignment.
"""

from random import Random

import pytest

from kscontext import (Assignment, InconsistentAssignmentError, PinVerdict,
                       ProjectorSet, UnknownLabelError,
                       admissible_assignments, builtin, check_assignment,
                       localized_indefiniteness_certificate,
                       projector_from_span)

from _gen import brute_admissible, random_ray_corpus


@pytest.fixture(scope="module")
def c1c6():
    return builtin("cabello-c1c6")


@pytest.fixture(scope="module")
def cabello18():
    return builtin("cabello-18")


def single_context_corpus():
    rays = [(0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0)]
    return ProjectorSet(4, {f"p{i}": projector_from_span([r], f"p{i}")
                            for i, r in enumerate(rays, start=1)})


def disjoint_contexts_corpus():
    # two full bases with no cross-orthogonality: every e_i dots +-1
    # against every second-family ray
    rays = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
            (1, 1, 1, 1), (1, -1, 1, -1), (1, 1, -1, -1), (1, -1, -1, 1)]
    return ProjectorSet(4, {f"q{i}": projector_from_span([r], f"q{i}")
                            for i, r in enumerate(rays, start=1)})


class TestCheckAssignment:
    def test_one_true_rest_false_is_clean(self, c1c6):
        a = {"P1_1": 1, "P1_2": 0, "P1_3": 0, "P1_4": 0}
        assert check_assignment(c1c6, a) == []

    def test_two_true_is_one_violation(self, c1c6):
        a = {"P1_1": 1, "P1_2": 1, "P1_3": 0, "P1_4": 0}
        violations = check_assignment(c1c6, a)
        assert len(violations) == 1
        assert violations[0].context.label == "C1"
        assert violations[0].assigned_sum == 2

    def test_all_zero_context_is_violation(self, c1c6):
        a = {"P6_1": 0, "P6_2": 0, "P6_3": 0, "P6_4": 0}
        violations = check_assignment(c1c6, a)
        assert [(v.context.label, v.assigned_sum) for v in violations] == [("C6", 0)]

    def test_partial_contexts_undetermined_not_violated(self, c1c6):
        assert check_assignment(c1c6, {"P1_1": 0}) == []

    def test_unknown_label_raises(self, c1c6):
        with pytest.raises(UnknownLabelError):
            check_assignment(c1c6, {"nope": 1})

    def test_non_binary_value_rejected(self, c1c6):
        with pytest.raises(ValueError):
            check_assignment(c1c6, {"P1_1": 2})
        with pytest.raises(ValueError):
            Assignment({"P1_1": 2})


class TestAdmissibleAssignments:
    def test_single_context_has_four_witnesses(self):
        ps = single_context_corpus()
        result = admissible_assignments(ps, mode="all")
        assert result.status == "SAT"
        assert result.count == 4
        for w in result.witnesses:
            assert sum(w.values.values()) == 1
            assert check_assignment(ps, w) == []

    def test_disjoint_contexts_multiply(self):
        ps = disjoint_contexts_corpus()
        result = admissible_assignments(ps, mode="count")
        assert result.count == 16
        count, _ = brute_admissible(ps)
        assert count == 16

    def test_full_corpus_unsat(self, cabello18):
        result = admissible_assignments(cabello18, mode="first")
        assert result.status == "UNSAT"
        assert result.witness is None
        assert result.nodes_explored > 0
        assert result.violated_context is not None

    def test_unsat_stable_under_label_permutation(self, cabello18):
        rng = Random(3)
        items = list(cabello18.projectors.items())
        for _ in range(3):
            rng.shuffle(items)
            renamed = {f"x{i}_{l}": p for i, (l, p) in enumerate(items)}
            ps = ProjectorSet(4, renamed)
            assert admissible_assignments(ps, mode="count").count == 0

    def test_c1c6_alone_is_sat(self, c1c6):
        result = admissible_assignments(c1c6, mode="first")
        assert result.status == "SAT"
        assert check_assignment(c1c6, result.witness) == []

    def test_fixed_pin_respected(self, c1c6):
        result = admissible_assignments(c1c6, mode="all", fixed={"P1_1": 1})
        assert result.status == "SAT"
        assert all(w.values["P1_1"] == 1 for w in result.witnesses)

    def test_mode_count_equals_len_witnesses(self, c1c6):
        full = admissible_assignments(c1c6, mode="all")
        count = admissible_assignments(c1c6, mode="count")
        assert count.count == len(full.witnesses)

    def test_oracle_equivalence_random_corpora(self):
        rng = Random(181818)
        for _ in range(25):
            ps = random_ray_corpus(rng, rng.randint(2, 4), max_rays=10)
            expected_count, expected_models = brute_admissible(ps)
            result = admissible_assignments(ps, mode="all")
            assert result.count == expected_count
            got = {frozenset(l for l, v in w.values.items() if v == 1)
                   for w in result.witnesses}
            assert got == expected_models

    def test_every_witness_total(self, c1c6):
        for w in admissible_assignments(c1c6, mode="all").witnesses:
            assert w.is_total_for(c1c6)

    def test_unknown_fixed_label(self, c1c6):
        with pytest.raises(UnknownLabelError):
            admissible_assignments(c1c6, fixed={"zzz": 1})


class TestWorkers:
    @pytest.mark.parametrize("workers", [2, 3, 4])
    def test_results_identical_for_any_worker_count(self, workers, c1c6, cabello18):
        base_all = admissible_assignments(c1c6, mode="all", workers=1)
        par_all = admissible_assignments(c1c6, mode="all", workers=workers)
        assert par_all.status == base_all.status
        assert par_all.count == base_all.count
        assert par_all.witnesses == base_all.witnesses

        base_first = admissible_assignments(c1c6, mode="first", workers=1)
        par_first = admissible_assignments(c1c6, mode="first", workers=workers)
        assert par_first.witness == base_first.witness

        assert admissible_assignments(
            cabello18, mode="first", workers=workers).status == "UNSAT"

    def test_invalid_worker_count(self, c1c6):
        with pytest.raises(ValueError):
            admissible_assignments(c1c6, workers=0)


class TestLocalizedCertificate:
    def test_single_context_pin_forces_partners(self):
        ps = single_context_corpus()
        verdicts = localized_indefiniteness_certificate(ps, {"p1": 1})
        assert verdicts == {"p2": PinVerdict.FORCED_ZERO,
                            "p3": PinVerdict.FORCED_ZERO,
                            "p4": PinVerdict.FORCED_ZERO}

    def test_unsat_corpus_everything_contradicts(self, cabello18):
        verdicts = localized_indefiniteness_certificate(cabello18, {"P1_1": 1})
        assert verdicts["P6_1"] is PinVerdict.BOTH_CONTRADICT
        assert set(verdicts) == set(cabello18.projectors) - {"P1_1"}
        assert all(v is PinVerdict.BOTH_CONTRADICT for v in verdicts.values())

    def test_sat_corpus_nothing_contradicts_without_fixings(self, c1c6):
        verdicts = localized_indefiniteness_certificate(c1c6)
        assert set(verdicts) == set(c1c6.projectors)
        assert PinVerdict.BOTH_CONTRADICT not in verdicts.values()

    def test_inconsistent_pair_rejected(self, c1c6):
        with pytest.raises(InconsistentAssignmentError):
            localized_indefiniteness_certificate(
                c1c6, {"P1_1": 1, "P1_2": 1})

    def test_inconsistent_context_sum_rejected(self, c1c6):
        with pytest.raises(InconsistentAssignmentError) as err:
            localized_indefiniteness_certificate(
                c1c6, {"P1_1": 0, "P1_2": 0, "P1_3": 0, "P1_4": 0})
        assert err.value.context == ("P1_1", "P1_2", "P1_3", "P1_4")

    def test_verdicts_match_brute_force(self):
        rng = Random(90125)
        for _ in range(8):
            ps = random_ray_corpus(rng, rng.randint(2, 3), max_rays=7)
            _, models = brute_admissible(ps)
            labels = sorted(ps.projectors)
            pin = labels[0]
            for pin_value in (0, 1):
                try:
                    verdicts = localized_indefiniteness_certificate(
                        ps, {pin: pin_value})
                except InconsistentAssignmentError:
                    continue
                surviving = [m for m in models
                             if (pin in m) == bool(pin_value)]
                for label in labels[1:]:
                    ones = [m for m in surviving if label in m]
                    zeros = [m for m in surviving if label not in m]
                    expected = {
                        (True, True): PinVerdict.UNCONSTRAINED,
                        (True, False): PinVerdict.FORCED_ONE,
                        (False, True): PinVerdict.FORCED_ZERO,
                        (False, False): PinVerdict.BOTH_CONTRADICT,
                    }[(bool(ones), bool(zeros))]
                    assert verdicts[label] is expected
