import numpy as np
import pytest

from skewrel import search
from skewrel.counterexamples import cov_variant_triple
from skewrel.errors import BadSpec
from skewrel.search import SearchTask, Witness, refine_witness, run_search


def small_task(**overrides):
    base = dict(
        objective="min_gap_false_cov_variant",
        dim=2,
        samples=400,
        seed=1234,
        top_k=5,
    )
    base.update(overrides)
    return SearchTask(**base)


class TestRunSearch:
    def test_min_gap_results_sorted_ascending(self):
        witnesses = run_search(small_task())
        values = [w.objective_value for w in witnesses]
        assert values == sorted(values)
        assert len(witnesses) == 5

    def test_injected_counterexample_bounds_result(self):
        # candidate 0 is the known -0.75 triple, so the best can't be worse
        witnesses = run_search(small_task(samples=3))
        assert witnesses[0].objective_value <= -0.75 + 1e-12

    def test_dim3_search_runs_without_injection(self):
        witnesses = run_search(small_task(dim=3, samples=100, top_k=3))
        assert len(witnesses) == 3
        assert all(w.rho.shape == (3, 3) for w in witnesses)

    def test_deterministic_across_runs(self):
        a = run_search(small_task())
        b = run_search(small_task())
        for wa, wb in zip(a, b):
            assert wa.objective_value == wb.objective_value
            assert wa.sample_index == wb.sample_index
            np.testing.assert_array_equal(wa.rho, wb.rho)
            np.testing.assert_array_equal(wa.a, wb.a)

    def test_deterministic_across_worker_counts(self):
        serial = run_search(small_task())
        threaded = run_search(small_task(), workers=4)
        for ws, wt in zip(serial, threaded):
            assert ws.objective_value == wt.objective_value
            assert ws.sample_index == wt.sample_index
            np.testing.assert_array_equal(ws.rho, wt.rho)

    def test_witness_reevaluation_is_sound(self):
        task = small_task(samples=200)
        for w in run_search(task):
            again = search.reevaluate(task.objective, w)
            assert abs(again - w.objective_value) <= 1e-9

    def test_sign_objective_returns_both_signs(self):
        task = small_task(objective="sign_witnesses_lhs_difference", samples=50)
        neg, pos = run_search(task)
        # the injected triples already witness both signs
        assert neg.objective_value < 0
        assert pos.objective_value > 0

    def test_sign_objective_single_candidate(self):
        task = small_task(
            objective="sign_witnesses_lhs_difference", dim=3, samples=1, top_k=1
        )
        neg, pos = run_search(task)
        assert neg.sample_index == pos.sample_index

    def test_re_ordering_objective_finds_negative(self):
        witnesses = run_search(small_task(objective="min_gap_re_ordering", samples=500))
        assert witnesses[0].objective_value <= -0.1539 + 1e-12

    def test_bad_task_rejected(self):
        with pytest.raises(BadSpec):
            run_search(small_task(samples=0))
        with pytest.raises(BadSpec):
            run_search(small_task(objective="maximize_fun"))
        with pytest.raises(BadSpec):
            run_search(small_task(top_k=0))


class TestRefinement:
    def test_zero_steps_is_identity(self):
        w = run_search(small_task(samples=3))[0]
        assert refine_witness(w, "min_gap_false_cov_variant", 0, seed=1) is w

    def test_never_worsens(self):
        task = small_task(samples=50)
        for w in run_search(task)[:3]:
            refined = refine_witness(w, task.objective, 60, seed=7)
            assert refined.objective_value <= w.objective_value + 1e-12

    def test_refining_known_counterexample_improves_past_reference(self):
        rho, a, b = cov_variant_triple()
        w = Witness(
            rho=rho.matrix, a=a.matrix, b=b.matrix,
            objective_value=-0.75, sample_index=0,
        )
        refined = refine_witness(w, "min_gap_false_cov_variant", 300, seed=11)
        assert refined.objective_value <= -0.75

    def test_refined_value_reevaluates(self):
        task = small_task(samples=30, refine=True, refine_steps=40)
        for w in run_search(task):
            assert abs(search.reevaluate(task.objective, w) - w.objective_value) <= 1e-9

    def test_refinement_deterministic(self):
        w = run_search(small_task(samples=30))[0]
        r1 = refine_witness(w, "min_gap_false_cov_variant", 50, seed=3)
        r2 = refine_witness(w, "min_gap_false_cov_variant", 50, seed=3)
        assert r1.objective_value == r2.objective_value
        np.testing.assert_array_equal(r1.rho, r2.rho)

    def test_refined_states_stay_valid(self):
        task = small_task(samples=20, refine=True, refine_steps=50)
        for w in run_search(task):
            from skewrel.quantities import DensityMatrix
            state = DensityMatrix(w.rho)  # validates Hermitian/PSD/trace
            assert state.dim == 2
