import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minprofile import (
    KernelTrace,
    NotConnectedError,
    PendantMerge,
    RuleNotApplicableError,
    Suppression,
    WeightedGraph,
    apply_rule1,
    apply_rule2,
    exact_profile,
    exact_weighted_profile,
    expand,
    is_conformal,
    is_k_suppressible,
    kernelize,
    lift_ordering,
    profile,
    weighted_profile,
)
from minprofile.cli_io.generators import chain_of_cycles, clique, cycle, path, pendant_attach, random_chain, star
from minprofile.graph_core import Graph

from oracles import brute_force_profile, random_connected_graph

P7 = path(7)


def _weighted_optimum(wg):
    return exact_profile(expand(wg)).profile


def _promise_instance(rng):
    """A chain-like graph with pendants, plus the smallest k it satisfies the promise for."""
    n = rng.randint(2, 12)
    if rng.random() < 0.5:
        g = random_chain(n, rng.randrange(10**9))
    else:
        g = random_chain(max(1, n - 3), rng.randrange(10**9))
        g = pendant_attach(g, {rng.randrange(g.n): rng.randint(1, 3)})
    k = max(1, exact_profile(g).profile - (g.n - 1)) + rng.randint(0, 1)
    return g, k


class TestRule1:
    def test_star_becomes_one_heavy_pendant(self):
        new, step, back = apply_rule1(star(3), 0)
        assert new.n == 2 and new.weight == (1, 3)
        assert step == PendantMerge(0, 1, ((1, 1), (2, 1), (3, 1)), 3)
        assert back == (0, 1)

    def test_weights_add_up(self):
        # 2 carries pendants 3 and 4 of weights 2 and 5 on top of the path 0-1-2
        wg = WeightedGraph(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)]), (1, 1, 1, 2, 5))
        new, step, back = apply_rule1(wg, 2)
        assert step.weight == 7 and back == (0, 1, 2, 3)
        assert new.weight == (1, 1, 1, 7)

    def test_single_pendant_not_applicable(self):
        with pytest.raises(RuleNotApplicableError):
            apply_rule1(path(4), 1)
        with pytest.raises(RuleNotApplicableError):
            apply_rule1(path(2), 0)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(3, 9), st.integers(0, 10**6))
    def test_profile_preserved(self, n, seed):
        rng = random.Random(seed)
        g = random_connected_graph(n, rng, p=rng.uniform(0.0, 0.3))
        anchors = [x for x in range(n) if g.degree(x) >= 2 and len(g.pendant_neighbors(x)) >= 2]
        if not anchors:
            return
        new, _, _ = apply_rule1(g, anchors[0])
        assert _weighted_optimum(new) == brute_force_profile(g)


class TestSuppressible:
    def test_p7_middle(self):
        assert is_k_suppressible(P7, 3, 1)

    def test_p7_near_end(self):
        assert not is_k_suppressible(P7, 1, 1)

    def test_triangle_vertex(self):
        g = chain_of_cycles([1, 1, 1, 3, 1, 1, 1])
        assert not any(is_k_suppressible(g, v, 1) for v in (3, 4, 5))

    def test_orders_only_k_plus_one(self):
        assert is_k_suppressible(P7, 3, 1)
        assert not is_k_suppressible(P7, 3, 2)

    def test_degree_four_rejected(self):
        g = pendant_attach(P7, {3: 2})
        assert not is_k_suppressible(g, 3, 1)

    def test_heavy_pendant_neighbour_rejected(self):
        # both sides of the centre weigh 3, but one side is a single weighted pendant
        wg = WeightedGraph(path(4), (3, 1, 1, 1))
        assert not is_k_suppressible(wg, 1, 1)


class TestRule2:
    def test_p7_middle_gives_p6(self):
        new, step, back = apply_rule2(P7, 3, 1)
        assert step == Suppression(3, None, 2, 4)
        assert back == (0, 1, 2, 4, 5, 6)
        assert new.graph == path(6)
        assert brute_force_profile(P7) - 7 == brute_force_profile(path(6)) - 6 == -1

    def test_degree_three_with_weighted_pendant(self):
        g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7)])
        wg = WeightedGraph(g, (1, 1, 1, 1, 2, 1, 1, 1))
        new, step, back = apply_rule2(wg, 3, 1)
        assert step == Suppression(3, (4, 2), 2, 5)
        assert back == (0, 1, 2, 5, 6, 7)
        assert wg.total_weight - new.total_weight == 3
        assert _weighted_optimum(wg) - wg.total_weight == _weighted_optimum(new) - new.total_weight

    def test_not_suppressible(self):
        with pytest.raises(RuleNotApplicableError):
            apply_rule2(P7, 3, 2)
        with pytest.raises(RuleNotApplicableError):
            apply_rule2(cycle(5), 0, 1)


class TestKernelize:
    def test_p7(self):
        res = kernelize(P7, 1)
        assert res.kernel.graph == path(6)
        assert res.trace.steps == (Suppression(3, None, 2, 4),)
        assert res.origin == (0, 1, 2, 4, 5, 6)

    def test_cycle_unchanged(self):
        res = kernelize(cycle(5), 1)
        assert res.kernel.graph == cycle(5) and res.trace.steps == ()

    def test_spider_legs_merge(self):
        res = kernelize(star(5), 2)
        assert res.kernel.n == 2 and sorted(res.kernel.weight) == [1, 5]
        assert len(res.trace.steps) == 1 and res.trace.steps[0].weight == 5

    def test_long_path_shrinks(self):
        res = kernelize(path(40), 1)
        assert res.kernel.n <= 18 and res.suppression_cost == 40 - res.kernel.n

    def test_rejects_bad_input(self):
        with pytest.raises(NotConnectedError):
            kernelize(Graph.empty(3), 1)
        with pytest.raises(ValueError):
            kernelize(P7, 0)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**6))
    def test_fixpoint_and_step_count(self, seed):
        rng = random.Random(seed)
        g, k = _promise_instance(rng)
        res = kernelize(g, k)
        kern = res.kernel
        assert len(res.trace.steps) <= g.n
        assert all(not (kern.graph.degree(x) >= 2 and len(kern.graph.pendant_neighbors(x)) >= 2) for x in range(kern.n))
        assert not any(is_k_suppressible(kern, v, k) for v in range(kern.n))
        assert kern.total_weight == g.n - res.suppression_cost

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10**6))
    def test_promise_preserves_profile_minus_weight(self, seed):
        rng = random.Random(seed)
        g, k = _promise_instance(rng)
        res = kernelize(g, k)
        kern = res.kernel
        assert exact_profile(g).profile - g.n == exact_weighted_profile(kern).profile - kern.total_weight
        assert kern.n <= 12 * k + 6 and kern.graph.m <= 13 * k + 5


class TestLift:
    def test_p7(self):
        res = kernelize(P7, 1)
        opt = exact_weighted_profile(res.kernel)
        assert opt.profile == 5
        lifted = lift_ordering(res, opt.witness, check_optimal=True)
        assert lifted.profile == 6 == brute_force_profile(P7) and lifted.exact
        assert lifted.kernel_optimal is True

    def test_identity_trace(self):
        res = kernelize(clique(4), 1)
        lifted = lift_ordering(res, [2, 0, 3, 1])
        assert lifted.ordering.sequence == (2, 0, 3, 1) and lifted.profile == 6

    def test_star(self):
        res = kernelize(star(3), 1)
        opt = exact_weighted_profile(res.kernel)
        lifted = lift_ordering(res, opt.witness)
        assert lifted.profile == 3 == brute_force_profile(star(3))
        assert is_conformal(star(3), lifted.ordering)

    def test_non_optimal_kernel_ordering_is_flagged(self):
        g = path(9)
        res = kernelize(g, 1)
        kern = res.kernel
        # reverse the middle of an optimal kernel ordering to make it worse
        seq = list(exact_weighted_profile(kern).witness.sequence)
        seq = seq[:1] + seq[1:-1][::-1] + seq[-1:]
        lifted = lift_ordering(res, seq, check_optimal=True)
        assert lifted.kernel_optimal is False and lifted.notes
        assert profile(g, lifted.ordering) == lifted.profile
        assert lifted.kernel_profile == weighted_profile(kern, seq)
        assert lifted.profile >= brute_force_profile(g)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10**6))
    def test_round_trip_is_optimal(self, seed):
        rng = random.Random(seed)
        g, k = _promise_instance(rng)
        res = kernelize(g, k)
        opt = exact_weighted_profile(res.kernel)
        lifted = lift_ordering(res, opt.witness)
        assert lifted.exact and lifted.profile == opt.profile + res.suppression_cost
        assert lifted.profile == exact_profile(g).profile == profile(g, lifted.ordering)


class TestTraceText:
    def test_lines(self):
        trace = kernelize(pendant_attach(P7, {1: 1}), 1).trace
        text = trace.to_text()
        assert text.splitlines()[0] == "merge 1 0:1 7:1 -> 0:2"

    def test_round_trip_with_labels(self):
        g = pendant_attach(path(12), {5: 1, 9: 2})
        trace = kernelize(g, 1).trace
        labels = [f"v{i}" for i in range(g.n)]
        assert KernelTrace.from_text(trace.to_text(labels), labels) == trace
        assert KernelTrace.from_text(trace.to_text()) == trace

    def test_unknown_step(self):
        with pytest.raises(ValueError):
            KernelTrace.from_text("shrink 3\n")
