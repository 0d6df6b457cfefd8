import itertools
import random

import numpy as np
import pytest
from scipy.optimize import linprog

import helpers
from minpower.exact import exact_optimum
from minpower.graph import Instance, minimum_spanning_tree
from minpower.greedy import greedy_solve, ratio_bound
from minpower.instances import gen_line, gen_random_geometric
from minpower.lpbound import (
    cut_load,
    enters_cut,
    greedy_vs_bound,
    lp_lower_bound,
    most_violated_cut,
)
from minpower.stars import covered_edges, enumerate_stars, Star


def triangle():
    return Instance.from_edges(3, [(0, 1, 3.0), (1, 2, 4.0), (0, 2, 5.0)])


def full_cut_lp(inst):
    """Independent oracle: solve the bound over all 2^n - 2 cuts with scipy."""
    stars = enumerate_stars(inst)
    n = inst.n
    rows = []
    for mask in range(1, (1 << n) - 1):
        subset = frozenset(v for v in range(n) if mask >> v & 1)
        rows.append([-1.0 if enters_cut(s, subset) else 0.0 for s in stars])
    res = linprog(
        [s.radius for s in stars],
        A_ub=np.array(rows),
        b_ub=-np.ones(len(rows)),
        bounds=[(0, None)] * len(stars),
        method="highs",
    )
    assert res.success
    return float(res.fun)


class TestLowerBound:
    def test_two_vertices_forced(self):
        value = lp_lower_bound(Instance.from_edges(2, [(0, 1, 1.5)])).value
        assert value == pytest.approx(3.0, abs=1e-9)

    def test_triangle_golden(self):
        # frozen after cross-checking against the full 2^n - 2 cut LP: the
        # relaxation is tight on the triangle and matches the optimum 11
        inst = triangle()
        frac = lp_lower_bound(inst)
        assert frac.value == pytest.approx(11.0, abs=1e-7)
        assert frac.value == pytest.approx(full_cut_lp(inst), abs=1e-7)

    def test_matches_full_lp_on_random_instances(self):
        rng = random.Random(79)
        for i in range(15):
            inst = helpers.random_connected_instance(rng, rng.randint(2, 5), complete=bool(i % 2))
            lazy = lp_lower_bound(inst).value
            assert lazy == pytest.approx(full_cut_lp(inst), abs=1e-6)

    def test_line_bracketing(self):
        inst = gen_line(3, 0.25)
        tree = minimum_spanning_tree(inst)
        frac = lp_lower_bound(inst)
        res = exact_optimum(inst)
        assert res.optimal
        assert tree.total_cost - 1e-6 <= frac.value <= res.opt + 1e-6

    def test_weights_satisfy_all_cuts(self):
        rng = random.Random(83)
        for _ in range(10):
            inst = helpers.random_connected_instance(rng, rng.randint(2, 6))
            frac = lp_lower_bound(inst)
            load, subset = helpers.exhaustive_min_cut_load(inst, frac.weights)
            assert load >= 1.0 - 1e-6, (subset, load)

    def test_single_vertex(self):
        assert lp_lower_bound(Instance.from_edges(1, [])).value == 0.0


class TestSeparation:
    def test_zero_weights_violated(self):
        inst = triangle()
        violation = most_violated_cut(inst, {})
        assert violation is not None
        assert violation.load == 0.0

    def test_integral_solution_feasible(self):
        # weight 1 on every vertex's solution star covers all cuts
        rng = random.Random(89)
        for _ in range(10):
            inst = helpers.random_connected_instance(rng, rng.randint(2, 7))
            sol = greedy_solve(inst)
            weights = {
                (v, sol.powers[v]): 1.0 for v in range(inst.n) if sol.powers[v] > 0.0
            }
            assert most_violated_cut(inst, weights) is None

    def test_soundness_of_reported_cuts(self):
        rng = random.Random(97)
        for _ in range(30):
            inst = helpers.random_connected_instance(rng, rng.randint(2, 6))
            stars = enumerate_stars(inst)
            weights = {}
            for s in stars:
                if rng.random() < 0.3:
                    weights[(s.center, s.radius)] = round(rng.uniform(0.05, 0.8), 3)
            violation = most_violated_cut(inst, weights)
            support = [
                (s, weights[(s.center, s.radius)])
                for s in stars
                if (s.center, s.radius) in weights
            ]
            if violation is not None:
                direct = cut_load(support, violation.subset)
                assert direct == pytest.approx(violation.load, abs=1e-9)
                assert direct < 1.0

    def test_agrees_with_exhaustive_enumeration(self):
        rng = random.Random(101)
        for _ in range(30):
            inst = helpers.random_connected_instance(rng, rng.randint(2, 6))
            stars = enumerate_stars(inst)
            weights = {}
            for s in stars:
                if rng.random() < 0.4:
                    weights[(s.center, s.radius)] = round(rng.uniform(0.1, 1.1), 3)
            violation = most_violated_cut(inst, weights)
            best_load, _ = helpers.exhaustive_min_cut_load(inst, weights)
            if best_load < 1.0 - 1e-7:
                assert violation is not None
                assert violation.load == pytest.approx(best_load, abs=1e-9)
            else:
                assert violation is None


class TestCrossingStarPairs:
    def test_tree_edge_fact_pair(self):
        # for each tree edge, the two stars grown from its endpoints with the
        # edge's own cost both cover the edge, so half weights sum to exactly 1,
        # and each one enters the cut on the opposite side of the edge
        rng = random.Random(103)
        for _ in range(15):
            inst = helpers.random_connected_instance(rng, rng.randint(2, 7))
            tree = minimum_spanning_tree(inst)
            for idx, (u, v, c) in enumerate(tree.edges):
                su = Star(u, c, frozenset(x for cc, x, _ in inst.adj[u] if cc <= c))
                sv = Star(v, c, frozenset(x for cc, x, _ in inst.adj[v] if cc <= c))
                weight = sum(
                    0.5 for s in (su, sv) if idx in covered_edges(tree, s)
                )
                assert weight == 1.0
                # sides of the tree split at this edge
                side_u = _component_side(tree, idx, u)
                side_v = frozenset(range(inst.n)) - side_u
                assert enters_cut(su, side_v)
                assert enters_cut(sv, side_u)


def _component_side(tree, removed_edge, root):
    adj = [[] for _ in range(tree.n)]
    for idx, (u, v, _) in enumerate(tree.edges):
        if idx != removed_edge:
            adj[u].append(v)
            adj[v].append(u)
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


class TestGreedyVersusBound:
    def test_two_vertex_ratio_is_one(self):
        report = greedy_vs_bound(Instance.from_edges(2, [(0, 1, 2.0)]))
        assert report.ratio == pytest.approx(1.0, abs=1e-9)
        assert report.within_bound

    def test_triangle_ratio(self):
        report = greedy_vs_bound(triangle())
        assert report.ratio == pytest.approx(11.0 / 11.0, abs=1e-6)
        assert report.within_bound

    def test_random_instances_within_bound(self):
        rng = random.Random(107)
        bound = ratio_bound(0.5)
        for _ in range(15):
            inst = gen_random_geometric(rng.randint(4, 7), 2.0, rng.randrange(10**6))
            report = greedy_vs_bound(inst)
            assert 1.0 - 1e-9 <= report.ratio <= bound + 1e-6
