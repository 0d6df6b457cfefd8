"""Shared brute-force oracles and instance builders for the test suite.

Everything here recomputes results by definition-level enumeration, staying
independent of the library code paths it is used to check.
"""

from __future__ import annotations

import itertools
import random

from minpower.graph import Arc, Instance, Tree
from minpower.stars import CoverState, Star, apply_star, marginal_gain


def random_connected_instance(rng: random.Random, n: int, complete: bool = False) -> Instance:
    """Random instance with small integer costs (exact float arithmetic)."""
    edges = []
    if complete:
        pairs = list(itertools.combinations(range(n), 2))
    else:
        # random spanning tree plus extra edges
        pairs = set()
        for v in range(1, n):
            pairs.add((rng.randrange(v), v))
        for _ in range(rng.randrange(0, n)):
            u, v = rng.sample(range(n), 2)
            pairs.add((min(u, v), max(u, v)))
        pairs = sorted(pairs)
    for u, v in pairs:
        edges.append((u, v, float(rng.randint(1, 12))))
    return Instance.from_edges(n, edges)


def transitive_closure_strongly_connected(n: int, arcs: set[Arc]) -> bool:
    """Floyd-Warshall boolean closure; true iff all pairs are connected."""
    reach = [[i == j for j in range(n)] for i in range(n)]
    for u, v in arcs:
        reach[u][v] = True
    for k in range(n):
        rk = reach[k]
        for i in range(n):
            if reach[i][k]:
                ri = reach[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return all(all(row) for row in reach)


def all_spanning_trees(inst: Instance):
    """Yield every spanning tree as a tuple of edge triples (tiny n only)."""
    n = inst.n
    for combo in itertools.combinations(inst.edges, n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v, _ in combo:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            yield combo


def tree_path_edges(tree: Tree, a: int, b: int) -> set[int]:
    """Edge indices on the tree path from a to b, by naive depth climbing."""
    depth, parent, parent_edge = tree.depth, tree.parent, tree.parent_edge
    out: set[int] = set()
    x, y = a, b
    while depth[x] > depth[y]:
        out.add(parent_edge[x])
        x = parent[x]
    while depth[y] > depth[x]:
        out.add(parent_edge[y])
        y = parent[y]
    while x != y:
        out.add(parent_edge[x])
        out.add(parent_edge[y])
        x = parent[x]
        y = parent[y]
    return out


def pairwise_cover(tree: Tree, star: Star) -> set[int]:
    """Coverage by the all-pairs definition: edges on paths between star vertices."""
    vertices = sorted(star.leaves | {star.center})
    out: set[int] = set()
    for a, b in itertools.combinations(vertices, 2):
        out |= tree_path_edges(tree, a, b)
    return out


def replay_state(inst: Instance, tree: Tree, stars: list[Star]) -> CoverState:
    """Build a cover state by applying stars in order."""
    state = CoverState(inst, tree)
    for star in stars:
        _, new_arcs = marginal_gain(state, star)
        apply_star(state, star, new_arcs)
    return state


def coverage_value(tree: Tree, stars: list[Star]) -> float:
    """f(A) from scratch: union the covers, then sum edge costs."""
    from minpower.stars import covered_edges

    covered: set[int] = set()
    for star in stars:
        covered |= covered_edges(tree, star)
    return sum(tree.edges[i][2] for i in covered)


def exhaustive_min_cut_load(inst: Instance, weights: dict[tuple[int, float], float]):
    """Minimum entering load over all proper nonempty subsets (n <= 6)."""
    from minpower.lpbound import cut_load
    from minpower.stars import Star

    n = inst.n
    assert n <= 6
    support = []
    for (center, radius), w in sorted(weights.items()):
        leaves = frozenset(v for c, v, _ in inst.adj[center] if c <= radius)
        support.append((Star(center, radius, leaves), w))
    best_load = float("inf")
    best_subset: frozenset[int] | None = None
    for mask in range(1, (1 << n) - 1):
        subset = frozenset(v for v in range(n) if mask >> v & 1)
        load = cut_load(support, subset)
        if load < best_load:
            best_load = load
            best_subset = subset
    return best_load, best_subset
