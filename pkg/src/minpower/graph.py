"""Core graph vocabulary: instances, spanning trees, arc sets, power assignments.

An instance is a connected undirected graph with symmetric nonnegative edge
costs.  Directed solutions are arc sets over the same vertex pairs; the power
of a vertex is the largest cost among its outgoing arcs, and the power of an
arc set is the sum of vertex powers.  A power assignment conversely induces
the arc set of all edges the tail's power can afford.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import isfinite
from typing import Iterable

Arc = tuple[int, int]


class InstanceError(ValueError):
    """Malformed, duplicated, or disconnected instance data."""


@dataclass(frozen=True)
class Instance:
    """Undirected graph with vertices 0..n-1 and one stored cost per edge.

    Edges are normalized to (u, v, cost) with u < v; both orientations of an
    edge share the cost.  Use :meth:`from_edges` to validate raw input; the
    plain constructor trusts its arguments.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, float]]) -> "Instance":
        """Validate, normalize, and build a connected instance.

        Raises InstanceError on self-loops, out-of-range ids, duplicate pairs,
        negative or non-finite costs, and disconnected graphs.
        """
        if n < 1:
            raise InstanceError(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int, float]] = []
        for u, v, c in edges:
            if u == v:
                raise InstanceError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError(f"edge {u}-{v} outside vertex range 0..{n - 1}")
            c = float(c)
            if not isfinite(c) or c < 0.0:
                raise InstanceError(f"bad cost {c!r} on edge {u}-{v}")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in seen:
                raise InstanceError(f"duplicate edge {a}-{b}")
            seen.add((a, b))
            norm.append((a, b, c))
        inst = cls(n, tuple(norm))
        if not inst.is_connected():
            raise InstanceError("instance not connected")
        return inst

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[tuple[float, int, int], ...], ...]:
        """adj[u]: incident (cost, neighbor, edge_index), sorted by (cost, neighbor)."""
        lists: list[list[tuple[float, int, int]]] = [[] for _ in range(self.n)]
        for idx, (u, v, c) in enumerate(self.edges):
            lists[u].append((c, v, idx))
            lists[v].append((c, u, idx))
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def _cost_by_pair(self) -> dict[tuple[int, int], float]:
        return {(u, v): c for u, v, c in self.edges}

    def cost(self, u: int, v: int) -> float:
        """Cost of the undirected edge {u, v}; raises InstanceError if absent."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._cost_by_pair[key]
        except KeyError:
            raise InstanceError(f"no edge {u}-{v} in instance") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._cost_by_pair

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for _, v, _ in self.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    queue.append(v)
        return count == self.n


@dataclass(frozen=True)
class Tree:
    """Spanning tree of an instance, rooted at vertex 0 for path queries.

    Edge indices refer to positions in :attr:`edges` and are the keys every
    coverage structure uses.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]

    @cached_property
    def adj(self) -> tuple[tuple[tuple[int, int, float], ...], ...]:
        """adj[u]: (neighbor, edge_index, cost) in edge order."""
        lists: list[list[tuple[int, int, float]]] = [[] for _ in range(self.n)]
        for idx, (u, v, c) in enumerate(self.edges):
            lists[u].append((v, idx, c))
            lists[v].append((u, idx, c))
        return tuple(tuple(l) for l in lists)

    @cached_property
    def _rooted(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        parent, parent_edge = self.rooted_parents(0)
        depth = [0] * self.n
        order = self._bfs_order(0)
        for v in order[1:]:
            depth[v] = depth[parent[v]] + 1
        return tuple(parent), tuple(parent_edge), tuple(depth)

    @property
    def parent(self) -> tuple[int, ...]:
        return self._rooted[0]

    @property
    def parent_edge(self) -> tuple[int, ...]:
        return self._rooted[1]

    @property
    def depth(self) -> tuple[int, ...]:
        return self._rooted[2]

    def _bfs_order(self, root: int) -> list[int]:
        order = [root]
        seen = bytearray(self.n)
        seen[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _, _ in self.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    queue.append(v)
                    order.append(v)
        return order

    def rooted_parents(self, root: int) -> tuple[list[int], list[int]]:
        """Parent vertex and parent edge index arrays for the tree rooted at root."""
        parent = [-1] * self.n
        parent_edge = [-1] * self.n
        seen = bytearray(self.n)
        seen[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, idx, _ in self.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    parent[v] = u
                    parent_edge[v] = idx
                    queue.append(v)
        return parent, parent_edge

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {
            (u, v) if u < v else (v, u): idx
            for idx, (u, v, _) in enumerate(self.edges)
        }

    @cached_property
    def total_cost(self) -> float:
        return float(sum(c for _, _, c in self.edges))


@dataclass(frozen=True)
class PowerAssignment:
    """Per-vertex transmit power; vertex v gets levels[v] >= 0."""

    levels: tuple[float, ...]

    @property
    def total(self) -> float:
        return float(sum(self.levels))

    def __getitem__(self, v: int) -> float:
        return self.levels[v]

    def __len__(self) -> int:
        return len(self.levels)


def minimum_spanning_tree(inst: Instance) -> Tree:
    """Kruskal MST with deterministic tie-breaking by (cost, endpoints).

    Ties are resolved by sorting on (cost, min endpoint, max endpoint), so
    identical instances produce identical trees on every platform.
    """
    order = sorted(range(inst.m), key=lambda i: (inst.edges[i][2], inst.edges[i][0], inst.edges[i][1]))
    parent = list(range(inst.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    picked: list[tuple[int, int, float]] = []
    for i in order:
        u, v, c = inst.edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            picked.append((u, v, c))
            if len(picked) == inst.n - 1:
                break
    if len(picked) != inst.n - 1:
        raise InstanceError("instance not connected")
    return Tree(inst.n, tuple(picked))


def bidirect(tree: Tree) -> set[Arc]:
    """Both orientations of every tree edge: 2(n-1) arcs."""
    arcs: set[Arc] = set()
    for u, v, _ in tree.edges:
        arcs.add((u, v))
        arcs.add((v, u))
    return arcs


def is_strongly_connected(inst: Instance, arcs: Iterable[Arc]) -> bool:
    """True iff every ordered vertex pair is joined by a directed path in arcs."""
    n = inst.n
    fwd: list[list[int]] = [[] for _ in range(n)]
    rev: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc {u}->{v} outside vertex range")
        fwd[u].append(v)
        rev[v].append(u)

    def full_reach(adj: list[list[int]]) -> bool:
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == n

    return full_reach(fwd) and full_reach(rev)


def power_of(inst: Instance, arcs: Iterable[Arc]) -> PowerAssignment:
    """Per-vertex max outgoing arc cost; 0 for vertices with no outgoing arc."""
    p = [0.0] * inst.n
    for u, v in arcs:
        c = inst.cost(u, v)
        if c > p[u]:
            p[u] = c
    return PowerAssignment(tuple(p))


def induced_arcs(inst: Instance, assignment: PowerAssignment) -> set[Arc]:
    """All arcs u->v with p(u) >= cost(u, v).

    Superset of any arc set the assignment was derived from, since power_of
    takes per-vertex maxima.
    """
    arcs: set[Arc] = set()
    for u in range(inst.n):
        pu = assignment[u]
        for c, v, _ in inst.adj[u]:
            if c > pu:
                break  # adjacency is cost-sorted
            arcs.add((u, v))
    return arcs
