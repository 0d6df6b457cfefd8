"""Exact branch-and-bound oracle for small instances.

Any optimal power assignment can be rounded down so every vertex's power is
either 0 or one of its incident costs (power only matters through which arcs
it enables), so the search branches over those finite level sets.  The greedy
solution seeds the incumbent, partial assignments are pruned against the sum
of remaining minimum levels, and a blown budget yields an explicit
"inconclusive" result rather than a wrong optimum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from time import perf_counter

from minpower.graph import Instance, PowerAssignment, induced_arcs, is_strongly_connected
from minpower.greedy import greedy_solve


@dataclass(frozen=True)
class SearchLimits:
    max_vertices: int = 9
    max_nodes: int = 5_000_000
    time_budget: float = 30.0

    def __post_init__(self) -> None:
        if self.max_vertices < 1 or self.max_nodes < 1 or self.time_budget <= 0:
            raise ValueError("search limits must be positive")


@dataclass(frozen=True)
class ExactResult:
    """Outcome of a search; opt is only the true optimum when status is optimal."""

    status: str  # "optimal" or "inconclusive"
    opt: float
    assignment: PowerAssignment
    nodes: int
    elapsed: float

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def verify_assignment(inst: Instance, assignment: PowerAssignment) -> bool:
    """True iff the assignment's induced arc set is strongly connected."""
    return is_strongly_connected(inst, induced_arcs(inst, assignment))


def _induced_strongly_connected(inst: Instance, p: list[float]) -> bool:
    # leaf feasibility test, kept separate from verify_assignment so the
    # brute-force differential exercises two independent code paths
    n = inst.n
    adj = inst.adj
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        pu = p[u]
        for c, v, _ in adj[u]:
            if c > pu:
                break
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    if count != n:
        return False
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for c, v, _ in adj[u]:
            if not seen[v] and p[v] >= c:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == n


def exact_optimum(
    inst: Instance,
    limits: SearchLimits | None = None,
    extra_incumbents: tuple[PowerAssignment, ...] = (),
) -> ExactResult:
    """Minimum total power with a verifying witness assignment.

    Vertices are assigned in decreasing-degree order, levels are tried from
    high to low, and a branch is cut once its committed power plus the minimum
    completion cannot beat the incumbent.  extra_incumbents lets callers seed
    additional known-feasible assignments; each is verified before use.
    """
    limits = limits or SearchLimits()
    n = inst.n
    if n > limits.max_vertices:
        raise ValueError(f"instance has {n} vertices, limit is {limits.max_vertices}")
    if n == 1:
        return ExactResult("optimal", 0.0, PowerAssignment((0.0,)), 0, 0.0)

    start = perf_counter()
    # strong connectivity needs an outgoing arc everywhere, so level 0 is only
    # viable when a zero-cost edge provides it; incident costs cover that case
    levels = [sorted({c for c, _, _ in inst.adj[v]}, reverse=True) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-len(inst.adj[v]), v))
    suffix_min = [0.0] * (n + 1)
    for i in reversed(range(n)):
        suffix_min[i] = suffix_min[i + 1] + levels[order[i]][-1]

    incumbent = greedy_solve(inst)
    best = incumbent.total_power
    best_assign = list(incumbent.powers.levels)
    for extra in extra_incumbents:
        if not verify_assignment(inst, extra):
            raise ValueError("extra incumbent is not strongly connected")
        if extra.total < best:
            best = extra.total
            best_assign = list(extra.levels)

    p = [0.0] * n
    nodes = 0
    aborted = False

    def dfs(i: int, partial: float) -> None:
        nonlocal nodes, best, best_assign, aborted
        nodes += 1
        if aborted:
            return
        if nodes > limits.max_nodes or (
            nodes % 4096 == 0 and perf_counter() - start > limits.time_budget
        ):
            aborted = True
            return
        if partial + suffix_min[i] >= best:
            return
        if i == n:
            total = float(sum(p))  # canonical vertex-order sum
            if total < best and _induced_strongly_connected(inst, p):
                best = total
                best_assign = p.copy()
            return
        v = order[i]
        tail = suffix_min[i + 1]
        for lev in levels[v]:
            if partial + lev + tail >= best:
                continue
            p[v] = lev
            dfs(i + 1, partial + lev)
            if aborted:
                return
        p[v] = 0.0

    dfs(0, 0.0)
    status = "inconclusive" if aborted else "optimal"
    return ExactResult(status, best, PowerAssignment(tuple(best_assign)), nodes, perf_counter() - start)


def brute_force_optimum(inst: Instance) -> tuple[float, PowerAssignment]:
    """Unpruned enumeration over {0} + incident-cost levels; ground truth for n <= 6."""
    n = inst.n
    if n > 6:
        raise ValueError("brute force is limited to n <= 6")
    if n == 1:
        return 0.0, PowerAssignment((0.0,))
    level_sets = [[0.0] + sorted({c for c, _, _ in inst.adj[v]}) for v in range(n)]
    best = float("inf")
    best_p: tuple[float, ...] | None = None
    for combo in itertools.product(*level_sets):
        total = float(sum(combo))
        if total >= best:
            continue
        assignment = PowerAssignment(combo)
        if verify_assignment(inst, assignment):
            best = total
            best_p = combo
    assert best_p is not None  # connected instances always admit a solution
    return best, PowerAssignment(best_p)
