"""Preprocessing: a large starting solution plus vertex and edge shrinking.

Every member of a k-defective clique of size at least q sees at least
q - k - 1 distinct colors among its neighbors inside the clique, so the
colorful (q - k - 1)-core keeps all such solutions.  Likewise, every edge
inside such a solution keeps at least q - k - 2 common neighbors there, so
only edges strictly below that support can be discarded; the threshold used
here is q - k - 3 because an edge sitting exactly at q - k - 2 can belong to
a size-q solution.  Core and truss passes alternate until neither removes
anything, which preserves every qualifying solution both vertex- and
edge-intact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import (
    Coloring,
    Graph,
    colorful_degeneracy_ordering,
    colorful_s_core,
    degeneracy_ordering,
    greedy_coloring,
)


@dataclass(slots=True)
class ReductionReport:
    n_before: int
    m_before: int
    n_after: int
    m_after: int
    rounds: int
    elapsed_ms: int


def initial_solution(g: Graph, chi: Coloring, k: int) -> set[int]:
    """Longest suffix of a colorful degeneracy ordering that stays k-defective.

    The suffix is scanned from the back while accumulating missing pairs, so
    the whole computation is linear in the graph size.
    """
    order = colorful_degeneracy_ordering(g, chi)
    members: set[int] = set()
    missing = 0
    for v in reversed(order):
        # suffix missing count is monotone, so the first overflow is final
        missing += len(members) - sum(1 for w in g.neighbors(v) if w in members)
        if missing > k:
            break
        members.add(v)
    return members


def colorful_core_reduce(g: Graph, chi: Coloring, k: int, q: int) -> set[int]:
    """Vertices that can still appear in a k-defective clique of size >= q."""
    threshold = q - k - 1
    if threshold <= 0:
        return set(range(g.n))
    return colorful_s_core(g, chi, threshold)


def _truss_fixpoint(adj: dict[int, set[int]], threshold: int) -> set[tuple[int, int]]:
    """Delete edges whose endpoints share at most ``threshold`` common
    neighbors, cascading until stable.  Mutates ``adj``; returns the deleted
    edge set as (u, v) pairs with u < v."""
    if threshold < 0:
        return set()
    support: dict[tuple[int, int], int] = {}
    for u, row in adj.items():
        for v in row:
            if v > u:
                support[(u, v)] = len(row & adj[v])
    stack = [e for e, s in support.items() if s <= threshold]
    deleted: set[tuple[int, int]] = set()
    while stack:
        e = stack.pop()
        if e in deleted:
            continue
        u, v = e
        deleted.add(e)
        common = adj[u] & adj[v]
        adj[u].discard(v)
        adj[v].discard(u)
        for w in common:
            for a, b in ((u, w), (v, w)):
                edge = (a, b) if a < b else (b, a)
                if edge not in deleted:
                    support[edge] -= 1
                    if support[edge] == threshold:
                        stack.append(edge)
    return deleted


def truss_reduce(g: Graph, k: int, q: int, members: set[int] | None = None) -> set[tuple[int, int]]:
    """Edges of g (restricted to ``members``) that no size-q solution can use."""
    if q < k + 2:
        raise ValueError(f"truss reduction needs q >= k + 2 (k={k}, q={q})")
    if members is None:
        members = set(range(g.n))
    adj = {u: {v for v in g.neighbors(u) if v in members} for u in members}
    return _truss_fixpoint(adj, q - k - 3)


def _colorful_peel(adj: dict[int, set[int]], color, s: int) -> set[int]:
    """Remove vertices whose in-place colorful degree falls below s.

    Mutates ``adj``; returns the removed vertex set.
    """
    if s <= 0:
        return set()
    counts: dict[int, dict[int, int]] = {}
    for u, row in adj.items():
        cu: dict[int, int] = {}
        for v in row:
            c = color[v]
            cu[c] = cu.get(c, 0) + 1
        counts[u] = cu
    stack = [u for u in adj if len(counts[u]) < s]
    dead = set(stack)
    while stack:
        u = stack.pop()
        cu = color[u]
        for v in adj[u]:
            if v not in dead:
                cv = counts[v]
                cv[cu] -= 1
                if cv[cu] == 0:
                    del cv[cu]
                    if len(cv) < s:
                        dead.add(v)
                        stack.append(v)
    for u in dead:
        for v in adj[u]:
            if v not in dead:
                adj[v].discard(u)
        del adj[u]
    return dead


def reduce_pipeline(g: Graph, k: int, q: int, chi: Coloring | None = None) -> tuple[Graph, ReductionReport]:
    """Alternate core and truss passes to a joint fixpoint, then materialize.

    The surviving subgraph gets fresh dense ids; its labels point back to the
    original input labels.  With q <= k + 1 both thresholds are vacuous and
    the graph comes back unchanged.
    """
    t0 = time.perf_counter()
    if chi is None:
        chi = greedy_coloring(g, degeneracy_ordering(g))
    adj: dict[int, set[int]] = {u: set(g.neighbors(u)) for u in range(g.n)}
    core_threshold = q - k - 1
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        if core_threshold > 0 and _colorful_peel(adj, chi.color, core_threshold):
            changed = True
        if q >= k + 2 and _truss_fixpoint(adj, q - k - 3):
            changed = True
    kept = sorted(adj)
    remap = {u: i for i, u in enumerate(kept)}
    edges = [(remap[u], remap[v]) for u in kept for v in adj[u] if v > u]
    reduced = Graph.from_edges(len(kept), edges, labels=[g.labels[u] for u in kept])
    elapsed = int((time.perf_counter() - t0) * 1000)
    report = ReductionReport(g.n, g.m, reduced.n, reduced.m, rounds, elapsed)
    return reduced, report
