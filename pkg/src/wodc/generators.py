"""Deterministic graph constructors for tests and benchmarks."""

from __future__ import annotations

from .graph import Graph

_MASK64 = (1 << 64) - 1

# splitmix64 constants (Steele, Lea, Flood; also used by Java's SplittableRandom)
_SM_GAMMA = 0x9E3779B97F4A7C15
_SM_MUL1 = 0xBF58476D1CE4E5B9
_SM_MUL2 = 0x94D049BB133111EB


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + _SM_GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _SM_MUL1) & _MASK64
    z = ((z ^ (z >> 27)) * _SM_MUL2) & _MASK64
    return state, z ^ (z >> 31)


def moon_moser(t: int) -> Graph:
    """Complete t-partite graph with parts of size three.

    Its complement is t disjoint triangles; vertices 3i, 3i+1, 3i+2 form
    triangle i.  This family maximizes the number of maximal cliques among
    graphs of equal order, which makes it the canonical stress input for
    enumeration engines.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    n = 3 * t
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if u // 3 != v // 3]
    return Graph.from_edges(n, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample: each pair is an edge with probability p.

    The pseudorandom stream is splitmix64 seeded with ``seed``; pairs are
    visited in lexicographic order and pair (u, v) is kept when the next
    64-bit draw is below round(p * 2**64).  Identical arguments reproduce
    identical graphs on any platform.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    threshold = round(p * 2.0**64)
    state = seed & _MASK64
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            state, draw = _splitmix64(state)
            if draw < threshold:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


# Two small graphs with hand-checked defective-clique structure, used all over
# the test suite.  Labels are the 1-based ids the expectations are written in.

_DEMO8_EDGES = (
    (1, 2), (1, 3), (2, 4), (2, 8), (3, 5), (3, 8), (4, 6), (4, 7),
    (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
)

_DEMO9_EDGES = (
    (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5),
    (3, 6), (3, 8), (4, 5), (4, 7), (4, 8), (5, 6), (5, 7), (5, 9),
    (6, 8), (6, 9), (7, 8), (7, 9), (8, 9),
)

_DEMOS = {
    "demo8": (8, _DEMO8_EDGES),
    "demo9": (9, _DEMO9_EDGES),
}


def example_graph(which: str) -> Graph:
    """Return a bundled demo graph: 'demo8' (8 vertices, 15 edges) or
    'demo9' (9 vertices, 21 edges)."""
    try:
        n, edges = _DEMOS[which]
    except KeyError:
        raise ValueError(f"unknown example graph {which!r}") from None
    internal = [(a - 1, b - 1) for a, b in edges]
    return Graph.from_edges(n, internal, labels=range(1, n + 1))
