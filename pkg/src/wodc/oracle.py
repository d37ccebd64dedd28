"""Slow ground-truth enumerators for differential testing.

Everything here avoids the optimizations under test: no pivoting, no upper
bound, no reduction.  Sizes are capped so a typo cannot turn the test suite
into a space heater.
"""

from __future__ import annotations

from .graph import Graph

SIZE_GUARD = 25


class OracleSizeError(ValueError):
    """Raised when a graph is too large for exhaustive verification."""


def _masks(g: Graph) -> list[int]:
    return [sum(1 << v for v in g.neighbors(u)) for u in range(g.n)]


def brute_maximal(g: Graph, k: int, q: int = 1) -> list[tuple[int, ...]]:
    """All maximal k-defective cliques of size >= q, canonically sorted.

    Backtracks over every k-defective clique in increasing vertex order and
    keeps those that no single outside vertex can extend.
    """
    n = g.n
    if n > SIZE_GUARD:
        raise OracleSizeError(f"n={n} exceeds the oracle guard ({SIZE_GUARD})")
    adj = _masks(g)
    out: list[tuple[int, ...]] = []

    def rec(members: list[int], mask: int, missing: int, start: int) -> None:
        extendable = False
        size = len(members)
        for u in range(n):
            if (mask >> u) & 1:
                continue
            add = size - (adj[u] & mask).bit_count()
            if missing + add <= k:
                extendable = True
                if u >= start:
                    members.append(u)
                    rec(members, mask | (1 << u), missing + add, u + 1)
                    members.pop()
        if not extendable and size >= q:
            out.append(tuple(members))

    rec([], 0, 0, 0)
    return sorted(out)


def brute_maximum(g: Graph, k: int) -> int:
    """Size of a largest k-defective clique, by exhaustive extension."""
    n = g.n
    if n > SIZE_GUARD:
        raise OracleSizeError(f"n={n} exceeds the oracle guard ({SIZE_GUARD})")
    adj = _masks(g)
    best = 0

    def rec(size: int, mask: int, missing: int, start: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for u in range(start, n):
            add = size - (adj[u] & mask).bit_count()
            if missing + add <= k:
                rec(size + 1, mask | (1 << u), missing + add, u + 1)

    rec(0, 0, 0, 0)
    return best


def bk_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Pivoted Bron-Kerbosch maximal clique listing, canonically sorted."""
    sets = [g.neighbor_set(u) for u in range(g.n)]
    out: list[tuple[int, ...]] = []

    def bk(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(p & sets[u]), -u))
        for v in sorted(p - sets[pivot]):
            bk(r | {v}, p & sets[v], x & sets[v])
            p.discard(v)
            x.add(v)

    bk(set(), set(range(g.n)), set())
    return sorted(out)
