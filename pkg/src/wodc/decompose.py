"""Per-vertex decomposition of the enumeration into independent subtasks.

Any k-defective clique of size at least k + 2 has diameter at most two, so a
solution whose earliest vertex (in a degeneracy ordering) is v lives entirely
inside v's two-hop neighborhood reached through later neighbors.  One subtask
per vertex therefore covers the whole output, each solution exactly once,
and the subtasks are free to run concurrently.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .bnb import BestSolution, Instance, SearchStats, SolutionSink, bnb, bnb_maximum
from .graph import Coloring, DegeneracyOrdering, Graph, degeneracy_ordering


@dataclass(frozen=True, slots=True)
class Subtask:
    """Anchor vertex plus its candidate universe split by ordering rank."""

    anchor: int
    universe: tuple[int, ...]
    later: tuple[int, ...]
    earlier: tuple[int, ...]


def build_subtask(g: Graph, ordering: DegeneracyOrdering, i: int) -> Subtask:
    """Subtask for the vertex at position ``i`` (0-based) of the ordering.

    The universe is the union of the anchor's neighborhood with the
    neighborhoods of its forward neighbors, minus the anchor itself; it is
    split into vertices later and earlier than the anchor.
    """
    anchor = ordering.order[i]
    rank = ordering.rank
    ra = rank[anchor]
    scratch: set[int] = set(g.neighbors(anchor))
    for v in g.neighbors(anchor):
        if rank[v] > ra:
            scratch.update(g.neighbors(v))
    scratch.discard(anchor)
    universe = tuple(sorted(scratch))
    later = tuple(u for u in universe if rank[u] > ra)
    earlier = tuple(u for u in universe if rank[u] < ra)
    return Subtask(anchor, universe, later, earlier)


def subtask_instance(g: Graph, k: int, sub: Subtask) -> Instance:
    """Root instance ({anchor}, C, X) for a subtask.

    For k = 0 the non-neighbors in the two-hop universe are not candidates
    (pairing them with the anchor already misses an edge) and are dropped.
    """
    if k == 0:
        row = g.neighbor_set(sub.anchor)
        later = [u for u in sub.later if u in row]
        earlier = [u for u in sub.earlier if u in row]
    else:
        later, earlier = list(sub.later), list(sub.earlier)
    return Instance.from_parts(g, k, [sub.anchor], later, earlier, validate=False)


def enumerate_decomposed(g: Graph, k: int, q: int, chi: Coloring, sink: SolutionSink,
                         stats: SearchStats, *, pivot: bool = True, threads: int = 1,
                         debug_checks: bool = False) -> None:
    """Run one bnb per anchor vertex and merge the shards in anchor order.

    Requires q >= k + 2; below that the diameter-two argument does not hold
    and the monolithic search must be used instead.
    """
    if q < k + 2:
        raise ValueError(f"decomposed enumeration needs q >= k + 2 (k={k}, q={q})")
    ordering = degeneracy_ordering(g)

    def run_one(i: int) -> tuple[SolutionSink, SearchStats]:
        sub = build_subtask(g, ordering, i)
        inst = subtask_instance(g, k, sub)
        shard_sink = SolutionSink(mode=sink.mode if sink.mode != "stream" else "collect",
                                  labels=sink.labels)
        shard_stats = SearchStats()
        bnb(inst, q, chi, shard_sink, shard_stats, pivot=pivot, debug_checks=debug_checks)
        return shard_sink, shard_stats

    if threads <= 1:
        results = [run_one(i) for i in range(g.n)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(run_one, i) for i in range(g.n)]
            results = [f.result() for f in futures]
    for shard_sink, shard_stats in results:
        sink.absorb(shard_sink)
        stats.merge(shard_stats)


def maximum_decomposed(g: Graph, k: int, best: BestSolution, chi: Coloring,
                       stats: SearchStats, *, pivot: bool = True, threads: int = 1,
                       frozen_q: int | None = None) -> None:
    """Decomposed driver for maximum search; subtasks share ``best``.

    The q >= k + 2 precondition is validated once here; the threshold only
    grows afterwards, so it stays valid for every subtask.
    """
    if best.q < k + 2:
        raise ValueError("decomposed maximum search needs the threshold at k + 2 or above")
    ordering = degeneracy_ordering(g)

    def run_one(i: int) -> SearchStats:
        sub = build_subtask(g, ordering, i)
        inst = subtask_instance(g, k, sub)
        shard_stats = SearchStats()
        bnb_maximum(inst, best, chi, shard_stats, pivot=pivot, frozen_q=frozen_q)
        return shard_stats

    if threads <= 1:
        shards = [run_one(i) for i in range(g.n)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(run_one, i) for i in range(g.n)]
            shards = [f.result() for f in futures]
    for shard in shards:
        stats.merge(shard)
