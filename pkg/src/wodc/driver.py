"""One-call enumeration pipeline shared by the CLI and the test suite."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .bnb import Instance, SearchStats, SolutionSink, bnb
from .decompose import enumerate_decomposed
from .graph import Graph, degeneracy_ordering, greedy_coloring, missing_edges
from .reduction import ReductionReport, reduce_pipeline


@dataclass(slots=True)
class EnumerationResult:
    count: int
    max_size: int
    solutions: list[tuple[int, ...]] | None
    stats: SearchStats
    report: ReductionReport | None


def run_enumeration(g: Graph, k: int, q: int, *, pivot: bool = True,
                    use_reduction: bool = True, use_decomposition: bool = True,
                    threads: int = 1, mode: str = "collect",
                    debug_checks: bool = False) -> EnumerationResult:
    """Enumerate maximal k-defective cliques of size >= q in original labels.

    Reduction and decomposition are independent switches; the decomposed
    driver requires q >= k + 2 and raises below that.  ``debug_checks``
    additionally verifies every emitted solution for maximality against the
    unreduced input graph.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if q < 1:
        raise ValueError("q must be at least 1")
    stats = SearchStats()
    report = None
    work = g
    if use_reduction:
        work, report = reduce_pipeline(g, k, q)
        stats.time_reduce_ms = report.elapsed_ms
    collect = mode != "count-only" or debug_checks
    sink = SolutionSink("collect" if collect else "count-only", labels=work.labels)
    t0 = time.perf_counter()
    if work.n > 0:
        chi = greedy_coloring(work, degeneracy_ordering(work))
        if use_decomposition:
            enumerate_decomposed(work, k, q, chi, sink, stats, pivot=pivot,
                                 threads=threads, debug_checks=debug_checks)
        else:
            bnb(Instance.root(work, k), q, chi, sink, stats, pivot=pivot,
                debug_checks=debug_checks)
    stats.time_search_ms = int((time.perf_counter() - t0) * 1000)
    if debug_checks:
        _verify_against_original(g, k, sink.solutions())
    solutions = sink.solutions() if mode != "count-only" else None
    return EnumerationResult(sink.count, sink.max_size, solutions, stats, report)


def _verify_against_original(g: Graph, k: int, rows) -> None:
    """Assert each emitted label set is a maximal k-defective clique of g."""
    index = {lab: u for u, lab in enumerate(g.labels)}
    for row in rows:
        ids = {index[lab] for lab in row}
        base = missing_edges(g, ids)
        assert base <= k, row
        for u in range(g.n):
            if u in ids:
                continue
            extra = len(ids) - sum(1 for v in g.neighbors(u) if v in ids)
            assert base + extra > k, (row, g.labels[u])
