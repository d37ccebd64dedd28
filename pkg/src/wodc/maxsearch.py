"""Maximum k-defective clique search built on the enumeration engine.

The framework computes a starting solution, shrinks the graph for the
threshold that solution implies, and only then searches; whenever a larger
solution turns up the threshold rises, which tightens all later pruning.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb

from .bnb import BestSolution, Instance, SearchStats, bnb_maximum
from .decompose import maximum_decomposed
from .graph import Graph, degeneracy_ordering, greedy_coloring, missing_edges
from .reduction import ReductionReport, initial_solution, reduce_pipeline


@dataclass(frozen=True, slots=True)
class Solution:
    """A k-defective clique in original labels plus its missing-pair count."""

    members: tuple[int, ...]
    missing: int

    @property
    def size(self) -> int:
        return len(self.members)


def _certify(g: Graph, labels: tuple[int, ...]) -> Solution:
    index = {lab: i for i, lab in enumerate(g.labels)}
    ids = [index[lab] for lab in labels]
    return Solution(tuple(sorted(labels)), missing_edges(g, ids))


def find_maximum(g: Graph, k: int, *, pivot: bool = True, threads: int = 1,
                 dynamic_threshold: bool = True,
                 best_out: BestSolution | None = None) -> tuple[Solution, SearchStats, ReductionReport]:
    """Return a maximum k-defective clique of g, with stats and the
    reduction report.

    ``dynamic_threshold=False`` pins pruning at the starting threshold while
    still tracking the best solution; results agree in size and the switch
    exists for verification.  ``best_out`` lets callers observe installs.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = SearchStats()
    empty_report = ReductionReport(g.n, g.m, g.n, g.m, 0, 0)
    if g.n == 0:
        return Solution((), 0), stats, empty_report
    if comb(g.n, 2) - g.m <= k:
        return Solution(tuple(sorted(g.labels)), comb(g.n, 2) - g.m), stats, empty_report

    t0 = time.perf_counter()
    chi = greedy_coloring(g, degeneracy_ordering(g))
    start = initial_solution(g, chi, k)
    best = best_out if best_out is not None else BestSolution()
    best.install(sorted(start), g)
    q0 = best.q
    stats.time_build_ms = int((time.perf_counter() - t0) * 1000)

    reduced, report = reduce_pipeline(g, k, q0, chi)
    stats.time_reduce_ms = report.elapsed_ms

    t1 = time.perf_counter()
    if reduced.n > 0:
        chi_r = greedy_coloring(reduced, degeneracy_ordering(reduced))
        frozen = None if dynamic_threshold else q0
        if q0 >= k + 2:
            maximum_decomposed(reduced, k, best, chi_r, stats, pivot=pivot,
                               threads=threads, frozen_q=frozen)
        else:
            bnb_maximum(Instance.root(reduced, k), best, chi_r, stats,
                        pivot=pivot, frozen_q=frozen)
    stats.time_search_ms = int((time.perf_counter() - t1) * 1000)
    return _certify(g, best.members), stats, report
