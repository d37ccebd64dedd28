"""Branch-and-bound search for maximal k-defective cliques.

A subproblem is the classic (S, C, X) triple: S is the partial solution and
is always a k-defective clique, C holds unexplored candidates, X holds
candidates already expanded elsewhere (kept only to detect non-maximality).
Every candidate u satisfies the contract that S plus u is still k-defective.

The search is clique-first: among the branch set it always expands vertices
adjacent to all of S before any vertex that would spend missing-edge budget.
Branch sets come from a pivot rule: pick p among the common neighbors of S in
C with the fewest non-neighbors there, and branch only on p and its
non-neighbors.  Dead subtrees are cut by a coloring upper bound.

State layout: all live candidates sit in one shared position-indexed array;
each search node owns a contiguous window of it.  Entering a branch compacts
the surviving candidates to the window front with swaps, leaving restores the
non-neighbor counters in place, and moving a vertex from C to X just toggles
a per-vertex flag that the owning node clears on exit.  No per-node copies of
C or X are ever made.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Coloring, Graph, missing_edges


@dataclass
class SearchStats:
    """Counters and phase timings for one run; merges by field-wise sum."""

    tree_nodes: int = 0
    solutions: int = 0
    ub_prunes: int = 0
    refine_fastpath: int = 0
    time_build_ms: int = 0
    time_reduce_ms: int = 0
    time_search_ms: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.tree_nodes += other.tree_nodes
        self.solutions += other.solutions
        self.ub_prunes += other.ub_prunes
        self.refine_fastpath += other.refine_fastpath
        self.time_build_ms += other.time_build_ms
        self.time_reduce_ms += other.time_reduce_ms
        self.time_search_ms += other.time_search_ms


@dataclass(frozen=True, slots=True)
class BoundBreakdown:
    """Upper bound |S| + c + r: c from common neighbors, r from the rest."""

    base: int
    clique_extension: int
    defective_extension: int
    total: int


class SolutionSink:
    """Collects emitted solutions in one of three modes.

    ``count-only`` keeps just the tally and largest size, ``collect`` stores
    label tuples, ``stream`` buffers rows for a writer and flushes them in
    canonical order on :meth:`close`.  Canonical order is: members ascending
    inside a row, rows compared as integer tuples.
    """

    MODES = ("count-only", "collect", "stream")

    def __init__(self, mode: str = "collect", labels: Sequence[int] | None = None, writer=None):
        if mode not in self.MODES:
            raise ValueError(f"unknown sink mode {mode!r}")
        if mode == "stream" and writer is None:
            raise ValueError("stream mode needs a writer")
        self.mode = mode
        self.labels = labels
        self.writer = writer
        self.count = 0
        self.max_size = 0
        self._rows: list[tuple[int, ...]] = []

    def deliver(self, members: Iterable[int]) -> None:
        if self.labels is None:
            row = tuple(sorted(members))
        else:
            row = tuple(sorted(self.labels[v] for v in members))
        self.count += 1
        if len(row) > self.max_size:
            self.max_size = len(row)
        if self.mode != "count-only":
            self._rows.append(row)

    def absorb(self, shard: "SolutionSink") -> None:
        self.count += shard.count
        if shard.max_size > self.max_size:
            self.max_size = shard.max_size
        self._rows.extend(shard._rows)

    def solutions(self) -> list[tuple[int, ...]]:
        return sorted(self._rows)

    def close(self) -> None:
        if self.mode == "stream":
            for row in self.solutions():
                self.writer.write(" ".join(str(x) for x in row) + "\n")


class BestSolution:
    """Largest solution seen so far, shared across concurrent subtasks.

    ``install`` only ever replaces the stored set with a strictly larger one,
    under a lock; readers of ``q`` may observe a stale smaller value, which
    merely weakens pruning.  ``history`` records installed sizes.
    """

    def __init__(self, labels: Iterable[int] = ()):
        self._lock = threading.Lock()
        self.members: tuple[int, ...] = tuple(sorted(labels))
        self.history: list[int] = []

    @property
    def q(self) -> int:
        return len(self.members) + 1

    def install(self, internal_members: Sequence[int], graph: Graph) -> None:
        labs = tuple(sorted(graph.labels[v] for v in internal_members))
        with self._lock:
            if len(labs) > len(self.members):
                self.members = labs
                self.history.append(len(labs))


class Instance:
    """Search state (S, C, X) with incremental missing-edge bookkeeping.

    ``cnt[u]`` is the number of non-neighbors of u inside S, maintained for
    every vertex in the candidate array.  All live candidates sit in one
    position-indexed array ``verts``; each search node owns a contiguous
    window of it, and entering a branch compacts the surviving candidates to
    the window front with swaps.  Whether a candidate belongs to X rather
    than C travels in the per-vertex ``in_x`` flag, because descendants
    permute positions freely inside their windows and a positional split
    would not survive the trip.
    """

    __slots__ = ("graph", "k", "S", "missing_in_S", "verts", "pos", "cnt",
                 "in_x", "lo", "hi")

    def __init__(self, graph: Graph, k: int, S: list[int], missing: int,
                 verts: list[int], cnt: list[int], in_x: list[bool]):
        self.graph = graph
        self.k = k
        self.S = S
        self.missing_in_S = missing
        self.verts = verts
        self.pos = [-1] * graph.n
        for i, v in enumerate(verts):
            self.pos[v] = i
        self.cnt = cnt
        self.in_x = in_x
        self.lo = 0
        self.hi = len(verts)

    @classmethod
    def root(cls, graph: Graph, k: int) -> "Instance":
        if k < 0:
            raise ValueError("k must be non-negative")
        verts = list(range(graph.n))
        return cls(graph, k, [], 0, verts, [0] * graph.n, [False] * graph.n)

    @classmethod
    def from_parts(cls, graph: Graph, k: int, S: Iterable[int], C: Iterable[int],
                   X: Iterable[int], validate: bool = True) -> "Instance":
        s_list = sorted(S)
        c_list = sorted(C)
        x_list = sorted(X)
        s_set, c_set, x_set = set(s_list), set(c_list), set(x_list)
        if validate:
            if s_set & c_set or s_set & x_set or c_set & x_set:
                raise ValueError("S, C, X must be pairwise disjoint")
        miss = missing_edges(graph, s_list)
        if validate and miss > k:
            raise ValueError(f"S has {miss} missing edges, above k={k}")
        cnt = [0] * graph.n
        for u in c_list + x_list:
            inside = sum(1 for w in graph.neighbors(u) if w in s_set)
            cnt[u] = len(s_list) - inside
            if validate and miss + cnt[u] > k:
                raise ValueError(f"vertex {u} is not a candidate: S plus it exceeds k")
        in_x = [False] * graph.n
        for u in x_list:
            in_x[u] = True
        return cls(graph, k, s_list, miss, x_list + c_list, cnt, in_x)

    @property
    def C(self) -> tuple[int, ...]:
        return tuple(sorted(u for u in self.verts[self.lo:self.hi] if not self.in_x[u]))

    @property
    def X(self) -> tuple[int, ...]:
        return tuple(sorted(u for u in self.verts[self.lo:self.hi] if self.in_x[u]))

    @property
    def kappa(self) -> int:
        return self.k - self.missing_in_S

    def _swap(self, i: int, j: int) -> None:
        if i != j:
            verts, pos = self.verts, self.pos
            a, b = verts[i], verts[j]
            verts[i], verts[j] = b, a
            pos[a], pos[b] = j, i

    def _push(self, b: int, lo: int, hi: int) -> tuple[int, int, bool]:
        """Enter the branch on b: keep the candidates still compatible with
        S plus b, compacted to [lo, new_hi).

        Returns the child window plus a flag for the fast path that skipped
        per-vertex work.  The caller must later invoke :meth:`_pop` with the
        same window.
        """
        cnt = self.cnt
        verts = self.verts
        k = self.k
        base = self.missing_in_S + cnt[b]
        w = None
        for i in range(lo, hi):
            u = verts[i]
            if u != b and (w is None or cnt[u] < w):
                w = cnt[u]
                if w == 0:
                    break
        self.S.append(b)
        self.missing_in_S = base
        # nobody can join S plus b once the cheapest candidate already busts k
        if w is None or w + base > k:
            return lo, lo, True
        row = self.graph.neighbor_set(b)
        nhi = lo
        for i in range(lo, hi):
            u = verts[i]
            if u != b and base + cnt[u] + (0 if u in row else 1) <= k:
                self._swap(i, nhi)
                nhi += 1
        for i in range(lo, nhi):
            if verts[i] not in row:
                cnt[verts[i]] += 1
        return lo, nhi, False

    def _pop(self, b: int, lo: int, hi: int) -> None:
        """Leave the branch on b, undoing counter updates over the child window."""
        cnt = self.cnt
        verts = self.verts
        row = self.graph.neighbor_set(b)
        for i in range(lo, hi):
            if verts[i] not in row:
                cnt[verts[i]] -= 1
        self.S.pop()
        # cnt[b] was frozen while b sat outside the child window
        self.missing_in_S -= cnt[b]


def partition_by_defect(inst: Instance) -> list[tuple[int, ...]]:
    """Nested sets C_0 .. C_kappa: C_i holds candidates costing at most i
    missing edges.  C_0 is the set of common neighbors of S in C."""
    cnt = inst.cnt
    cands = inst.C
    return [tuple(u for u in cands if cnt[u] <= i) for i in range(inst.kappa + 1)]


def _bound_buckets(inst: Instance, color: Sequence[int]) -> tuple[list[int], list[int], int]:
    """Bucket incremental costs for the coloring bound.

    Members of one color class of the common neighbors are pairwise
    non-adjacent, so taking its j-th member costs at least j-1 missing edges;
    a candidate outside the common neighborhood costs its non-neighbor count.
    Costs above the remaining budget can never be taken and are dropped.
    """
    kappa = inst.kappa
    bc = [0] * (kappa + 1)
    br = [0] * (kappa + 1)
    seen: dict[int, int] = {}
    cnt = inst.cnt
    for u in inst.C:
        c = cnt[u]
        if c == 0:
            col = color[u]
            t = seen.get(col, 0)
            if t <= kappa:
                bc[t] += 1
            seen[col] = t + 1
        elif c <= kappa:
            br[c] += 1
    return bc, br, kappa


def ub1(inst: Instance, chi: Coloring) -> BoundBreakdown:
    """Sound size bound for any k-defective clique between S and S plus C.

    Greedily takes the cheapest cost increments while their sum stays within
    the remaining budget; clique-side items are preferred at equal cost.
    """
    bc, br, kappa = _bound_buckets(inst, chi.color)
    c_take = bc[0]
    r_take = 0
    budget = kappa
    for cost in range(1, kappa + 1):
        if budget < cost:
            break
        take = min(bc[cost], budget // cost)
        c_take += take
        budget -= take * cost
        if budget >= cost:
            take = min(br[cost], budget // cost)
            r_take += take
            budget -= take * cost
    base = len(inst.S)
    return BoundBreakdown(base, c_take, r_take, base + c_take + r_take)


def select_pivot(inst: Instance) -> tuple[int | None, tuple[int, ...]]:
    """Pivot vertex and branch set for the instance's current (S, C).

    With no common neighbor of S in C there is no pivot and the branch set is
    all of C.  Otherwise the pivot minimizes its closed non-neighborhood
    within the common neighbors, ties going to the largest id, and the branch
    set is the pivot plus its non-neighbors in C.
    """
    g = inst.graph
    cnt = inst.cnt
    cands = inst.C
    ncs = [u for u in cands if cnt[u] == 0]
    if not ncs:
        return None, cands
    nset = set(ncs)
    best_u = -1
    best_nonadj: int | None = None
    for u in ncs:
        row = g.neighbor_set(u)
        if len(row) <= len(ncs):
            inter = sum(1 for v in row if v in nset)
        else:
            inter = sum(1 for v in ncs if v in row)
        nonadj = len(ncs) - inter
        if best_nonadj is None or nonadj < best_nonadj or (nonadj == best_nonadj and u > best_u):
            best_u, best_nonadj = u, nonadj
    prow = g.neighbor_set(best_u)
    branch = tuple(u for u in cands if u == best_u or u not in prow)
    return best_u, branch


def refine(inst: Instance, b: int, stats: SearchStats | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Candidate sets after adding b to S, without touching the instance.

    Before any per-vertex work the cheapest remaining candidate is checked;
    when even it cannot coexist with b the result is empty on both sides.
    """
    cnt = inst.cnt
    k = inst.k
    base = inst.missing_in_S + cnt[b]
    others = [u for u in inst.verts[inst.lo:inst.hi] if u != b]
    if not others or min(cnt[u] for u in others) + base > k:
        if stats is not None:
            stats.refine_fastpath += 1
        return (), ()
    row = inst.graph.neighbor_set(b)

    def keeps(u: int) -> bool:
        return base + cnt[u] + (0 if u in row else 1) <= k

    new_c = tuple(u for u in inst.C if u != b and keeps(u))
    new_x = tuple(u for u in inst.X if keeps(u))
    return new_c, new_x


def f_kappa(values: Sequence[int]) -> int:
    """1 + sum over i of the product values[i] * ... * values[-1].

    Exact integer arithmetic; Python integers cannot overflow.
    """
    total = 1
    suffix = 1
    for v in reversed(values):
        suffix *= v
        total += suffix
    return total


def within_node_bound(tree_nodes: int, c0_size: int, c_sizes: Sequence[int]) -> bool:
    """Exact check of tree_nodes <= 2 * 3**(c0/3) * f_kappa(c_sizes).

    Both sides are cubed so the comparison stays in integers even when c0 is
    not a multiple of three.
    """
    f = f_kappa(c_sizes)
    return tree_nodes**3 <= 8 * 3**c0_size * f**3


class _Engine:
    """Drives the recursion for one subproblem; not shared across threads."""

    __slots__ = ("inst", "color", "sink", "stats", "pivot", "q", "best", "frozen_q", "debug")

    def __init__(self, inst: Instance, chi: Coloring, sink: SolutionSink | None,
                 stats: SearchStats, *, q: int = 1, pivot: bool = True,
                 best: BestSolution | None = None, frozen_q: int | None = None,
                 debug: bool = False):
        self.inst = inst
        self.color = chi.color
        self.sink = sink
        self.stats = stats
        self.pivot = pivot
        self.q = q
        self.best = best
        self.frozen_q = frozen_q
        self.debug = debug

    def run(self) -> None:
        inst = self.inst
        snapshot = list(inst.verts)
        try:
            self._node(inst.lo, inst.hi)
        finally:
            # restore the original window order; flags, counters, and S are
            # already undone symmetrically
            inst.verts[:] = snapshot
            for i, v in enumerate(snapshot):
                inst.pos[v] = i

    def _threshold(self) -> int:
        if self.best is None:
            return self.q
        if self.frozen_q is not None:
            return self.frozen_q
        return self.best.q

    def _node(self, lo: int, hi: int) -> None:
        stats = self.stats
        stats.tree_nodes += 1
        inst = self.inst
        S = inst.S
        if self.best is not None:
            if len(S) >= self.best.q:
                self.best.install(S, inst.graph)
        elif lo == hi and len(S) >= self.q:
            stats.solutions += 1
            self.sink.deliver(S)
        if lo == hi:
            return
        branch = self._branch_list(lo, hi)
        cnt = inst.cnt
        in_x = inst.in_x
        flagged: list[int] = []
        try:
            while branch:
                if self._ub_total(lo, hi) < self._threshold():
                    stats.ub_prunes += 1
                    return
                b = branch.pop()
                if self.debug and cnt[b] > 0:
                    assert all(cnt[u] > 0 for u in branch), (
                        "missing-edge branch taken while a clique branch remained")
                clo, chi_, fast = inst._push(b, lo, hi)
                if fast:
                    stats.refine_fastpath += 1
                self._node(clo, chi_)
                inst._pop(b, clo, chi_)
                in_x[b] = True
                flagged.append(b)
        finally:
            for b in flagged:
                in_x[b] = False

    def _branch_list(self, lo: int, hi: int) -> list[int]:
        inst = self.inst
        cnt = inst.cnt
        verts = inst.verts
        in_x = inst.in_x
        cands = [u for u in verts[lo:hi] if not in_x[u]]
        if self.pivot and cands:
            ncs = [u for u in cands if cnt[u] == 0]
            if ncs:
                g = inst.graph
                nset = set(ncs)
                best_u = -1
                best_nonadj = None
                for u in ncs:
                    row = g.neighbor_set(u)
                    if len(row) <= len(ncs):
                        inter = sum(1 for v in row if v in nset)
                    else:
                        inter = sum(1 for v in ncs if v in row)
                    nonadj = len(ncs) - inter
                    if best_nonadj is None or nonadj < best_nonadj or (
                            nonadj == best_nonadj and u > best_u):
                        best_u, best_nonadj = u, nonadj
                prow = g.neighbor_set(best_u)
                cands = [u for u in cands if u == best_u or u not in prow]
        # pop() order: clique-preserving vertices first, smallest id within a tier
        cands.sort(key=lambda u: (cnt[u] == 0, -u))
        return cands

    def _ub_total(self, lo: int, hi: int) -> int:
        inst = self.inst
        cnt = inst.cnt
        verts = inst.verts
        in_x = inst.in_x
        color = self.color
        kappa = inst.k - inst.missing_in_S
        bc = [0] * (kappa + 1)
        br = [0] * (kappa + 1)
        seen: dict[int, int] = {}
        for i in range(lo, hi):
            u = verts[i]
            if in_x[u]:
                continue
            c = cnt[u]
            if c == 0:
                col = color[u]
                t = seen.get(col, 0)
                if t <= kappa:
                    bc[t] += 1
                seen[col] = t + 1
            elif c <= kappa:
                br[c] += 1
        total = len(inst.S) + bc[0]
        budget = kappa
        for cost in range(1, kappa + 1):
            if budget < cost:
                break
            take = min(bc[cost], budget // cost)
            total += take
            budget -= take * cost
            if budget >= cost:
                take = min(br[cost], budget // cost)
                total += take
                budget -= take * cost
        return total


def bnb(inst: Instance, q: int, chi: Coloring, sink: SolutionSink, stats: SearchStats,
        *, pivot: bool = True, debug_checks: bool = False) -> None:
    """Emit every maximal k-defective clique D with S <= D <= S plus C and
    |D| >= q, each exactly once.  The instance is restored afterwards."""
    if q < 1:
        raise ValueError("q must be at least 1")
    _Engine(inst, chi, sink, stats, q=q, pivot=pivot, debug=debug_checks).run()


def bnb_maximum(inst: Instance, best: BestSolution, chi: Coloring, stats: SearchStats,
                *, pivot: bool = True, frozen_q: int | None = None,
                debug_checks: bool = False) -> None:
    """Grow ``best`` to a largest k-defective clique reachable from the
    instance.  Pruning reads the live threshold |best| + 1 unless
    ``frozen_q`` pins it."""
    _Engine(inst, chi, None, stats, pivot=pivot, best=best, frozen_q=frozen_q,
            debug=debug_checks).run()
