"""Immutable undirected graph plus the ordering, coloring, and core primitives.

Vertices are dense internal ids in [0, n).  Original input labels are kept on
``Graph.labels`` so callers can report results in their own vocabulary.
Adjacency is stored as sorted tuples; membership tests go through a lazily
built per-vertex set cache, so no quadratic memory is ever committed up
front.
"""

from __future__ import annotations

import heapq
import logging
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

log = logging.getLogger("wodc")

COMMENT_CHARS = "#%"


class FormatError(ValueError):
    """Input text does not match the declared edge-list format."""


class Graph:
    """Undirected simple graph with sorted neighbor lists.

    Instances are immutable after construction and safe to share across
    threads.  ``m`` counts undirected edges once; ``max_degree`` is the
    largest neighbor-list length.
    """

    __slots__ = ("n", "m", "adj", "labels", "max_degree", "_rows")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...], labels: tuple[int, ...]):
        self.n = n
        self.adj = adj
        self.labels = labels
        self.m = sum(len(a) for a in adj) // 2
        self.max_degree = max((len(a) for a in adj), default=0)
        self._rows: dict[int, frozenset[int]] = {}

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[int] | None = None,
    ) -> "Graph":
        """Build a graph from (u, v) pairs over internal ids.

        Duplicate edges collapse to one; self-loops are dropped silently
        (callers that care about counting them do so before calling).
        """
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                continue
            seen.add((u, v) if u < v else (v, u))
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            lists[u].append(v)
            lists[v].append(u)
        adj = tuple(tuple(sorted(a)) for a in lists)
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal n")
        return cls(n, adj, labels)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def neighbor_set(self, u: int) -> frozenset[int]:
        row = self._rows.get(u)
        if row is None:
            row = frozenset(self.adj[u])
            self._rows[u] = row
        return row

    def adjacent(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once, as (u, v) with u < v, ascending."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        """Equality of the labeled structure: same label set, same edges
        between labels.  Internal id assignment is an implementation detail
        and does not participate."""
        if not isinstance(other, Graph):
            return NotImplemented
        if self.n != other.n or sorted(self.labels) != sorted(other.labels):
            return False
        return self._label_edges() == other._label_edges()

    def _label_edges(self) -> set[tuple[int, int]]:
        out = set()
        for u, v in self.edges():
            a, b = self.labels[u], self.labels[v]
            out.add((a, b) if a < b else (b, a))
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _parse_lines(source) -> Iterator[tuple[int, int, int]]:
    """Yield (lineno, u, v) for every data line, skipping comments and blanks."""
    for lineno, raw in enumerate(source, 1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line or line[0] in COMMENT_CHARS:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two tokens, got {len(parts)}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex id")
        yield lineno, u, v


def load_edge_list(source, fmt: str = "edges") -> Graph:
    """Read a graph from an iterable of text or byte lines.

    ``edges`` format: every data line is one edge; vertices are remapped to
    [0, n) in order of first appearance and the original ids become labels.
    ``nm-header`` format: the first data line carries "n m"; the m body lines
    use 0-based or 1-based ids, auto-detected from the minimum token.

    Duplicate edges are deduplicated, self-loops dropped with a counted
    warning.  Malformed lines raise :class:`FormatError` with a line number.
    """
    if fmt not in ("edges", "nm-header"):
        raise ValueError(f"unknown format {fmt!r}")
    pairs = _parse_lines(source)
    self_loops = 0

    if fmt == "edges":
        remap: dict[int, int] = {}
        edges: list[tuple[int, int]] = []
        for _, a, b in pairs:
            if a == b:
                self_loops += 1
                continue
            for t in (a, b):
                if t not in remap:
                    remap[t] = len(remap)
            edges.append((remap[a], remap[b]))
        n = len(remap)
        labels = tuple(remap)  # insertion order == internal id order
        g = Graph.from_edges(n, edges, labels)
    else:
        header = next(pairs, None)
        if header is None:
            raise FormatError("nm-header input has no header line")
        _, n, m = header
        body = [(a, b) for _, a, b in pairs]
        if len(body) != m:
            raise FormatError(f"header declares m={m} but body has {len(body)} lines")
        tokens = [t for e in body for t in e]
        offset = 1 if tokens and min(tokens) >= 1 else 0
        edges = []
        for a, b in body:
            if a == b:
                self_loops += 1
                continue
            u, v = a - offset, b - offset
            if u >= n or v >= n:
                raise FormatError(f"vertex id {max(a, b)} inconsistent with n={n}")
            edges.append((u, v))
        labels = tuple(range(offset, n + offset))
        g = Graph.from_edges(n, edges, labels)

    if self_loops:
        log.warning("dropped %d self-loop(s) while loading", self_loops)
    return g


def dump_edge_list(g: Graph, stream) -> None:
    """Write the graph as '# n=<n> m=<m>' plus one 'u v' line per edge.

    Edges come out with u < v in internal-id order, printed as original
    labels.  Isolated vertices do not survive a reload of this format.
    """
    stream.write(f"# n={g.n} m={g.m}\n")
    for u, v in g.edges():
        stream.write(f"{g.labels[u]} {g.labels[v]}\n")


def read_graph(path, fmt: str = "edges") -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh, fmt)


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        dump_edge_list(g, fh)


@dataclass(frozen=True, slots=True)
class DegeneracyOrdering:
    """A peeling order: each vertex has minimum degree among the remaining ones.

    ``removal_degree[i]`` is the residual degree of ``order[i]`` at the moment
    it was peeled; the degeneracy is the maximum of those values.
    """

    order: tuple[int, ...]
    rank: tuple[int, ...]
    degeneracy: int
    removal_degree: tuple[int, ...]

    def forward_neighbors(self, g: Graph, u: int) -> list[int]:
        r = self.rank[u]
        return [v for v in g.neighbors(u) if self.rank[v] > r]


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Peel minimum-degree vertices; ties go to the smallest vertex id."""
    n = g.n
    deg = [g.degree(u) for u in range(n)]
    heap = [(deg[u], u) for u in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order: list[int] = []
    removal: list[int] = []
    degeneracy = 0
    while heap:
        d, u = heapq.heappop(heap)
        if removed[u] or d != deg[u]:
            continue
        removed[u] = True
        order.append(u)
        removal.append(d)
        if d > degeneracy:
            degeneracy = d
        for v in g.neighbors(u):
            if not removed[v]:
                deg[v] -= 1
                heapq.heappush(heap, (deg[v], v))
    rank = [0] * n
    for i, u in enumerate(order):
        rank[u] = i
    return DegeneracyOrdering(tuple(order), tuple(rank), degeneracy, tuple(removal))


@dataclass(frozen=True, slots=True)
class Coloring:
    """A proper vertex coloring; colors are positive integers."""

    color: tuple[int, ...]
    num_colors: int


def greedy_coloring(g: Graph, ordering: DegeneracyOrdering) -> Coloring:
    """Color vertices in reverse peeling order with the smallest free color.

    On a degeneracy ordering this uses at most degeneracy + 1 colors.
    """
    color = [0] * g.n
    num = 0
    for u in reversed(ordering.order):
        used = {color[v] for v in g.neighbors(u) if color[v]}
        c = 1
        while c in used:
            c += 1
        color[u] = c
        if c > num:
            num = c
    return Coloring(tuple(color), num)


def s_core(g: Graph, s: int) -> set[int]:
    """Largest vertex set in which every member keeps at least s neighbors."""
    if s <= 0:
        return set(range(g.n))
    deg = [g.degree(u) for u in range(g.n)]
    dead = [False] * g.n
    stack = [u for u in range(g.n) if deg[u] < s]
    for u in stack:
        dead[u] = True
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if not dead[v]:
                deg[v] -= 1
                if deg[v] < s:
                    dead[v] = True
                    stack.append(v)
    return {u for u in range(g.n) if not dead[u]}


def colorful_degree(g: Graph, chi: Coloring, u: int, within: set[int] | None = None) -> int:
    """Number of distinct colors among u's neighbors, optionally restricted."""
    if within is None:
        return len({chi.color[v] for v in g.neighbors(u)})
    return len({chi.color[v] for v in g.neighbors(u) if v in within})


def _colorful_counts(g: Graph, chi: Coloring, members: set[int]) -> list[dict[int, int]]:
    counts: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for u in members:
        cu = counts[u]
        for v in g.neighbors(u):
            if v in members:
                c = chi.color[v]
                cu[c] = cu.get(c, 0) + 1
    return counts


def colorful_s_core(g: Graph, chi: Coloring, s: int) -> set[int]:
    """Largest vertex set in which every member sees >= s colors inside it.

    Peeling keeps one color counter per (vertex, color) pair, so the working
    space is proportional to n times the number of colors.
    """
    if s <= 0:
        return set(range(g.n))
    members = set(range(g.n))
    counts = _colorful_counts(g, chi, members)
    stack = [u for u in members if len(counts[u]) < s]
    dead = set(stack)
    while stack:
        u = stack.pop()
        cu = chi.color[u]
        for v in g.neighbors(u):
            if v in members and v not in dead:
                cv = counts[v]
                cv[cu] -= 1
                if cv[cu] == 0:
                    del cv[cu]
                    if len(cv) < s:
                        dead.add(v)
                        stack.append(v)
    return members - dead


def colorful_degeneracy_ordering(g: Graph, chi: Coloring) -> tuple[int, ...]:
    """Repeatedly peel a vertex of minimum colorful degree.

    Ties go to the largest vertex id.  Validity of any candidate ordering can
    be checked with :func:`is_valid_colorful_ordering`.
    """
    members = set(range(g.n))
    counts = _colorful_counts(g, chi, members)
    heap = [(len(counts[u]), -u) for u in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    while heap:
        d, nu = heapq.heappop(heap)
        u = -nu
        if removed[u] or d != len(counts[u]):
            continue
        removed[u] = True
        order.append(u)
        cu = chi.color[u]
        for v in g.neighbors(u):
            if not removed[v]:
                cv = counts[v]
                cv[cu] -= 1
                if cv[cu] == 0:
                    del cv[cu]
                    heapq.heappush(heap, (len(cv), -v))
    return tuple(order)


def is_valid_colorful_ordering(g: Graph, chi: Coloring, order: Sequence[int]) -> bool:
    """Check that each vertex has minimum colorful degree among the remainder."""
    if sorted(order) != list(range(g.n)):
        return False
    members = set(range(g.n))
    counts = _colorful_counts(g, chi, members)
    for u in order:
        du = len(counts[u])
        if any(len(counts[v]) < du for v in members):
            return False
        members.discard(u)
        cu = chi.color[u]
        for v in g.neighbors(u):
            if v in members:
                cv = counts[v]
                cv[cu] -= 1
                if cv[cu] == 0:
                    del cv[cu]
    return True


def missing_edges(g: Graph, members: Iterable[int]) -> int:
    """Number of non-adjacent pairs inside the given vertex set."""
    ms = set(members)
    inner = 0
    for u in ms:
        inner += sum(1 for v in g.neighbors(u) if v in ms)
    size = len(ms)
    return size * (size - 1) // 2 - inner // 2
