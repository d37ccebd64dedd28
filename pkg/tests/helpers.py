"""Shared utilities for the test suite."""

from itertools import combinations

from wodc import missing_edges, run_enumeration

ALL_CONFIGS = [
    {"pivot": pv, "use_reduction": rd, "use_decomposition": dc}
    for pv in (True, False)
    for rd in (True, False)
    for dc in (True, False)
]


def solve_all_configs(g, k, q):
    """Solution lists from all eight engine configurations, plus their stats."""
    out = []
    for cfg in ALL_CONFIGS:
        res = run_enumeration(g, k, q, **cfg)
        out.append((cfg, res))
    return out


def oracle_labeled(g, rows):
    """Convert oracle rows (internal ids) to sorted label tuples."""
    return sorted(tuple(sorted(g.labels[v] for v in row)) for row in rows)


def is_defective_clique(g, members, k):
    return missing_edges(g, members) <= k


def is_maximal(g, members, k):
    base = missing_edges(g, members)
    if base > k:
        return False
    ms = set(members)
    for u in range(g.n):
        if u in ms:
            continue
        extra = len(ms) - sum(1 for v in g.neighbors(u) if v in ms)
        if base + extra <= k:
            return False
    return True


def largest_extension(g, k, S, C):
    """Largest k-defective clique D with S <= D <= S + C, by brute force."""
    S = list(S)
    C = sorted(C)
    base = missing_edges(g, S)
    best = len(S)
    for r in range(len(C), 0, -1):
        if len(S) + r <= best:
            break
        for extra in combinations(C, r):
            if missing_edges(g, list(S) + list(extra)) <= k:
                best = max(best, len(S) + r)
                break
    return best
