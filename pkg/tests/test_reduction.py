from itertools import combinations

import pytest

from wodc import (
    Graph,
    brute_maximal,
    colorful_core_reduce,
    colorful_degree,
    degeneracy_ordering,
    gnp,
    greedy_coloring,
    initial_solution,
    missing_edges,
    reduce_pipeline,
    run_enumeration,
    s_core,
    truss_reduce,
)
from wodc.graph import colorful_degeneracy_ordering
from .helpers import oracle_labeled


def chi_of(g):
    return greedy_coloring(g, degeneracy_ordering(g))


def labels_of(g, members):
    return sorted(g.labels[v] for v in members)


# ---------------------------------------------------------------- initial

def test_initial_solution_demo9(demo9):
    chi = chi_of(demo9)
    assert labels_of(demo9, initial_solution(demo9, chi, 1)) == [1, 2, 3, 4, 5]
    assert labels_of(demo9, initial_solution(demo9, chi, 0)) == [1, 2, 3]


def test_initial_solution_complete():
    g = Graph.from_edges(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    assert initial_solution(g, chi_of(g), 0) == set(range(5))


def test_initial_solution_is_longest_suffix():
    for seed in range(20):
        g = gnp(10, 0.4, seed=1000 + seed)
        chi = chi_of(g)
        for k in (0, 1, 2):
            got = initial_solution(g, chi, k)
            assert missing_edges(g, got) <= k
            order = colorful_degeneracy_ordering(g, chi)
            assert got == set(order[g.n - len(got):])
            if len(got) < g.n:
                one_more = set(order[g.n - len(got) - 1:])
                assert missing_edges(g, one_more) > k


# ---------------------------------------------------------------- core

def test_colorful_core_reduce_demo9(demo9):
    chi = chi_of(demo9)
    assert labels_of(demo9, colorful_core_reduce(demo9, chi, 1, 5)) == [1, 2, 3, 4, 5]
    assert colorful_core_reduce(demo9, chi, 1, 6) == set()
    assert colorful_core_reduce(demo9, chi, 3, 4) == set(range(9))


def test_colorful_core_dominates_plain_core():
    for seed in range(15):
        g = gnp(10, 0.5, seed=1100 + seed)
        chi = chi_of(g)
        for k, q in ((0, 3), (1, 4), (2, 5)):
            assert colorful_core_reduce(g, chi, k, q) <= s_core(g, q - k - 1)


def test_colorful_degree_inside_solutions():
    for seed in range(10):
        g = gnp(10, 0.6, seed=1200 + seed)
        chi = chi_of(g)
        for k in (0, 1, 2):
            for q in (k + 2, k + 3):
                for row in brute_maximal(g, k, q):
                    members = set(row)
                    for u in row:
                        assert colorful_degree(g, chi, u, members) >= q - k - 1


# ---------------------------------------------------------------- truss

def test_truss_k5_untouched():
    g = Graph.from_edges(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    assert truss_reduce(g, 0, 5) == set()


def test_truss_path_removed():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert truss_reduce(g, 0, 4) == {(0, 1), (1, 2), (2, 3), (3, 4)}


def test_truss_requires_q(demo8):
    with pytest.raises(ValueError):
        truss_reduce(demo8, 2, 3)


def test_truss_preserves_solutions_demo8(demo8):
    deleted = truss_reduce(demo8, 1, 5)
    for row in brute_maximal(demo8, 1, 5):
        for a, b in combinations(row, 2):
            if demo8.adjacent(a, b):
                assert (min(a, b), max(a, b)) not in deleted


# ---------------------------------------------------------------- pipeline

def test_pipeline_demo9_empties(demo9):
    reduced, report = reduce_pipeline(demo9, 1, 6)
    assert reduced.n == 0 and reduced.m == 0
    assert report.n_before == 9 and report.m_before == 21
    assert report.n_after == 0


def test_pipeline_vacuous_q(demo8):
    reduced, report = reduce_pipeline(demo8, 1, 1)
    assert reduced == demo8
    assert report.n_after == 8 and report.m_after == 15


def test_pipeline_demo8_keeps_solutions(demo8):
    reduced, _ = reduce_pipeline(demo8, 1, 4)
    kept = set(reduced.labels)
    for row in brute_maximal(demo8, 1, 4):
        labs = {demo8.labels[v] for v in row}
        assert labs <= kept
    label_to_id = {lab: i for i, lab in enumerate(reduced.labels)}
    for row in brute_maximal(demo8, 1, 4):
        labs = [demo8.labels[v] for v in row]
        for a, b in combinations(labs, 2):
            ia, ib = label_to_id[a], label_to_id[b]
            orig = demo8.adjacent(a - 1, b - 1)
            assert reduced.adjacent(ia, ib) == orig


def test_pipeline_preserves_enumeration_on_randoms():
    for seed in range(12):
        g = gnp(11, 0.5, seed=1300 + seed)
        for k in (0, 1, 2):
            q = k + 2
            expected = oracle_labeled(g, brute_maximal(g, k, q))
            res = run_enumeration(g, k, q, use_reduction=True, use_decomposition=False)
            assert res.solutions == expected, (seed, k)


def test_debug_mode_rechecks_maximality_against_original():
    # full pipeline with verification enabled: reduce, decompose, recheck
    for seed in range(6):
        g = gnp(10, 0.5, seed=1350 + seed)
        res = run_enumeration(g, 1, 3, debug_checks=True)
        assert res.count == len(res.solutions)


def test_report_monotone(demo9):
    _, report = reduce_pipeline(demo9, 1, 5)
    assert report.n_after <= report.n_before
    assert report.m_after <= report.m_before
    assert report.rounds >= 1
