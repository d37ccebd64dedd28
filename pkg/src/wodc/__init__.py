"""Exact enumeration and maximum search for k-defective cliques."""

from .bnb import (
    BestSolution,
    BoundBreakdown,
    Instance,
    SearchStats,
    SolutionSink,
    bnb,
    bnb_maximum,
    f_kappa,
    partition_by_defect,
    refine,
    select_pivot,
    ub1,
    within_node_bound,
)
from .decompose import Subtask, build_subtask, enumerate_decomposed, maximum_decomposed
from .driver import EnumerationResult, run_enumeration
from .generators import example_graph, gnp, moon_moser
from .graph import (
    Coloring,
    DegeneracyOrdering,
    FormatError,
    Graph,
    colorful_degree,
    colorful_degeneracy_ordering,
    colorful_s_core,
    degeneracy_ordering,
    dump_edge_list,
    greedy_coloring,
    is_valid_colorful_ordering,
    load_edge_list,
    missing_edges,
    read_graph,
    s_core,
    write_graph,
)
from .maxsearch import Solution, find_maximum
from .oracle import OracleSizeError, bk_maximal_cliques, brute_maximal, brute_maximum
from .reduction import (
    ReductionReport,
    colorful_core_reduce,
    initial_solution,
    reduce_pipeline,
    truss_reduce,
)

__all__ = [
    "BestSolution",
    "BoundBreakdown",
    "Coloring",
    "DegeneracyOrdering",
    "EnumerationResult",
    "FormatError",
    "Graph",
    "Instance",
    "OracleSizeError",
    "ReductionReport",
    "SearchStats",
    "Solution",
    "SolutionSink",
    "Subtask",
    "bk_maximal_cliques",
    "bnb",
    "bnb_maximum",
    "brute_maximal",
    "brute_maximum",
    "build_subtask",
    "colorful_core_reduce",
    "colorful_degree",
    "colorful_degeneracy_ordering",
    "colorful_s_core",
    "degeneracy_ordering",
    "dump_edge_list",
    "enumerate_decomposed",
    "example_graph",
    "f_kappa",
    "find_maximum",
    "gnp",
    "greedy_coloring",
    "initial_solution",
    "is_valid_colorful_ordering",
    "load_edge_list",
    "maximum_decomposed",
    "missing_edges",
    "moon_moser",
    "partition_by_defect",
    "read_graph",
    "reduce_pipeline",
    "refine",
    "run_enumeration",
    "s_core",
    "select_pivot",
    "truss_reduce",
    "ub1",
    "within_node_bound",
    "write_graph",
]

__version__ = "0.1.0"
