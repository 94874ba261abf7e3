"""Matching-cut solvers for graphs without long induced cycles.

Polynomial solvers for the matching cut, disconnected perfect matching,
and perfect matching cut problems on 4-chordal graphs, exhaustive
oracles for small instances, and a gadget builder that maps positive
1-in-3 CNF formulas to perfect-matching-cut instances.
"""

from .files import (
    ParseError,
    format_formula_dimacs,
    format_graph,
    format_twosat_dimacs,
    formula_from_dimacs,
    layout_sidecar,
    parse_dimacs,
    parse_graph,
    twosat_variable_map,
)
from .forcing import (
    ForcingState,
    Refutation,
    propagate,
    solve_dpm_4chordal,
    solve_mc_4chordal,
    split_free_vertices,
)
from .generators import random_connected_4chordal, sample_instances
from .graphs import (
    BfsLevels,
    Cut,
    Graph,
    GraphError,
    bfs_levels,
    build_graph,
    check_matching_cut,
    check_perfect_matching_cut,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    is_connected,
    is_disconnected_perfect_matching,
    is_matching,
    is_matching_cut,
    is_perfect_matching,
    is_perfect_matching_cut,
    make_cut,
    path_graph,
)
from .matching import has_perfect_matching, maximum_matching
from .oracle import (
    DEFAULT_LIMITS,
    ClassReport,
    OracleBudgetError,
    OracleError,
    OracleLimits,
    OracleSizeError,
    classify_graph,
    contains_induced,
    enumerate_matching_cuts,
    enumerate_one_in_three,
    has_dpm,
    has_mc,
    has_pmc,
    longest_induced_cycle,
    longest_induced_path,
    perfect_matchings,
)
from .pmc import (
    DeterminedSet,
    LeafClassification,
    PmcEncoding,
    TraceEntry,
    build_pmc_formula,
    classify_leaf,
    solve_pmc_4chordal,
)
from .reduction import (
    Formula13,
    GadgetLayout,
    ReductionReport,
    assignment_to_pmc,
    build_g_h_v,
    build_reduction,
    clause_gadget,
    cube_graph,
    cut_to_assignment,
    heggernes_telle_graph,
    is_one_in_three,
    petersen_graph,
    verify_reduction,
)
from .twosat import Clause, Lit, TwoSatInstance, neg, pos, solve_2sat, verify_assignment

__version__ = "0.1.0"

__all__ = [
    "BfsLevels",
    "Clause",
    "ClassReport",
    "Cut",
    "DEFAULT_LIMITS",
    "DeterminedSet",
    "ForcingState",
    "Formula13",
    "GadgetLayout",
    "Graph",
    "GraphError",
    "LeafClassification",
    "Lit",
    "OracleBudgetError",
    "OracleError",
    "OracleLimits",
    "OracleSizeError",
    "ParseError",
    "PmcEncoding",
    "ReductionReport",
    "Refutation",
    "TraceEntry",
    "TwoSatInstance",
    "assignment_to_pmc",
    "bfs_levels",
    "build_g_h_v",
    "build_graph",
    "build_pmc_formula",
    "build_reduction",
    "check_matching_cut",
    "check_perfect_matching_cut",
    "classify_graph",
    "classify_leaf",
    "clause_gadget",
    "complete_graph",
    "connected_components",
    "contains_induced",
    "cube_graph",
    "cut_to_assignment",
    "cycle_graph",
    "disjoint_union",
    "enumerate_matching_cuts",
    "enumerate_one_in_three",
    "format_formula_dimacs",
    "format_graph",
    "format_twosat_dimacs",
    "formula_from_dimacs",
    "has_dpm",
    "has_mc",
    "has_perfect_matching",
    "has_pmc",
    "heggernes_telle_graph",
    "induced_subgraph",
    "is_connected",
    "is_disconnected_perfect_matching",
    "is_matching",
    "is_matching_cut",
    "is_one_in_three",
    "is_perfect_matching",
    "is_perfect_matching_cut",
    "layout_sidecar",
    "longest_induced_cycle",
    "longest_induced_path",
    "make_cut",
    "maximum_matching",
    "neg",
    "parse_dimacs",
    "parse_graph",
    "path_graph",
    "perfect_matchings",
    "petersen_graph",
    "pos",
    "propagate",
    "random_connected_4chordal",
    "sample_instances",
    "solve_2sat",
    "solve_dpm_4chordal",
    "solve_mc_4chordal",
    "solve_pmc_4chordal",
    "split_free_vertices",
    "twosat_variable_map",
    "verify_assignment",
    "verify_reduction",
]
