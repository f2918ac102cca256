"""Burst-cycle analysis on defining graphs of right-angled Coxeter groups.

A vertex-labeled simple graph presents a right-angled Coxeter group; the
combinatorics checked here concern its induced cycles.  An induced cycle
is burst when two of its non-adjacent vertices lie together in an
induced 4-cycle of the ambient graph.  The library decides whether every
induced cycle of length at least four is burst, builds the index-2
reflection-subgroup defining graph (double over a vertex star, delete
the vertex), and mines graph6 corpora for graphs where the condition
holds but fails in some star-double.
"""

from .graph import (
    Graph,
    GraphError,
    bits,
    default_labels,
    delete_vertex,
    graph_from_edges,
    induced_subgraph,
    link,
    star,
    validate,
)
from .formats import (
    FormatError,
    iter_graph6_records,
    parse_edge_list,
    parse_graph6,
    sniff_format,
    write_dot,
    write_edge_list,
    write_graph6,
)
from .generators import (
    are_isomorphic,
    canonical_form,
    gen_complete,
    gen_cycle,
    gen_hypercube,
    gen_path,
    gen_random,
    nonisomorphic_graphs,
)
from .cycles import (
    EnumerationStats,
    InducedCycle,
    brute_force_induced_cycles,
    canonical_cycle,
    enumerate_induced_cycles,
    validate_cycle,
)
from .burst import (
    BurstWitness,
    TranVerdict,
    check_tran_condition,
    find_nonburst_cycle,
    is_burst,
    is_square_diagonal,
    square_diagonal_pairs,
    square_diagonal_rows,
)
from .doubling import (
    DoubleResult,
    DoubleStep,
    ExplorationNode,
    copy_swap_permutation,
    double_over,
    iterate_doubles,
    star_double_minus,
)
from .search import (
    CounterexampleRecord,
    GraphSource,
    SearchCheckpoint,
    SearchError,
    SearchOptions,
    SearchStats,
    annotate_verdict,
    examine_graph,
    may_yield_nonburst_double,
    scan_stream,
)

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "bits", "default_labels", "delete_vertex",
    "graph_from_edges", "induced_subgraph", "link", "star", "validate",
    "FormatError", "iter_graph6_records", "parse_edge_list", "parse_graph6",
    "sniff_format", "write_dot", "write_edge_list", "write_graph6",
    "are_isomorphic", "canonical_form", "gen_complete", "gen_cycle",
    "gen_hypercube", "gen_path", "gen_random", "nonisomorphic_graphs",
    "EnumerationStats", "InducedCycle", "brute_force_induced_cycles",
    "canonical_cycle", "enumerate_induced_cycles", "validate_cycle",
    "BurstWitness", "TranVerdict", "check_tran_condition",
    "find_nonburst_cycle", "is_burst", "is_square_diagonal",
    "square_diagonal_pairs", "square_diagonal_rows",
    "DoubleResult", "DoubleStep", "ExplorationNode", "copy_swap_permutation",
    "double_over", "iterate_doubles", "star_double_minus",
    "CounterexampleRecord", "GraphSource", "SearchCheckpoint", "SearchError",
    "SearchOptions", "SearchStats", "annotate_verdict", "examine_graph",
    "may_yield_nonburst_double", "scan_stream",
]
