"""Graded Betti tables of edge ideals via Hochster's formula, and checks of
subadditivity-type laws for their maximal shifts."""

from .graph import (
    FormatError,
    Graph,
    canonical_form,
    complement,
    complete_graph,
    count_induced_matchings,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    enumerate_matchings,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    read_graph6_lines,
    to_graph6,
)
from .hochster import BettiTable, ShiftVector, Witness, betti_table, max_shifts, strand, witnesses
from .homology import boundary_matrix, independent_sets_of_size, is_cone, rank_mod_p, reduced_betti_vector
from .laws import CheckReport, check_all, recheck

__version__ = "0.1.0"
