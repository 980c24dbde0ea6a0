"""Toolkit for 2-community structures in small graphs: exact checking,
exhaustive search, a counterexample family, and graph6 census pipelines."""

from .graph import (Graph, GraphError, Graph6ParseError, UnsupportedGraphError,
                    are_isomorphic, bits, degree_in, emit_graph6,
                    from_edge_list, from_edge_list_text, is_clique,
                    is_connected, mask_of, parse_graph6, to_edge_list_text)
from .check import (Mode, Partition, PartitionError, Verdict, Witness,
                    bipartition, check_partition, format_partition,
                    parse_partition, unsatisfied_set, vertex_satisfied)
from .solver import (Outcome, SolveOptions, SolveResult, enumerate_2cs,
                     find_2cs, greedy_cut_heuristic, tree_connected_2cs)
from .family import (FamilyMember, FamilyParams, FamilyParamsError,
                     build_member, enumerate_members, validate_member,
                     verify_family_no_2cs)
from .census import (CensusRecord, classify_graph, generate_small_graphs,
                     generator_source, graph6_source, run_census)

__version__ = "0.1.0"
