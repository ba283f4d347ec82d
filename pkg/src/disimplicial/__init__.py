"""Disimplicial arcs, zero fill-in elimination schemes and diclique classes."""
from .arcs import (TransitiveReport, all_disimplicial_arcs, is_disimplicial,
                   is_transitive_digraph, is_transitive_via_disimplicial,
                   transitive_vertices)
from .classes import (BoundSets, ClassReport, bounds, classify,
                      dedekind_via_split_check, is_dedekind, is_di,
                      is_order_graph, is_wdi)
from .digraph import (Digraph, GraphStats, Matching, TwinPartition, build_digraph,
                      is_st_graph, reflexive_closure, stats, thin_arcs,
                      twin_partition)
from .elimination import (EliminationScheme, is_perfect_elimination_st,
                          matched_elimination, maximal_elimination,
                          transitive_v_elimination, verify_scheme)
from .hdigraph import HDigraph
from .transforms import (TransformMap, join, join_split_roundtrip_check,
                         join_thin, repr_reduction, split,
                         split_join_roundtrip_check)

__version__ = "0.1.0"
