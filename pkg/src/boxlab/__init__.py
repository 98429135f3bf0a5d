"""boxlab: exact boxicity, interval models, and chordal bipartite graphs."""

from .graphs import (Bipartition, Graph, GraphError, NotBipartiteError,
                     RootedTree, bfs_distances, bipartition, complete_graph,
                     farthest_from, from_edges, induced_subgraph, lca)
from .intervals import (BoxRep, IntervalRep, helly_region, intersect,
                        is_interval_graph, realize, realize_box,
                        verify_box_representation)
from .recognition import (CbgCertificate, CbgRefutation,
                          EliminationCertificate, incompatible_pair,
                          induced_cycle_exceeding, is_chordal,
                          is_chordal_bipartite, is_simple_vertex,
                          is_strongly_chordal, split_completion)
from .family import (FamilyGraph, bipartite_power, build_G, build_Gprime,
                     build_T, build_X, cobip_completion, g_value,
                     lift_box_representation)
from .solver import (EXCEEDED, FOUND, REFUTED, BoxicityCertificate,
                     BoxicityResult, BudgetExceeded, RefutationOutcome,
                     SandwichInstance, boxicity_upper_from_parts,
                     exact_boxicity, graph_hash, interval_sandwich,
                     refute_boxicity_at_most)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
