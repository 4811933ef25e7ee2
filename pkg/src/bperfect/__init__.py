"""Recognition, optimal coloring and maximum cliques for b-perfect graphs."""
from .bgreedy import EliminationTrace, b_greedy, eliminate_color, initial_coloring
from .boats import (BoatPartition, extend_to_special_boat, find_small_boat,
                    special_boat_max_clique)
from .chordality import (find_hole_or_antihole, find_two_pair, is_c5, is_weakly_chordal,
                         weakly_chordal_max_clique)
from .clique import CliqueResult, clique, clique_via_module_tree
from .errors import GraphError, MalformedInput, NotBPerfect, TooLarge
from .forbidden import (ForbiddenPattern, family, find_forbidden, find_induced,
                        is_b_perfect, small_boats)
from .generate import enumerate_graphs
from .graph import (Graph, are_isomorphic, complement, components, decode_graph6,
                    encode_graph6, induced_subgraph, parse_graph)
from .modules import (ModuleNode, find_comparable_nonadjacent,
                      find_proper_homogeneous_nonclique, modular_decomposition)
from .oracles import (Coloring, b_chromatic_number, b_vertices, chromatic_number,
                      clique_number, is_b_coloring, is_b_perfect_oracle,
                      is_minimally_b_imperfect, is_proper)

__version__ = "0.1.0"
