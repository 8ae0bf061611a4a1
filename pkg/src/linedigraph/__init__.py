"""
Line digraphs, their recognition and the coined quantum walks whose
transition matrices they underlie.

The submodules are importable on their own; the names below are the
ones most scripts need.
"""

from .cayley import CayleyDigraph, Perm, cayley_cyclic, cayley_dihedral, verify_cycle_example
from .checks import verify_digraph
from .digraph import (
    Digraph,
    MultiDigraph,
    adjacency,
    connected_components,
    euler_circuit,
    from_adjacency,
    is_acyclic,
    is_eulerian,
    is_regular,
    is_strongly_connected,
    longest_dipath_length,
    read_edge_list,
    regularity,
    reverse,
    write_edge_list,
)
from .errors import DigraphError
from .factorization import (
    Factorization,
    OneFactor,
    block_line_matrix,
    growth,
    one_factorization,
    permutation_to_line_labels,
)
from .isomorphism import isomorphic
from .line import (
    ArcLabeledDigraph,
    InSplitPartition,
    debruijn,
    euler_to_hamilton,
    in_split,
    is_hamilton_dicycle,
    is_line_digraph_forbidden,
    is_line_digraph_matrix,
    iterated_line_digraph,
    line_digraph,
    recover_partitions,
    root_digraph,
)
from .report import Report
from .spectral import char_poly, penrose_witness_regular, permanent, verify_line_charpoly
from .walk import (
    WalkOperator,
    WalkState,
    basis_state,
    build_walk,
    coin_by_name,
    distribution,
    evolve,
    verify_underlying_line_digraph,
)

__version__ = "0.1.0"
