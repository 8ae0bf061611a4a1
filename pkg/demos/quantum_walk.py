"""
A coined quantum walk on the 2-cube
===================================

The walk space pairs a coin register (one basis state per 1-factor) with
the vertices.  A step mixes the coin and then moves each coin component
along its factor.  The nonzero pattern of the resulting unitary is the
reverse of the line digraph of the host.
"""

import numpy as np

from linedigraph.digraph import adjacency
from linedigraph.families import two_cube
from linedigraph.walk import (
    basis_state,
    build_walk,
    coin_hadamard,
    distribution,
    support_digraph,
    trajectory,
    verify_underlying_line_digraph,
)

W = build_walk(two_cube(), coin_hadamard(), coin_name="hadamard")
print(np.round(W.U.real, 3))

# %%
# Vertex probabilities from a walker that starts at vertex 0 in the first coin state.
for state in trajectory(W, basis_state(W, 0, 0), 6):
    print(state.time, np.round(distribution(W, state), 3))

# %%
# The support of U, and the full set of checks on it.
print(adjacency(support_digraph(W.U)))
print("\n".join(verify_underlying_line_digraph(two_cube(), coin_hadamard()).to_lines()))
