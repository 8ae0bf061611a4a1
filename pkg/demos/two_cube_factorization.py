"""
The 2-cube, factor by factor
============================

A 1-factorization splits a regular digraph into permutations.  Listing
the line digraph's vertices as (factor, head) pairs puts its adjacency
matrix into a block form whose rows all repeat ``[M(F1) M(F2)]``.
"""

import numpy as np

from linedigraph.digraph import adjacency
from linedigraph.factorization import (
    block_line_matrix,
    growth_block_matrix,
    one_factorization,
    permutation_to_line_labels,
    conjugate,
)
from linedigraph.families import TWO_CUBE_F1, two_cube
from linedigraph.line import line_digraph

D = two_cube()
fac = one_factorization(D, seed_factors=[TWO_CUBE_F1])
for j, f in enumerate(fac.factors, 1):
    print(f"F{j}\n{f.matrix()}")

# %%
# The growth of the first factor fills the first block row of the grid.
print(growth_block_matrix(fac, 0))

# %%
# Relabelling the line digraph by (factor, head) gives the block matrix exactly.
B = block_line_matrix(fac)
M = conjugate(adjacency(line_digraph(D).graph), permutation_to_line_labels(fac))
print(B)
print("equal:", np.array_equal(B, M))
