"""
Recognizing line digraphs
=========================

A loopless digraph is a line digraph exactly when any two rows of its
adjacency matrix are equal or disjoint, and any two columns are as
well.  When the test succeeds the root digraph can be read back off the
rows.
"""

from linedigraph.digraph import Digraph
from linedigraph.families import D3, D3_PRIME, D4, two_cube
from linedigraph.isomorphism import isomorphic
from linedigraph.line import is_line_digraph_forbidden, is_line_digraph_matrix, line_digraph, root_digraph

# %%
G = line_digraph(two_cube()).graph
print("line digraph of the 2-cube:", is_line_digraph_matrix(G))
print("2-cube itself:", is_line_digraph_matrix(two_cube()))

# %%
# Reading back the root recovers the 2-cube up to relabelling.
H, arc_of = root_digraph(G)
print(H, isomorphic(H, two_cube()) is not None)

# %%
# The small configurations rejected by the criterion, and the one allowed exception.
for name, D in [("D3", D3), ("D4", D4), ("D3'", D3_PRIME)]:
    print(name, is_line_digraph_matrix(D))

# %%
# Forbidding induced copies of D3 and D4 (D3' excepted) is not the same
# test.  Two arcs out of 0 that both come back escape every forbidden
# pattern yet have no root, and adding one arc to D3' gives a line
# digraph that contains a forbidden pattern.
P = Digraph(3, [(0, 1), (0, 2), (1, 0), (2, 0)])
Q = Digraph(4, set(D3_PRIME.arcs) | {(2, 0)})
for name, D in [("P", P), ("Q", Q)]:
    print(name, "matrix:", is_line_digraph_matrix(D), "forbidden:", is_line_digraph_forbidden(D))
