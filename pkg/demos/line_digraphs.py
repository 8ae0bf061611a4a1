"""
Line digraphs and their iterates
================================

Every arc of a digraph becomes a vertex of its line digraph, and two
such vertices are joined when the first arc ends where the second one
starts.  Iterating the construction turns vertices into longer walks.
"""

from linedigraph.digraph import write_edge_list
from linedigraph.families import cycles_joined_by_path, dipath, two_cube
from linedigraph.line import debruijn, iterated_line_digraph, line_digraph

# %%
# The 2-cube has 4 vertices and 8 arcs, so its line digraph has 8 vertices.
# The comments say which arc each vertex stands for.
L = line_digraph(two_cube())
print(write_edge_list(L.graph, L.label_comments()))

# %%
# A directed path loses one vertex per iteration until nothing is left.
for k in range(5):
    print(k, iterated_line_digraph(dipath(4), k).graph)

# %%
# Two dicycles joined by a bridge: the number of vertices keeps growing.
F = cycles_joined_by_path(3, 3, 2)
print([iterated_line_digraph(F, k).graph.n for k in range(10)])

# %%
# De Bruijn digraphs are iterated line digraphs of the looped complete digraph.
B = debruijn(2, 3)
print(B.n, B.m, sorted(B.out_neighbors(3)))
