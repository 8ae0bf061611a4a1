"""
The bidirected cycle and the dihedral prism
===========================================

The line digraph of ``Cay(Z_n, {1, n-1})`` is the Cayley digraph of the
dihedral group on a rotation and a reflection: a directed ``n``-gon
prism.
"""

from linedigraph.cayley import cayley_dihedral, dihedral_generators, verify_cycle_example

a, b = dihedral_generators(5)
print("a =", a.cycles(), " b =", b.cycles(), " fixed point of b:", b.fixed_points())

# %%
prism = cayley_dihedral(5)
print(prism.graph.n, "elements,", prism.graph.m, "arcs")

# %%
for n in (3, 5, 7):
    print("\n".join(verify_cycle_example(n).to_lines()))
