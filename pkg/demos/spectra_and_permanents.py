"""
Exact spectra, permanents and a pseudo-inverse
==============================================

Taking the line digraph only adds zeros to the spectrum:
``P(LD, x) = x^(m-n) P(D, x)``.  The permanent of the line digraph is
positive exactly when every component of the digraph is eulerian, and
for a ``k``-regular digraph ``M^T / k^2`` is the Moore-Penrose inverse
of the line digraph's adjacency matrix.
"""

from linedigraph.digraph import adjacency
from linedigraph.families import dipath, figure_eight, two_cube
from linedigraph.line import debruijn, line_digraph
from linedigraph.spectral import char_poly, penrose_witness_regular, permanent, poly_format

for name, D in [("2-cube", two_cube()), ("figure eight", figure_eight())]:
    pD = char_poly(adjacency(D))
    pL = char_poly(adjacency(line_digraph(D).graph))
    print(f"{name}: P(D) = {poly_format(pD)}, P(LD) = {poly_format(pL)}")

# %%
for d, k in [(2, 3), (3, 3)]:
    print(f"B({d},{k}):", poly_format(char_poly(adjacency(debruijn(d, k)))))

# %%
for name, D in [("2-cube", two_cube()), ("path", dipath(4))]:
    print(name, "permanent of M(LD):", permanent(adjacency(line_digraph(D).graph)))

# %%
Mp = penrose_witness_regular(two_cube())
print([" ".join(str(x) for x in row) for row in Mp[:2]])
