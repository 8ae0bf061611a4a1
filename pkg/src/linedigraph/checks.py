"""
Theorem checks run against a single input digraph.

:func:`verify_digraph` runs every check that applies to the input and
records the rest as skipped with the reason, so the report doubles as a
map from statements to the code that tests them.
"""

from __future__ import annotations

import numpy as np

from .digraph import (
    Digraph,
    adjacency,
    connected_components,
    induced_subdigraph,
    is_acyclic,
    is_eulerian,
    is_strongly_connected,
    longest_dipath_length,
    regularity,
)
from .factorization import (
    block_line_matrix,
    line_matrix_in_block_order,
    one_factorization,
)
from .line import (
    in_split,
    InSplitPartition,
    is_hamilton_dicycle,
    is_line_digraph_forbidden,
    is_line_digraph_matrix,
    iterated_line_digraph,
    line_digraph,
    euler_to_hamilton,
)
from .report import Report
from .spectral import PERMANENT_MAX_N, penrose_witness_regular, permanent, verify_line_charpoly
from .walk import coin_by_name, verify_underlying_line_digraph

__all__ = ["verify_digraph"]


def _digest(D: Digraph) -> dict:
    k = regularity(D)
    return {"n": D.n, "m": D.m, "regular": "no" if k is None else k}


def verify_digraph(
    D: Digraph,
    coin: str = "fourier",
    max_size: int = 16,
    forbidden_max_n: int = 10,
    tol: float = 1e-12,
) -> Report:
    """Run every applicable theorem check on ``D``.

    ``max_size`` bounds the line digraph used for exact permanents.
    """
    rep = Report("verify", _digest(D))
    if D.m == 0:
        rep.skip("line-counts", "line digraph vertex/arc counts", "no arcs")
        return rep
    L = line_digraph(D)
    G = L.graph

    outs = [D.out_degree(v) for v in range(D.n)]
    ins = [D.in_degree(v) for v in range(D.n)]
    rep.add("line-counts", "|V(LD)| = m, |A(LD)| = sum of outdeg*indeg",
            G.n == D.m and G.m == sum(o * i for o, i in zip(outs, ins)))
    rep.add("line-degrees", "indeg (a,b) = indeg a, outdeg (a,b) = outdeg b",
            all(G.in_degree(x) == ins[a] and G.out_degree(x) == outs[b]
                for x, (a, b) in enumerate(L.base_arc_of)))
    isolated = [v for v in range(D.n) if outs[v] == ins[v] == 0]
    if isolated:
        gate = f"isolated vertices {isolated}"
    elif D.m == 1 and not D.has_loops:
        gate = "single arc: LD is one vertex"
    else:
        gate = ""
    strong = is_strongly_connected(D)
    for cid, anchor, ok in (
        ("line-strong", "LD strongly connected iff D strongly connected",
         lambda: is_strongly_connected(G) == strong),
        ("line-eulerian", "LD eulerian iff D strongly connected and indeg tail = outdeg head on every arc",
         lambda: is_eulerian(G) == (strong and all(ins[a] == outs[b] for a, b in D.arcs))),
    ):
        if gate:
            rep.skip(cid, anchor, gate)
        else:
            rep.add(cid, anchor, ok())

    if is_eulerian(D) and is_strongly_connected(D):
        cyc = euler_to_hamilton(D)
        rep.add("euler-hamilton", "Euler circuit of D gives a Hamilton dicycle of LD",
                is_hamilton_dicycle(G, cyc), f"{len(cyc)} vertices")
    else:
        rep.skip("euler-hamilton", "Euler circuit of D gives a Hamilton dicycle of LD", "not eulerian")

    if is_acyclic(D):
        depth = longest_dipath_length(D)
        rep.add("dag-iterates-empty", "iterated line digraph of an acyclic D runs out of arcs",
                iterated_line_digraph(D, depth).graph.m == 0, f"after {depth} iterations")
    else:
        rep.skip("dag-iterates-empty", "iterated line digraph of an acyclic D runs out of arcs", "has a dicycle")

    if G.has_loops:
        rep.skip("recognition", "matrix recognition of LD", "line digraph has loops")
    else:
        rep.add("recognition", "matrix recognition of LD", is_line_digraph_matrix(G))
        if G.n <= forbidden_max_n:
            verdict = is_line_digraph_forbidden(G, max_n=forbidden_max_n)
            rep.info("recognition-forbidden", "forbidden-configuration recognition of LD",
                     "accepts" if verdict else "rejects (criterion is incomplete)")
        else:
            rep.skip("recognition-forbidden", "forbidden-configuration recognition of LD",
                     f"line digraph has {G.n} > {forbidden_max_n} vertices")

    P = InSplitPartition.maximal(D)
    split = in_split(D, P)
    to_line = [L.index_of((P.classes[v][j][0], v)) for v, j in split.labels]
    mapped = {(to_line[a], to_line[b]) for a, b in split.arc_count}
    rep.add("in-split-maximal", "maximal in-split graph = LD", split.is_simple() and mapped == G.arcs)

    if D.m >= D.n:
        rep.add("charpoly", "P(LD, x) = x^(m-n) P(D, x)", verify_line_charpoly(D))
    else:
        rep.skip("charpoly", "P(LD, x) = x^(m-n) P(D, x)", "m < n")

    if G.n <= max_size:
        per = permanent(adjacency(G))
        comps = all(is_eulerian(induced_subdigraph(D, c)) for c in connected_components(D))
        rep.add("permanent", "per M(LD) > 0 iff every component eulerian",
                (per > 0) == comps, f"per = {per}")
    else:
        rep.skip("permanent", "per M(LD) > 0 iff every component eulerian",
                 f"{G.n} > {max_size} vertices")

    k = regularity(D)
    if k:
        fac = one_factorization(D)
        rep.add("block-form", "LD under the (F_j, v) labelling has identical block rows",
                bool(np.array_equal(line_matrix_in_block_order(D, fac), block_line_matrix(fac))))
        penrose_witness_regular(D)
        rep.add("penrose", "M(LD)^T / k^2 satisfies the four pseudo-inverse identities", True)
        if is_strongly_connected(D):
            L2 = line_digraph(G).graph if G.m else G
            rep.add("regular-iterates", "LD and L^2 D regular, eulerian and hamiltonian",
                    all(regularity(H) == k and is_eulerian(H)
                        and is_hamilton_dicycle(H, euler_to_hamilton(prev))
                        for prev, H in ((D, G), (G, L2))))
        else:
            rep.skip("regular-iterates", "LD and L^2 D regular, eulerian and hamiltonian", "not strongly connected")
        name = coin if k > 1 else "trivial"
        if k == 2 and coin == "grover":
            name = "hadamard"
        walk = verify_underlying_line_digraph(D, coin_by_name(name, k), fac, tol=tol)
        rep.add("walk-line-digraph", f"digraph of the {name}-coin walk is a line digraph",
                walk.passed, "; ".join(f"{c.id}={c.status}" for c in walk.checks))
    else:
        for cid in ("block-form", "penrose", "regular-iterates", "walk-line-digraph"):
            rep.skip(cid, "regular digraphs only", "not regular")
    return rep
