"""
1-factorizations of regular digraphs and the block form of their line digraphs.

A 1-factor of a ``k``-regular digraph is a permutation ``succ`` of the
vertices with every ``(v, succ[v])`` an arc.  ``k`` rounds of bipartite
perfect matching split the arc set into ``k`` such factors.

Given a factorization ``F_1 .. F_k``, the vertex ``(v_i, v_l)`` of the line
digraph lying in ``F_j`` is relabelled ``(F_j, v_l)``, i.e. index
``j*n + l`` (0-indexed).  Under that labelling the adjacency matrix of the
line digraph has ``k`` identical block rows ``[M(F_1) ... M(F_k)]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .digraph import Digraph, adjacency, regularity
from .errors import InvalidDigraph, NotRegular, NotSpanning, NotSubdigraph, ParseError
from .line import line_digraph

__all__ = [
    "OneFactor",
    "Factorization",
    "perfect_matching",
    "one_factorization",
    "GrowthResult",
    "growth",
    "growth_block_matrix",
    "line_growth",
    "block_line_matrix",
    "permutation_to_line_labels",
    "conjugate",
    "line_matrix_in_block_order",
    "read_factorization",
    "write_factorization",
]


@dataclass(frozen=True)
class OneFactor:
    """Spanning 1-regular subdigraph, stored as its successor permutation."""

    successor: tuple[int, ...]

    def __post_init__(self):
        succ = tuple(int(x) for x in self.successor)
        if sorted(succ) != list(range(len(succ))):
            raise InvalidDigraph(f"successor {succ} is not a permutation")
        object.__setattr__(self, "successor", succ)

    @property
    def n(self) -> int:
        return len(self.successor)

    def arcs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.successor))

    def matrix(self) -> np.ndarray:
        P = np.zeros((self.n, self.n), dtype=np.int64)
        P[np.arange(self.n), self.successor] = 1
        return P

    def predecessor(self) -> tuple[int, ...]:
        pred = [0] * self.n
        for v, w in enumerate(self.successor):
            pred[w] = v
        return tuple(pred)


@dataclass(frozen=True)
class Factorization:
    """Ordered arc-disjoint 1-factors ``F_1 .. F_k`` of a host digraph on ``host_n`` vertices."""

    factors: tuple[OneFactor, ...]
    host_n: int

    def __post_init__(self):
        facs = tuple(f if isinstance(f, OneFactor) else OneFactor(tuple(f)) for f in self.factors)
        object.__setattr__(self, "factors", facs)
        seen: set[tuple[int, int]] = set()
        for f in facs:
            if f.n != self.host_n:
                raise InvalidDigraph("factor size does not match host")
            arcs = set(f.arcs())
            if not seen.isdisjoint(arcs):
                raise InvalidDigraph("factors share an arc")
            seen |= arcs

    @property
    def k(self) -> int:
        return len(self.factors)

    def host(self) -> Digraph:
        arcs = [a for f in self.factors for a in f.arcs()]
        return Digraph(self.host_n, arcs, allow_loops=any(a == b for a, b in arcs))

    def factor_of_arc(self) -> dict[tuple[int, int], int]:
        return {a: j for j, f in enumerate(self.factors) for a in f.arcs()}

    def check_covers(self, D: Digraph) -> None:
        if D.n != self.host_n or set(self.factor_of_arc()) != set(D.arcs):
            raise InvalidDigraph("factorization does not partition the arcs of D")


def perfect_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int] | None:
    """Perfect matching of the bipartite graph tails x heads by augmenting paths.

    ``adj[u]`` lists the heads available to tail ``u``; they are tried in
    the given order, tails in ascending order.  Returns ``succ`` with
    ``succ[u]`` the head matched to ``u``, or ``None`` if none exists.
    """
    match_of_head = [-1] * n

    def augment(u: int, seen: list[bool]) -> bool:
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                if match_of_head[w] < 0 or augment(match_of_head[w], seen):
                    match_of_head[w] = u
                    return True
        return False

    for u in range(n):
        if not augment(u, [False] * n):
            return None
    succ = [0] * n
    for w, u in enumerate(match_of_head):
        succ[u] = w
    return succ


def one_factorization(D: Digraph, seed_factors: Iterable[Sequence[int]] = ()) -> Factorization:
    """Split a ``k``-regular digraph into ``k`` arc-disjoint 1-factors.

    ``seed_factors`` fixes the first factors; the rest are found by
    repeated perfect matching on the remaining arcs.  Removing a perfect
    matching from a regular bipartite graph leaves a regular one, so
    every round succeeds.

    Raises
    ------
    NotRegular
        If ``D`` is not regular.
    """
    k = regularity(D)
    if k is None:
        raise NotRegular("one_factorization needs a regular digraph")
    remaining = set(D.arcs)
    factors: list[OneFactor] = []
    for seed in seed_factors:
        f = OneFactor(tuple(seed))
        arcs = set(f.arcs())
        if not arcs <= remaining:
            raise NotSubdigraph("seed factor uses arcs not available in D")
        remaining -= arcs
        factors.append(f)
    while remaining:
        adj = [sorted(b for a, b in remaining if a == u) for u in range(D.n)]
        succ = perfect_matching(D.n, adj)
        if succ is None:
            raise NotRegular("remaining arcs admit no perfect matching")
        f = OneFactor(tuple(succ))
        remaining -= set(f.arcs())
        factors.append(f)
    if len(factors) != k:
        raise NotRegular(f"expected {k} factors, got {len(factors)}")
    return Factorization(tuple(factors), D.n)


@dataclass(frozen=True)
class GrowthResult:
    """The growth digraph and the bookkeeping for its fresh vertices.

    Fresh vertex ``n + t`` hangs off ``anchor[t]`` and replaces the arc
    ``missing_arc[t]`` of the host that is absent from the subdigraph.
    """

    graph: Digraph
    anchor: tuple[int, ...]
    missing_arc: tuple[tuple[int, int], ...]


def growth(D: Digraph, F: Digraph) -> GrowthResult:
    """Growth of ``D`` from a spanning subdigraph ``F``.

    Every vertex ``v`` receives ``outdeg_D(v) - outdeg_F(v)`` fresh
    out-neighbours, one per arc of ``D`` leaving ``v`` that is not in
    ``F``.  Fresh vertices are numbered from ``n`` upward in order of
    their anchor, then of the head of the arc they replace.
    """
    if F.n != D.n:
        raise NotSpanning("subdigraph must span the same vertex set")
    if not F.arcs <= D.arcs:
        raise NotSubdigraph("F has arcs that are not in D")
    arcs = list(F.arcs)
    anchor: list[int] = []
    missing: list[tuple[int, int]] = []
    for a, b in D.sorted_arcs():
        if (a, b) not in F.arcs:
            arcs.append((a, D.n + len(anchor)))
            anchor.append(a)
            missing.append((a, b))
    G = Digraph(D.n + len(anchor), arcs, allow_loops=D.allow_loops)
    return GrowthResult(G, tuple(anchor), tuple(missing))


def growth_block_matrix(fac: Factorization, j: int) -> np.ndarray:
    """Adjacency of the growth from factor ``j`` on the ``(F, v)`` grid.

    Host vertices sit in block ``j``; the fresh vertex replacing the arc
    ``(v, w)`` of factor ``m`` sits at grid position ``(F_m, w)``.
    """
    n, k = fac.host_n, fac.k
    M = np.zeros((k * n, k * n), dtype=np.int64)
    for m, f in enumerate(fac.factors):
        for v, w in f.arcs():
            M[j * n + v, m * n + w] = 1
    return M


def line_growth(fac: Factorization, j: int) -> Digraph:
    """Spanning subdigraph of the (block-labelled) line digraph made of the
    out-arcs of the block-``j`` vertices."""
    n = fac.host_n
    B = block_line_matrix(fac)
    B[: j * n] = 0
    B[(j + 1) * n :] = 0
    rows, cols = np.nonzero(B)
    return Digraph(B.shape[0], zip(rows.tolist(), cols.tolist()), allow_loops=True)


def block_line_matrix(fac: Factorization) -> np.ndarray:
    """``k`` identical block rows ``[M(F_1) M(F_2) ... M(F_k)]``, size ``kn x kn``."""
    row = np.hstack([f.matrix() for f in fac.factors])
    return np.vstack([row] * fac.k)


def permutation_to_line_labels(fac: Factorization) -> np.ndarray:
    """Map lexicographic line-digraph indices to block indices.

    ``perm[x] = j*n + l`` when the ``x``-th arc of the host, in
    lexicographic order, is ``(v_i, v_l)`` and belongs to factor ``j``.
    Then ``conjugate(adjacency(line_digraph(D)), perm)`` equals
    :func:`block_line_matrix`.
    """
    n = fac.host_n
    which = fac.factor_of_arc()
    arcs = sorted(which)
    return np.array([which[(a, b)] * n + b for a, b in arcs], dtype=np.int64)


def conjugate(M: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    """Relabel rows and columns: ``out[perm[a], perm[b]] = M[a, b]``."""
    perm = np.asarray(perm)
    out = np.zeros_like(M)
    out[np.ix_(perm, perm)] = M
    return out


def line_matrix_in_block_order(D: Digraph, fac: Factorization) -> np.ndarray:
    fac.check_covers(D)
    return conjugate(adjacency(line_digraph(D).graph), permutation_to_line_labels(fac))


def write_factorization(fac: Factorization) -> str:
    lines = [f"factors {fac.k} {fac.host_n}"]
    lines += [" ".join(map(str, f.successor)) for f in fac.factors]
    return "\n".join(lines) + "\n"


def read_factorization(text: str) -> Factorization:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or rows[0][0] != "factors" or len(rows[0]) != 3:
        raise ParseError("expected header 'factors k n'")
    k, n = int(rows[0][1]), int(rows[0][2])
    body = rows[1:]
    if len(body) != k or any(len(r) != n for r in body):
        raise ParseError(f"expected {k} lines of {n} integers")
    return Factorization(tuple(OneFactor(tuple(int(x) for x in r)) for r in body), n)
