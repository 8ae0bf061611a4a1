"""
Line digraphs: construction, iteration, recognition and in-splitting.

Vertices of a line digraph are numbered by the lexicographic order of
the base arcs they stand for.  Iterating keeps the labels composable:
a vertex of the ``k``-th iterate is labelled by the walk of ``k`` arcs
in the base digraph it corresponds to.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .digraph import Digraph, adjacency, euler_circuit, induced_subdigraph
from .errors import (
    EmptyArcSet,
    InvalidPartition,
    LoopsPresent,
    NotLineDigraph,
    SizeLimitExceeded,
    TooLarge,
)
from .families import D3, D3_PRIME, D4, complete_looped
from .digraph import MultiDigraph

DEFAULT_MAX_VERTICES = 10**6
FORBIDDEN_MAX_N = 10

__all__ = [
    "ArcLabeledDigraph",
    "InSplitPartition",
    "line_digraph",
    "iterated_line_digraph",
    "is_line_digraph_matrix",
    "rows_criterion",
    "columns_criterion",
    "is_line_digraph_forbidden",
    "recover_partitions",
    "root_digraph",
    "in_split",
    "debruijn",
    "euler_to_hamilton",
    "is_hamilton_dicycle",
]


@dataclass(frozen=True)
class ArcLabeledDigraph:
    """A line digraph together with what each of its vertices stands for.

    Attributes
    ----------
    graph : Digraph
    base_arc_of : tuple
        ``base_arc_of[v]`` is the walk in the base digraph that vertex ``v``
        represents, as a tuple of base vertices.  For a plain line digraph
        this is just the arc ``(tail, head)``.
    base_n : int
        Vertex count of the base digraph.
    """

    graph: Digraph
    base_arc_of: tuple[tuple[int, ...], ...]
    base_n: int

    def index_of(self, label: Sequence[int]) -> int:
        return self._index[tuple(label)]

    @property
    def _index(self) -> dict[tuple[int, ...], int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.base_arc_of)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def label_comments(self) -> list[str]:
        kind = "arc" if all(len(x) == 2 for x in self.base_arc_of) else "walk"
        return [
            f"vertex {v} = {kind} ({','.join(map(str, lab))})"
            for v, lab in enumerate(self.base_arc_of)
        ]


def _line_of(D: Digraph, labels: Sequence[tuple[int, ...]]) -> tuple[Digraph, list[tuple[int, ...]]]:
    arcs = D.sorted_arcs()
    by_tail: dict[int, list[int]] = defaultdict(list)
    for i, (a, _) in enumerate(arcs):
        by_tail[a].append(i)
    new_arcs = [(i, j) for i, (_, b) in enumerate(arcs) for j in by_tail[b]]
    new_labels = [labels[a] + labels[b][-1:] for a, b in arcs]
    return Digraph(len(arcs), new_arcs, allow_loops=D.allow_loops), new_labels


def line_digraph(D: Digraph) -> ArcLabeledDigraph:
    """Line digraph of ``D``.

    Vertex ``i`` of the result is the ``i``-th arc of ``D`` in
    lexicographic order, and ``(a, b) -> (c, d)`` is an arc exactly when
    ``b == c``.

    Raises
    ------
    EmptyArcSet
        If ``D`` has no arcs.
    """
    if D.m == 0:
        raise EmptyArcSet("the line digraph of an arcless digraph has no vertices")
    G, labels = _line_of(D, [(v,) for v in range(D.n)])
    return ArcLabeledDigraph(G, tuple(labels), D.n)


def iterated_line_digraph(
    D: Digraph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES
) -> ArcLabeledDigraph:
    """Apply :func:`line_digraph` ``k`` times.

    Once an iterate has no arcs, further iterates are the digraph with no
    vertices.  Raises :class:`SizeLimitExceeded` before building an
    iterate with more than ``max_vertices`` vertices.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    G = D
    labels: list[tuple[int, ...]] = [(v,) for v in range(D.n)]
    for _ in range(k):
        if G.m > max_vertices:
            raise SizeLimitExceeded(f"next iterate would have {G.m} > {max_vertices} vertices")
        G, labels = _line_of(G, labels)
    return ArcLabeledDigraph(G, tuple(labels), D.n)


def _require_loopless(D: Digraph) -> None:
    if D.has_loops:
        raise LoopsPresent("line digraph recognition is defined for loopless digraphs")


def _criterion(M: np.ndarray) -> bool:
    # rows identical or orthogonal; identical nonzero rows have orthogonal columns
    if np.any(np.diag(M)):
        return False
    G = M @ M.T
    weight = np.diag(G)
    same = (G == weight[:, None]) & (G == weight[None, :])
    if np.any((G != 0) & ~same):
        return False
    C = M.T @ M
    nonzero = weight > 0
    pairs = same & nonzero[:, None] & nonzero[None, :]
    np.fill_diagonal(pairs, False)
    return not np.any(pairs & (C != 0))


def rows_criterion(D: Digraph) -> bool:
    """Row form of the matrix test (loopless input)."""
    _require_loopless(D)
    return _criterion(adjacency(D))


def columns_criterion(D: Digraph) -> bool:
    """Column form of the matrix test: the row form applied to the transpose."""
    _require_loopless(D)
    return _criterion(adjacency(D).T)


def is_line_digraph_matrix(D: Digraph) -> bool:
    """Decide whether a loopless digraph is a line digraph, from its adjacency matrix.

    Any two rows must be identical or orthogonal, the diagonal must be
    zero, and two identical nonzero rows must have orthogonal columns.
    The column form is evaluated too; the two always agree, and a
    disagreement raises ``AssertionError``.

    Raises
    ------
    LoopsPresent
        If ``D`` has a loop.
    """
    rows = rows_criterion(D)
    cols = columns_criterion(D)
    if rows != cols:
        raise AssertionError("row and column criteria disagree")
    return rows


def _canonical_code(n: int, arcs) -> int:
    best = None
    for p in permutations(range(n)):
        code = 0
        for a, b in arcs:
            code |= 1 << (p[a] * n + p[b])
        if best is None or code < best:
            best = code
    return best


@lru_cache(maxsize=None)
def _forbidden_codes() -> dict[int, frozenset[int]]:
    """Canonical codes of every loopless arc-superdigraph of D3 and D4,
    minus the allowed exception D3'. (The other exception carries a loop
    and cannot occur in a loopless digraph.)"""
    out: dict[int, set[int]] = {}
    allowed = {(4, _canonical_code(4, D3_PRIME.arcs))}
    for base in (D3, D4):
        n = base.n
        extra = [(a, b) for a in range(n) for b in range(n) if a != b and (a, b) not in base.arcs]
        for r in range(len(extra) + 1):
            for add in combinations(extra, r):
                code = _canonical_code(n, list(base.arcs) + list(add))
                if (n, code) not in allowed:
                    out.setdefault(n, set()).add(code)
    return {n: frozenset(c) for n, c in out.items()}


def is_line_digraph_forbidden(D: Digraph, max_n: int = FORBIDDEN_MAX_N) -> bool:
    """Forbidden-configuration test, by brute force over 3- and 4-vertex subsets.

    Returns ``True`` iff no induced subdigraph on 3 or 4 vertices is
    isomorphic to a digraph obtained from ``D3`` or ``D4`` by adding arcs,
    apart from the exception ``D3'``.
    """
    _require_loopless(D)
    if D.n > max_n:
        raise TooLarge(f"forbidden-subdigraph test capped at {max_n} vertices, got {D.n}")
    codes = _forbidden_codes()
    for size in (3, 4):
        for subset in combinations(range(D.n), size):
            H = induced_subdigraph(D, subset)
            if H.m >= 3 and _canonical_code(size, H.arcs) in codes[size]:
                return False
    return True


def recover_partitions(D: Digraph) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """Two aligned general partitions ``A``, ``B`` of the vertices of a line digraph.

    Class ``i`` plays the part of a vertex of the base digraph: ``A[i]``
    are the vertices (base arcs) entering it, ``B[i]`` the ones leaving
    it.  The arc set equals the union of the products ``A[i] x B[i]`` and
    ``|A[j] & B[i]| <= 1 - delta(i, j)``.

    Vertices with identical nonzero out-neighbourhoods form one class
    whose ``B`` is that neighbourhood.  Each sink gets a class of its own
    with empty ``B``, each source one with empty ``A``.
    """
    if not is_line_digraph_matrix(D):
        raise NotLineDigraph("digraph fails the matrix criterion")
    A: list[frozenset[int]] = []
    B: list[frozenset[int]] = []
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(D.n):
        out = D.out_neighbors(v)
        if out:
            groups.setdefault(out, []).append(v)
    for out, members in groups.items():
        A.append(frozenset(members))
        B.append(frozenset(out))
    for v in range(D.n):
        if not D.out_neighbors(v):
            A.append(frozenset([v]))
            B.append(frozenset())
    for v in range(D.n):
        if not D.in_neighbors(v):
            A.append(frozenset())
            B.append(frozenset([v]))
    return A, B


def root_digraph(D: Digraph) -> tuple[Digraph, list[tuple[int, int]]]:
    """A digraph ``H`` with ``line_digraph(H)`` isomorphic to ``D``.

    The vertices of ``H`` are the classes of :func:`recover_partitions`;
    vertex ``x`` of ``D`` becomes the arc from the class whose ``B``
    holds ``x`` to the class whose ``A`` holds it.  Also returns that
    arc for every ``x``.
    """
    A, B = recover_partitions(D)
    tail = {x: i for i, cls in enumerate(B) for x in cls}
    head = {x: i for i, cls in enumerate(A) for x in cls}
    arc_of = [(tail[x], head[x]) for x in range(D.n)]
    return Digraph(len(A), arc_of), arc_of


@dataclass(frozen=True)
class InSplitPartition:
    """For each vertex, an ordered partition of its incoming arcs.

    ``classes[v]`` is a tuple of classes; a class is a tuple of tails
    ``u`` standing for the arcs ``(u, v)``.
    """

    classes: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def maximal(cls, D: Digraph) -> "InSplitPartition":
        return cls(tuple(tuple((u,) for u in D.in_neighbors(v)) for v in range(D.n)))

    @classmethod
    def trivial(cls, D: Digraph) -> "InSplitPartition":
        return cls(
            tuple((D.in_neighbors(v),) if D.in_neighbors(v) else () for v in range(D.n))
        )

    def validate(self, D: Digraph) -> None:
        if len(self.classes) != D.n:
            raise InvalidPartition(f"expected classes for {D.n} vertices, got {len(self.classes)}")
        for v, parts in enumerate(self.classes):
            seen: list[int] = []
            for part in parts:
                if not part:
                    raise InvalidPartition(f"empty class at vertex {v}")
                seen.extend(part)
            if len(seen) != len(set(seen)) or sorted(seen) != list(D.in_neighbors(v)):
                raise InvalidPartition(f"classes at vertex {v} do not partition its in-arcs")


def in_split(D: Digraph, P: InSplitPartition) -> MultiDigraph:
    """In-split graph of ``D`` formed using ``P``.

    Vertices are the classes, numbered by base vertex and then class
    order; ``labels[x] = (v, j)`` for class ``j`` of vertex ``v``.  The
    number of arcs from class ``(l, k)`` to class ``(i, j)`` is the number
    of arcs in class ``(i, j)`` whose tail is ``l``.
    """
    P.validate(D)
    labels = [(v, j) for v in range(D.n) for j in range(len(P.classes[v]))]
    index = {lab: x for x, lab in enumerate(labels)}
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for (i, j), x in index.items():
        for tail in P.classes[i][j]:
            for k in range(len(P.classes[tail])):
                counts[(index[(tail, k)], x)] += 1
    return MultiDigraph(len(labels), counts, labels=tuple(labels))


def debruijn(d: int, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Digraph:
    """De Bruijn digraph: the ``(k-1)``-th iterated line digraph of the looped complete digraph on ``d`` vertices."""
    if d < 2 or k < 1:
        raise ValueError("debruijn needs d >= 2 and k >= 1")
    if d**k > max_vertices:
        raise SizeLimitExceeded(f"d^k = {d**k} exceeds {max_vertices}")
    return iterated_line_digraph(complete_looped(d), k - 1, max_vertices).graph


def euler_to_hamilton(D: Digraph) -> list[int]:
    """Hamilton dicycle of the line digraph read off an Euler circuit of ``D``.

    Returns the vertices of ``line_digraph(D)`` in cycle order (the
    closing arc back to the first vertex is implicit).
    """
    circuit = euler_circuit(D)
    if not circuit:
        return []
    L = line_digraph(D)
    return [L.index_of(arc) for arc in circuit]


def is_hamilton_dicycle(G: Digraph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists every vertex once and closes up along arcs."""
    if sorted(cycle) != list(range(G.n)) or G.n == 0:
        return False
    return all(G.has_arc(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
