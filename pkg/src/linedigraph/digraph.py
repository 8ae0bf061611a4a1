"""
Digraph model and the basic algorithms every other module relies on.

A :class:`Digraph` is an immutable value: ``n`` vertices labelled
``0 .. n-1`` and a set of ordered pairs ``(tail, head)``.  Loops are
allowed only when the digraph was built with ``allow_loops=True``.
Parallel arcs never occur here; :class:`MultiDigraph` exists for the
in-split construction, which may produce them.

Edge-list text format
---------------------
::

    # comment lines are ignored
    n m
    tail head
    ...

Vertices are 0-indexed.  :func:`write_edge_list` always emits the arcs
in lexicographic order so output is canonical.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    InvalidDigraph,
    NonBinaryMatrix,
    NotEulerian,
    ParseError,
    VertexOutOfRange,
)

Arc = tuple[int, int]

__all__ = [
    "Arc",
    "Digraph",
    "MultiDigraph",
    "in_degree",
    "out_degree",
    "in_neighbors",
    "out_neighbors",
    "is_strongly_connected",
    "is_weakly_connected",
    "is_eulerian",
    "is_balanced",
    "is_regular",
    "regularity",
    "euler_circuit",
    "connected_components",
    "is_acyclic",
    "longest_dipath_length",
    "reverse",
    "adjacency",
    "from_adjacency",
    "induced_subdigraph",
    "read_edge_list",
    "write_edge_list",
]


@dataclass(frozen=True, eq=False)
class Digraph:
    """Simple directed graph on the vertices ``0 .. n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.  ``n = 0`` is accepted only so that iterated
        line digraphs can run down to nothing.
    arcs : iterable of (int, int)
        Ordered pairs ``(tail, head)``.  Duplicates are rejected.
    allow_loops : bool
        Whether arcs ``(v, v)`` are permitted.

    Equality compares ``n`` and the arc set; the loop flag is metadata.
    """

    n: int
    arcs: frozenset[Arc]
    allow_loops: bool = False

    def __init__(self, n: int, arcs: Iterable[Arc] = (), allow_loops: bool = False):
        if n < 0:
            raise InvalidDigraph(f"vertex count must be nonnegative, got {n}")
        arc_list = [(int(a), int(b)) for a, b in arcs]
        arc_set = frozenset(arc_list)
        if len(arc_set) != len(arc_list):
            raise InvalidDigraph("duplicate arcs")
        for a, b in arc_set:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidDigraph(f"arc {(a, b)} has an endpoint outside 0..{n - 1}")
            if a == b and not allow_loops:
                raise InvalidDigraph(f"loop {(a, b)} in a digraph built with allow_loops=False")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "arcs", arc_set)
        object.__setattr__(self, "allow_loops", bool(allow_loops))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()!r})"

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.arcs:
            out[a].append(b)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def _in(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.arcs:
            inn[b].append(a)
        return tuple(tuple(sorted(x)) for x in inn)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Heads of the arcs leaving ``v``, ascending."""
        self._check(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Tails of the arcs entering ``v``, ascending."""
        self._check(v)
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def has_arc(self, a: int, b: int) -> bool:
        return (a, b) in self.arcs

    @property
    def has_loops(self) -> bool:
        return any(a == b for a, b in self.arcs)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class MultiDigraph:
    """Directed multigraph stored as arc multiplicities.

    ``labels`` optionally names each vertex; the in-split construction
    uses it to record which class of which base vertex a vertex is.
    """

    n: int
    arc_count: Mapping[Arc, int]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        counts = {}
        for (a, b), c in self.arc_count.items():
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InvalidDigraph(f"arc {(a, b)} outside 0..{self.n - 1}")
            if c < 0:
                raise InvalidDigraph(f"negative multiplicity for {(a, b)}")
            if c:
                counts[(int(a), int(b))] = int(c)
        object.__setattr__(self, "arc_count", dict(sorted(counts.items())))

    @property
    def m(self) -> int:
        return sum(self.arc_count.values())

    def adjacency(self) -> np.ndarray:
        M = np.zeros((self.n, self.n), dtype=np.int64)
        for (a, b), c in self.arc_count.items():
            M[a, b] = c
        return M

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.arc_count.values())

    def to_digraph(self) -> Digraph:
        """The underlying simple digraph; raises if any multiplicity exceeds 1."""
        if not self.is_simple():
            raise InvalidDigraph("multigraph has parallel arcs")
        return Digraph(self.n, self.arc_count.keys(), allow_loops=True)


def in_degree(D: Digraph, v: int) -> int:
    return D.in_degree(v)


def out_degree(D: Digraph, v: int) -> int:
    return D.out_degree(v)


def in_neighbors(D: Digraph, v: int) -> tuple[int, ...]:
    return D.in_neighbors(v)


def out_neighbors(D: Digraph, v: int) -> tuple[int, ...]:
    return D.out_neighbors(v)


def _reach(n: int, nbrs: Sequence[Sequence[int]], start: int) -> list[bool]:
    seen = [False] * n
    seen[start] = True
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return seen


def is_strongly_connected(D: Digraph) -> bool:
    """True iff every vertex reaches every other along directed paths."""
    if D.n == 0:
        return True
    return all(_reach(D.n, D._out, 0)) and all(_reach(D.n, D._in, 0))


def connected_components(D: Digraph) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest vertex."""
    undirected = [sorted(set(D._out[v]) | set(D._in[v])) for v in range(D.n)]
    comp = [-1] * D.n
    parts: list[list[int]] = []
    for s in range(D.n):
        if comp[s] >= 0:
            continue
        seen = _reach(D.n, undirected, s)
        members = [v for v in range(D.n) if seen[v]]
        for v in members:
            comp[v] = len(parts)
        parts.append(members)
    return parts


def is_weakly_connected(D: Digraph) -> bool:
    return len(connected_components(D)) <= 1


def is_balanced(D: Digraph) -> bool:
    """In-degree equals out-degree at every vertex."""
    return all(len(D._in[v]) == len(D._out[v]) for v in range(D.n))


def is_eulerian(D: Digraph) -> bool:
    """Weakly connected and balanced.

    Connectivity is the weak notion: the underlying undirected graph is
    connected.  Strong connectivity is :func:`is_strongly_connected`.
    """
    return is_weakly_connected(D) and is_balanced(D)


def regularity(D: Digraph) -> int | None:
    """The common in/out degree if ``D`` is regular, else ``None``."""
    if D.n == 0:
        return None
    k = len(D._out[0])
    for v in range(D.n):
        if len(D._out[v]) != k or len(D._in[v]) != k:
            return None
    return k


def is_regular(D: Digraph) -> bool:
    return regularity(D) is not None


def euler_circuit(D: Digraph) -> list[Arc]:
    """Euler circuit of ``D`` by Hierholzer's algorithm.

    The circuit starts at the lowest vertex with an outgoing arc and
    always leaves a vertex along its smallest unused arc, so the result
    is deterministic.

    Raises
    ------
    NotEulerian
        If ``D`` is not eulerian or not strongly connected.
    """
    if not is_eulerian(D) or not is_strongly_connected(D):
        raise NotEulerian("digraph must be balanced and strongly connected")
    if D.m == 0:
        return []
    start = next(v for v in range(D.n) if D._out[v])
    pointer = [0] * D.n
    stack = [start]
    vertices: list[int] = []
    while stack:
        u = stack[-1]
        if pointer[u] < len(D._out[u]):
            stack.append(D._out[u][pointer[u]])
            pointer[u] += 1
        else:
            vertices.append(stack.pop())
    vertices.reverse()
    return list(zip(vertices[:-1], vertices[1:]))


def is_acyclic(D: Digraph) -> bool:
    return _topological_order(D) is not None


def _topological_order(D: Digraph) -> list[int] | None:
    indeg = [len(D._in[v]) for v in range(D.n)]
    queue = deque(v for v in range(D.n) if indeg[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in D._out[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return order if len(order) == D.n else None


def longest_dipath_length(D: Digraph) -> int:
    """Number of arcs on a longest directed path of an acyclic digraph."""
    order = _topological_order(D)
    if order is None:
        raise InvalidDigraph("longest_dipath_length needs an acyclic digraph")
    best = [0] * D.n
    for u in order:
        for w in D._out[u]:
            best[w] = max(best[w], best[u] + 1)
    return max(best, default=0)


def reverse(D: Digraph) -> Digraph:
    return Digraph(D.n, ((b, a) for a, b in D.arcs), allow_loops=D.allow_loops)


def adjacency(D: Digraph) -> np.ndarray:
    """The (0,1) adjacency matrix, ``M[i, j] = 1`` iff ``(i, j)`` is an arc."""
    M = np.zeros((D.n, D.n), dtype=np.int64)
    for a, b in D.arcs:
        M[a, b] = 1
    return M


def from_adjacency(M, allow_loops: bool | None = None) -> Digraph:
    """Digraph of a square (0,1) matrix.

    ``allow_loops`` defaults to whether the diagonal has a nonzero entry.
    """
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NonBinaryMatrix(f"expected a square matrix, got shape {A.shape}")
    if not np.all((A == 0) | (A == 1)):
        raise NonBinaryMatrix("entries must be 0 or 1")
    rows, cols = np.nonzero(A)
    arcs = list(zip(rows.tolist(), cols.tolist()))
    if allow_loops is None:
        allow_loops = any(a == b for a, b in arcs)
    return Digraph(A.shape[0], arcs, allow_loops=allow_loops)


def induced_subdigraph(D: Digraph, vertices: Sequence[int]) -> Digraph:
    """Subdigraph induced by ``vertices``, relabelled ``0 .. len-1`` in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    arcs = [(index[a], index[b]) for a, b in D.arcs if a in index and b in index]
    return Digraph(len(vertices), arcs, allow_loops=D.allow_loops)


def read_edge_list(text: str) -> Digraph:
    """Parse the edge-list format; loops are allowed iff the input has one."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ParseError("missing header line 'n m'")
    (n, m), arcs = rows[0], rows[1:]
    if len(arcs) != m:
        raise ParseError(f"header announces {m} arcs, found {len(arcs)}")
    return Digraph(n, arcs, allow_loops=any(a == b for a, b in arcs))


def write_edge_list(D: Digraph, comments: Iterable[str] = ()) -> str:
    """Canonical edge-list text; ``comments`` are appended as ``#`` lines."""
    lines = [f"{D.n} {D.m}"]
    lines += [f"{a} {b}" for a, b in D.sorted_arcs()]
    lines += [f"# {c}" for c in comments]
    return "\n".join(lines) + "\n"
