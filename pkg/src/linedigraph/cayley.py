"""
Cayley digraphs of cyclic and dihedral groups.

The line digraph of the bidirected ``n``-cycle ``Cay(Z_n, {1, n-1})`` is
the Cayley digraph of the dihedral group of order ``2n`` on the
generators ``a = g`` (the rotation) and ``b = g sigma`` (a reflection), a
directed ``n``-gon prism.  :func:`verify_cycle_example` checks this and
the block form of its adjacency matrix.

Permutations are 0-indexed tuples and multiply left to right:
``(x * y)[i] == y[x[i]]``.  Arcs of a Cayley digraph go ``u -> u * s``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

from .digraph import Digraph, adjacency, from_adjacency, is_strongly_connected
from .errors import BadGenerators, BadOrder, TooLarge
from .factorization import Factorization, OneFactor, block_line_matrix
from .isomorphism import isomorphic
from .line import line_digraph
from .report import Report

__all__ = [
    "Perm",
    "CayleyDigraph",
    "cayley_cyclic",
    "cayley_dihedral",
    "dihedral_generators",
    "regular_representation",
    "cycle_block_matrix",
    "verify_cycle_example",
    "isomorphic",
]


@dataclass(frozen=True)
class Perm:
    """Permutation of ``0 .. m-1``; ``mapping[i]`` is the image of ``i``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        mp = tuple(int(x) for x in self.mapping)
        if sorted(mp) != list(range(len(mp))):
            raise ValueError(f"{mp} is not a permutation")
        object.__setattr__(self, "mapping", mp)

    @classmethod
    def identity(cls, m: int) -> "Perm":
        return cls(tuple(range(m)))

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        mp = list(range(m))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                mp[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(mp))

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(other.mapping[x] for x in self.mapping))

    def __pow__(self, e: int) -> "Perm":
        out = Perm.identity(len(self.mapping))
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            out = out * base
        return out

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def inverse(self) -> "Perm":
        inv = [0] * len(self.mapping)
        for i, x in enumerate(self.mapping):
            inv[x] = i
        return Perm(tuple(inv))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.mapping) if i == x]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.mapping))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for s in range(len(self.mapping)):
            if s in seen or self.mapping[s] == s:
                continue
            cyc, x = [], s
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.mapping[x]
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class CayleyDigraph:
    graph: Digraph
    element_of: tuple[Hashable, ...]
    generators: tuple[Hashable, ...]


def cayley_cyclic(n: int, S: Iterable[int]) -> CayleyDigraph:
    """``Cay(Z_n, S)``: arcs ``v -> v + s (mod n)``."""
    gens = tuple(sorted(set(int(s) for s in S)))
    if n < 3 or not gens or any(not 1 <= s <= n - 1 for s in gens):
        raise BadGenerators(f"need n >= 3 and residues in 1..{n - 1}, got n={n}, S={gens}")
    arcs = {(v, (v + s) % n) for v in range(n) for s in gens}
    return CayleyDigraph(Digraph(n, arcs), tuple(range(n)), gens)


def dihedral_generators(n: int) -> tuple[Perm, Perm]:
    """Rotation ``a: i -> i+1`` and reflection ``b = a * sigma`` with ``sigma: i -> -i``.

    ``b`` sends ``i`` to ``n - 1 - i``; for odd ``n`` its fixed point is ``(n - 1) / 2``.
    """
    a = Perm(tuple((i + 1) % n for i in range(n)))
    sigma = Perm(tuple((-i) % n for i in range(n)))
    return a, a * sigma


def cayley_dihedral(n: int) -> CayleyDigraph:
    """Cayley digraph of the dihedral group of order ``2n`` on ``{a, b}``, ``n`` odd.

    Group elements are generated by breadth-first closure from the
    identity; vertex numbers follow discovery order.
    """
    if n < 3 or n % 2 == 0:
        raise BadOrder(f"dihedral example takes odd n >= 3, got {n}")
    gens = dihedral_generators(n)
    e = Perm.identity(n)
    elements = [e]
    index = {e: 0}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = x * s
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    arcs = [(index[x], index[x * s]) for x in elements for s in gens]
    return CayleyDigraph(Digraph(len(elements), arcs), tuple(elements), gens)


def regular_representation(n: int, h: int) -> np.ndarray:
    """Permutation matrix of right translation by ``h`` in ``Z_n``: ``R[x, x + h] = 1``."""
    R = np.zeros((n, n), dtype=np.int64)
    R[np.arange(n), (np.arange(n) + h) % n] = 1
    return R


def cycle_block_matrix(n: int) -> np.ndarray:
    """``[[R(g), R(g^(n-1))], [R(g), R(g^(n-1))]]`` for the generator ``g = 1`` of ``Z_n``."""
    row = np.hstack([regular_representation(n, 1), regular_representation(n, n - 1)])
    return np.vstack([row, row])


def verify_cycle_example(n: int, max_n: int = 9) -> Report:
    """Check the dihedral-prism description of the line digraph of the bidirected ``n``-cycle.

    Assertions: group closure has ``2n`` elements; ``a^n = b^2 = e`` and
    ``a^(n-1) = b a b``; the fixed point of ``b``; (a) the line digraph is
    isomorphic to the dihedral Cayley digraph; (b) that Cayley digraph is
    isomorphic to the digraph of :func:`cycle_block_matrix`; (c) the block
    matrix equals the block line matrix of the factorization into the
    ``+1`` and ``-1`` rotations.
    """
    if n % 2 == 0:
        raise BadOrder(f"n must be odd, got {n}")
    if not 3 <= n <= max_n:
        raise TooLarge(f"cycle example checked for 3 <= n <= {max_n}, got {n}")
    rep = Report("cayley-demo", {"n": n})
    cyc = cayley_cyclic(n, {1, n - 1})
    dih = cayley_dihedral(n)
    a, b = dih.generators
    e = Perm.identity(n)

    rep.add("closure", "dihedral group has order 2n", len(dih.element_of) == 2 * n,
            f"{len(dih.element_of)} elements")
    rep.add("relations", "a^n = b^2 = e and a^(n-1) = bab",
            (a**n).is_identity() and (b * b).is_identity() and a ** (n - 1) == b * a * b)
    rep.add("fixed-point", "reflection b fixes (n-1)/2",
            b.fixed_points() == [(n - 1) // 2], f"fixed points {b.fixed_points()}")
    rep.add("cycle-regular", "Cay(Z_n, {1, n-1}) is 2-regular and strongly connected",
            all(cyc.graph.out_degree(v) == cyc.graph.in_degree(v) == 2 for v in range(n))
            and is_strongly_connected(cyc.graph))

    L = line_digraph(cyc.graph).graph
    iso_a = isomorphic(L, dih.graph, max_n=2 * max_n)
    rep.add("line-is-prism", "line digraph of the bidirected cycle = dihedral Cayley prism",
            iso_a is not None)

    block = cycle_block_matrix(n)
    iso_b = isomorphic(from_adjacency(block), dih.graph, max_n=2 * max_n)
    rep.add("prism-block-form", "Cayley prism is permutation-similar to the regular-representation block matrix",
            iso_b is not None)

    fac = Factorization(
        (OneFactor(tuple((i + 1) % n for i in range(n))), OneFactor(tuple((i - 1) % n for i in range(n)))),
        n,
    )
    rep.add("block-equals-factorization", "block form equals the block line matrix of the rotation factors",
            bool(np.array_equal(block, block_line_matrix(fac))))
    rep.add("block-row-sums", "block matrix rows and columns sum to 2",
            bool(np.all(block.sum(axis=0) == 2) and np.all(block.sum(axis=1) == 2)))
    return rep
