"""
Named digraphs and seeded random instance generators.

The random generators take a :class:`numpy.random.Generator` so callers
control reproducibility.
"""

from __future__ import annotations

import numpy as np

from .digraph import Digraph, is_strongly_connected

__all__ = [
    "dicycle",
    "dipath",
    "bidirected_cycle",
    "two_cube",
    "TWO_CUBE_F1",
    "TWO_CUBE_F2",
    "complete_looped",
    "figure_eight",
    "cycles_joined_by_path",
    "disjoint_union",
    "D3",
    "D3_PRIME",
    "D4",
    "random_digraph",
    "random_dag",
    "random_regular_digraph",
    "random_eulerian_digraph",
    "random_strongly_connected",
]

# The 2-cube and the 1-factorization used in the worked example (0-indexed).
TWO_CUBE_ADJACENCY = (
    (0, 1, 1, 0),
    (1, 0, 0, 1),
    (1, 0, 0, 1),
    (0, 1, 1, 0),
)
TWO_CUBE_F1 = (1, 0, 3, 2)
TWO_CUBE_F2 = (2, 3, 0, 1)

# Forbidden configurations for line digraphs and the allowed exception,
# shifted to 0-indexed vertices.
D3 = Digraph(4, [(0, 1), (0, 2), (3, 1)])
D3_PRIME = Digraph(4, [(0, 1), (0, 2), (3, 1), (3, 2)])
D4 = Digraph(3, [(0, 1), (2, 0), (2, 1)])


def dicycle(n: int) -> Digraph:
    """Directed cycle ``0 -> 1 -> ... -> n-1 -> 0``."""
    if n == 1:
        return Digraph(1, [(0, 0)], allow_loops=True)
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def dipath(n: int) -> Digraph:
    """Directed path on ``n`` vertices (``n - 1`` arcs)."""
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def bidirected_cycle(n: int) -> Digraph:
    return Digraph(n, {(i, (i + s) % n) for i in range(n) for s in (1, n - 1)})


def two_cube() -> Digraph:
    arcs = [(i, j) for i, row in enumerate(TWO_CUBE_ADJACENCY) for j, x in enumerate(row) if x]
    return Digraph(4, arcs)


def complete_looped(d: int) -> Digraph:
    """Complete digraph with a loop at every vertex (all-ones adjacency)."""
    return Digraph(d, [(i, j) for i in range(d) for j in range(d)], allow_loops=True)


def figure_eight() -> Digraph:
    """Two directed triangles sharing vertex 0."""
    return Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def cycles_joined_by_path(p: int = 3, q: int = 3, bridge: int = 2) -> Digraph:
    """A ``p``-dicycle and a ``q``-dicycle joined by a dipath with ``bridge`` arcs."""
    arcs = [(i, (i + 1) % p) for i in range(p)]
    path = [p - 1] + list(range(p, p + bridge - 1)) + [p + bridge - 1]
    arcs += list(zip(path[:-1], path[1:]))
    start = p + bridge - 1
    second = [start + i for i in range(q)]
    arcs += [(second[i], second[(i + 1) % q]) for i in range(q)]
    return Digraph(start + q, arcs)


def disjoint_union(*graphs: Digraph) -> Digraph:
    arcs = []
    offset = 0
    for G in graphs:
        arcs += [(a + offset, b + offset) for a, b in G.arcs]
        offset += G.n
    return Digraph(offset, arcs, allow_loops=any(G.allow_loops for G in graphs))


def random_digraph(
    n: int, rng: np.random.Generator, p: float = 0.3, loops: bool = False
) -> Digraph:
    """Erdős–Rényi style digraph: each admissible arc kept with probability ``p``."""
    mask = rng.random((n, n)) < p
    if not loops:
        np.fill_diagonal(mask, False)
    rows, cols = np.nonzero(mask)
    return Digraph(n, zip(rows.tolist(), cols.tolist()), allow_loops=loops)


def random_dag(n: int, rng: np.random.Generator, p: float = 0.4) -> Digraph:
    """Random acyclic digraph under a random vertex order."""
    order = rng.permutation(n)
    arcs = [
        (int(order[i]), int(order[j]))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Digraph(n, arcs)


def random_regular_digraph(
    n: int, k: int, rng: np.random.Generator, loops: bool = False, max_tries: int = 10_000
) -> Digraph:
    """Union of ``k`` arc-disjoint random permutations (rejection sampling)."""
    if k > n - (0 if loops else 1):
        raise ValueError(f"no {k}-regular digraph on {n} vertices")
    for _ in range(max_tries):
        arcs: set[tuple[int, int]] = set()
        ok = True
        for _ in range(k):
            for _ in range(200):
                perm = rng.permutation(n)
                new = {(i, int(perm[i])) for i in range(n)}
                if not loops and any(a == b for a, b in new):
                    continue
                if arcs.isdisjoint(new):
                    arcs |= new
                    break
            else:
                ok = False
                break
        if ok:
            return Digraph(n, arcs, allow_loops=loops)
    raise RuntimeError("random_regular_digraph: rejection sampling failed")


def random_strongly_connected(
    n: int, rng: np.random.Generator, p: float = 0.35, max_tries: int = 10_000
) -> Digraph:
    """Loopless random digraph conditioned on strong connectivity."""
    for _ in range(max_tries):
        D = random_digraph(n, rng, p=p)
        if is_strongly_connected(D):
            return D
    raise RuntimeError("random_strongly_connected: rejection sampling failed")


def random_eulerian_digraph(
    n: int, rng: np.random.Generator, extra_cycles: int = 3, loops: bool = False
) -> Digraph:
    """Strongly connected balanced digraph built as a union of arc-disjoint cycles.

    A random Hamilton cycle guarantees strong connectivity; extra random
    cycles are added whenever they do not reuse an arc.
    """
    perm = [int(x) for x in rng.permutation(n)]
    arcs = {(perm[i], perm[(i + 1) % n]) for i in range(n)} if n > 1 else set()
    for _ in range(extra_cycles):
        length = int(rng.integers(1 if loops else 2, n + 1))
        verts = [int(x) for x in rng.choice(n, size=length, replace=False)]
        cyc = {(verts[i], verts[(i + 1) % length]) for i in range(length)}
        if arcs.isdisjoint(cyc):
            arcs |= cyc
    return Digraph(n, arcs, allow_loops=loops)
