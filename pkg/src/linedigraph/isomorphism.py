"""Backtracking isomorphism test for small digraphs."""

from __future__ import annotations

from collections import deque

from .digraph import Digraph
from .errors import TooLarge

ISOMORPHISM_MAX_N = 10

__all__ = ["isomorphic", "ISOMORPHISM_MAX_N"]


def _signature(D: Digraph, v: int) -> tuple[int, int, bool]:
    return (D.in_degree(v), D.out_degree(v), D.has_arc(v, v))


def _search_order(D: Digraph) -> list[int]:
    # BFS over the underlying graph so each new vertex touches mapped ones
    nbrs = [set(D.out_neighbors(v)) | set(D.in_neighbors(v)) for v in range(D.n)]
    order: list[int] = []
    seen = [False] * D.n
    for root in sorted(range(D.n), key=lambda v: -len(nbrs[v])):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(nbrs[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def isomorphic(D1: Digraph, D2: Digraph, max_n: int = ISOMORPHISM_MAX_N) -> list[int] | None:
    """Find an arc-preserving bijection ``f`` with ``f[v]`` the image of ``v``.

    Returns ``None`` when the digraphs are not isomorphic.  Candidates are
    pruned by (in-degree, out-degree, loop) signature and by consistency
    with every vertex mapped so far.

    Raises
    ------
    TooLarge
        If either digraph has more than ``max_n`` vertices.
    """
    if max(D1.n, D2.n) > max_n:
        raise TooLarge(f"isomorphism search capped at {max_n} vertices")
    if D1.n != D2.n or D1.m != D2.m:
        return None
    sig1 = [_signature(D1, v) for v in range(D1.n)]
    sig2 = [_signature(D2, v) for v in range(D2.n)]
    if sorted(sig1) != sorted(sig2):
        return None
    order = _search_order(D1)
    f = [-1] * D1.n
    used = [False] * D2.n

    def consistent(v: int, w: int) -> bool:
        for u in order:
            fu = f[u]
            if fu < 0:
                continue
            if D1.has_arc(u, v) != D2.has_arc(fu, w) or D1.has_arc(v, u) != D2.has_arc(w, fu):
                return False
        return True

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(D2.n):
            if used[w] or sig2[w] != sig1[v] or not consistent(v, w):
                continue
            f[v], used[w] = w, True
            if extend(pos + 1):
                return True
            f[v], used[w] = -1, False
        return False

    return list(f) if extend(0) else None
