"""
Exact spectral quantities of integer matrices.

Characteristic polynomials are computed exactly: the matrix is reduced
to upper Hessenberg form modulo several word-sized primes, the
polynomial is read off each reduction, and the coefficients are
reassembled with the Chinese remainder theorem.  Enough primes are used
to exceed twice a Hadamard-type bound on every coefficient, so the
symmetric residues are the true integers.

Polynomials are ascending coefficient lists of Python ints:
``[c0, c1, ..., cn]`` means ``c0 + c1 x + ... + cn x^n``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .digraph import Digraph, adjacency, connected_components, induced_subdigraph, is_eulerian, regularity
from .errors import ExponentNegative, NotRegular, NotSquare, PenroseViolation, SizeLimitExceeded, TooLarge
from .line import debruijn, line_digraph

PERMANENT_MAX_N = 20

__all__ = [
    "char_poly",
    "det_bareiss",
    "poly_eval",
    "poly_mul",
    "poly_format",
    "verify_line_charpoly",
    "debruijn_spectrum_check",
    "permanent",
    "permanent_positivity_check",
    "penrose_conditions",
    "penrose_witness_regular",
]


def _as_int_rows(M) -> list[list[int]]:
    rows = [[int(x) for x in r] for r in (M.tolist() if isinstance(M, np.ndarray) else M)]
    if any(len(r) != len(rows) for r in rows):
        raise NotSquare("matrix must be square")
    return rows


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


@lru_cache(maxsize=None)
def _prime(i: int) -> int:
    """The ``i``-th prime below ``2**31`` counting downward."""
    p = _prime(i - 1) - 2 if i else 2**31 - 1
    while not _is_prime(p):
        p -= 2
    return p


def _coefficient_bound(rows: list[list[int]]) -> int:
    # |c_{n-k}| <= C(n,k) * product of the k largest row 2-norms (Hadamard)
    n = len(rows)
    norms2 = sorted((sum(x * x for x in r) for r in rows), reverse=True)
    bound, prod2 = 1, 1
    for k in range(1, n + 1):
        prod2 *= norms2[k - 1]
        bound = max(bound, math.comb(n, k) * (math.isqrt(prod2) + 1))
    return bound


def _charpoly_mod(A: np.ndarray, p: int) -> np.ndarray:
    H = A % p
    n = H.shape[0]
    for j in range(n - 2):
        nz = np.nonzero(H[j + 1 :, j])[0]
        if nz.size == 0:
            continue
        r = j + 1 + int(nz[0])
        if r != j + 1:
            H[[r, j + 1]] = H[[j + 1, r]]
            H[:, [r, j + 1]] = H[:, [j + 1, r]]
        inv = pow(int(H[j + 1, j]), -1, p)
        f = (H[j + 2 :, j] * inv) % p
        if not f.any():
            continue
        H[j + 2 :] = (H[j + 2 :] - (f[:, None] * H[j + 1]) % p) % p
        H[:, j + 1] = (H[:, j + 1] + ((H[:, j + 2 :] * f) % p).sum(axis=1)) % p
    # p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod of subdiagonal) p_{i-1}
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    for k in range(1, n + 1):
        row = np.zeros(n + 1, dtype=np.int64)
        row[1:] = P[k - 1, :-1]
        row = (row - (int(H[k - 1, k - 1]) * P[k - 1]) % p) % p
        coefs = np.zeros(k - 1, dtype=np.int64)
        t = 1
        for i in range(k - 1, 0, -1):
            t = t * int(H[i, i - 1]) % p
            if t == 0:
                break
            coefs[i - 1] = int(H[i - 1, k - 1]) * t % p
        if coefs.any():
            acc = ((coefs[:, None] * P[: k - 1]) % p).sum(axis=0) % p
            row = (row - acc) % p
        P[k] = row
    return P[n]


def char_poly(M) -> list[int]:
    """Exact characteristic polynomial ``det(xI - M)`` of a square integer matrix.

    Parameters
    ----------
    M : array_like of int
        Square matrix.  Entries may be arbitrary Python integers.

    Returns
    -------
    list of int
        Ascending coefficients; the last one is 1.

    Raises
    ------
    NotSquare
    """
    rows = _as_int_rows(M)
    n = len(rows)
    if n == 0:
        return [1]
    bound = _coefficient_bound(rows)
    primes, modulus = [], 1
    while modulus <= 2 * bound:
        primes.append(_prime(len(primes)))
        modulus *= primes[-1]
    coeffs = [0] * (n + 1)
    running = 1
    for p in primes:
        A = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
        res = _charpoly_mod(A, p)
        # incremental CRT: c = c + running * ((r - c) * running^-1 mod p)
        inv = pow(running % p, -1, p)
        for i in range(n + 1):
            delta = (int(res[i]) - coeffs[i]) * inv % p
            coeffs[i] += running * delta
        running *= p
    half = running // 2
    return [c - running if c > half else c for c in coeffs]


def det_bareiss(M) -> int:
    """Determinant by fraction-free (Bareiss) elimination in Python integers."""
    A = _as_int_rows(M)
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def poly_eval(poly: list[int], x: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _expanded(poly: list[int]) -> str:
    out = ""
    for d in range(len(poly) - 1, -1, -1):
        c = poly[d]
        if c == 0:
            continue
        mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
        mag = str(abs(c)) if (abs(c) != 1 or d == 0) else ""
        sign = "-" if c < 0 else ("+" if out else "")
        out += sign + mag + mono
    return out or "0"


def poly_format(poly: list[int]) -> str:
    """Compact text form with the power of ``x`` factored out, e.g. ``x^7*(x-2)``."""
    low = next((d for d, c in enumerate(poly) if c), None)
    if low is None:
        return "0"
    rest = poly[low:]
    if low == 0 or sum(1 for c in rest if c) == 1:
        return _expanded(poly)
    xpow = "x" if low == 1 else f"x^{low}"
    return f"{xpow}*({_expanded(rest)})"


def verify_line_charpoly(D: Digraph) -> bool:
    """Check ``P(LD, x) == x^(m - n) * P(D, x)`` exactly.

    Raises
    ------
    ExponentNegative
        If ``D`` has fewer arcs than vertices.
    """
    if D.m < D.n:
        raise ExponentNegative(f"m = {D.m} < n = {D.n}")
    lhs = char_poly(adjacency(line_digraph(D).graph))
    rhs = poly_mul([0] * (D.m - D.n) + [1], char_poly(adjacency(D)))
    return lhs == rhs


def debruijn_spectrum_check(d: int, k: int, max_vertices: int = 512) -> bool:
    """Check that the de Bruijn digraph has characteristic polynomial ``x^(d^k - 1) (x - d)``."""
    N = d**k
    if N > max_vertices:
        raise SizeLimitExceeded(f"d^k = {N} exceeds {max_vertices}")
    expected = [0] * (N - 1) + [-d, 1]
    return char_poly(adjacency(debruijn(d, k))) == expected


def _ryser_python(rows: list[list[int]]) -> int:
    n = len(rows)
    cols = list(zip(*rows))
    rowsum = [0] * n
    total = 0
    gray = 0
    for s in range(1, 1 << n):
        g = s ^ (s >> 1)
        bit = (g ^ gray).bit_length() - 1
        sgn = 1 if g & (1 << bit) else -1
        gray = g
        col = cols[bit]
        for i in range(n):
            rowsum[i] += sgn * col[i]
        prod = 1
        for x in rowsum:
            if x == 0:
                prod = 0
                break
            prod *= x
        if prod:
            total += -prod if (n - bin(g).count("1")) % 2 else prod
    return total


def _ryser_numpy(A: np.ndarray, chunk: int = 1 << 16) -> int:
    n = A.shape[0]
    total = 0
    bits = np.arange(n, dtype=np.int64)
    for start in range(1, 1 << n, chunk):
        subsets = np.arange(start, min(start + chunk, 1 << n), dtype=np.int64)
        S = ((subsets[:, None] >> bits) & 1).astype(np.int64)
        rowsums = S @ A.T
        keep = np.all(rowsums != 0, axis=1)
        if not keep.any():
            continue
        sizes = S[keep].sum(axis=1)
        prods = np.prod(rowsums[keep].astype(object), axis=1)
        signs = np.where((n - sizes) % 2 == 1, -1, 1)
        total += int(sum(int(s) * int(p) for s, p in zip(signs, prods)))
    return total


def permanent(M, max_n: int = PERMANENT_MAX_N) -> int:
    """Exact permanent by Ryser's inclusion-exclusion formula.

    ``per(M) = (-1)^n * sum over column subsets S of (-1)^|S| * prod_i sum_{j in S} M[i, j]``.
    """
    rows = _as_int_rows(M)
    n = len(rows)
    if n > max_n:
        raise TooLarge(f"permanent capped at n = {max_n}, got {n}")
    if n == 0:
        return 1
    big = max((abs(x) for r in rows for x in r), default=0)
    if big * n < 2**62:
        return _ryser_numpy(np.array(rows, dtype=np.int64))
    return _ryser_python(rows)


def permanent_positivity_check(D: Digraph, max_arcs: int = PERMANENT_MAX_N) -> bool:
    """Whether ``per(M(LD)) > 0``, cross-checked against "every component is eulerian".

    Raises ``AssertionError`` if the two disagree.
    """
    if D.m > max_arcs:
        raise TooLarge(f"line digraph would have {D.m} > {max_arcs} vertices")
    M = adjacency(line_digraph(D).graph) if D.m else np.zeros((0, 0), dtype=np.int64)
    positive = permanent(M, max_n=max_arcs) > 0
    comps_eulerian = all(
        is_eulerian(induced_subdigraph(D, comp)) for comp in connected_components(D)
    )
    if positive != comps_eulerian:
        raise AssertionError("permanent sign disagrees with the component-eulerian test")
    return positive


def _frac_matrix(M) -> np.ndarray:
    A = np.asarray(M, dtype=object)
    return np.vectorize(Fraction, otypes=[object])(A)


def penrose_conditions(M, Mp) -> tuple[bool, bool, bool, bool]:
    """The four pseudo-inverse identities, evaluated in exact rationals.

    Returns the truth of ``M Mp M == M``, ``Mp M Mp == Mp``,
    ``(M Mp)^T == M Mp`` and ``(Mp M)^T == Mp M``.
    """
    A, P = _frac_matrix(M), _frac_matrix(Mp)
    AP, PA = A @ P, P @ A
    return (
        bool(np.all(AP @ A == A)),
        bool(np.all(PA @ P == P)),
        bool(np.all(AP.T == AP)),
        bool(np.all(PA.T == PA)),
    )


def penrose_witness_regular(D: Digraph) -> np.ndarray:
    """Pseudo-inverse ``M^T / k^2`` of the line digraph of a ``k``-regular digraph.

    The four identities are verified exactly before returning; the result
    is an object array of :class:`fractions.Fraction`.
    """
    k = regularity(D)
    if not k:
        raise NotRegular("penrose_witness_regular needs a k-regular digraph with k >= 1")
    M = adjacency(line_digraph(D).graph)
    Mp = _frac_matrix(M.T) / (k * k)
    conds = penrose_conditions(M, Mp)
    if not all(conds):
        raise PenroseViolation(f"conditions (i)-(iv) evaluated to {conds}")
    return Mp
