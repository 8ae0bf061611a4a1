"""
Coined discrete-time quantum walks on regular digraphs.

Basis convention
----------------
The walk space is ``C^k (x) C^n`` with basis vectors ``|F_j, v_i>`` for
the ``k`` factors of a 1-factorization and the ``n`` vertices.  The index
of ``|F_j, v_i>`` is ``j*n + i`` (0-indexed), the same grid used by
:func:`linedigraph.factorization.block_line_matrix`.

States are column vectors and operators act on the left.  The shift
sends ``|F_j, v_i>`` to ``|F_j, succ_j(v_i)>``, so its block ``j`` is the
transpose of the factor's adjacency matrix, and the transition matrix
is ``U = shift @ kron(coin, I_n)``.  With a coin that has no zero entry,
the support of ``U`` is exactly the transpose of the block line matrix:
the digraph of ``U`` is the reverse of the line digraph, which is itself
the line digraph of the reversed host.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .digraph import Digraph, adjacency, from_adjacency, regularity, reverse
from .errors import BadDimension, CoinHasZeros, DimensionMismatch, NotRegular, NotUnitary
from .factorization import (
    Factorization,
    block_line_matrix,
    conjugate,
    one_factorization,
    permutation_to_line_labels,
)
from .line import is_line_digraph_matrix, line_digraph
from .report import Report

UNITARY_TOL = 1e-12
SUPPORT_TOL = 1e-12
NORM_TOL = 1e-10

__all__ = [
    "coin_hadamard",
    "coin_grover",
    "coin_fourier",
    "coin_by_name",
    "unitarity_error",
    "build_shift",
    "WalkOperator",
    "WalkState",
    "build_walk",
    "basis_state",
    "uniform_state",
    "evolve",
    "trajectory",
    "distribution",
    "support_digraph",
    "verify_underlying_line_digraph",
]


def coin_hadamard() -> np.ndarray:
    return np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)


def coin_grover(k: int) -> np.ndarray:
    """Grover diffusion coin, entries ``2/k - delta_ij``."""
    if k < 2:
        raise BadDimension(f"Grover coin needs k >= 2, got {k}")
    return np.full((k, k), 2.0 / k, dtype=np.complex128) - np.eye(k, dtype=np.complex128)


def coin_fourier(k: int) -> np.ndarray:
    """Discrete Fourier coin, entries ``omega^(j*l) / sqrt(k)``."""
    if k < 2:
        raise BadDimension(f"Fourier coin needs k >= 2, got {k}")
    j = np.arange(k)
    return np.exp(2j * np.pi * np.outer(j, j) / k) / np.sqrt(k)


def coin_by_name(name: str, k: int) -> np.ndarray:
    """``hadamard`` (k = 2 only), ``grover`` or ``fourier``; ``k = 1`` gives the trivial coin."""
    if k == 1:
        return np.ones((1, 1), dtype=np.complex128)
    if name == "hadamard":
        if k != 2:
            raise BadDimension(f"Hadamard coin is 2x2, walk needs {k}x{k}")
        return coin_hadamard()
    if name == "grover":
        return coin_grover(k)
    if name == "fourier":
        return coin_fourier(k)
    raise ValueError(f"unknown coin {name!r}")


def unitarity_error(U: np.ndarray) -> float:
    """``max |U^H U - I|``."""
    return float(np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))))


def build_shift(fac: Factorization) -> np.ndarray:
    """Block-diagonal permutation matrix moving each coin block along its factor."""
    n, k = fac.host_n, fac.k
    T = np.zeros((k * n, k * n), dtype=np.complex128)
    for j, f in enumerate(fac.factors):
        for i, l in f.arcs():
            T[j * n + l, j * n + i] = 1.0
    return T


@dataclass(frozen=True)
class WalkOperator:
    U: np.ndarray
    coin: np.ndarray
    shift: np.ndarray
    k: int
    n: int
    factorization: Factorization
    coin_name: str = "custom"

    def index(self, j: int, v: int) -> int:
        """Position of ``|F_j, v>`` in the basis."""
        return j * self.n + v

    def to_dict(self, tol: float = SUPPORT_TOL) -> dict:
        rows, cols = np.nonzero(np.abs(self.U) > tol)
        return {
            "dims": [int(self.U.shape[0]), int(self.U.shape[1])],
            "k": self.k,
            "n": self.n,
            "coin": self.coin_name,
            "factors": [list(f.successor) for f in self.factorization.factors],
            "entries": [
                [int(r), int(c), float(self.U[r, c].real), float(self.U[r, c].imag)]
                for r, c in zip(rows.tolist(), cols.tolist())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class WalkState:
    psi: np.ndarray
    time: int = 0

    def __post_init__(self):
        object.__setattr__(self, "psi", np.asarray(self.psi, dtype=np.complex128))
        norm = np.linalg.norm(self.psi)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state norm {norm} is not 1")


def build_walk(
    D: Digraph,
    coin: np.ndarray,
    factorization: Factorization | None = None,
    coin_name: str = "custom",
) -> WalkOperator:
    """Transition matrix ``shift @ kron(coin, I_n)`` of the coined walk on ``D``.

    Raises
    ------
    NotRegular
        ``D`` is not regular.
    DimensionMismatch
        Coin size differs from the regularity degree.
    NotUnitary
        ``coin`` is not unitary within ``1e-12``.
    """
    k = regularity(D)
    if not k:
        raise NotRegular("quantum walk needs a k-regular digraph with k >= 1")
    C = np.asarray(coin, dtype=np.complex128)
    if C.shape != (k, k):
        raise DimensionMismatch(f"coin is {C.shape}, digraph is {k}-regular")
    if unitarity_error(C) > UNITARY_TOL:
        raise NotUnitary("coin is not unitary")
    fac = factorization if factorization is not None else one_factorization(D)
    fac.check_covers(D)
    T = build_shift(fac)
    U = T @ np.kron(C, np.eye(D.n))
    return WalkOperator(U, C, T, k, D.n, fac, coin_name)


def basis_state(W: WalkOperator, j: int, v: int) -> WalkState:
    psi = np.zeros(W.k * W.n, dtype=np.complex128)
    psi[W.index(j, v)] = 1.0
    return WalkState(psi)


def uniform_state(W: WalkOperator) -> WalkState:
    N = W.k * W.n
    return WalkState(np.full(N, 1 / np.sqrt(N), dtype=np.complex128))


def evolve(W: WalkOperator, psi0: WalkState, t: int) -> WalkState:
    """Apply ``U`` to the state ``t`` times."""
    if psi0.psi.shape != (W.U.shape[0],):
        raise DimensionMismatch(f"state has length {psi0.psi.size}, walk needs {W.U.shape[0]}")
    if t < 0:
        raise ValueError("t must be nonnegative")
    psi = psi0.psi
    for _ in range(t):
        psi = W.U @ psi
    return WalkState(psi, psi0.time + t)


def trajectory(W: WalkOperator, psi0: WalkState, steps: int) -> Iterator[WalkState]:
    """States at times ``0 .. steps``."""
    state = psi0
    yield state
    for _ in range(steps):
        state = WalkState(W.U @ state.psi, state.time + 1)
        yield state


def distribution(W: WalkOperator, psi: WalkState) -> np.ndarray:
    """Vertex probabilities: the coin register summed out, ``sum_j |<F_j, v|psi>|^2``."""
    amp = np.abs(psi.psi.reshape(W.k, W.n)) ** 2
    return amp.sum(axis=0)


def support_digraph(M: np.ndarray, tol: float = SUPPORT_TOL) -> Digraph:
    """Digraph whose adjacency is the nonzero pattern ``|M_ij| > tol``."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got {M.shape}")
    return from_adjacency((np.abs(M) > tol).astype(np.int64), allow_loops=True)


def verify_underlying_line_digraph(
    D: Digraph,
    coin: np.ndarray,
    factorization: Factorization | None = None,
    tol: float = SUPPORT_TOL,
    strict: bool = False,
) -> Report:
    """Check that the digraph of the walk's transition matrix is a line digraph.

    The report holds one entry per assertion: unitarity of ``U``; support
    of ``U`` equal to the transposed block line matrix; the reversed
    support equal to the line digraph of ``D`` under the block labelling;
    and the reversed support passing the matrix recognition test (skipped
    when it has loops).

    A coin with zero entries gives a support strictly inside the pattern;
    then the support check degrades to containment, or ``CoinHasZeros``
    is raised when ``strict`` is set.
    """
    W = build_walk(D, coin, factorization)
    rep = Report("walk-support", {"n": D.n, "m": D.m, "k": W.k})
    err = unitarity_error(W.U)
    rep.add("unitary", "U^H U = I", err <= UNITARY_TOL, f"max deviation {err:.3e}")

    S = support_digraph(W.U, tol)
    pattern = block_line_matrix(W.factorization).T
    got = adjacency(S)
    zero_free = bool(np.all(np.abs(W.coin) > tol))
    if zero_free:
        rep.add(
            "support-equals-transposed-block",
            "digraph of U is the transposed block line matrix",
            bool(np.array_equal(got, pattern)),
        )
    else:
        if strict:
            raise CoinHasZeros("coin has zero entries; support is a proper subdigraph")
        rep.add(
            "support-within-transposed-block",
            "digraph of U is contained in the transposed block line matrix",
            bool(np.all(got <= pattern)),
            "coin has zero entries",
        )

    R = reverse(S)
    line_block = conjugate(
        adjacency(line_digraph(D).graph), permutation_to_line_labels(W.factorization)
    )
    if zero_free:
        rep.add(
            "reverse-support-is-line-digraph-of-host",
            "reversed support equals the line digraph under the (F_j, v) labelling",
            bool(np.array_equal(adjacency(R), line_block)),
        )
    if R.has_loops:
        rep.skip("reverse-support-recognized", "matrix recognition", "support has loops")
    else:
        rep.add(
            "reverse-support-recognized",
            "matrix recognition of the reversed support",
            is_line_digraph_matrix(R),
        )
    return rep
