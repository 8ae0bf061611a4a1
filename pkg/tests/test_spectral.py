from math import factorial

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from linedigraph.digraph import Digraph, adjacency
from linedigraph.errors import ExponentNegative, NotRegular, NotSquare, TooLarge
from linedigraph.families import bidirected_cycle, complete_looped, dicycle, dipath, two_cube
from linedigraph.line import line_digraph
from linedigraph.spectral import (
    char_poly,
    debruijn_spectrum_check,
    det_bareiss,
    penrose_conditions,
    penrose_witness_regular,
    permanent,
    permanent_positivity_check,
    poly_eval,
    poly_format,
    poly_mul,
    verify_line_charpoly,
)

from conftest import digraphs
from oracles import permanent_brute


def sympy_charpoly(M) -> list[int]:
    n = len(M)
    if n == 0:
        return [1]
    coeffs = sympy.Matrix(M).charpoly().all_coeffs()
    return [int(c) for c in reversed(coeffs)]


int_matrices = st.integers(0, 7).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


@given(int_matrices)
@settings(max_examples=150, deadline=None)
def test_char_poly_matches_sympy(M):
    assert char_poly(M) == sympy_charpoly(M)


@given(int_matrices)
@settings(max_examples=150, deadline=None)
def test_det_matches_sympy_and_char_poly(M):
    d = det_bareiss(M)
    assert d == (int(sympy.Matrix(M).det()) if M else 1)
    assert d == (-1) ** len(M) * char_poly(M)[0]


def test_char_poly_large_entries():
    rng = np.random.default_rng(3)
    M = rng.integers(-10**6, 10**6, size=(9, 9)).tolist()
    assert char_poly(M) == sympy_charpoly(M)


def test_char_poly_rejects_non_square():
    with pytest.raises(NotSquare):
        char_poly([[1, 2, 3], [4, 5, 6]])


def test_poly_helpers():
    assert poly_mul([1, 1], [-1, 1]) == [-1, 0, 1]
    assert poly_eval([-1, 0, 1], 3) == 8
    assert poly_format([0] * 7 + [-2, 1]) == "x^7*(x-2)"
    assert poly_format([0, 0, -4, 0, 1]) == "x^2*(x^2-4)"
    assert poly_format([-1, 0, 0, 0, 0, 1]) == "x^5-1"
    assert poly_format([0, 0, 1]) == "x^2"
    assert poly_format([0]) == "0"


@given(digraphs(max_n=6, loops=True))
@settings(max_examples=150, deadline=None)
def test_line_charpoly_identity(D):
    if D.m >= D.n and D.m:
        assert verify_line_charpoly(D)


def test_line_charpoly_needs_enough_arcs():
    with pytest.raises(ExponentNegative):
        verify_line_charpoly(dipath(3))


def test_two_cube_spectrum():
    assert char_poly(adjacency(two_cube())) == [0, 0, -4, 0, 1]
    assert char_poly(adjacency(line_digraph(two_cube()).graph)) == [0] * 6 + [-4, 0, 1]


@pytest.mark.parametrize("d,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_debruijn_spectrum(d, k):
    assert debruijn_spectrum_check(d, k)


@given(st.integers(0, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=150, deadline=None)
def test_permanent_matches_brute_force(M):
    expected = permanent_brute(np.array(M, dtype=object).reshape(len(M), len(M))) if M else 1
    assert permanent(M) == expected


def test_permanent_known_values():
    assert permanent(np.ones((16, 16), dtype=int)) == factorial(16)
    assert permanent(np.eye(5, dtype=int)) == 1
    assert permanent([[0, 1], [0, 1]]) == 0
    assert permanent([[10**12, 10**12], [10**12, 10**12]]) == 2 * 10**24
    with pytest.raises(TooLarge):
        permanent(np.ones((5, 5), dtype=int), max_n=4)


def test_permanent_of_two_cube_line_digraph():
    assert permanent(adjacency(line_digraph(two_cube()).graph)) == 16


@given(digraphs(max_n=6, loops=True, min_arcs=1))
@settings(max_examples=100, deadline=None)
def test_permanent_positivity(D):
    if D.m <= 14:
        permanent_positivity_check(D)


def test_permanent_positivity_examples():
    assert permanent_positivity_check(two_cube())
    assert not permanent_positivity_check(dipath(4))
    assert permanent_positivity_check(Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)]))


@pytest.mark.parametrize("D", [dicycle(1), dicycle(6), two_cube(), complete_looped(3), bidirected_cycle(5)])
def test_penrose_witness(D):
    Mp = penrose_witness_regular(D)
    M = adjacency(line_digraph(D).graph)
    assert all(penrose_conditions(M, Mp))
    assert np.allclose(np.array(Mp, dtype=float), np.linalg.pinv(M.astype(float)))


def test_penrose_conditions_detect_wrong_candidate():
    M = adjacency(line_digraph(two_cube()).graph)
    assert not all(penrose_conditions(M, M.T))


def test_penrose_needs_regular():
    with pytest.raises(NotRegular):
        penrose_witness_regular(dipath(3))
