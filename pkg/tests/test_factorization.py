import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from linedigraph.digraph import Digraph, adjacency, regularity
from linedigraph.errors import InvalidDigraph, NotRegular, NotSpanning, NotSubdigraph, ParseError
from linedigraph.factorization import (
    Factorization,
    OneFactor,
    block_line_matrix,
    conjugate,
    growth,
    growth_block_matrix,
    line_growth,
    line_matrix_in_block_order,
    one_factorization,
    perfect_matching,
    permutation_to_line_labels,
    read_factorization,
    write_factorization,
)
from linedigraph.families import (
    TWO_CUBE_F1,
    TWO_CUBE_F2,
    complete_looped,
    dicycle,
    random_regular_digraph,
    two_cube,
)
from linedigraph.isomorphism import isomorphic
from linedigraph.line import line_digraph

# Matrices displayed in the worked 2-cube example.
M_F1 = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
M_F2 = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
GROWTH_F1_TOP = np.array([
    [0, 1, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 0],
])


def example_factorization():
    return Factorization((OneFactor(TWO_CUBE_F1), OneFactor(TWO_CUBE_F2)), 4)


def test_example_factor_matrices():
    fac = example_factorization()
    assert np.array_equal(fac.factors[0].matrix(), M_F1)
    assert np.array_equal(fac.factors[1].matrix(), M_F2)
    assert np.array_equal(M_F1 + M_F2, adjacency(two_cube()))


def test_block_line_matrix_fixture():
    fac = example_factorization()
    expected = np.block([[M_F1, M_F2], [M_F1, M_F2]])
    assert np.array_equal(block_line_matrix(fac), expected)
    assert np.array_equal(line_matrix_in_block_order(two_cube(), fac), expected)


def test_growth_grids_match_display():
    fac = example_factorization()
    G1 = growth_block_matrix(fac, 0)
    assert np.array_equal(G1[:4], GROWTH_F1_TOP)
    assert not G1[4:].any()
    G2 = growth_block_matrix(fac, 1)
    assert np.array_equal(G2[4:], GROWTH_F1_TOP)
    assert not G2[:4].any()
    assert np.array_equal(G1 + G2, block_line_matrix(fac))


def test_growth_isomorphic_to_line_growth():
    D, fac = two_cube(), example_factorization()
    for j, f in enumerate(fac.factors):
        F = Digraph(4, f.arcs())
        g = growth(D, F).graph
        lg = line_growth(fac, j)
        # line_growth keeps all kn vertices; the growth uses only those with arcs.
        used = sorted({v for a in lg.arcs for v in a})
        idx = {v: i for i, v in enumerate(used)}
        compact = Digraph(len(used), [(idx[a], idx[b]) for a, b in lg.arcs], allow_loops=True)
        assert g.n == compact.n == 8
        assert isomorphic(g, compact) is not None


def test_growth_bookkeeping():
    D = two_cube()
    F = Digraph(4, OneFactor(TWO_CUBE_F1).arcs())
    res = growth(D, F)
    assert res.anchor == (0, 1, 2, 3)
    assert res.missing_arc == ((0, 2), (1, 3), (2, 0), (3, 1))
    assert all(res.graph.out_degree(v) == 2 for v in range(4))
    with pytest.raises(NotSubdigraph):
        growth(dicycle(4), F)
    with pytest.raises(NotSpanning):
        growth(D, Digraph(3, [(0, 1)]))


def test_seeded_factorization_reproduces_example():
    fac = one_factorization(two_cube(), seed_factors=[TWO_CUBE_F1])
    assert fac.factors[0].successor == TWO_CUBE_F1
    assert fac.factors[1].successor == TWO_CUBE_F2
    with pytest.raises(NotSubdigraph):
        one_factorization(two_cube(), seed_factors=[(1, 2, 3, 0)])


@st.composite
def regular_digraphs(draw):
    n = draw(st.integers(2, 8))
    k = draw(st.integers(1, min(3, n - 1)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_regular_digraph(n, k, np.random.default_rng(seed))


@given(regular_digraphs())
@settings(max_examples=80, deadline=None)
def test_one_factorization_partitions_arcs(D):
    fac = one_factorization(D)
    k = regularity(D)
    assert fac.k == k
    arcs = [a for f in fac.factors for a in f.arcs()]
    assert sorted(arcs) == D.sorted_arcs()


@given(regular_digraphs())
@settings(max_examples=80, deadline=None)
def test_block_order_relabels_line_digraph(D):
    fac = one_factorization(D)
    perm = permutation_to_line_labels(fac)
    assert sorted(perm.tolist()) == list(range(D.m))
    assert np.array_equal(conjugate(adjacency(line_digraph(D).graph), perm), block_line_matrix(fac))


def test_looped_factorization():
    fac = one_factorization(complete_looped(3))
    assert fac.k == 3
    assert np.array_equal(block_line_matrix(fac).sum(axis=0), [3] * 9)


def test_not_regular():
    with pytest.raises(NotRegular):
        one_factorization(Digraph(3, [(0, 1), (1, 2)]))


def test_perfect_matching():
    assert perfect_matching(3, [[1], [2], [0]]) == [1, 2, 0]
    assert perfect_matching(2, [[0], [0]]) is None


def test_factor_validation():
    with pytest.raises(InvalidDigraph):
        OneFactor((0, 0, 1))
    with pytest.raises(InvalidDigraph):
        Factorization((OneFactor((1, 0)), OneFactor((1, 0))), 2)
    with pytest.raises(InvalidDigraph):
        example_factorization().check_covers(dicycle(4))


def test_factorization_text_roundtrip():
    fac = example_factorization()
    text = write_factorization(fac)
    assert text == "factors 2 4\n1 0 3 2\n2 3 0 1\n"
    assert read_factorization(text) == fac
    with pytest.raises(ParseError):
        read_factorization("factors 2 4\n1 0 3 2\n")
