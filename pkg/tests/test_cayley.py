import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from linedigraph.cayley import (
    Perm,
    cayley_cyclic,
    cayley_dihedral,
    cycle_block_matrix,
    dihedral_generators,
    regular_representation,
    verify_cycle_example,
)
from linedigraph.digraph import Digraph, regularity
from linedigraph.errors import BadGenerators, BadOrder, TooLarge
from linedigraph.families import bidirected_cycle
from linedigraph.isomorphism import isomorphic

from conftest import digraphs


def test_perm_product_is_left_to_right():
    x = Perm((1, 2, 0))
    y = Perm((0, 2, 1))
    assert (x * y).mapping == tuple(y(x(i)) for i in range(3))
    assert (x * x.inverse()).is_identity()
    assert x**3 == Perm.identity(3)
    assert x**-1 == x.inverse()
    assert Perm.from_cycles(4, [(0, 1, 2)]).mapping == (1, 2, 0, 3)
    assert Perm.from_cycles(5, [(0, 3), (1, 2, 4)]).cycles() == [(0, 3), (1, 2, 4)]
    with pytest.raises(ValueError):
        Perm((0, 0))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_dihedral_relations(n):
    a, b = dihedral_generators(n)
    assert (a**n).is_identity() and (b * b).is_identity()
    assert a ** (n - 1) == b * a * b
    assert b.fixed_points() == [(n - 1) // 2]
    prism = cayley_dihedral(n)
    assert prism.graph.n == 2 * n and regularity(prism.graph) == 2


def test_cayley_cyclic():
    C = cayley_cyclic(5, {1, 4})
    assert C.graph == bidirected_cycle(5)
    with pytest.raises(BadGenerators):
        cayley_cyclic(5, {0})
    with pytest.raises(BadGenerators):
        cayley_cyclic(2, {1})


def test_regular_representation():
    R = regular_representation(5, 2)
    assert np.array_equal(R @ regular_representation(5, 3), np.eye(5, dtype=int))
    B = cycle_block_matrix(3)
    assert B.shape == (6, 6) and np.array_equal(B[:3], B[3:])


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_cycle_example(n):
    rep = verify_cycle_example(n)
    assert rep.passed, rep.to_lines()
    ids = [c.id for c in rep.checks]
    assert {"line-is-prism", "prism-block-form", "block-equals-factorization"} <= set(ids)


def test_cycle_example_errors():
    with pytest.raises(BadOrder):
        verify_cycle_example(4)
    with pytest.raises(TooLarge):
        verify_cycle_example(11)
    with pytest.raises(BadOrder):
        cayley_dihedral(6)


def _nx(D):
    G = nx.DiGraph()
    G.add_nodes_from(range(D.n))
    G.add_edges_from(D.arcs)
    return G


@given(digraphs(max_n=6, loops=True), digraphs(max_n=6, loops=True))
@settings(max_examples=200, deadline=None)
def test_isomorphism_matches_networkx(D1, D2):
    iso = isomorphic(D1, D2)
    assert (iso is not None) == nx.is_isomorphic(_nx(D1), _nx(D2))
    if iso is not None:
        assert {(iso[a], iso[b]) for a, b in D1.arcs} == D2.arcs


@given(digraphs(max_n=7, loops=True))
@settings(max_examples=100, deadline=None)
def test_isomorphic_to_relabelled_copy(D):
    perm = np.random.default_rng(D.m).permutation(D.n).tolist()
    E = Digraph(D.n, [(perm[a], perm[b]) for a, b in D.arcs], allow_loops=True)
    assert isomorphic(D, E) is not None


def test_isomorphism_size_cap():
    with pytest.raises(TooLarge):
        isomorphic(bidirected_cycle(11), bidirected_cycle(11))
