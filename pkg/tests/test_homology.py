import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgebetti.graph import complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph
from edgebetti.homology import (
    BoundaryMatrix,
    boundary_matrix,
    check_field,
    face_counts,
    independent_sets_of_size,
    is_cone,
    rank_gf2,
    rank_mod_p,
    reduced_betti_vector,
    reduced_euler_from_counts,
)
from edgebetti.oracle import naive_euler, naive_rank, naive_reduced_betti

from conftest import graphs


def test_independent_sets_c5():
    c5 = cycle_graph(5)
    brute = sorted(
        sum(1 << v for v in pair)
        for pair in itertools.combinations(range(5), 2)
        if not c5.has_edge(*pair)
    )
    basis = independent_sets_of_size(c5, 2)
    assert len(basis) == 5
    assert sorted(basis.faces) == brute


def test_independent_sets_trivial():
    assert independent_sets_of_size(complete_graph(3), 2).faces == ()
    assert independent_sets_of_size(cycle_graph(5), 0).faces == (0,)


@given(graphs(), st.integers(0, 7))
def test_independent_sets_lex_sorted(g, k):
    k = min(k, g.n)
    faces = independent_sets_of_size(g, k).faces
    as_tuples = [tuple(v for v in range(g.n) if f >> v & 1) for f in faces]
    assert as_tuples == sorted(as_tuples)
    assert all(g.is_independent(f) and bin(f).count("1") == k for f in faces)


def test_augmentation_row():
    g = path_graph(4)
    m = boundary_matrix(g, 1, 3)
    assert m.entries.shape == (1, 4)
    assert (m.entries == 1).all()


def test_c5_second_boundary():
    m = boundary_matrix(cycle_graph(5), 2, 2)
    assert (m.rows, m.cols) == (5, 5)
    dense = [list(map(int, row)) for row in m.entries]
    assert naive_rank(dense, 2) == 4
    assert rank_mod_p(m) == 4


@settings(max_examples=40)
@given(graphs(), st.sampled_from([2, 3, 5]))
def test_boundary_squared_is_zero(g, p):
    k = 1
    while True:
        upper = boundary_matrix(g, k + 1, p)
        if upper.cols == 0:
            break
        lower = boundary_matrix(g, k, p)
        assert not ((lower.entries @ upper.entries) % p).any()
        k += 1


@given(graphs(min_n=1), st.sampled_from([2, 3, 5]))
def test_columns_carry_k_signed_entries(g, p):
    for k in range(1, 4):
        m = boundary_matrix(g, k, p)
        for c in range(m.cols):
            col = m.entries[:, c]
            nz = col[col != 0]
            assert len(nz) == k
            expected = [1 if t % 2 == 0 else p - 1 for t in range(k)]
            assert sorted(nz.tolist()) == sorted(expected)


def test_rank_trivial_cases():
    for d in (1, 4, 9):
        assert rank_mod_p(np.eye(d, dtype=np.int64), 3) == d
        assert rank_mod_p(np.eye(d, dtype=np.int64), 2) == d
    assert rank_mod_p(np.zeros((4, 6), dtype=np.int64), 5) == 0
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 2) == 0


def test_rank_agrees_with_naive_oracle():
    rng = random.Random(11)
    for trial in range(1000):
        p = (2, 3, 5)[trial % 3]
        rows, cols = rng.randint(1, 20), rng.randint(1, 20)
        density = rng.random()
        m = [[rng.randrange(p) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]
        assert rank_mod_p(np.array(m), p) == naive_rank(m, p)


def test_rank_gf2_bit_vectors():
    assert rank_gf2([0b011, 0b110, 0b101]) == 2
    assert rank_gf2([]) == 0
    assert rank_gf2([0, 0]) == 0


def test_bit_rows():
    m = BoundaryMatrix(2, 2, np.array([[1, 0, 1], [0, 1, 1]]))
    assert m.bit_rows() == [0b101, 0b110]


@pytest.mark.parametrize("p", [2, 3])
def test_c5_is_a_circle(p):
    b = reduced_betti_vector(cycle_graph(5), p)
    assert (b[-1], b[0], b[1]) == (0, 0, 1)
    assert naive_reduced_betti(cycle_graph(5), p) == list(b.values)


def test_k2_is_s0():
    b = reduced_betti_vector(complete_graph(2))
    assert b[0] == 1 and b.nonzero() == {0: 1}


def test_simplex_is_acyclic():
    assert reduced_betti_vector(empty_graph(3)).nonzero() == {}


def test_empty_complex_convention():
    b = reduced_betti_vector(empty_graph(0))
    assert b[-1] == 1 and b.nonzero() == {-1: 1}


def test_restricting_to_a_subset():
    c5 = cycle_graph(5)
    assert reduced_betti_vector(c5, 2, 0b01111).nonzero() == {}  # P4 is contractible
    assert reduced_betti_vector(c5, 2, 0b00101).nonzero() == {}  # non-adjacent pair: an edge


@settings(max_examples=80)
@given(graphs(), st.sampled_from([2, 3, 5]))
def test_euler_identity(g, p):
    b = reduced_betti_vector(g, p)
    chi = reduced_euler_from_counts(face_counts(g))
    assert b.euler_characteristic() == chi == naive_euler(g)


@settings(max_examples=80)
@given(graphs(max_n=6), st.sampled_from([2, 3]))
def test_matches_naive_homology(g, p):
    assert list(reduced_betti_vector(g, p).values) == naive_reduced_betti(g, p)


def test_is_cone_examples():
    assert is_cone(disjoint_union(complete_graph(2), empty_graph(1)))
    assert not is_cone(cycle_graph(5))
    assert is_cone(empty_graph(2))


@given(graphs(min_n=1), st.sampled_from([2, 3]))
def test_cones_are_acyclic(g, p):
    if is_cone(g):
        assert reduced_betti_vector(g, p).nonzero() == {}


@pytest.mark.parametrize("bad", [0, 1, 4, 46339, 2.0, "2"])
def test_check_field_rejects(bad):
    with pytest.raises(ValueError):
        check_field(bad)


def test_check_field_accepts_largest():
    assert check_field(46337) == 46337


def test_euler_characteristic_is_an_int():
    b = reduced_betti_vector(cycle_graph(6))
    assert type(b.euler_characteristic()) is int and b.euler_characteristic() == -2
    assert type(reduced_euler_from_counts(face_counts(cycle_graph(6)))) is int
    assert type(naive_euler(cycle_graph(6))) is int
