import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from brauerkit import adjunction as adj
from brauerkit.adjunction import Chi, Comp, Fap, Gamma, Id, Phi
from brauerkit.errors import DimensionCapError, InputError
from brauerkit.matrep import (
    BoolMatrix,
    IntMatrix,
    dimension_cap,
    e_matrix,
    h_matrix,
    id_matrix,
    kron,
    matmul,
    rep_j,
    rep_k,
    s_matrix,
    to_bool,
    transpose,
    verify_subsided_mat,
)
from oracles import swap_matrix

S32 = [
    [1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1],
]
E22 = [
    [1, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 1],
]

ARROWS = adj.enumerate_arrows(2, 5)


def small_matrix(rows, cols):
    return st.lists(st.integers(-5, 5), min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: IntMatrix(np.array(xs, dtype=np.int64).reshape(rows, cols))
    )


def test_displayed_matrices():
    assert s_matrix(3, 2).tolist() == S32
    assert e_matrix(2, 2).tolist() == E22
    assert h_matrix(2, 2).tolist() == [list(r) for r in zip(*E22)]


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 2), (4, 2)])
def test_swap_matches_basis_oracle(m, n):
    assert s_matrix(m, n) == IntMatrix(swap_matrix(m, n))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_swap_is_natural(m, n, data):
    a = data.draw(small_matrix(m, m))
    b = data.draw(small_matrix(n, n))
    assert s_matrix(m, n) @ kron(a, b) == kron(b, a) @ s_matrix(m, n)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_kron_interchange(data):
    a, c = data.draw(small_matrix(2, 3)), data.draw(small_matrix(3, 2))
    b, d = data.draw(small_matrix(2, 2)), data.draw(small_matrix(2, 1))
    assert kron(a @ c, b @ d) == kron(a, b) @ kron(c, d)


def test_large_entries_stay_exact():
    big = IntMatrix(np.array([[2**40]], dtype=np.int64))
    prod = big @ big @ big
    assert prod[0, 0] == 2**120
    assert prod.data.dtype == object
    assert IntMatrix.from_json(prod.to_json()) == prod
    assert kron(prod, id_matrix(2))[1, 1] == 2**120


def test_matmul_shape_check():
    with pytest.raises(InputError):
        matmul(id_matrix(2), id_matrix(3))
    with pytest.raises(InputError):
        matmul(to_bool(id_matrix(2)), id_matrix(2))


def test_boolean_semiring():
    ones = BoolMatrix(np.ones((2, 2), dtype=bool))
    assert (ones @ ones).tolist() == [[1, 1], [1, 1]]
    assert to_bool(IntMatrix([[0, 3], [-1, 0]])).tolist() == [[0, 1], [1, 0]]
    assert transpose(to_bool(e_matrix(2, 1))).shape == (4, 1)


def test_generator_images():
    p = 3
    assert rep_k(Id(2), p) == id_matrix(9)
    assert rep_k(Phi(0), p) == e_matrix(3, 1)
    assert rep_k(Gamma(1), p) == h_matrix(3, 3)
    assert rep_k(Chi(0), p) == s_matrix(3, 3)
    assert rep_k(Fap(Chi(0)), p) == kron(id_matrix(3), s_matrix(3, 3))


@pytest.mark.parametrize("p", [2, 3])
def test_circle_is_p(p):
    assert rep_k(adj.kappa_arrow(0), p).tolist() == [[p]]
    assert rep_j(adj.kappa_arrow(0), p).tolist() == [[1]]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ARROWS), st.sampled_from(ARROWS))
def test_equal_arrows_have_equal_matrices(f, g):
    if adj.equal_k(f, g):
        assert rep_k(f) == rep_k(g)
    if adj.equal_j(f, g):
        assert rep_j(f) == rep_j(g)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(ARROWS), st.sampled_from(ARROWS))
def test_tensor_goes_to_kron(f, g):
    assume(adj.max_object(f) + adj.max_object(g) <= 10)
    assert rep_k(adj.tensor(f, g)) == kron(rep_k(f), rep_k(g))


def test_axioms_hold_in_matrices():
    for name, lhs, rhs in adj.axiom_instances(3):
        assert rep_k(lhs, 2) == rep_k(rhs, 2), name


def test_dimension_cap(monkeypatch):
    assert dimension_cap() == 4096
    assert rep_k(Id(12), 2).shape == (4096, 4096)
    with pytest.raises(DimensionCapError):
        rep_k(Id(13), 2)
    with pytest.raises(DimensionCapError):
        rep_k(Id(3), 2, dim_cap=7)
    monkeypatch.setenv("BRAUERKIT_DIM_CAP", "4")
    with pytest.raises(DimensionCapError):
        rep_k(Chi(1), 2)
    monkeypatch.setenv("BRAUERKIT_DIM_CAP", "many")
    with pytest.raises(InputError):
        dimension_cap()


def test_p_must_be_at_least_two():
    with pytest.raises(InputError):
        rep_k(Id(1), 1)


def test_subsided_small_run():
    r = verify_subsided_mat(max_dim=3, trials=20, seed=1)
    assert r.ok, r.failures[:3]
