import pytest
from hypothesis import given, settings, strategies as st

from brauerkit import adjunction as adj
from brauerkit.adjunction import Chi, Comp, Fap, Gamma, Id, Phi
from brauerkit.errors import ArrowTypeError, InputError
from brauerkit.terms import Generator, Term

generators = st.builds(Generator, st.sampled_from("uns"), st.integers(1, 4))
terms = st.lists(generators, max_size=8).map(lambda gs: Term(tuple(gs)))
ARROWS = adj.enumerate_arrows(2, 5)
arrows = st.sampled_from(ARROWS)


def test_types():
    assert adj.typ(Phi(1)) == (3, 1)
    assert adj.typ(Gamma(1)) == (1, 3)
    assert adj.typ(Chi(0)) == (2, 2)
    assert adj.typ(Fap(Phi(0))) == (3, 1)
    assert adj.typ(Comp(Phi(0), Gamma(0))) == (0, 0)


def test_ill_typed_composition():
    with pytest.raises(ArrowTypeError):
        Comp(Phi(0), Phi(0))
    with pytest.raises(InputError):
        Id(-1)
    with pytest.raises(InputError):
        adj.comp()


def test_triangular_equations():
    assert adj.equal_k(Comp(Phi(1), Fap(Gamma(0))), Id(1))
    assert adj.equal_k(Comp(Fap(Phi(0)), Gamma(1)), Id(1))
    assert adj.equal_k(Comp(Chi(0), Chi(0)), Id(2))
    assert not adj.equal_k(adj.kappa_arrow(0), Id(0))
    assert adj.equal_j(adj.kappa_arrow(0), Id(0))


def test_axiom_instances_hold():
    names = set()
    for name, lhs, rhs in adj.axiom_instances(3):
        names.add(name)
        assert adj.equal_k(lhs, rhs), name
    assert {"chi chi", "chi chi chi", "chi phi 1", "chi phi 2", "chi gamma 1", "chi gamma 2", "F kappa"} <= names


def test_subsided_instances_hold():
    names = set()
    for name, lhs, rhs in adj.subsided_instances_k(3):
        names.add(name)
        assert adj.equal_k(lhs, rhs), name
    assert {"s2", "s3", "eps1", "eps2", "eta1", "eta2", "nat s"} <= names


def test_psi_examples():
    assert str(adj.psi(Phi(0))) == "u1"
    assert str(adj.psi(Gamma(2))) == "n3"
    assert str(adj.psi(Comp(Fap(Chi(0)), Chi(1)))) == "s1 s2"
    assert adj.psi(Id(4)) == Term()


def test_xi_of_unit():
    assert adj.xi(Term()) == Id(0)


@settings(max_examples=300, deadline=None)
@given(terms)
def test_psi_xi_is_identity(t):
    assert adj.psi(adj.xi(t)) == t


@settings(max_examples=300, deadline=None)
@given(arrows)
def test_xi_psi_up_to_padding(f):
    assert adj.equiv_k(adj.xi(adj.psi(f)), f)


@given(arrows, arrows)
def test_cancellation(f, g):
    if adj.typ(f) == adj.typ(g) and adj.equal_k(Fap(f), Fap(g)):
        assert adj.equal_k(f, g)


def test_tensor_conventions():
    assert str(adj.psi(adj.tensor(Chi(0), Id(1)))) == "s2"
    assert str(adj.psi(adj.tensor(Id(1), Chi(0)))) == "s1"
    assert adj.typ(adj.tensor(Phi(0), Gamma(0))) == (2, 2)


@settings(max_examples=100, deadline=None)
@given(arrows, arrows, arrows, arrows)
def test_tensor_interchange(f, g, h, k):
    if f.tgt != h.src or g.tgt != k.src:
        return
    lhs = adj.tensor(Comp(h, f), Comp(k, g))
    rhs = Comp(adj.tensor(h, k), adj.tensor(f, g))
    assert adj.equal_k(lhs, rhs)


@settings(max_examples=100, deadline=None)
@given(arrows, arrows, arrows)
def test_tensor_is_associative(f, g, h):
    assert adj.equal_k(adj.tensor(adj.tensor(f, g), h), adj.tensor(f, adj.tensor(g, h)))


@pytest.mark.parametrize("n,m", [(0, 2), (1, 1), (2, 3), (3, 1)])
def test_symmetry_types_and_involution(n, m):
    s = adj.sym(n, m)
    assert adj.typ(s) == (n + m, n + m)
    assert adj.equal_k(Comp(adj.sym(m, n), s), Id(n + m))


def test_epsilon_eta_types():
    assert adj.typ(adj.epsilon(2, 1)) == (5, 1)
    assert adj.typ(adj.eta(2, 1)) == (1, 5)
    assert adj.epsilon(0, 3) == Id(3)


def test_enumeration():
    assert len(ARROWS) == 500
    assert len(set(ARROWS)) == len(ARROWS)
    assert adj.max_object(Fap(Phi(0))) == 3
