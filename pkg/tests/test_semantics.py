import pytest
from hypothesis import given, settings, strategies as st

from brauerkit.diagram import SKDiagram, cap_diag, cross_diag, cup_diag, identity_diag, permutation_diag
from brauerkit.rewrite import normalize_rewrite
from brauerkit.semantics import (
    circle_pad_witness,
    equal_sj,
    equal_sk,
    eval_iota,
    eval_kappa,
    extract_normal_form,
    generator_diag,
    normalize_diagram,
)
from brauerkit.terms import CIRCLE, Generator, NormalForm, Term, circles, nf_to_term
from oracles import matches_window, word_permutation

generators = st.builds(Generator, st.sampled_from("uns"), st.integers(1, 5))
terms = st.lists(generators, max_size=10).map(lambda gs: Term(tuple(gs)))


def T(text):
    return Term(tuple(Generator(tok[0], int(tok[1:])) for tok in text.split()))


def test_generator_diagrams():
    assert generator_diag(Generator("u", 2)) == cup_diag(2)
    assert generator_diag(Generator("n", 2)) == cap_diag(2)
    assert generator_diag(Generator("s", 2)) == cross_diag(2)


def test_unit_and_circle():
    assert eval_kappa(Term()) == SKDiagram(identity_diag(), 0)
    assert eval_kappa(CIRCLE) == SKDiagram(identity_diag(), 1)
    assert eval_kappa(circles(5)).circles == 5
    assert eval_iota(circles(5)) == identity_diag()


@settings(max_examples=500, deadline=None)
@given(terms)
def test_eval_matches_layer_oracle(t):
    assert matches_window(eval_kappa(t), [(g.kind, g.index) for g in t])


@settings(max_examples=200, deadline=None)
@given(terms, terms)
def test_eval_is_a_homomorphism(t, u):
    a, b = eval_kappa(t), eval_kappa(u)
    ab = eval_kappa(t * u)
    assert eval_iota(t * u) == ab.diagram
    assert ab.circles >= a.circles + b.circles


@given(st.lists(st.integers(1, 4), max_size=8))
def test_crossing_words_realize_the_oracle_permutation(ks):
    d = eval_iota(Term(tuple(Generator("s", k) for k in ks)))
    assert d == permutation_diag(word_permutation(ks, 5))


@settings(max_examples=300, deadline=None)
@given(terms)
def test_extraction_round_trip(t):
    sk = eval_kappa(t)
    nf = extract_normal_form(sk)
    assert eval_kappa(nf_to_term(nf)) == sk
    assert nf == normalize_diagram(t)


@settings(max_examples=300, deadline=None)
@given(terms)
def test_engines_agree(t):
    assert normalize_rewrite(t) == extract_normal_form(eval_kappa(t))


def test_extraction_examples():
    assert extract_normal_form(eval_kappa(T("s2 s1 s2"))) == NormalForm(crossings=((1, 1), (2, 1)))
    assert extract_normal_form(eval_kappa(T("u1 n1 u1 n1"))) == NormalForm(circles=2)
    assert extract_normal_form(SKDiagram(cup_diag(3))) == NormalForm(cups=((3, 3),))


def test_equalities():
    assert equal_sk(T("u1 n2"), Term())
    assert not equal_sk(CIRCLE, Term())
    assert equal_sj(CIRCLE, Term())
    assert not equal_sj(T("s1"), Term())


@pytest.mark.parametrize(
    "t,u,expected",
    [
        ("u1 n1", "", (0, 1)),
        ("", "u1 n1 u1 n1", (2, 0)),
        ("s1", "s1", (0, 0)),
        ("s1", "s2", None),
    ],
)
def test_circle_pad_witness(t, u, expected):
    assert circle_pad_witness(T(t), T(u)) == expected


@settings(max_examples=200, deadline=None)
@given(terms, terms)
def test_witness_balances_circles(t, u):
    w = circle_pad_witness(t, u)
    if w is None:
        assert not equal_sj(t, u)
    else:
        n, m = w
        assert equal_sk(circles(n) * t, circles(m) * u)
        assert (n != m) == (not equal_sk(t, u))
