import pytest
from hypothesis import given, strategies as st

from brauerkit.errors import InputError
from brauerkit.terms import (
    BLOCK_CAP,
    BLOCK_CROSS,
    BLOCK_CUP,
    CIRCLE,
    UNIT,
    BlockSpec,
    Generator,
    NormalForm,
    Term,
    cap,
    circles,
    cross,
    cup,
    dual_of,
    enumerate_terms,
    expand_block,
    gen,
    nf_to_term,
    random_terms,
)

generators = st.builds(Generator, st.sampled_from("uns"), st.integers(1, 6))
terms = st.lists(generators, max_size=10).map(lambda gs: Term(tuple(gs)))


def T(*pairs):
    return Term(tuple(Generator(k, i) for k, i in pairs))


def test_generator_index_must_be_positive():
    with pytest.raises(InputError):
        gen("u", 0)
    with pytest.raises(InputError):
        Term((Generator("s", 0),))
    with pytest.raises(InputError):
        gen("q", 1)


def test_product_is_concatenation():
    assert cup(1) * cap(2) == T(("u", 1), ("n", 2))
    assert UNIT * cross(3) == cross(3) * UNIT == cross(3)
    assert str(UNIT) == "1"
    assert str(T(("u", 1), ("s", 2))) == "u1 s2"


@given(terms, terms, terms)
def test_associativity_and_unit(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert UNIT * a == a * UNIT == a


def test_circle_powers():
    assert circles(0) == UNIT
    assert circles(3) == CIRCLE * CIRCLE * CIRCLE
    assert CIRCLE == T(("u", 1), ("n", 1))


def test_expand_block_examples():
    assert expand_block(BlockSpec(BLOCK_CUP, 3, 3)) == cup(3)
    assert expand_block(BlockSpec(BLOCK_CROSS, 2, 1)) == T(("s", 2), ("s", 1))
    # unrolled by hand: n[3,1] = s3 n[2,1] = s3 s2 n[1,1]
    assert expand_block(BlockSpec(BLOCK_CAP, 3, 1)) == T(("s", 3), ("s", 2), ("n", 1))
    assert expand_block(BlockSpec(BLOCK_CUP, 4, 2)) == T(("u", 2), ("s", 3), ("s", 4))


@pytest.mark.parametrize("hi,lo", [(1, 2), (0, 0), (3, 0)])
def test_block_spec_rejects_bad_indices(hi, lo):
    with pytest.raises(InputError):
        BlockSpec(BLOCK_CAP, hi, lo)


def test_block_spec_text():
    assert str(BlockSpec(BLOCK_CUP, 4, 2)) == "u[2,4]"
    assert str(BlockSpec(BLOCK_CAP, 4, 2)) == "n[4,2]"
    assert str(BlockSpec(BLOCK_CROSS, 4, 2)) == "x[4,2]"


def test_nf_to_term_examples():
    assert nf_to_term(NormalForm()) == UNIT
    assert nf_to_term(NormalForm(circles=1)) == T(("u", 1), ("n", 1))
    assert nf_to_term(NormalForm(crossings=((1, 1), (2, 1)))) == T(("s", 1), ("s", 2), ("s", 1))


def test_nf_caps_display_in_decreasing_order():
    nf = NormalForm(caps=((2, 1), (4, 3)))
    assert str(nf) == "n[4,3] n[2,1]"
    assert nf_to_term(nf) == T(("s", 4), ("n", 3), ("s", 2), ("n", 1))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"caps": ((2, 2), (3, 1))},
        {"crossings": ((2, 1), (2, 2))},
        {"cups": ((2, 3), (1, 1))},
        {"cups": ((3, 2),)},
        {"circles": -1},
    ],
)
def test_normal_form_invariants(kwargs):
    with pytest.raises(InputError):
        NormalForm(**kwargs)


def test_dual_examples():
    assert dual_of(cup(3)) == cap(3)
    assert dual_of(T(("s", 1), ("n", 2))) == T(("u", 2), ("s", 1))


@given(terms)
def test_dual_is_involution(t):
    assert dual_of(dual_of(t)) == t


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_terms(3, 5)) == sum(9**n for n in range(6))
    assert len(set(enumerate_terms(2, 3))) == sum(6**n for n in range(4))


def test_random_terms_are_seeded():
    assert random_terms(5, 20, 6, 12) == random_terms(5, 20, 6, 12)
    assert all(len(t) <= 12 and all(g.index <= 6 for g in t) for t in random_terms(5, 50, 6, 12))


def test_normal_form_json():
    nf = NormalForm(2, ((1, 1),), ((2, 1),), ((1, 3),))
    assert nf.to_json() == {"circles": 2, "caps": [[1, 1]], "crossings": [[2, 1]], "cups": [[1, 3]]}
    assert str(nf) == "c c n[1,1] x[2,1] u[1,3]"
