import pytest
from hypothesis import given, strategies as st

from bigl.algebra import (
    GROUP,
    OSC,
    AlphabetMismatch,
    Element,
    LegMismatch,
    TensorElement,
    elem_mul,
    embed_leg,
    gen,
    star,
    tensor_mul,
)
from bigl.rewrite import all_generators
from bigl.scalar import ONE, Q, Laurent

a1, a2, ad1, ad2 = gen("a", 1), gen("a", 2), gen("ad", 1), gen("ad", 2)
al11, b11, f1, fs1 = gen("al", 1, 1), gen("b", 1, 1), gen("f", 1), gen("fs", 1)
HA = (GROUP, OSC)
HH = (GROUP, GROUP)


def W(*g):
    return Element.word(*g)


def test_elem_mul_examples():
    assert elem_mul(W(a1), W(ad1)) == Element({(a1, ad1): 1})
    x = W(a1) + W(ad2).scale(Q)
    assert x * Element.scalar(1) == x
    assert (W(a1) + W(a2)) * W(a1) == W(a1, a1) + W(a2, a1)


def test_alphabets_do_not_mix():
    with pytest.raises(AlphabetMismatch):
        W(a1) * W(al11)
    with pytest.raises(AlphabetMismatch):
        Element({(a1, al11): 1})


def test_star_examples():
    assert star(W(a1, ad2)) == W(a2, ad1)
    assert star(W(f1).scale(Q)) == W(fs1).scale(Q)
    x = W(al11, b11) + W(f1).scale(Q + 2)
    assert star(star(x)) == x


def test_generator_arity():
    with pytest.raises(ValueError):
        gen("al", 1)
    with pytest.raises(ValueError):
        gen("f", 1, 2)


def test_tensor_mul_examples():
    x = TensorElement(HA, {((al11,), (a1,)): 1})
    y = TensorElement(HA, {((b11,), (ad1,)): 1})
    assert tensor_mul(x, y) == TensorElement(HA, {((al11, b11), (a1, ad1)): 1})
    assert x * TensorElement.unit(HA) == x
    u = TensorElement(HA, {((f1,), ()): 1}) * TensorElement(HA, {((), (a1,)): 1})
    assert u == TensorElement(HA, {((f1,), (a1,)): 1})


def test_tensor_leg_checks():
    with pytest.raises(LegMismatch):
        TensorElement(HA) * TensorElement(HH)
    with pytest.raises(AlphabetMismatch):
        TensorElement(HA, {((a1,), ()): 1})


def test_embed_leg_examples():
    assert embed_leg(W(al11), 0, HH) == TensorElement(HH, {((al11,), ()): 1})
    assert embed_leg(Element.scalar(1), 1, HH) == TensorElement.unit(HH)
    got = embed_leg(W(f1).scale(Q), 1, (GROUP,) * 3)
    assert got == TensorElement((GROUP,) * 3, {((), (f1,), ()): Q})


def test_rendering_is_deterministic():
    x = W(a1) + W(ad1, a1).scale(Q) + Element.scalar(1)
    assert str(x) == "q*ad(1)*a(1) + a(1) + 1"
    assert str(Element()) == "0"
    assert str(W(a1).scale(Q + 1)) == "(1 + q)*a(1)"
    assert str(Element.scalar(Q + 1)) == "1 + q"


def test_json_shape():
    x = W(al11).scale(Laurent.monomial(2, -1))
    assert x.to_json() == [{"coeff": "2*q^-1", "word": [["Alpha", 1, 1]]}]


# random small elements over one alphabet -----------------------------------

def elements(alphabet):
    gens = all_generators(alphabet, 2)
    words = st.lists(st.sampled_from(gens), max_size=3).map(tuple)
    coeffs = st.sampled_from([ONE, -ONE, Q, Q + 1, Laurent.monomial(2, -1)])
    return st.dictionaries(words, coeffs, max_size=3).map(Element)


@given(elements(GROUP), elements(GROUP), elements(GROUP))
def test_elem_mul_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements(OSC), elements(OSC))
def test_star_is_antihomomorphism(x, y):
    assert star(x * y) == star(y) * star(x)


@given(elements(GROUP), elements(GROUP), st.integers(0, 1))
def test_tensor_mul_agrees_with_elem_mul_on_one_leg(x, y, leg):
    assert embed_leg(x, leg, HH) * embed_leg(y, leg, HH) == embed_leg(x * y, leg, HH)
