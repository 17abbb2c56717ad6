import pytest

from bigl.algebra import GROUP, OSC, AlphabetMismatch, Element, TensorElement, gen
from bigl.hopf import (
    Model,
    _apply_on_leg,
    coassoc_defect,
    commutativity_defect,
    coproduct,
    coproduct_extend,
    counit,
    counit_defects,
    counit_respects_relations,
    hom_defect,
    invariance_defect,
    star_coproduct_defect,
    transformed_a,
    transformed_adag,
    transformed_adag_direct,
)
from bigl.rewrite import normal_order_tensor
from bigl.scalar import ONE, ZERO

HA, HH = (GROUP, OSC), (GROUP, GROUP)
al, als = (lambda p, k: gen("al", p, k)), (lambda p, k: gen("als", p, k))
b, bs = (lambda p, k: gen("b", p, k)), (lambda p, k: gen("bs", p, k))
f, fs = (lambda p: gen("f", p)), (lambda p: gen("fs", p))
a, ad = (lambda i: gen("a", i)), (lambda i: gen("ad", i))


def T(alphabets, *pairs):
    """Sum of coefficient-1 tensors; each pair lists leg words (None = unit)."""
    out = TensorElement(alphabets)
    for legs in pairs:
        out = out + TensorElement(alphabets, {tuple(() if x is None else tuple(x) for x in legs): ONE})
    return out


def test_transformed_operator_n1():
    expected = T(HA, ([al(1, 1)], [a(1)]), ([b(1, 1)], [ad(1)]), ([f(1)], None))
    assert transformed_a(1, 1) == expected
    assert len(transformed_a(2, 2).terms) == 5


@pytest.mark.parametrize("n", [1, 2, 3])
def test_star_route_matches_direct_form(n):
    for p in range(1, n + 1):
        assert transformed_adag(p, n) == transformed_adag_direct(p, n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_invariance_defects_vanish(n, models):
    m = models[n]
    for p in range(1, n + 1):
        for pp in range(1, n + 1):
            assert not invariance_defect(p, pp, m)


def test_commutativity_at_n1(models):
    assert not commutativity_defect(1, 1, models[1])


def _ff_mismatch(p, pp, n, model):
    """2 * sum_k (al(p,k) b(pp,k) - al(pp,k) b(p,k)) (x) 1, reduced.

    Hand expansion of a'(p) a'(pp) - a'(pp) a'(p): the al (x) a / b (x) ad
    cross terms leave sum_k (al(p,k) b(pp,k) - al(pp,k) b(p,k)) (x) 1, and the
    f f rule contributes the same sum again instead of cancelling it.
    """
    x = Element()
    for k in range(1, n + 1):
        x = x + Element.word(al(p, k), b(pp, k)) - Element.word(al(pp, k), b(p, k))
    t = TensorElement(HA, {(w, ()): c for w, c in x.scale(2).terms.items()})
    return normal_order_tensor(t, (model.group, model.osc))


def test_commutativity_mismatch_matches_hand_expansion(models):
    m = models[2]
    got = commutativity_defect(1, 2, m)
    assert got
    assert got == _ff_mismatch(1, 2, 2, m)


def test_commutativity_vanishes_with_opposite_ff_sign():
    m = Model(2, variant="negate-ff")
    for p in (1, 2):
        for pp in (1, 2):
            assert not commutativity_defect(p, pp, m)
            assert not invariance_defect(p, pp, m)


def test_negative_control_drop_delta():
    m = Model(2, variant="drop-delta")
    d = invariance_defect(1, 1, m)
    assert d
    assert d.terms.get(((), ())) == -ONE
    assert not invariance_defect(1, 2, m)


def test_negative_control_flip_ff_term():
    m = Model(2, variant="flip-ff-term")
    assert commutativity_defect(1, 2, m) or commutativity_defect(2, 1, m)


def test_coproduct_examples():
    assert coproduct(al(1, 1), 1) == T(HH, ([al(1, 1)], [al(1, 1)]), ([b(1, 1)], [bs(1, 1)]))
    assert coproduct(f(1), 1) == T(HH, ([f(1)], None), ([al(1, 1)], [f(1)]), ([b(1, 1)], [fs(1)]))
    assert coproduct(fs(1), 1) == T(HH, ([fs(1)], None), ([bs(1, 1)], [f(1)]), ([als(1, 1)], [fs(1)]))
    assert coproduct_extend(Element.scalar(1), 2) == TensorElement.unit(HH)
    assert len(coproduct(b(1, 2), 2).terms) == 4


def test_coproduct_rejects_oscillator():
    with pytest.raises(AlphabetMismatch):
        coproduct(a(1), 1)


@pytest.mark.parametrize("n", [1, 2])
def test_coproduct_commutes_with_star(n, models):
    for x in models[n].generators():
        assert not star_coproduct_defect(x, n)


def test_hom_defect_examples_n1(models):
    m = models[1]
    s = m.group
    assert not hom_defect(s.rules[al(1, 1), b(1, 1)], m)
    assert not hom_defect(s.rules[f(1), fs(1)], m)


@pytest.mark.parametrize("n", [1])
def test_hom_defects_vanish_at_n1(n, models):
    assert all(not hom_defect(r, models[n]) for r in models[n].group)


def test_hom_defects_outside_f_sector_vanish_at_n2(models):
    m = models[2]
    bad = [r for r in m.group if hom_defect(r, m)]
    assert bad
    base = {r.tag.removeprefix("conj(").removesuffix(")") for r in bad}
    assert base == {"f-f", "f-fs"}


def test_hom_defects_vanish_with_opposite_ff_sign():
    m = Model(2, variant="negate-ff")
    assert all(not hom_defect(r, m) for r in m.group)


def test_coassociativity_term_counts():
    split = lambda w: coproduct_extend(Element.word(*w), 1)  # noqa: E731
    HHH = (GROUP,) * 3
    assert len(_apply_on_leg(coproduct(al(1, 1), 1), 0, split, HHH).terms) == 4
    assert len(_apply_on_leg(coproduct(f(1), 1), 0, split, HHH).terms) == 7


@pytest.mark.parametrize("n", [1, 2, 3])
def test_coassociativity(n, models):
    for x in models[n].generators():
        assert not coassoc_defect(x, models[n])


def test_counit_values():
    assert counit(al(1, 1)) == ONE
    assert counit(als(2, 2)) == ONE
    assert counit(al(1, 2)) == ZERO
    assert counit(b(1, 1)) == ZERO
    assert counit(f(1)) == ZERO
    with pytest.raises(AlphabetMismatch):
        counit(a(1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counit_axioms(n, models):
    for x in models[n].generators():
        left, right = counit_defects(x, models[n])
        assert not left and not right
    assert counit_respects_relations(models[n]) == []


@pytest.mark.parametrize("n", [1, 2])
def test_axioms_at_q_equal_one(n):
    m = Model(n, classical=True)
    for x in m.generators():
        assert not coassoc_defect(x, m)
        assert counit_defects(x, m) == (Element(), Element())
    for p in range(1, n + 1):
        assert not invariance_defect(p, p, m)
