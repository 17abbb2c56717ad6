import pytest

from bigl.algebra import Element, gen
from bigl.antipode import (
    AdjugateNotFound,
    UnsupportedLattice,
    antipode_candidate_n1,
    antipode_defects,
    unit_candidates,
)
from bigl.hopf import Model
from bigl.rewrite import normal_order
from bigl.scalar import ONE, Q, QINV

al, als, b, bs = gen("al", 1, 1), gen("als", 1, 1), gen("b", 1, 1), gen("bs", 1, 1)
f, fs = gen("f", 1), gen("fs", 1)
W = Element.word


def test_unit_candidates():
    cands = unit_candidates(1)
    assert set(cands) == {ONE, -ONE, Q, -Q, QINV, -QINV}
    assert set(unit_candidates(3, classical=True)) == {ONE, -ONE}


def test_no_adjugate_at_generic_q():
    with pytest.raises(AdjugateNotFound) as info:
        antipode_candidate_n1(Model(1))
    closest = info.value.closest
    c1, c2, c3, c4 = closest["coefficients"]
    # off-diagonal vanishing fixes the ratios; the diagonal then differs by q^-2
    assert (c2 * c1.invert(), c3 * c1.invert(), c4 * c1.invert()) == (-QINV, -QINV, QINV * QINV)
    d = closest["diagonal"]
    assert d[1] == d[0].scale(QINV * QINV)
    assert closest["residual"]


def test_classical_antipode():
    m = Model(1, classical=True)
    S = antipode_candidate_n1(m)
    det = normal_order(W(als, al) - W(bs, b), m.group)
    assert S.det == det
    assert all(mu == ONE for mu in S.mu.values())
    assert S.S[al] == W(als)
    assert S.S[als] == W(al)
    assert S.S[b] == -W(b)
    assert S.S[bs] == -W(bs)
    # classical inverse of [[A, F], [0, 1]] has column -A^-1 F
    assert S.S[f] == normal_order(W(b, fs) - W(als, f), m.group)
    assert S.S[fs] == normal_order(W(bs, f) - W(al, fs), m.group)
    assert S.matrix()[2] == [(0, Element()), (0, Element()), (0, Element.scalar(1))]
    defects = antipode_defects(S, m)
    assert len(defects) == 18
    assert all(not y for y in defects.values())


def test_antipode_only_for_one_site():
    with pytest.raises(UnsupportedLattice):
        antipode_candidate_n1(Model(2))
