"""Transformed operators, coproduct, counit, and the Hopf-axiom defects.

A :class:`Model` bundles the lattice size with the two rewrite systems.
``classical=True`` specialises every coefficient at q = 1 *before* any
reduction, which is how the classical-limit suite is run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .algebra import (
    GROUP,
    OSC,
    AlphabetMismatch,
    Element,
    Generator,
    Kind,
    TensorElement,
    embed_leg,
)
from .relations import build_group_rules, build_oscillator_rules, delta, g
from .rewrite import RewriteRule, RewriteSystem, all_generators, normal_order, normal_order_tensor
from .scalar import ONE, ZERO, Laurent

HA = (GROUP, OSC)
HH = (GROUP, GROUP)
HHH = (GROUP, GROUP, GROUP)


@dataclass(frozen=True)
class Model:
    n: int
    classical: bool = False
    variant: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("lattice size must be at least 1")

    @cached_property
    def group(self) -> RewriteSystem:
        sys = build_group_rules(self.n, self.variant)
        return sys.classical() if self.classical else sys

    @cached_property
    def osc(self) -> RewriteSystem:
        sys = build_oscillator_rules(self.n)
        return sys.classical() if self.classical else sys

    def coeff(self, c: Laurent) -> Laurent:
        return Laurent.const(c.eval_at_one()) if self.classical else c

    def g(self, i: int, j: int) -> Laurent:
        return self.coeff(g(i, j))

    @property
    def lattice(self) -> range:
        return range(1, self.n + 1)

    def generators(self) -> list[Generator]:
        return all_generators(GROUP, self.n)


def _g(kind: Kind, *idx) -> Generator:
    return Generator(kind, idx)


def _pure(alphabets, *legs) -> TensorElement:
    """Elementary tensor of single generators / unit (None)."""
    return TensorElement(alphabets, {tuple(() if x is None else (x,) for x in legs): ONE})


def transformed_a(p: int, n: int) -> TensorElement:
    """a'(p) = sum_k al(p,k) (x) a(k) + b(p,k) (x) ad(k) + f(p) (x) 1."""
    out = _pure(HA, _g(Kind.F, p), None)
    for k in range(1, n + 1):
        out = out + _pure(HA, _g(Kind.Alpha, p, k), _g(Kind.A, k))
        out = out + _pure(HA, _g(Kind.Beta, p, k), _g(Kind.ADag, k))
    return out


def transformed_adag(p: int, n: int) -> TensorElement:
    return transformed_a(p, n).star_legs()


def transformed_adag_direct(p: int, n: int) -> TensorElement:
    """a*'(p) written out term by term, for comparison with the star route."""
    out = _pure(HA, _g(Kind.FStar, p), None)
    for k in range(1, n + 1):
        out = out + _pure(HA, _g(Kind.BetaStar, p, k), _g(Kind.A, k))
        out = out + _pure(HA, _g(Kind.AlphaStar, p, k), _g(Kind.ADag, k))
    return out


def invariance_defect(p: int, pp: int, model: Model) -> TensorElement:
    """a'(p) a*'(p') - g(p,p') a*'(p') a'(p) - delta(p,p') 1(x)1, reduced."""
    n = model.n
    x, y = transformed_a(p, n), transformed_adag(pp, n)
    d = x * y - (y * x).scale(model.g(p, pp)) - TensorElement.unit(HA).scale(delta(p, pp))
    return normal_order_tensor(d, (model.group, model.osc))


def commutativity_defect(p: int, pp: int, model: Model) -> TensorElement:
    n = model.n
    x, y = transformed_a(p, n), transformed_a(pp, n)
    return normal_order_tensor(x * y - y * x, (model.group, model.osc))


# Block positions of the homogeneous part A = [[al, b], [bs, als]] and of
# the inhomogeneous column F = [f, fs].
BLOCK = {
    (0, 0): Kind.Alpha,
    (0, 1): Kind.Beta,
    (1, 0): Kind.BetaStar,
    (1, 1): Kind.AlphaStar,
}
POSITION = {k: rs for rs, k in BLOCK.items()}
COLUMN = {0: Kind.F, 1: Kind.FStar}
ROW = {k: r for r, k in COLUMN.items()}


def coproduct(x: Generator, n: int) -> TensorElement:
    """Delta of a single group generator, read off M (x.) M."""
    if x.alphabet != GROUP:
        raise AlphabetMismatch(f"coproduct is defined on the group algebra, not {x}")
    lat = range(1, n + 1)
    if x.kind in ROW:
        r, (p,) = ROW[x.kind], x.idx
        out = _pure(HH, x, None)
        for t, e in itertools.product((0, 1), lat):
            out = out + _pure(HH, _g(BLOCK[r, t], p, e), _g(COLUMN[t], e))
        return out
    (r, s), (p, k) = POSITION[x.kind], x.idx
    out = TensorElement(HH)
    for t, e in itertools.product((0, 1), lat):
        out = out + _pure(HH, _g(BLOCK[r, t], p, e), _g(BLOCK[t, s], e, k))
    return out


def coproduct_extend(x: Element, n: int, legs: int = 2) -> TensorElement:
    """Multiplicative extension of Delta to arbitrary group elements."""
    if x.alphabet not in (None, GROUP):
        raise AlphabetMismatch("coproduct is defined on the group algebra only")
    alph = (GROUP,) * legs
    out = TensorElement(alph)
    cache = {}
    for w, c in x.terms.items():
        t = TensorElement.unit(alph)
        for gen in w:
            if gen not in cache:
                cache[gen] = coproduct(gen, n)
            t = t * cache[gen]
        out = out + t.scale(c)
    return out


def _apply_on_leg(t: TensorElement, leg: int, fn, new_alphabets) -> TensorElement:
    """Replace the word in ``leg`` by the multi-leg tensor ``fn(word)``."""
    out = TensorElement(new_alphabets)
    for ws, c in t.terms.items():
        inner = fn(ws[leg])
        acc = {}
        for vs, d in inner.terms.items():
            acc[ws[:leg] + vs + ws[leg + 1:]] = c * d
        out = out + TensorElement(new_alphabets, acc)
    return out


def hom_defect(rule: RewriteRule, model: Model) -> TensorElement:
    """Delta(pattern - replacement), reduced on both legs."""
    d = coproduct_extend(rule.relation(), model.n)
    return normal_order_tensor(d, (model.group, model.group))


def coassoc_defect(x, model: Model) -> TensorElement:
    n = model.n
    x = Element.word(x) if isinstance(x, Generator) else x
    delta2 = coproduct_extend(x, n)

    def split(w):
        return coproduct_extend(Element.word(*w), n)

    left = _apply_on_leg(delta2, 0, split, HHH)
    right = _apply_on_leg(delta2, 1, split, HHH)
    return normal_order_tensor(left - right, (model.group,) * 3)


def counit(x: Generator) -> Laurent:
    if x.alphabet != GROUP:
        raise AlphabetMismatch(f"counit is defined on the group algebra, not {x}")
    if x.kind in (Kind.Alpha, Kind.AlphaStar):
        return delta(*x.idx)
    return ZERO


def counit_word(w) -> Laurent:
    out = ONE
    for x in w:
        out = out * counit(x)
        if not out:
            break
    return out


def counit_element(x: Element) -> Laurent:
    return sum((c * counit_word(w) for w, c in x.terms.items()), ZERO)


def counit_defects(x, model: Model) -> tuple[Element, Element]:
    """((eps (x) id) Delta(x) - x, (id (x) eps) Delta(x) - x), reduced."""
    x = Element.word(x) if isinstance(x, Generator) else x
    d = coproduct_extend(x, model.n)
    left, right = Element(), Element()
    for (u, v), c in d.terms.items():
        left = left + Element({v: c * counit_word(u)})
        right = right + Element({u: c * counit_word(v)})
    return normal_order(left - x, model.group), normal_order(right - x, model.group)


def counit_respects_relations(model: Model) -> list[RewriteRule]:
    """Rules whose relation is not annihilated by the counit."""
    return [r for r in model.group if counit_element(r.relation())]


def star_coproduct_defect(x: Generator, n: int) -> TensorElement:
    return coproduct(x.star, n) - coproduct(x, n).star_legs()


def embed(x: Element, leg: int, legs: int = 2) -> TensorElement:
    return embed_leg(x, leg, (GROUP,) * legs)


__all__ = [
    "Model",
    "transformed_a",
    "transformed_adag",
    "transformed_adag_direct",
    "invariance_defect",
    "commutativity_defect",
    "coproduct",
    "coproduct_extend",
    "hom_defect",
    "coassoc_defect",
    "counit",
    "counit_defects",
    "counit_respects_relations",
    "star_coproduct_defect",
]
