"""Defining relations of the oscillator algebra A(n) and the group algebra H(n).

Each relation is first written as an element ``lhs - rhs`` of the free
algebra, its hermitean conjugate is added mechanically, and the pair is
oriented into a rewrite rule by solving for the leading word.  Momentum
integrals become sums over the lattice and Dirac deltas become Kronecker
deltas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import GROUP, OSC, Element, Generator, Kind
from .rewrite import RewriteRule, RewriteSystem, measure, normal_order
from .scalar import ONE, Q, ZERO, Laurent

__all__ = [
    "g",
    "check_g_compatibility",
    "oscillator_relations",
    "group_relations",
    "build_oscillator_rules",
    "build_group_rules",
    "star_closure_defects",
    "relation_coefficient",
    "glpq_identification_report",
    "GROUP_VARIANTS",
]

# Deliberate corruptions of the f-sector used as negative controls, plus
# the sign-reversed f f relation used to analyse the commutativity defect.
GROUP_VARIANTS = (None, "drop-delta", "flip-ff-term", "negate-ff")


def g(i: int, j: int) -> Laurent:
    return Q if i == j else ONE


def delta(i: int, j: int) -> Laurent:
    return ONE if i == j else ZERO


def check_g_compatibility(n: int) -> bool:
    """g(i, j) == (q - 1) * delta_ij + 1 for every pair on the lattice."""
    return all(
        g(i, j) == (Q - 1) * delta(i, j) + 1
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )


def _w(*gens) -> Element:
    return Element.word(*gens)


def _gen(kind: Kind, *idx) -> Generator:
    return Generator(kind, idx)


def oscillator_relations(n: int) -> list[tuple[str, Element]]:
    a, ad = Kind.A, Kind.ADag
    rels = []
    for p, pp in itertools.product(range(1, n + 1), repeat=2):
        rels.append((
            "a-ad",
            _w(_gen(a, p), _gen(ad, pp))
            - _w(_gen(ad, pp), _gen(a, p)).scale(g(p, pp))
            - Element.scalar(delta(p, pp)),
        ))
        rels.append(("a-a", _w(_gen(a, p), _gen(a, pp)) - _w(_gen(a, pp), _gen(a, p))))
    return rels


def group_relations(n: int, variant: str | None = None) -> list[tuple[str, Element]]:
    """The twelve displayed relation families, every index tuple enumerated."""
    if variant not in GROUP_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    al, als, b, bs, f, fs = (
        Kind.Alpha, Kind.AlphaStar, Kind.Beta, Kind.BetaStar, Kind.F, Kind.FStar,
    )
    lat = range(1, n + 1)
    rels = []

    def swap(tag, x, y, c):
        rels.append((tag, _w(x, y) - _w(y, x).scale(c)))

    for p, k, pp, l in itertools.product(lat, repeat=4):
        swap("al-al", _gen(al, p, k), _gen(al, pp, l), ONE)
        swap("al-als", _gen(al, p, k), _gen(als, pp, l), g(p, pp) * g(k, l).invert())
        swap("al-b", _gen(al, p, k), _gen(b, pp, l), g(k, l).invert())
        swap("al-bs", _gen(al, p, k), _gen(bs, pp, l), g(p, pp))
        swap("b-b", _gen(b, p, k), _gen(b, pp, l), ONE)
        swap("b-bs", _gen(b, p, k), _gen(bs, pp, l), g(p, pp) * g(k, l))
    for p, k, pp in itertools.product(lat, repeat=3):
        swap("al-f", _gen(al, p, k), _gen(f, pp), ONE)
        swap("al-fs", _gen(al, p, k), _gen(fs, pp), g(p, pp))
        swap("b-f", _gen(b, p, k), _gen(f, pp), ONE)
        swap("b-fs", _gen(b, p, k), _gen(fs, pp), g(p, pp))

    for p, pp in itertools.product(lat, repeat=2):
        first = sum((_w(_gen(al, p, k), _gen(b, pp, k)) for k in lat), Element())
        second = sum((_w(_gen(al, pp, k), _gen(b, p, k)) for k in lat), Element())
        if variant == "flip-ff-term":
            rhs = first + second
        elif variant == "negate-ff":
            rhs = second - first
        else:
            rhs = first - second
        # (p, pp) and (pp, p) give the same relation up to sign and p == pp is empty
        if p < pp:
            rels.append(("f-f", _w(_gen(f, p), _gen(f, pp)) - _w(_gen(f, pp), _gen(f, p)) - rhs))

        rhs = (
            Element.scalar(ZERO if variant == "drop-delta" else delta(p, pp))
            - sum((_w(_gen(al, p, k), _gen(als, pp, k)) for k in lat), Element())
            + sum((_w(_gen(bs, pp, k), _gen(b, p, k)) for k in lat), Element()).scale(g(p, pp))
        )
        rels.append((
            "f-fs",
            _w(_gen(f, p), _gen(fs, pp)) - _w(_gen(fs, pp), _gen(f, p)).scale(g(p, pp)) - rhs,
        ))
    return rels


def _orient(tag: str, rel: Element) -> RewriteRule | None:
    if rel.is_zero():
        return None
    lead = max(rel.terms, key=measure)
    if len(lead) != 2:
        raise ValueError(f"relation {tag} has non-quadratic leading word {lead}")
    c = rel.coeff(lead)
    replacement = (rel - Element({lead: c})).scale(-c.invert())
    return RewriteRule(lead, replacement, tag)


def _build(n: int, alphabet: str, relations, label: str) -> RewriteSystem:
    if n < 1:
        raise ValueError("lattice size must be at least 1")
    sys = RewriteSystem(n, alphabet, label=label)
    for tag, rel in relations:
        for t, r in ((tag, rel), (f"conj({tag})", rel.star())):
            rule = _orient(t, r)
            if rule is None:
                continue
            have = sys.rules.get(rule.pattern)
            if have is None:
                sys.add(rule)
            elif have.replacement != rule.replacement:
                raise ValueError(
                    f"relations {have.tag} and {t} disagree on {rule.pattern}: "
                    f"{have.replacement} vs {rule.replacement}"
                )
    return sys


def build_oscillator_rules(n: int) -> RewriteSystem:
    return _build(n, OSC, oscillator_relations(n), f"osc(n={n})")


def build_group_rules(n: int, variant: str | None = None) -> RewriteSystem:
    label = f"group(n={n})" if variant is None else f"group(n={n},{variant})"
    return _build(n, GROUP, group_relations(n, variant), label)


def star_closure_defects(system: RewriteSystem) -> list[tuple[RewriteRule, Element]]:
    """Rules whose conjugate relation does not reduce to zero."""
    out = []
    for rule in system:
        residue = normal_order(rule.relation().star(), system)
        if residue:
            out.append((rule, residue))
    return out


def relation_coefficient(system: RewriteSystem, x: Generator, y: Generator) -> Laurent:
    """The unit c with x*y == c*y*x modulo the system (x, y skew-commuting)."""
    xy = normal_order(Element.word(x, y), system)
    yx = normal_order(Element.word(y, x), system)
    if (x, y) in system.rules:
        target, other, invert = (y, x), xy, False
    else:
        target, other, invert = (x, y), yx, True
    if set(other.terms) != {target}:
        raise ValueError(f"{x}*{y} is not a pure q-commutation")
    c = other.coeff(target)
    return c.invert() if invert else c


@dataclass
class BlockEntry:
    indices: tuple  # (p, k, p', l)
    params: tuple  # (g(k,l)^-1, g(p,p')^-1)
    coefficients: dict
    expected: dict

    @property
    def ok(self) -> bool:
        return self.coefficients == self.expected


def glpq_identification_report(n: int, system: RewriteSystem | None = None) -> list[BlockEntry]:
    """Compare the homogeneous-sector coefficients with the two-parameter pattern.

    With P = g(k,l)^-1 and Q = g(p,p')^-1 the six coefficients must be
    (1, P/Q, P, 1/Q, 1, 1/(PQ)) for the pairs
    (al al, al als, al b, al bs, b b, b bs).
    """
    system = system or build_group_rules(n)
    al, als, b, bs = Kind.Alpha, Kind.AlphaStar, Kind.Beta, Kind.BetaStar
    out = []
    for p, k, pp, l in itertools.product(range(1, n + 1), repeat=4):
        P, Qp = g(k, l).invert(), g(p, pp).invert()
        expected = {
            "al-al": ONE,
            "al-als": P * Qp.invert(),
            "al-b": P,
            "al-bs": Qp.invert(),
            "b-b": ONE,
            "b-bs": (P * Qp).invert(),
        }
        pairs = {
            "al-al": (al, al),
            "al-als": (al, als),
            "al-b": (al, b),
            "al-bs": (al, bs),
            "b-b": (b, b),
            "b-bs": (b, bs),
        }
        got = {}
        for name, (x, y) in pairs.items():
            gx, gy = _gen(x, p, k), _gen(y, pp, l)
            got[name] = ONE if gx == gy else relation_coefficient(system, gx, gy)
        out.append(BlockEntry((p, k, pp, l), (P, Qp), got, expected))
    return out
