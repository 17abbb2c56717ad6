"""Free *-algebra scaffolding: generators, words, formal sums, tensors.

No relations are imposed here; see :mod:`bigl.relations` and
:mod:`bigl.rewrite` for the quotient.
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping, NamedTuple

from .scalar import ONE, ZERO, Laurent, render as render_scalar

__all__ = [
    "Kind",
    "Generator",
    "Word",
    "Element",
    "TensorElement",
    "AlphabetMismatch",
    "LegMismatch",
    "OSC",
    "GROUP",
    "gen",
]

OSC = "osc"
GROUP = "group"


class AlphabetMismatch(ValueError):
    pass


class LegMismatch(ValueError):
    pass


class Kind(enum.Enum):
    A = ("a", OSC, 1, "ADag")
    ADag = ("ad", OSC, 1, "A")
    Alpha = ("al", GROUP, 2, "AlphaStar")
    AlphaStar = ("als", GROUP, 2, "Alpha")
    Beta = ("b", GROUP, 2, "BetaStar")
    BetaStar = ("bs", GROUP, 2, "Beta")
    F = ("f", GROUP, 1, "FStar")
    FStar = ("fs", GROUP, 1, "F")

    def __init__(self, short, alphabet, arity, partner):
        self.short = short
        self.alphabet = alphabet
        self.arity = arity
        self._partner = partner

    @property
    def star(self) -> "Kind":
        return Kind[self._partner]

    @classmethod
    def from_short(cls, name: str) -> "Kind":
        return _BY_SHORT[name]


_BY_SHORT = {k.short: k for k in Kind}

# Normal-form rank of each kind; lower ranks are moved to the left.
RANK = {
    Kind.ADag: 0,
    Kind.A: 1,
    Kind.FStar: 0,
    Kind.F: 1,
    Kind.BetaStar: 2,
    Kind.Beta: 3,
    Kind.AlphaStar: 4,
    Kind.Alpha: 5,
}

WEIGHT = {
    Kind.A: 1,
    Kind.ADag: 1,
    Kind.Alpha: 1,
    Kind.AlphaStar: 1,
    Kind.Beta: 1,
    Kind.BetaStar: 1,
    Kind.F: 2,
    Kind.FStar: 2,
}


class Generator(NamedTuple):
    kind: Kind
    idx: tuple

    @property
    def alphabet(self) -> str:
        return self.kind.alphabet

    @property
    def star(self) -> "Generator":
        return Generator(self.kind.star, self.idx)

    def key(self) -> tuple:
        return (RANK[self.kind], self.idx)

    def validate(self, n: int | None = None) -> "Generator":
        if len(self.idx) != self.kind.arity:
            raise ValueError(f"{self.kind.name} takes {self.kind.arity} indices, got {len(self.idx)}")
        if n is not None:
            for i in self.idx:
                if not 1 <= i <= n:
                    raise IndexError(f"index {i} outside lattice 1..{n}")
        return self

    def __str__(self):
        return f"{self.kind.short}({','.join(map(str, self.idx))})"

    def __repr__(self):
        return f"gen({str(self)!r})"

    def to_json(self) -> list:
        return [self.kind.name, *self.idx]


def gen(kind, *idx) -> Generator:
    """Shorthand: ``gen("al", 1, 2)`` or ``gen(Kind.Alpha, 1, 2)``."""
    if isinstance(kind, str):
        kind = Kind[kind] if kind in Kind.__members__ else Kind.from_short(kind)
    return Generator(kind, tuple(idx)).validate()


Word = tuple  # tuple[Generator, ...]; () is the unit


def word_alphabet(w: Word) -> str | None:
    if not w:
        return None
    alph = w[0].alphabet
    for g in w[1:]:
        if g.alphabet != alph:
            raise AlphabetMismatch(f"mixed alphabet word {render_word(w)}")
    return alph


def word_key(w: Word) -> tuple:
    """Display order: longer words first, then lexicographic on generator keys."""
    return (-len(w), tuple(g.key() for g in w))


def render_word(w: Word) -> str:
    return "*".join(str(g) for g in w) if w else "1"


def star_word(w: Word) -> Word:
    return tuple(g.star for g in reversed(w))


def _add_into(acc: dict, key, c: Laurent) -> None:
    s = acc.get(key)
    s = c if s is None else s + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def _render_sum(items, render_key) -> str:
    if not items:
        return "0"
    out = []
    for i, (key, c) in enumerate(items):
        body_key = render_key(key)
        neg = False
        if c.is_unit():
            (e, v), = c.items()
            neg = v < 0
            mag = -c if neg else c
            coeff = "" if mag == ONE else render_scalar(mag)
        else:
            lead = next(c.items())[1]
            neg = lead < 0
            mag = -c if neg else c
            coeff = f"({render_scalar(mag)})"
        if body_key == "1":
            body = coeff or "1"
            if coeff.startswith("("):
                body = coeff[1:-1] if i == 0 and not neg else coeff
        else:
            body = f"{coeff}*{body_key}" if coeff else body_key
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


class Element:
    """A finite formal sum of words with Laurent coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if not isinstance(c, Laurent):
                c = Laurent.const(c)
            _add_into(acc, tuple(w), c)
        alph = {word_alphabet(w) for w in acc} - {None}
        if len(alph) > 1:
            raise AlphabetMismatch(f"element mixes alphabets {sorted(alph)}")
        self.terms = acc
        self._hash = None

    @classmethod
    def _wrap(cls, acc: dict) -> "Element":
        obj = cls.__new__(cls)
        obj.terms = acc
        obj._hash = None
        return obj

    @classmethod
    def word(cls, *gens: Generator, coeff=ONE) -> "Element":
        return cls({tuple(gens): coeff})

    @classmethod
    def scalar(cls, c) -> "Element":
        return cls({(): c})

    @property
    def alphabet(self) -> str | None:
        for w in self.terms:
            if w:
                return w[0].alphabet
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))

    def coeff(self, w: Word) -> Laurent:
        return self.terms.get(tuple(w), ZERO)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if isinstance(other, (int, Laurent)):
            return self == Element.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _check(self, other: "Element") -> None:
        a, b = self.alphabet, other.alphabet
        if a and b and a != b:
            raise AlphabetMismatch(f"cannot combine {a} and {b} elements")

    def __add__(self, other):
        other = _as_element(other)
        if other is NotImplemented:
            return other
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(acc, w, c)
        return Element._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return Element._wrap({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_element(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_element(other) - self

    def scale(self, c) -> "Element":
        if not isinstance(c, Laurent):
            c = Laurent.const(c)
        if not c:
            return Element()
        return Element._wrap({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        other = _as_element(other)
        if other is NotImplemented:
            return other
        self._check(other)
        acc: dict = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                _add_into(acc, u + v, c * d)
        return Element._wrap(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "Element":
        return Element._wrap({star_word(w): c for w, c in self.terms.items()})

    def map_coefficients(self, fn) -> "Element":
        acc: dict = {}
        for w, c in self.terms.items():
            _add_into(acc, w, fn(c))
        return Element._wrap(acc)

    def __str__(self):
        return _render_sum(self.items(), render_word)

    def __repr__(self):
        return f"Element({str(self)!r})"

    def to_json(self) -> list:
        return [
            {"coeff": render_scalar(c), "word": [g.to_json() for g in w]}
            for w, c in self.items()
        ]


def _as_element(x):
    if isinstance(x, Element):
        return x
    if isinstance(x, Generator):
        return Element.word(x)
    if isinstance(x, (int, Laurent)):
        return Element.scalar(x)
    return NotImplemented


def elem_mul(x: Element, y: Element) -> Element:
    return x * y


def star(x):
    return x.star()


def tensor_key(ws: tuple) -> tuple:
    return tuple(word_key(w) for w in ws)


class TensorElement:
    """Formal sum over tuples of words, one word per leg.

    ``alphabets`` fixes the alphabet class of each leg.  Multiplication is
    leg-wise concatenation with no braiding.
    """

    __slots__ = ("alphabets", "terms")

    def __init__(self, alphabets: Iterable[str], terms: Mapping | Iterable = ()):
        self.alphabets = tuple(alphabets)
        if not self.alphabets:
            raise LegMismatch("a tensor needs at least one leg")
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for ws, c in items:
            ws = tuple(tuple(w) for w in ws)
            if len(ws) != len(self.alphabets):
                raise LegMismatch(f"expected {len(self.alphabets)} legs, got {len(ws)}")
            for w, a in zip(ws, self.alphabets):
                wa = word_alphabet(w)
                if wa is not None and wa != a:
                    raise AlphabetMismatch(f"leg declared {a} holds {wa} word")
            if not isinstance(c, Laurent):
                c = Laurent.const(c)
            _add_into(acc, ws, c)
        self.terms = acc

    @classmethod
    def _wrap(cls, alphabets, acc) -> "TensorElement":
        obj = cls.__new__(cls)
        obj.alphabets = alphabets
        obj.terms = acc
        return obj

    @classmethod
    def unit(cls, alphabets) -> "TensorElement":
        alphabets = tuple(alphabets)
        return cls(alphabets, {((),) * len(alphabets): ONE})

    @classmethod
    def pure(cls, alphabets, *elements: Element) -> "TensorElement":
        """The elementary tensor e1 (x) e2 (x) ... expanded bilinearly."""
        out = cls.unit(alphabets)
        for leg, e in enumerate(elements):
            out = out * embed_leg(e, leg, alphabets)
        return out

    @property
    def legs(self) -> int:
        return len(self.alphabets)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: tensor_key(kv[0]))

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.alphabets == other.alphabets and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.alphabets, frozenset(self.terms.items())))

    def _check(self, other: "TensorElement") -> None:
        if self.alphabets != other.alphabets:
            raise LegMismatch(f"legs {self.alphabets} vs {other.alphabets}")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return TensorElement._wrap(self.alphabets, acc)

    def __neg__(self):
        return TensorElement._wrap(self.alphabets, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        if not isinstance(c, Laurent):
            c = Laurent.const(c)
        if not c:
            return TensorElement._wrap(self.alphabets, {})
        return TensorElement._wrap(self.alphabets, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        acc: dict = {}
        for us, c in self.terms.items():
            for vs, d in other.terms.items():
                _add_into(acc, tuple(u + v for u, v in zip(us, vs)), c * d)
        return TensorElement._wrap(self.alphabets, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        return NotImplemented

    def star_legs(self) -> "TensorElement":
        """Apply the involution in every leg (no leg reversal)."""
        return TensorElement._wrap(
            self.alphabets,
            {tuple(star_word(w) for w in ws): c for ws, c in self.terms.items()},
        )

    def map_coefficients(self, fn) -> "TensorElement":
        acc: dict = {}
        for k, c in self.terms.items():
            _add_into(acc, k, fn(c))
        return TensorElement._wrap(self.alphabets, acc)

    def __str__(self):
        def key(ws):
            return "[" + " | ".join(render_word(w) for w in ws) + "]"

        return _render_sum(self.items(), key)

    def __repr__(self):
        return f"TensorElement({str(self)!r})"

    def to_json(self) -> list:
        return [
            {"coeff": render_scalar(c), "legs": [[g.to_json() for g in w] for w in ws]}
            for ws, c in self.items()
        ]


def tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    return x * y


def embed_leg(x: Element, leg: int, alphabets) -> TensorElement:
    """Place ``x`` in position ``leg`` (0-based) with unit words elsewhere."""
    alphabets = tuple(alphabets)
    if not 0 <= leg < len(alphabets):
        raise LegMismatch(f"leg {leg} out of range for {len(alphabets)} legs")
    a = x.alphabet
    if a is not None and a != alphabets[leg]:
        raise AlphabetMismatch(f"leg {leg} is {alphabets[leg]}, element is {a}")
    unit = ((),) * len(alphabets)
    acc = {}
    for w, c in x.terms.items():
        k = list(unit)
        k[leg] = w
        acc[tuple(k)] = c
    return TensorElement._wrap(alphabets, acc)
