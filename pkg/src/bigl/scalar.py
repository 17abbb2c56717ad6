"""Exact Laurent polynomials in the deformation parameter ``q``.

Coefficients are :class:`fractions.Fraction`, exponents are bounded
machine-width integers.  Values are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _Rational

__all__ = [
    "Laurent",
    "NonUnit",
    "ExponentOverflow",
    "ZERO",
    "ONE",
    "Q",
    "QINV",
    "scalar_add",
    "scalar_mul",
    "scalar_invert",
    "scalar_eval_at_one",
]

EXPONENT_LIMIT = 2**31 - 1


class NonUnit(ArithmeticError):
    """Raised when inverting a Laurent polynomial that is not c*q^k."""


class ExponentOverflow(OverflowError):
    pass


def _check_exponent(e: int) -> int:
    if not -EXPONENT_LIMIT <= e <= EXPONENT_LIMIT:
        raise ExponentOverflow(f"exponent {e} exceeds +/-{EXPONENT_LIMIT}")
    return e


class Laurent:
    """An element of Q[q, q^-1].

    Stored as a tuple of ``(exponent, coefficient)`` pairs sorted by
    exponent with no zero coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            items = ()
        elif isinstance(terms, Laurent):
            items = terms._terms
        else:
            if isinstance(terms, dict):
                terms = terms.items()
            acc: dict[int, Fraction] = {}
            for e, c in terms:
                e = _check_exponent(int(e))
                acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
            items = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._terms = items
        self._hash = None

    @classmethod
    def const(cls, c) -> "Laurent":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e: int) -> "Laurent":
        return cls({e: c})

    @classmethod
    def _raw(cls, items) -> "Laurent":
        obj = cls.__new__(cls)
        obj._terms = items
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self._terms == other._terms
        if isinstance(other, (int, _Rational)):
            return self._terms == Laurent.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return Laurent._raw(tuple(sorted(acc.items())))

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            (f, d), = other._terms
            return Laurent._raw(tuple((_check_exponent(e + f), c * d) for e, c in self._terms))
        acc: dict[int, Fraction] = {}
        for e, c in self._terms:
            for f, d in other._terms:
                k = e + f
                acc[k] = acc.get(k, 0) + c * d
        return Laurent({k: v for k, v in acc.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def invert(self) -> "Laurent":
        if len(self._terms) != 1:
            raise NonUnit(f"{self} is not a unit of Q[q, q^-1]")
        (e, c), = self._terms
        return Laurent._raw(((_check_exponent(-e), 1 / c),))

    def eval_at_one(self) -> Fraction:
        return sum((c for _, c in self._terms), Fraction(0))

    def evaluate(self, value) -> Fraction:
        """Substitute a rational value for q."""
        value = Fraction(value)
        if value == 0 and any(e < 0 for e, _ in self._terms):
            raise ZeroDivisionError("negative power of q at q=0")
        return sum((c * value**e for e, c in self._terms), Fraction(0))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Laurent({render(self)!r})"


def _coerce(x):
    if isinstance(x, Laurent):
        return x
    if isinstance(x, (int, _Rational)):
        return Laurent.const(x)
    return NotImplemented


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_term(e: int, c: Fraction) -> str:
    # sign handled by caller; c > 0 here
    if e == 0:
        return _fmt_coeff(c)
    power = "q" if e == 1 else f"q^{e}"
    return power if c == 1 else f"{_fmt_coeff(c)}*{power}"


def render(x: Laurent) -> str:
    """Canonical text, ascending exponents: ``1/2*q^-3 + 2 + q``."""
    if not x._terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(x._terms):
        body = _fmt_term(e, abs(c))
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


ZERO = Laurent()
ONE = Laurent.const(1)
Q = Laurent.monomial(1, 1)
QINV = Laurent.monomial(1, -1)


def scalar_add(x: Laurent, y: Laurent) -> Laurent:
    return x + y


def scalar_mul(x: Laurent, y: Laurent) -> Laurent:
    return x * y


def scalar_invert(x: Laurent) -> Laurent:
    return x.invert()


def scalar_eval_at_one(x: Laurent) -> Fraction:
    return x.eval_at_one()
