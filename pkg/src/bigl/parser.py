"""Expression language for algebra elements.

    expr    := ["-"] term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := scalar | genapp | "(" expr ")"
    genapp  := name "(" int ("," int)* ")"
    name    := "a" | "ad" | "al" | "als" | "b" | "bs" | "f" | "fs"
    scalar  := rational | "q" ["^" ["-"] int]
    rational:= ["-"] int ["/" int]

A leading minus on the whole expression is accepted in addition to the
signed rational literal, so canonical renderings parse back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import _BY_SHORT, AlphabetMismatch, Element, Generator, Kind
from .scalar import Laurent

__all__ = [
    "ParseError",
    "ArityError",
    "IndexOutOfRange",
    "parse",
    "lower",
    "parse_element",
    "parse_generator",
    "parse_scalar",
]


class ParseError(SyntaxError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


class ArityError(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


# AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Scalar:
    value: Laurent


@dataclass(frozen=True)
class GenApp:
    name: str
    args: tuple
    column: int


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, Product), ...)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", col)
        kind = m.lastgroup
        col = m.start(kind) + 1
        toks.append((kind, m.group(kind), col))
        pos = m.end()
    toks.append(("eof", "", len(text.rstrip()) + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, col = self.next()
        if val != value or kind == "eof":
            found = "end of input" if kind == "eof" else repr(val)
            raise ParseError(f"expected {value!r}, found {found}", col)

    def integer(self) -> int:
        kind, val, col = self.next()
        if kind != "int":
            found = "end of input" if kind == "eof" else repr(val)
            raise ParseError(f"expected integer, found {found}", col)
        return int(val)

    def expr(self) -> Sum:
        terms = []
        sign = 1
        if self.peek()[1] == "-" and self.toks[self.i + 1][0] != "int":
            self.next()
            sign = -1
        terms.append((sign, self.term()))
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = 1 if self.next()[1] == "+" else -1
            terms.append((sign, self.term()))
        return Sum(tuple(terms))

    def term(self) -> Product:
        factors = [self.factor()]
        while self.peek()[1] == "*":
            self.next()
            factors.append(self.factor())
        return Product(tuple(factors))

    def factor(self):
        kind, val, col = self.peek()
        if val == "(":
            self.next()
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "int" or val == "-":
            return Scalar(self.rational())
        if kind == "name":
            self.next()
            if val == "q":
                e = 1
                if self.peek()[1] == "^":
                    self.next()
                    neg = False
                    if self.peek()[1] == "-":
                        self.next()
                        neg = True
                    e = -self.integer() if neg else self.integer()
                return Scalar(Laurent.monomial(1, e))
            if val not in _BY_SHORT:
                raise ParseError(f"unknown generator {val!r}", col)
            self.expect("(")
            args = [self.integer()]
            while self.peek()[1] == ",":
                self.next()
                args.append(self.integer())
            self.expect(")")
            return GenApp(val, tuple(args), col)
        found = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"unexpected {found}", col)

    def rational(self) -> Laurent:
        neg = False
        if self.peek()[1] == "-":
            self.next()
            neg = True
        num = self.integer()
        den = 1
        if self.peek()[1] == "/":
            self.next()
            _, _, col = self.peek()
            den = self.integer()
            if den == 0:
                raise ParseError("zero denominator", col)
        v = Fraction(num, den)
        return Laurent.const(-v if neg else v)


def parse(text: str):
    """Parse ``text`` into an AST (a :class:`Sum`)."""
    p = _Parser(text)
    tree = p.expr()
    kind, val, col = p.peek()
    if kind != "eof":
        raise ParseError(f"unexpected {val!r}", col)
    return tree


def _generator(node: GenApp, lattice: int | None) -> Generator:
    kind = Kind.from_short(node.name)
    if len(node.args) != kind.arity:
        raise ArityError(
            f"{node.name} takes {kind.arity} index(es), got {len(node.args)} at column {node.column}"
        )
    if lattice is not None:
        for i in node.args:
            if not 1 <= i <= lattice:
                raise IndexOutOfRange(
                    f"index {i} of {node.name} outside lattice 1..{lattice} at column {node.column}"
                )
    return Generator(kind, node.args)


def lower(tree, lattice: int | None = None, alphabet: str | None = None) -> Element:
    """Turn an AST into an :class:`Element`, checking arity and bounds."""
    if isinstance(tree, Scalar):
        return Element.scalar(tree.value)
    if isinstance(tree, GenApp):
        x = _generator(tree, lattice)
        if alphabet is not None and x.alphabet != alphabet:
            raise AlphabetMismatch(f"{tree.name} is not in the {alphabet} algebra (column {tree.column})")
        return Element.word(x)
    if isinstance(tree, Product):
        out = Element.scalar(1)
        for f in tree.factors:
            out = out * lower(f, lattice, alphabet)
        return out
    out = Element()
    for sign, t in tree.terms:
        v = lower(t, lattice, alphabet)
        out = out + v if sign > 0 else out - v
    return out


def parse_element(text: str, lattice: int | None = None, alphabet: str | None = None) -> Element:
    return lower(parse(text), lattice, alphabet)


def parse_generator(text: str, lattice: int | None = None) -> Generator:
    tree = parse(text)
    if len(tree.terms) == 1 and tree.terms[0][0] == 1:
        factors = tree.terms[0][1].factors
        if len(factors) == 1 and isinstance(factors[0], GenApp):
            return _generator(factors[0], lattice)
    raise ParseError("expected a single generator like al(1,2)", 1)


def parse_scalar(text: str) -> Laurent:
    e = parse_element(text)
    if set(e.terms) - {()}:
        raise ParseError("expected a scalar expression", 1)
    return e.coeff(())
