"""Normal ordering by oriented two-letter rewrite rules.

The monomial order is graded by weight (f-type letters weigh 2, every
other letter 1), then by the number of inversions relative to the
generator order ``(rank(kind), indices)``, then lexicographically.  Every
rule either swaps an inverted adjacent pair or drops weight, so reduction
terminates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    WEIGHT,
    Element,
    Generator,
    Kind,
    LegMismatch,
    TensorElement,
    _add_into,
    render_word,
)
from .scalar import ONE, Laurent

__all__ = [
    "RewriteRule",
    "RewriteSystem",
    "all_generators",
    "measure",
    "normal_order",
    "normal_order_tensor",
    "is_zero_mod",
    "all_normal_forms",
]


def weight(w) -> int:
    return sum(WEIGHT[g.kind] for g in w)


def inversions(w) -> int:
    keys = [g.key() for g in w]
    return sum(1 for i, j in itertools.combinations(range(len(keys)), 2) if keys[i] > keys[j])


def measure(w) -> tuple:
    """Well-founded sort key; every rule strictly decreases it."""
    return (weight(w), inversions(w), tuple(g.key() for g in w))


def all_generators(alphabet: str, n: int) -> list[Generator]:
    out = []
    for kind in Kind:
        if kind.alphabet != alphabet:
            continue
        for idx in itertools.product(range(1, n + 1), repeat=kind.arity):
            out.append(Generator(kind, idx))
    return sorted(out, key=Generator.key)


@dataclass(frozen=True)
class RewriteRule:
    pattern: tuple  # (Generator, Generator)
    replacement: Element
    tag: str = ""

    def relation(self) -> Element:
        """pattern - replacement, an element of the defining ideal."""
        return Element.word(*self.pattern) - self.replacement

    def to_json(self) -> dict:
        return {
            "pattern": [g.to_json() for g in self.pattern],
            "replacement": self.replacement.to_json(),
            "relation": self.tag,
        }

    def __str__(self):
        return f"{render_word(self.pattern)} -> {self.replacement}"


@dataclass
class RewriteSystem:
    n: int
    alphabet: str
    rules: dict = field(default_factory=dict)  # (g1, g2) -> RewriteRule
    label: str = ""

    def __post_init__(self):
        self._cache: dict = {}

    def add(self, rule: RewriteRule) -> None:
        if rule.pattern in self.rules:
            raise ValueError(f"duplicate rule for {render_word(rule.pattern)}")
        self.rules[rule.pattern] = rule
        self._cache.clear()

    def __iter__(self):
        return iter(sorted(self.rules.values(), key=lambda r: measure(r.pattern)))

    def __len__(self):
        return len(self.rules)

    def get(self, x: Generator, y: Generator):
        return self.rules.get((x, y))

    def map_coefficients(self, fn: Callable[[Laurent], Laurent], label: str | None = None) -> "RewriteSystem":
        out = RewriteSystem(self.n, self.alphabet, label=self.label if label is None else label)
        for r in self:
            out.add(RewriteRule(r.pattern, r.replacement.map_coefficients(fn), r.tag))
        return out

    def classical(self) -> "RewriteSystem":
        """Every coefficient specialised at q = 1."""
        return self.map_coefficients(lambda c: Laurent.const(c.eval_at_one()), label=f"{self.label}@q=1")

    def replace(self, pattern, replacement: Element) -> "RewriteSystem":
        """Copy with one rule's right-hand side swapped out (negative controls)."""
        out = RewriteSystem(self.n, self.alphabet, label=f"{self.label}*")
        for r in self:
            out.add(r if r.pattern != tuple(pattern) else RewriteRule(r.pattern, replacement, r.tag))
        return out

    def missing_rules(self) -> list[tuple]:
        """Out-of-order pairs without a rule, plus rules whose pattern is already ordered."""
        bad = []
        for x in all_generators(self.alphabet, self.n):
            for y in all_generators(self.alphabet, self.n):
                has = (x, y) in self.rules
                if (x.key() > y.key()) != has:
                    bad.append((x, y))
        return bad

    def to_json(self) -> dict:
        return {
            "lattice": self.n,
            "algebra": self.alphabet,
            "rules": [r.to_json() for r in self],
        }


def _nf_word(w: tuple, sys: RewriteSystem, stats=None) -> dict:
    cache = sys._cache
    hit = cache.get(w)
    if hit is not None:
        return hit
    rules = sys.rules
    for i in range(len(w) - 1):
        rule = rules.get((w[i], w[i + 1]))
        if rule is None:
            continue
        if stats is not None:
            stats["steps"] = stats.get("steps", 0) + 1
        acc: dict = {}
        head, tail = w[:i], w[i + 2:]
        for u, c in rule.replacement.terms.items():
            for v, d in _nf_word(head + u + tail, sys, stats).items():
                _add_into(acc, v, c * d)
        break
    else:
        acc = {w: ONE}
    cache[w] = acc
    return acc


def normal_order(x, sys: RewriteSystem, stats: dict | None = None) -> Element:
    """Reduce ``x`` to normal form, leftmost redex first."""
    if isinstance(x, Generator):
        x = Element.word(x)
    a = x.alphabet
    if a is not None and a != sys.alphabet:
        raise LegMismatch(f"{a} element reduced with {sys.alphabet} rules")
    acc: dict = {}
    for w, c in x.terms.items():
        for v, d in _nf_word(w, sys, stats).items():
            _add_into(acc, v, c * d)
    return Element._wrap(acc)


def normal_order_tensor(x: TensorElement, systems) -> TensorElement:
    systems = tuple(systems)
    if len(systems) != x.legs or any(s.alphabet != a for s, a in zip(systems, x.alphabets)):
        raise LegMismatch(f"systems {[s.alphabet for s in systems]} vs legs {x.alphabets}")
    acc: dict = {}
    for ws, c in x.terms.items():
        partial = {(): c}
        for w, s in zip(ws, systems):
            nf = _nf_word(w, s)
            nxt: dict = {}
            for head, hc in partial.items():
                for v, d in nf.items():
                    _add_into(nxt, head + (v,), hc * d)
            partial = nxt
        for k, v in partial.items():
            _add_into(acc, k, v)
    return TensorElement._wrap(x.alphabets, acc)


def is_zero_mod(x, sys) -> bool:
    if isinstance(x, TensorElement):
        return normal_order_tensor(x, sys).is_zero()
    return normal_order(x, sys).is_zero()


def all_normal_forms(x, sys: RewriteSystem, cap: int = 64) -> frozenset:
    """Every normal form reachable by applying rules at any redex, in any order.

    Independent of :func:`normal_order`: no leftmost preference and no
    shared cache.  Words are explored separately and their outcome sets
    combined; the result is truncated to ``cap`` elements per word.
    """
    if isinstance(x, Generator):
        x = Element.word(x)
    memo: dict = {}

    def combine(pieces) -> set:
        results = {Element()}
        for c, forms in pieces:
            results = {r + f.scale(c) for r in results for f in forms}
            if len(results) > cap:
                results = set(sorted(results, key=str)[:cap])
        return results

    def nfs(w: tuple) -> frozenset:
        if w in memo:
            return memo[w]
        out: set = set()
        for i in range(len(w) - 1):
            rule = sys.rules.get((w[i], w[i + 1]))
            if rule is None:
                continue
            pieces = [
                (c, nfs(w[:i] + u + w[i + 2:])) for u, c in rule.replacement.terms.items()
            ]
            out |= combine(pieces)
        if not out and not any((w[i], w[i + 1]) in sys.rules for i in range(len(w) - 1)):
            out = {Element({w: ONE})}
        if len(out) > cap:
            out = set(sorted(out, key=str)[:cap])
        memo[w] = frozenset(out)
        return memo[w]

    return frozenset(combine([(c, nfs(w)) for w, c in x.terms.items()]))
