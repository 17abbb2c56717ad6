"""Antipode candidate on the one-point lattice.

The homogeneous block A = [[al, b], [bs, als]] is inverted through an
adjugate ansatz ``adj = [[c1 als, c2 b], [c3 bs, c4 al]]`` with unit
coefficients and a determinant ``D = al als - lam b bs``.  ``D^-1`` is a
formal symbol that is only ever kept as a left prefix: an antipode value
``S(x)`` is stored as the element ``X`` standing for ``D^-1 X``.  Moving
``D^-1`` to the left past a generator uses the q-commutation of D with
that generator, which is discovered by normal ordering, never assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import Element, Generator, Kind
from .hopf import Model, counit
from .rewrite import normal_order
from .scalar import ONE, Laurent

__all__ = [
    "AdjugateNotFound",
    "UnsupportedLattice",
    "Antipode",
    "unit_candidates",
    "antipode_candidate_n1",
    "antipode_defects",
]


class AdjugateNotFound(Exception):
    """The bounded adjugate search has no solution.

    ``closest`` holds the best partial candidate (all off-diagonal entries
    vanish) and the diagonal residual it leaves, when one exists.
    """

    def __init__(self, message, closest=None):
        super().__init__(message)
        self.closest = closest


class UnsupportedLattice(NotImplementedError):
    pass


AL = Generator(Kind.Alpha, (1, 1))
ALS = Generator(Kind.AlphaStar, (1, 1))
B = Generator(Kind.Beta, (1, 1))
BS = Generator(Kind.BetaStar, (1, 1))
F = Generator(Kind.F, (1,))
FS = Generator(Kind.FStar, (1,))

# A and the shape of its adjugate; entry (i, j) of the adjugate is c_ij * ADJ[i][j]
A = ((AL, B), (BS, ALS))
ADJ = ((ALS, B), (BS, AL))
FCOL = (F, FS)


def unit_candidates(max_power: int = 3, classical: bool = False) -> list[Laurent]:
    """+/- q^k for |k| <= max_power, simplest first."""
    out = []
    for k in sorted(range(-max_power, max_power + 1), key=lambda k: (abs(k), -k)):
        for s in (1, -1):
            c = Laurent.monomial(s, k)
            if classical:
                c = Laurent.const(c.eval_at_one())
            if c not in out:
                out.append(c)
    return out


@dataclass
class Antipode:
    lam: Laurent
    coefficients: tuple  # (c1, c2, c3, c4)
    adjugate: tuple  # 2x2 Elements
    det: Element
    mu: dict  # Generator -> Laurent, D x = mu x D
    S: dict = field(default_factory=dict)  # Generator -> X, meaning S(g) = D^-1 X

    def matrix(self) -> list[list[tuple[int, Element]]]:
        """S(M) as (power of D^-1, element) entries of the 3x3 matrix."""
        out = [[(1, self.S[A[i][j]]) for j in range(2)] + [(1, self.S[FCOL[i]])] for i in range(2)]
        out.append([(0, Element()), (0, Element()), (0, Element.scalar(ONE))])
        return out


def _nf(x: Element, model: Model) -> Element:
    return normal_order(x, model.group)


def _w(*g) -> Element:
    return Element.word(*g)


def _search(model: Model, max_power: int):
    cands = unit_candidates(max_power, model.classical)
    # products needed by A.adj and adj.A, normal ordered once; both sides are linear in c
    left = {(i, t, j): _nf(_w(A[i][t], ADJ[t][j]), model) for i, t, j in itertools.product(range(2), repeat=3)}
    right = {(i, t, j): _nf(_w(ADJ[i][t], A[t][j]), model) for i, t, j in itertools.product(range(2), repeat=3)}
    al_als, b_bs = _nf(_w(AL, ALS), model), _nf(_w(B, BS), model)

    def a_adj(c, i, j):
        return left[i, 0, j].scale(c[0][j]) + left[i, 1, j].scale(c[1][j])

    def adj_a(c, i, j):
        return right[i, 0, j].scale(c[i][0]) + right[i, 1, j].scale(c[i][1])

    partial = None
    for c1, c3 in itertools.product(cands, repeat=2):
        c = [[c1, None], [c3, None]]
        if a_adj(c, 1, 0):
            continue
        for c2 in cands:
            c[0][1] = c2
            if adj_a(c, 0, 1):
                continue
            for c4 in cands:
                c[1][1] = c4
                if a_adj(c, 0, 1) or adj_a(c, 1, 0):
                    continue
                diag = [a_adj(c, 0, 0), a_adj(c, 1, 1), adj_a(c, 0, 0), adj_a(c, 1, 1)]
                for lam in cands:
                    D = al_als - b_bs.scale(lam)
                    if all(d == D for d in diag):
                        return (c1, c2, c3, c4), lam, D
                if partial is None:
                    partial = ((c1, c2, c3, c4), diag)
    return None, None, partial


def antipode_candidate_n1(model: Model | None = None, max_power: int = 3) -> Antipode:
    model = model or Model(1)
    if model.n != 1:
        raise UnsupportedLattice("the antipode candidate is only built for n = 1")
    coeffs, lam, D = _search(model, max_power)
    if coeffs is None:
        closest = None
        if D is not None:
            cs, diag = D
            closest = {
                "coefficients": cs,
                "diagonal": diag,
                "residual": diag[1] - diag[0],
            }
        raise AdjugateNotFound(
            f"no unit coefficients with |power| <= {max_power} give A adj = adj A = D I",
            closest,
        )
    c1, c2, c3, c4 = coeffs
    cmat = ((c1, c2), (c3, c4))
    adj = tuple(tuple(_w(ADJ[i][j]).scale(cmat[i][j]) for j in range(2)) for i in range(2))
    # verify directly, not through the linear shortcut used by the search
    for i, j in itertools.product(range(2), repeat=2):
        lhs = _nf(sum((_w(A[i][t]) * adj[t][j] for t in range(2)), Element()), model)
        rhs = _nf(sum((adj[i][t] * _w(A[t][j]) for t in range(2)), Element()), model)
        target = D if i == j else Element()
        if lhs != target or rhs != target:
            raise AdjugateNotFound(f"candidate failed direct verification at ({i},{j})")

    mu = {}
    for x in (AL, ALS, B, BS, F, FS):
        dx = _nf(D * _w(x), model)
        xd = _nf(_w(x) * D, model)
        ratio = _ratio(dx, xd)
        if ratio is None:
            raise AdjugateNotFound(f"D does not q-commute with {x}: D x = {dx}, x D = {xd}")
        mu[x] = ratio

    S = {}
    for i, j in itertools.product(range(2), repeat=2):
        S[A[i][j]] = adj[i][j]
    for i in range(2):
        S[FCOL[i]] = -_nf(sum((adj[i][j] * _w(FCOL[j]) for j in range(2)), Element()), model)
    return Antipode(lam, coeffs, adj, D, mu, S)


def _ratio(x: Element, y: Element) -> Laurent | None:
    """The unit r with x == r*y, if any."""
    if not x or set(x.terms) != set(y.terms):
        return None
    w = next(iter(y.terms))
    c = y.coeff(w)
    if not c.is_unit() or not x.coeff(w).is_unit():
        return None
    r = x.coeff(w) * c.invert()
    return r if x == y.scale(r) else None


def _mu_word(w, mu) -> Laurent:
    out = ONE
    for x in w:
        out = out * mu[x]
    return out


def _shift(x: Element, mu) -> Element:
    """sigma(x) where x D^-1 = D^-1 sigma(x)."""
    return Element({w: c * _mu_word(w, mu) for w, c in x.terms.items()})


def antipode_defects(S: Antipode, model: Model | None = None) -> dict:
    """Brackets of both antipode axioms, entry by entry.

    Each value is the element ``Y`` with defect ``D^-1 Y``; the axiom
    holds at that entry iff ``Y`` normal-orders to zero.
    """
    model = model or Model(1)
    M = [[_w(AL), _w(B), _w(F)], [_w(BS), _w(ALS), _w(FS)], [Element(), Element(), Element.scalar(ONE)]]
    eps = [[Element.scalar(ONE if i == k else 0) for k in range(3)] for i in range(3)]
    for i, k in itertools.product(range(2), repeat=2):
        eps[i][k] = Element.scalar(counit(A[i][k]))
    Smat = S.matrix()
    D = S.det
    out = {}
    for i, k in itertools.product(range(3), repeat=2):
        left = Element()
        right = Element()
        for j in range(3):
            m, x = Smat[i][j]
            term = x * M[j][k]
            left = left + (term if m else D * term)
            m, x = Smat[j][k]
            if m:
                right = right + _shift(M[i][j], S.mu) * x
            else:
                right = right + D * M[i][j] * x
        out["left", i, k] = _nf(left - D * eps[i][k], model)
        out["right", i, k] = _nf(right - D * eps[i][k], model)
    return out
