"""Named verification suites and their JSON reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import antipode as _antipode
from .algebra import Element, Generator, Kind, render_word
from .hopf import (
    Model,
    coassoc_defect,
    commutativity_defect,
    counit_defects,
    hom_defect,
    invariance_defect,
)
from .relations import (
    build_group_rules,
    build_oscillator_rules,
    delta,
    g,
    glpq_identification_report,
)
from .rewrite import normal_order
from .scalar import Q, render as render_scalar

SUITES = (
    "compatibility",
    "invariance",
    "homomorphism",
    "coassociativity",
    "counit",
    "star_closure",
    "classical_limit",
    "glpq",
    "antipode_n1",
)

UnsupportedLattice = _antipode.UnsupportedLattice


@dataclass
class Check:
    id: str
    passed: bool
    residual: object = None  # Element / TensorElement when failing
    ms: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "id": self.id,
            "status": "pass" if self.passed else "fail",
            "residual": None if self.residual is None else self.residual.to_json(),
            "ms": round(self.ms, 3) if timings else 0,
        }


@dataclass
class SuiteReport:
    suite: str
    lattice: int
    checks: list = field(default_factory=list)
    variant: str | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "lattice": self.lattice,
            "checks": [c.to_dict(timings) for c in self.checks],
            "status": self.status,
        }
        if self.variant is not None:
            out["variant"] = self.variant
        return out

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2)


def _run(report: SuiteReport, ident: str, fn) -> None:
    """Run one check; ``fn`` returns a residual, falsy when the check passes."""
    t0 = time.perf_counter()
    residual = fn()
    ms = (time.perf_counter() - t0) * 1000
    ok = not residual
    report.checks.append(Check(ident, ok, None if ok else residual, ms))


def _gname(x: Generator) -> str:
    return str(x)


def _pairs(n):
    return [(p, pp) for p in range(1, n + 1) for pp in range(1, n + 1)]


def suite_compatibility(n: int, rep: SuiteReport) -> None:
    for i, j in _pairs(n):
        _run(rep, f"g({i},{j}) == (q-1)*delta({i},{j}) + 1",
             lambda i=i, j=j: Element.scalar(g(i, j) - ((Q - 1) * delta(i, j) + 1)))


def suite_invariance(model: Model, rep: SuiteReport, prefix: str = "") -> None:
    for p, pp in _pairs(model.n):
        _run(rep, f"{prefix}invariance({p},{pp})", lambda p=p, pp=pp: invariance_defect(p, pp, model))
    for p, pp in _pairs(model.n):
        _run(rep, f"{prefix}commutativity({p},{pp})", lambda p=p, pp=pp: commutativity_defect(p, pp, model))


def suite_homomorphism(model: Model, rep: SuiteReport, prefix: str = "") -> None:
    for rule in model.group:
        _run(rep, f"{prefix}hom[{render_word(rule.pattern)}]", lambda r=rule: hom_defect(r, model))


def suite_coassociativity(model: Model, rep: SuiteReport, prefix: str = "") -> None:
    for x in model.generators():
        _run(rep, f"{prefix}coassoc[{_gname(x)}]", lambda x=x: coassoc_defect(x, model))


def suite_counit(model: Model, rep: SuiteReport, prefix: str = "") -> None:
    for x in model.generators():
        left, right = counit_defects(x, model)
        rep.checks.append(Check(f"{prefix}counit_left[{_gname(x)}]", not left, left or None))
        rep.checks.append(Check(f"{prefix}counit_right[{_gname(x)}]", not right, right or None))


def suite_star_closure(model: Model, rep: SuiteReport, prefix: str = "") -> None:
    for name, sys in (("osc", model.osc), ("group", model.group)):
        for rule in sys:
            _run(rep, f"{prefix}star[{name}:{render_word(rule.pattern)}]",
                 lambda r=rule, s=sys: normal_order(r.relation().star(), s))


def _classical_coefficients(orig, at_one) -> Element | None:
    """Residual when a specialised rule is not a plain +/-1 rewrite.

    Every term of the original replacement must survive and carry
    coefficient +1 or -1 once q = 1.
    """
    if set(orig.replacement.terms) != set(at_one.replacement.terms):
        return orig.replacement - at_one.replacement
    for w, c in at_one.replacement.terms.items():
        if not c.is_constant() or abs(c.eval_at_one()) != 1:
            return Element({w: c})
    return None


def suite_classical_limit(n: int, rep: SuiteReport, variant: str | None = None) -> None:
    model = Model(n, classical=True, variant=variant)
    for name, sys, at_one in (
        ("osc", build_oscillator_rules(n), model.osc),
        ("group", build_group_rules(n, variant), model.group),
    ):
        for rule in at_one:
            orig = sys.rules[rule.pattern]
            _run(rep, f"q=1 coefficients[{name}:{render_word(rule.pattern)}]",
                 lambda o=orig, r=rule: _classical_coefficients(o, r))
    a1, ad1 = Generator(Kind.A, (1,)), Generator(Kind.ADag, (1,))
    ccr = Element.word(a1, ad1) - Element.word(ad1, a1) - Element.scalar(1)
    _run(rep, "q=1 a(1)*ad(1) - ad(1)*a(1) - 1", lambda: normal_order(ccr, model.osc))
    suite_invariance(model, rep, "q=1/")
    suite_homomorphism(model, rep, "q=1/")
    suite_coassociativity(model, rep, "q=1/")
    suite_counit(model, rep, "q=1/")
    suite_star_closure(model, rep, "q=1/")


def suite_glpq(n: int, rep: SuiteReport) -> None:
    for entry in glpq_identification_report(n):
        p, k, pp, l = entry.indices
        P, Qp = entry.params
        ident = f"block(p={p},k={k},p'={pp},l={l}) params=({render_scalar(P)}, {render_scalar(Qp)})"
        residual = None
        if not entry.ok:
            bad = [name for name in entry.expected if entry.coefficients[name] != entry.expected[name]]
            name = bad[0]
            residual = Element.scalar(entry.coefficients[name] - entry.expected[name])
        rep.checks.append(Check(ident, entry.ok, residual))


def suite_antipode_n1(n: int, rep: SuiteReport, model: Model | None = None) -> None:
    if n != 1:
        raise UnsupportedLattice("antipode_n1 requires lattice size 1")
    model = model or Model(1)
    t0 = time.perf_counter()
    try:
        S = _antipode.antipode_candidate_n1(model)
    except _antipode.AdjugateNotFound as exc:
        residual = None
        if exc.closest is not None:
            residual = exc.closest["residual"]
        rep.checks.append(Check("adjugate_search: AdjugateNotFound", False,
                                residual, (time.perf_counter() - t0) * 1000))
        return
    rep.checks.append(Check(
        f"adjugate_search: lam={render_scalar(S.lam)} c=({', '.join(render_scalar(c) for c in S.coefficients)})",
        True, None, (time.perf_counter() - t0) * 1000,
    ))
    for x, mu in S.mu.items():
        rep.checks.append(Check(f"D*{x} = {render_scalar(mu)}*{x}*D", True))
    for (side, i, k), y in sorted(_antipode.antipode_defects(S, model).items()):
        rep.checks.append(Check(f"antipode_{side}({i + 1},{k + 1})", not y, y or None))


def run_suite(name: str, n: int, variant: str | None = None) -> SuiteReport:
    """Run one named suite at lattice size ``n``.

    ``variant`` selects an altered group relation set (see
    ``relations.GROUP_VARIANTS``); the default is the relations as printed.
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if n < 1:
        raise ValueError("lattice size must be at least 1")
    if name == "antipode_n1" and n != 1:
        raise UnsupportedLattice("antipode_n1 requires lattice size 1")
    rep = SuiteReport(name, n, variant=variant)
    model = Model(n, variant=variant)
    if name == "compatibility":
        suite_compatibility(n, rep)
    elif name == "invariance":
        suite_invariance(model, rep)
    elif name == "homomorphism":
        suite_homomorphism(model, rep)
    elif name == "coassociativity":
        suite_coassociativity(model, rep)
    elif name == "counit":
        suite_counit(model, rep)
    elif name == "star_closure":
        suite_star_closure(model, rep)
    elif name == "classical_limit":
        suite_classical_limit(n, rep, variant)
    elif name == "glpq":
        suite_glpq(n, rep)
    elif name == "antipode_n1":
        suite_antipode_n1(n, rep, model)
    return rep


def run_all(n_max: int = 2, variant: str | None = None) -> list[SuiteReport]:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    reports = []
    for n in range(1, n_max + 1):
        for name in SUITES:
            if name == "antipode_n1" and n != 1:
                continue
            reports.append(run_suite(name, n, variant))
    return reports


def reports_to_json(reports, timings: bool = False) -> str:
    return json.dumps([r.to_dict(timings) for r in reports], indent=2)
