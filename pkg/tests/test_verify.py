import json

import pytest
from jsonschema import Draft202012Validator

from bigl import schemas
from bigl.verify import SUITES, UnsupportedLattice, reports_to_json, run_all, run_suite


@pytest.mark.parametrize("n", [1, 2])
def test_check_census(n):
    gens = 4 * n * n + 2 * n
    assert len(run_suite("compatibility", n).checks) == n * n
    assert len(run_suite("invariance", n).checks) == 2 * n * n
    assert len(run_suite("coassociativity", n).checks) == gens
    assert len(run_suite("counit", n).checks) == 2 * gens
    assert len(run_suite("glpq", n).checks) == n**4
    assert len(run_suite("homomorphism", n).checks) == gens * (gens - 1) // 2


def test_passing_suites():
    for name in ("compatibility", "coassociativity", "counit", "star_closure", "glpq"):
        for n in (1, 2):
            assert run_suite(name, n).passed, name
    for name in ("invariance", "homomorphism", "classical_limit"):
        assert run_suite(name, 1).passed, name


def test_f_sector_failures_are_reported():
    rep = run_suite("invariance", 2)
    assert {c.id for c in rep.failures()} == {"commutativity(1,2)", "commutativity(2,1)"}
    assert all(c.residual for c in rep.failures())
    assert run_suite("invariance", 2, variant="negate-ff").passed


def test_antipode_suite_reports_missing_adjugate():
    rep = run_suite("antipode_n1", 1)
    assert [c.id for c in rep.checks] == ["adjugate_search: AdjugateNotFound"]
    assert rep.status == "fail"
    with pytest.raises(UnsupportedLattice):
        run_suite("antipode_n1", 2)


def test_run_all():
    reports = run_all(1)
    assert [r.suite for r in reports] == list(SUITES)
    assert len(run_all(2)) == 2 * len(SUITES) - 1
    with pytest.raises(ValueError):
        run_all(0)
    with pytest.raises(ValueError):
        run_suite("nope", 1)


def test_reports_are_deterministic():
    assert reports_to_json(run_all(1)) == reports_to_json(run_all(1))


def test_reports_match_schema():
    validator = Draft202012Validator(schemas.REPORT_LIST)
    doc = json.loads(reports_to_json(run_all(2), timings=True))
    validator.validate(doc)
    assert any(c["residual"] for r in doc for c in r["checks"])
    single = json.loads(run_suite("invariance", 2, variant="drop-delta").to_json())
    Draft202012Validator(schemas.REPORT).validate(single)
    assert single["variant"] == "drop-delta"
