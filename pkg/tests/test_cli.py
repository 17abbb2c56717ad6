import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from jsonschema import Draft202012Validator

from bigl import schemas
from bigl.algebra import Element, Generator, Kind, gen
from bigl.cli import main
from bigl.parser import ArityError, IndexOutOfRange, ParseError, parse_element, parse_generator, parse_scalar
from bigl.scalar import Q, QINV, Laurent


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_parse_examples():
    a1, ad1 = gen("a", 1), gen("ad", 1)
    assert parse_element("q*ad(1)*a(1) + 1") == Element.word(ad1, a1).scale(Q) + 1
    assert parse_element("(1 + q)*a(1)") == Element.word(a1).scale(1 + Q)
    assert parse_element("-q^-2*a(1) - 1/3") == Element.word(a1).scale(-QINV * QINV) - Element.scalar(Fraction(1, 3))
    assert parse_generator("al(1,2)", 2) == gen("al", 1, 2)
    assert parse_scalar("1/2*q^-3 + 2") == Laurent.monomial(Fraction(1, 2), -3) + 2


def test_parse_errors():
    with pytest.raises(ParseError) as info:
        parse_element("f(1")
    assert info.value.column == 4
    with pytest.raises(ParseError):
        parse_element("a(1) +")
    with pytest.raises(ParseError):
        parse_element("zz(1)")
    with pytest.raises(ParseError):
        parse_element("1/0")
    with pytest.raises(ArityError):
        parse_element("al(1)")
    with pytest.raises(IndexOutOfRange):
        parse_element("al(1,2)", lattice=1)
    with pytest.raises(ParseError):
        parse_generator("a(1)*a(1)")


def _generators(n, alphabet):
    out = []
    for kind in (k for k in Kind if k.alphabet == alphabet):
        out += [Generator(kind, (i,) * kind.arity) for i in range(1, n + 1)]
        if kind.arity == 2:
            out.append(Generator(kind, (1, 2)))
    return out


_coeffs = st.builds(
    lambda c, e: Laurent.monomial(c, e),
    st.builds(Fraction, st.integers(-9, 9).filter(bool), st.integers(1, 5)),
    st.integers(-3, 3),
)
_laurent = st.lists(_coeffs, min_size=1, max_size=3).map(sum)
_elements = st.sampled_from(["osc", "group"]).flatmap(
    lambda alphabet: st.lists(
        st.tuples(_laurent, st.lists(st.sampled_from(_generators(2, alphabet)), max_size=3)),
        max_size=4,
    )
).map(lambda ts: sum((Element.word(*w).scale(c) for c, w in ts), Element()))


@given(x=_elements)
def test_render_parse_round_trip(x):
    assert parse_element(str(x)) == x


def test_normalize_text_and_q():
    assert run("normalize", "--lattice", "1", "--algebra", "osc", "--expr", "a(1)*ad(1)") == (
        0, "q*ad(1)*a(1) + 1\n")
    code, out = run("normalize", "--lattice", "1", "--algebra", "osc", "--expr", "a(1)*ad(1)", "--q", "1/2")
    assert (code, out) == (0, "1/2*ad(1)*a(1) + 1\n")


def test_normalize_json():
    code, out = run("--format", "json", "normalize", "--lattice", "2", "--algebra", "group",
                    "--expr", "al(1,1)*b(1,1)")
    assert code == 0
    doc = json.loads(out)
    Draft202012Validator(schemas.NORMALIZE).validate(doc)
    assert doc["result"] == [{"coeff": "q^-1", "word": [["Beta", 1, 1], ["Alpha", 1, 1]]}]


@pytest.mark.parametrize("argv", [
    ("normalize", "--lattice", "1", "--algebra", "group", "--expr", "al(1,2)"),
    ("normalize", "--lattice", "1", "--algebra", "group", "--expr", "f(1"),
    ("normalize", "--lattice", "1", "--algebra", "osc", "--expr", "al(1,1)"),
    ("normalize", "--lattice", "0", "--algebra", "osc", "--expr", "a(1)"),
    ("verify", "--lattice", "2", "--suite", "antipode_n1"),
    ("verify", "--lattice", "1"),
    ("coproduct", "--lattice", "1", "--gen", "a(1)"),
    ("frobnicate",),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_verify_exit_codes():
    code, out = run("verify", "--lattice", "1", "--suite", "counit")
    assert code == 0 and "PASS" in out and "FAIL" not in out
    code, out = run("verify", "--lattice", "2", "--suite", "invariance")
    assert code == 1 and "FAIL commutativity(1,2)" in out
    assert run("verify", "--lattice", "2", "--suite", "invariance", "--variant", "negate-ff")[0] == 0


def test_verify_json():
    code, out = run("--format", "json", "verify", "--lattice", "1", "--all")
    assert code == 1
    Draft202012Validator(schemas.REPORT_LIST).validate(json.loads(out))
    code, out = run("verify", "--lattice", "1", "--suite", "glpq", "--format", "json", "--timings")
    Draft202012Validator(schemas.REPORT).validate(json.loads(out))


def test_coproduct_command():
    code, out = run("coproduct", "--lattice", "1", "--gen", "f(1)")
    assert code == 0
    assert out == "[f(1) | 1] + [b(1,1) | fs(1)] + [al(1,1) | f(1)]\n"
    code, out = run("--format", "json", "coproduct", "--lattice", "2", "--gen", "al(1,2)", "--reduce")
    doc = json.loads(out)
    Draft202012Validator(schemas.COPRODUCT).validate(doc)
    assert len(doc["result"]) == 4


def test_dump_rules():
    code, out = run("dump-rules", "--lattice", "1", "--algebra", "osc")
    assert code == 0
    assert "a(1)*ad(1) -> q*ad(1)*a(1) + 1" in out
    code, out = run("dump-rules", "--lattice", "2", "--algebra", "group", "--format", "json")
    doc = json.loads(out)
    Draft202012Validator(schemas.RULES).validate(doc)
    assert len(doc["rules"]) == 190
