from fractions import Fraction

import pytest
from hypothesis import given, settings

from weylorder.algebra import AD, A, NormalForm, OperatorExpr, Word, brute_force_weyl, normalize
from weylorder.difference import falling_factorial
from weylorder.errors import ModeError, ParseError
from weylorder.orderings import weyl_symmetric
from weylorder.parser import Atom, Power, Product, parse, parse_npoly, parse_operator
from weylorder.poly import EPS, N, ZERO, MPoly
from weylorder.printing import format, format_mpoly

from conftest import mpolys, operator_exprs

SIX_WORDS = "1/6 (ad^2 a^2 + ad a ad a + ad a a ad + a ad ad a + a ad a ad + a^2 ad^2)"


def test_product_of_atoms():
    ast = parse("ad a")
    assert isinstance(ast, Product)
    assert [f.name for f in ast.factors] == ["ad", "a"]
    assert parse_operator("a ad") == OperatorExpr.from_word(Word([A, AD]))


def test_power_of_product_repeats():
    assert parse_operator("(ad a)^2") == OperatorExpr.from_word(Word([AD, A, AD, A]))


def test_six_word_listing():
    e = parse_operator(SIX_WORDS)
    assert len(e) == 6
    assert {c for _, c in e.items()} == {MPoly.const(Fraction(1, 6))}
    assert e == brute_force_weyl(2, 2)


def test_npoly_examples():
    assert parse_npoly("N^3 - 3*N^2 + 2*N") == falling_factorial(N, 3).substitute("eps", 1)
    p = parse_npoly("2/3 eps^2")
    assert p == Fraction(2, 3) * EPS**2 and len(p.terms) == 1
    assert parse_npoly("-N + t") == MPoly.var("t") - N
    assert parse_npoly("(N+1)^2") == N**2 + 2 * N + 1


def test_star_and_juxtaposition_agree():
    assert parse_operator("ad*a") == parse_operator("ad a")
    assert parse_npoly("2*N*eps") == parse_npoly("2 N eps")


def test_unary_minus_binds_looser_than_product():
    assert parse_npoly("-2 N^2") == -2 * N**2
    assert parse_npoly("N - -N") == 2 * N


@pytest.mark.parametrize("k", range(1, 13))
def test_operator_powers(k):
    expected = OperatorExpr.scalar(1)
    for _ in range(k):
        expected = expected * OperatorExpr.from_word(Word([AD]))
    assert parse_operator(f"ad^{k}") == expected
    assert isinstance(parse(f"ad^{k}"), Power)


def test_whitespace_insignificant():
    assert parse_operator("  ad   a^2 ") == parse_operator("ad a^2")
    assert parse("ad a") == parse("ad a")


def test_syntax_error_offsets():
    with pytest.raises(ParseError) as info:
        parse("ad + ")
    assert info.value.offset == 5
    assert "end of input" not in info.value.expected
    assert "'('" in info.value.expected

    with pytest.raises(ParseError) as info:
        parse("(ad a")
    assert info.value.offset == 5
    assert "')'" in info.value.expected

    with pytest.raises(ParseError) as info:
        parse("ad^0")
    assert info.value.offset == 3
    assert info.value.expected == {"positive integer"}

    with pytest.raises(ParseError) as info:
        parse("ad $ a")
    assert info.value.offset == 3


def test_error_offsets_stable():
    offsets = set()
    for _ in range(3):
        with pytest.raises(ParseError) as info:
            parse("ad a )")
        offsets.add(info.value.offset)
    assert offsets == {5}


def test_unknown_atom():
    with pytest.raises(ParseError) as info:
        parse("ad b")
    assert info.value.offset == 3


def test_float_literal_rejected():
    with pytest.raises(ParseError):
        parse_npoly("1.5 N")


def test_zero_denominator():
    with pytest.raises(ParseError):
        parse_npoly("1/0 N")


def test_mode_errors():
    with pytest.raises(ModeError) as info:
        parse("ad N")
    assert info.value.offset == 3
    with pytest.raises(ModeError):
        parse("N a", mode="npoly")
    assert isinstance(ModeError("x", 0), ParseError)
    with pytest.raises(ValueError):
        parse("N", mode="other")


def test_lower_rejects_mixed_tree():
    from weylorder.parser import lower

    mixed = Product((Atom("ad", 0), Atom("N", 3)), 0)
    with pytest.raises(ModeError):
        lower(mixed, "operator")


def test_format_examples():
    assert format(NormalForm({(1, 1): 1, (0, 0): Fraction(1, 2)})) == "ad a + 1/2"
    for style in ("text", "latex", "json"):
        assert format(ZERO, style) == "0"
    expected = r"\frac{1}{2}\{N^{3}+(N+1)^{3}\}+\frac{1}{4}\{N+(N+1)\}"
    assert format(weyl_symmetric(3), "latex") == expected


def test_symmetric_text_reparses():
    for n in range(1, 8):
        sf = weyl_symmetric(n)
        assert parse_npoly(format(sf)) == sf.expand()


def test_normal_form_text_reparses():
    nf = normalize(brute_force_weyl(3, 2))
    assert normalize(parse_operator(format(nf))) == nf


def test_format_deterministic():
    e = brute_force_weyl(2, 3)
    assert format(e) == format(OperatorExpr(dict(reversed(list(e.terms.items())))))


@given(operator_exprs)
@settings(max_examples=150)
def test_operator_round_trip(e):
    assert parse_operator(format(e)) == e


@given(mpolys(max_deg=4, max_terms=6))
@settings(max_examples=150)
def test_npoly_round_trip(p):
    assert parse_npoly(format_mpoly(p)) == p
    assert parse_npoly(format_mpoly(p, sep=" ")) == p


@given(operator_exprs)
@settings(max_examples=50)
def test_parse_deterministic(e):
    text = format(e)
    assert parse(text) == parse(text)
