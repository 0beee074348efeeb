import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from weylorder.poly import EPS, N, ONE, T, ZERO, MPoly
from weylorder.printing import format

from conftest import mpolys


def test_add_disjoint_monomials():
    assert N + EPS == MPoly({(1, 0, 0): 1, (0, 1, 0): 1})


def test_difference_of_squares():
    assert (N + 1) * (N - 1) == N**2 - 1


def test_falling_product_expansion():
    # N^3 - 3 eps N^2 + 2 eps^2 N, by hand; matches s(3,2) = -3, s(3,1) = 2
    p = N * (N - EPS) * (N - 2 * EPS)
    assert p.terms == {(3, 0, 0): 1, (2, 1, 0): -3, (1, 2, 0): 2}


def test_substitute_binomial():
    assert (N**2).substitute("N", N + EPS) == N**2 + 2 * EPS * N + EPS**2


def test_substitute_zero_stays_zero():
    assert (N - N).substitute("N", T**3 + 5) == ZERO


def test_substitute_eps_one():
    p = N * (N - EPS) * (N - 2 * EPS)
    assert p.substitute("eps", 1) == N**3 - 3 * N**2 + 2 * N


def test_is_zero():
    assert ((N + 1) ** 2 - N**2 - 2 * N - 1).is_zero()
    assert not (N - EPS).is_zero()


def test_zero_polynomial_is_empty():
    assert ZERO.terms == {}
    assert (N * 0).terms == {}
    assert MPoly({(1, 0, 0): 0}).is_zero()


def test_canonical_text():
    p = N * (N - EPS) * (N - 2 * EPS)
    assert str(p) == "N^3 - 3*eps*N^2 + 2*eps^2*N"
    assert format(ZERO, "text") == "0"
    assert format(ZERO, "latex") == "0"


def test_json_form():
    p = N**2 * Fraction(1, 2) - EPS
    data = json.loads(format(p, "json"))
    assert data == {
        "terms": [
            {"N": 2, "eps": 0, "t": 0, "coef": "1/2"},
            {"N": 0, "eps": 1, "t": 0, "coef": "-1"},
        ]
    }
    assert MPoly.from_json(data) == p


def test_exact_division_by_eps():
    assert (EPS * N + EPS**2).divide_by_var("eps") == N + EPS
    with pytest.raises(Exception):
        (N + EPS).divide_by_var("eps")


def test_evaluate():
    assert (N**2 + EPS * T).evaluate(N=3, eps=Fraction(1, 2), t=4) == 11


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        MPoly.const(0.5)


def test_degree():
    p = N**3 * EPS + T
    assert p.degree() == 4
    assert p.degree("N") == 3
    assert ZERO.degree() == -1


@given(mpolys(), mpolys(), mpolys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(mpolys(max_deg=2), mpolys(max_deg=2), mpolys(max_deg=1, max_terms=2))
@settings(max_examples=60)
def test_substitution_is_homomorphism(a, b, value):
    for var in ("N", "eps", "t"):
        assert (a * b).substitute(var, value) == a.substitute(var, value) * b.substitute(var, value)
        assert (a + b).substitute(var, value) == a.substitute(var, value) + b.substitute(var, value)


@given(mpolys())
def test_multiplication_degree_bound(a):
    b = N * EPS + T**2
    if not a.is_zero():
        assert (a * b).degree() <= a.degree() + b.degree()


@given(mpolys())
def test_json_round_trip(p):
    assert MPoly.from_json(json.loads(format(p, "json"))) == p


@given(mpolys(), mpolys())
def test_hash_consistent_with_eq(a, b):
    if a == b:
        assert hash(a) == hash(b)
