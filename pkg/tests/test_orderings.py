from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylorder.algebra import NormalForm, balanced_to_npoly, brute_force_weyl, normalize
from weylorder.orderings import (
    SOrderCoeffs,
    alpha,
    antinormal_power,
    normal_power,
    realize,
    s_transform,
    weyl_from_antinormal,
    weyl_from_normal,
    weyl_symmetric,
)
from weylorder.algebra import Word
from weylorder.poly import EPS, N, ONE, T, MPoly

from conftest import rationals
from oracles import brute_weyl_number_value

half = Fraction(1, 2)


def test_normal_power():
    assert normal_power(0) == ONE
    assert normal_power(1) == N
    assert normal_power(3).substitute("eps", 1) == N**3 - 3 * N**2 + 2 * N
    assert normal_power(3) == balanced_to_npoly(normalize(Word.ordered(3, 3)))


def test_antinormal_power():
    assert antinormal_power(1) == N + EPS
    assert antinormal_power(2) == N**2 + 3 * EPS * N + 2 * EPS**2
    assert antinormal_power(2) == balanced_to_npoly(normalize(Word([0, 0, 1, 1])))
    assert antinormal_power(2).evaluate(eps=1, N=0) == 2


@pytest.mark.parametrize("n", range(7))
def test_factorial_powers_match_rewriting(n):
    assert normal_power(n) == balanced_to_npoly(normalize(Word.ordered(n, n)))
    assert antinormal_power(n) == balanced_to_npoly(normalize(Word([0] * n + [1] * n)))


def test_weyl_from_normal_examples():
    assert weyl_from_normal(1, 1).subs_eps(1) == NormalForm({(1, 1): 1, (0, 0): half})
    w2 = balanced_to_npoly(weyl_from_normal(2, 2)).substitute("eps", 1)
    assert w2 == N**2 + N + half
    assert weyl_from_normal(1, 0) == NormalForm({(1, 0): 1})


def test_weyl_from_antinormal_examples():
    assert balanced_to_npoly(weyl_from_antinormal(1, 1)) == N + EPS * half
    w3 = balanced_to_npoly(weyl_from_antinormal(3, 3)).substitute("eps", 1)
    assert w3 == N**3 + Fraction(3, 2) * N**2 + 2 * N + Fraction(3, 4)
    assert weyl_from_antinormal(0, 0) == NormalForm({(0, 0): 1})


@pytest.mark.parametrize("n", range(9))
def test_triple_agreement(n):
    via_normal = balanced_to_npoly(weyl_from_normal(n, n))
    assert via_normal == balanced_to_npoly(weyl_from_antinormal(n, n))
    if n >= 1:
        assert weyl_symmetric(n).expand() == via_normal.substitute("eps", 1)
    if n <= 5:
        assert balanced_to_npoly(normalize(brute_force_weyl(n, n))) == via_normal


@pytest.mark.parametrize("n,m", [(n, m) for n in range(11) for m in range(11 - n)])
def test_mixed_degree_agreement(n, m):
    reference = weyl_from_normal(n, m)
    assert weyl_from_antinormal(n, m) == reference
    assert normalize(brute_force_weyl(n, m)) == reference


def test_s_transform_examples():
    src = SOrderCoeffs(1, {(1, 1): 1})
    to_weyl = s_transform(src, 0).subs_eps(1)
    assert to_weyl.coeffs == {(1, 1): ONE, (0, 0): MPoly.const(-half)}
    assert to_weyl.s == MPoly.const(0)
    assert s_transform(src, 1).coeffs == src.coeffs
    to_anti = s_transform(src, -1).subs_eps(1)
    assert to_anti.coeffs == {(1, 1): ONE, (0, 0): MPoly.const(-1)}


@pytest.mark.parametrize("s", [1, 0, -1])
@pytest.mark.parametrize("t", [1, 0, -1])
@pytest.mark.parametrize("n,m", [(0, 0), (1, 1), (2, 1), (2, 3), (3, 3), (4, 2)])
def test_s_transform_against_words(s, t, n, m):
    # both sides spelled out as words and normal-ordered
    src = SOrderCoeffs(s, {(n, m): 1})
    dst = s_transform(src, t)
    assert normalize(realize(src)) == normalize(realize(dst))


@given(rationals, rationals, rationals, st.integers(0, 4), st.integers(0, 4))
@settings(max_examples=60)
def test_s_transform_group_law(s, t, u, n, m):
    src = SOrderCoeffs(s, {(n, m): 1, (max(n - 1, 0), m): Fraction(2, 3)})
    two_step = s_transform(s_transform(src, t), u)
    direct = s_transform(src, u)
    assert two_step.coeffs == direct.coeffs
    assert s_transform(s_transform(src, t), s).coeffs == src.coeffs


def test_s_transform_symbolic_parameter():
    src = SOrderCoeffs(T, {(1, 1): 1})
    out = s_transform(src, 0)
    assert out.coeffs[(0, 0)] == -T * EPS * half


def test_weyl_formulas_are_s_transforms():
    for n in range(5):
        for m in range(5):
            weyl = SOrderCoeffs(0, {(n, m): 1})
            assert NormalForm(s_transform(weyl, 1).coeffs) == weyl_from_normal(n, m)


def test_alpha_examples():
    for n in range(1, 10):
        assert alpha(n, 0) == half
    assert alpha(3, 2) == Fraction(1, 4)
    assert alpha(7, 4) == Fraction(49, 2)


def test_alpha_zero_index_sum_is_half():
    # the defining sum at i = 0 reduces to s(n, n) / 2
    from weylorder.difference import stirling_first

    assert all(stirling_first(n, n) * half == half for n in range(1, 20))


@pytest.mark.parametrize("n", range(1, 31))
def test_alpha_closed_forms(n):
    f = n * (n - 1) * (n - 2)
    assert alpha(n, 2) == Fraction(f, 24)
    assert alpha(n, 4) == Fraction(f * (n - 3) * (n - 4) * (5 * n - 7), 2880)
    assert alpha(n, 6) == Fraction(
        f * (n - 3) * (n - 4) * (n - 5) * (n - 6) * (35 * n * n - 147 * n + 124), 725760
    )
    assert all(alpha(n, i) == 0 for i in range(1, n + 2, 2))


def test_symmetric_examples():
    assert weyl_symmetric(1).terms == ((1, half),)
    assert weyl_symmetric(2).terms == ((2, half),)
    assert weyl_symmetric(3).terms == ((3, half), (1, Fraction(1, 4)))


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetric_matches_number_state_oracle(n):
    sf = weyl_symmetric(n)
    for k in range(6):
        assert sf.evaluate(k) == brute_weyl_number_value(n, k)


def test_realize_rejects_general_s():
    with pytest.raises(ValueError):
        realize(SOrderCoeffs(half, {(1, 1): 1}))
