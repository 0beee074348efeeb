"""Conversions between orderings and the closed forms built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

from .algebra import (
    DEFAULT_CAP,
    NormalForm,
    OperatorExpr,
    Word,
    brute_force_weyl,
    reorder_closed_form,
)
from .difference import binom, falling_factorial, rising_factorial, stirling_first
from .poly import EPS, N, ZERO, MPoly, as_mpoly

__all__ = [
    "normal_power",
    "antinormal_power",
    "weyl_from_normal",
    "weyl_from_antinormal",
    "SOrderCoeffs",
    "s_transform",
    "realize",
    "alpha",
    "SymmetricForm",
    "weyl_symmetric",
]

HALF = Fraction(1, 2)


def normal_power(n: int) -> MPoly:
    """``ad^n a^n`` as a polynomial in N."""
    return falling_factorial(N, n)


def antinormal_power(n: int) -> MPoly:
    """``a^n ad^n`` as a polynomial in N."""
    return rising_factorial(N + EPS, n)


def _contraction_weight(k: int, n: int, m: int) -> Fraction:
    return Fraction(factorial(k) * binom(n, k) * binom(m, k), 2**k)


def weyl_from_normal(n: int, m: int) -> NormalForm:
    """Weyl-symmetrised ``ad^n a^m`` as a normal form:
    ``sum_k eps^k k!/2^k C(n,k) C(m,k) ad^(n-k) a^(m-k)``."""
    return NormalForm(
        {
            (n - k, m - k): MPoly.monomial(_contraction_weight(k, n, m), dEps=k)
            for k in range(min(n, m) + 1)
        }
    )


def weyl_from_antinormal(n: int, m: int) -> NormalForm:
    """The same operator assembled from anti-normal words
    ``(-eps)^k k!/2^k C(n,k) C(m,k) a^(m-k) ad^(n-k)`` and normal-ordered."""
    out = NormalForm()
    for k in range(min(n, m) + 1):
        w = _contraction_weight(k, n, m) * (-1) ** k
        out = out + reorder_closed_form(m - k, n - k).scale(MPoly.monomial(w, dEps=k))
    return out


@dataclass(frozen=True)
class SOrderCoeffs:
    """``sum coeffs[p, q] {ad^p a^q}_s`` for order parameter ``s``.

    s = 1 is normal, 0 Weyl, -1 anti-normal ordering.
    """

    s: MPoly
    coeffs: Dict[Tuple[int, int], MPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "s", as_mpoly(self.s))
        clean = {}
        for key, c in self.coeffs.items():
            c = as_mpoly(c)
            if not c.is_zero():
                clean[tuple(key)] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_normal_form(cls, nf: NormalForm) -> "SOrderCoeffs":
        return cls(MPoly.const(1), nf.terms)

    @classmethod
    def from_operator_symbol(cls, e: OperatorExpr, s) -> "SOrderCoeffs":
        """Read each word as the s-ordered symbol of its letter counts."""
        coeffs: Dict[Tuple[int, int], MPoly] = {}
        for w, c in e.items():
            key = w.counts
            coeffs[key] = coeffs.get(key, ZERO) + c
        return cls(s, coeffs)

    def subs_eps(self, value) -> "SOrderCoeffs":
        return SOrderCoeffs(self.s, {k: c.substitute("eps", value) for k, c in self.coeffs.items()})

    def items(self):
        for key in sorted(self.coeffs, key=lambda pq: (-(pq[0] + pq[1]), -pq[0])):
            yield key, self.coeffs[key]

    def __str__(self) -> str:
        from .printing import format_sorder

        return format_sorder(self)


def s_transform(src: SOrderCoeffs, target_s, eps=EPS) -> SOrderCoeffs:
    """Re-express ``src`` at order parameter ``target_s``.

    ``{ad^n a^m}_s = sum_k k! C(n,k) C(m,k) ((t-s) eps/2)^k {ad^(n-k) a^(m-k)}_t``
    """
    t = as_mpoly(target_s)
    shift = (t - src.s) * as_mpoly(eps) * HALF
    if shift.is_zero():
        return SOrderCoeffs(t, src.coeffs)
    powers = [MPoly.const(1)]
    out: Dict[Tuple[int, int], MPoly] = {}
    for (n, m), c in src.coeffs.items():
        for k in range(min(n, m) + 1):
            while len(powers) <= k:
                powers.append(powers[-1] * shift)
            term = c * powers[k] * (factorial(k) * binom(n, k) * binom(m, k))
            key = (n - k, m - k)
            out[key] = out.get(key, ZERO) + term
    return SOrderCoeffs(t, out)


def realize(sc: SOrderCoeffs, cap: int = DEFAULT_CAP) -> OperatorExpr:
    """Spell out an s-ordered combination as words (s in {1, 0, -1} only)."""
    if not sc.s.is_constant() or sc.s.constant() not in (1, 0, -1):
        raise ValueError(f"no word realisation for order parameter {sc.s}")
    s = sc.s.constant()
    out = OperatorExpr()
    for (p, q), c in sc.coeffs.items():
        if s == 1:
            piece = OperatorExpr.from_word(Word.ordered(p, q))
        elif s == -1:
            piece = OperatorExpr.from_word(Word((0,) * q + (1,) * p))
        else:
            piece = brute_force_weyl(p, q, cap=cap)
        out = out + piece.map_coefficients(lambda x, c=c: x * c)
    return out


def alpha(n: int, i: int) -> Fraction:
    """Coefficient of the degree ``n - i`` symmetric pair in the Weyl-ordered
    ``(ad a)^n``; ``alpha(n, 0) = 1/2``."""
    if n < 1 or i < 0:
        raise ValueError("alpha(n, i) needs n >= 1 and i >= 0")
    if i == 0:
        return HALF
    total = Fraction(0)
    # C(n-1, k) vanishes beyond k = n-1
    for k in range(min(i, n - 1) + 1):
        s = stirling_first(n - k, n - i)
        if s:
            total += _contraction_weight(k, n, n - 1) * s
    return total * HALF


@dataclass(frozen=True)
class SymmetricForm:
    """``sum alpha * {N^d + (N+1)^d}`` over ``terms = ((d, alpha), ...)``, at eps = 1."""

    n: int
    terms: Tuple[Tuple[int, Fraction], ...]

    def expand(self) -> MPoly:
        out = ZERO
        for d, c in self.terms:
            out = out + (N**d + (N + 1) ** d) * c
        return out

    def evaluate(self, k: int) -> Fraction:
        return sum((c * (k**d + (k + 1) ** d) for d, c in self.terms), Fraction(0))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"degree": d, "coef": str(c)} for d, c in self.terms],
        }

    def __str__(self) -> str:
        from .printing import format_symmetric

        return format_symmetric(self)


def weyl_symmetric(n: int) -> SymmetricForm:
    """Weyl-ordered ``(ad a)^n`` as a combination of ``N^d + (N+1)^d``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return SymmetricForm(
        n, tuple((n - 2 * j, alpha(n, 2 * j)) for j in range((n - 1) // 2 + 1))
    )
