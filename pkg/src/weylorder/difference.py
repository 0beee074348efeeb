"""Factorials with an increment, forward differences, Newton series and
signed Stirling numbers of the first kind.

All routines keep the increment symbolic (``EPS``) by default; pass
``step=1`` (or any rational) to specialise.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb, factorial
from typing import List

from .errors import WeylOrderError
from .poly import EPS, N, ONE, ZERO, MPoly, as_mpoly

__all__ = [
    "binom",
    "falling_factorial",
    "rising_factorial",
    "forward_difference",
    "newton_expand",
    "FactorialBasisExpansion",
    "stirling_first",
    "stirling_row",
    "factorial_monomial_convert",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def falling_factorial(base, n: int, step=EPS) -> MPoly:
    """``base (base - step) ... (base - (n-1) step)``; 1 for n == 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    base, step = as_mpoly(base), as_mpoly(step)
    out = ONE
    for j in range(n):
        out = out * (base - step * j)
    return out


def rising_factorial(base, n: int, step=EPS) -> MPoly:
    """``base (base + step) ... (base + (n-1) step)``; 1 for n == 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    base, step = as_mpoly(base), as_mpoly(step)
    out = ONE
    for j in range(n):
        out = out * (base + step * j)
    return out


def _divide_by_step(p: MPoly, step: MPoly) -> MPoly:
    if step == EPS:
        return p.divide_by_var("eps")
    if step.is_constant() and step.constant():
        return p / step.constant()
    raise WeylOrderError(f"unsupported difference step {step}")


def forward_difference(p, var: str = "N", step=EPS) -> MPoly:
    """``(p(var + step) - p(var)) / step``, computed exactly.

    With a symbolic step the division by eps must be exact; a failure here
    means a bug upstream, not bad input.
    """
    if var != "N":
        raise ValueError("forward differences are taken in N only")
    p, step = as_mpoly(p), as_mpoly(step)
    diff = p.substitute("N", N + step) - p
    return _divide_by_step(diff, step)


@dataclass(frozen=True)
class FactorialBasisExpansion:
    """``p(N) = sum_k coefficients[k] * N^(k falling)`` with the given increment."""

    increment: MPoly
    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def reconstruct(self) -> MPoly:
        out = ZERO
        ff = ONE
        for k, c in enumerate(self.coefficients):
            if k:
                ff = ff * (N - self.increment * (k - 1))
            out = out + c * ff
        return out


def newton_expand(p, step=EPS) -> FactorialBasisExpansion:
    """Newton series of ``p`` in N: coefficients ``(Delta^k p)(0) / k!``."""
    p, step = as_mpoly(p), as_mpoly(step)
    n = max(p.degree("N"), 0)
    coeffs = []
    cur = p
    for k in range(n + 1):
        coeffs.append(cur.substitute("N", 0) / factorial(k))
        cur = forward_difference(cur, step=step)
    if not cur.is_zero():
        raise WeylOrderError("difference did not terminate; input is not polynomial in N")
    return FactorialBasisExpansion(step, tuple(coeffs))


# Signed Stirling numbers of the first kind, grown row by row from
# s(n+1, i) = s(n, i-1) - n s(n, i).  Rows are only ever appended under the lock.
_TABLE: List[List[int]] = [[1]]
_TABLE_LOCK = threading.Lock()


def _ensure_rows(n: int) -> None:
    if n < len(_TABLE):
        return
    with _TABLE_LOCK:
        while len(_TABLE) <= n:
            m = len(_TABLE) - 1
            prev = _TABLE[m]
            row = [0] * (m + 2)
            for i in range(1, m + 2):
                left = prev[i - 1]
                here = prev[i] if i <= m else 0
                row[i] = left - m * here
            _TABLE.append(row)


def stirling_first(n: int, i: int) -> int:
    """Signed Stirling number s(n, i); zero outside ``0 <= i <= n``, s(0, 0) = 1."""
    if n < 0 or i < 0 or i > n:
        return 0
    _ensure_rows(n)
    return _TABLE[n][i]


def stirling_row(n: int) -> List[int]:
    """``[s(n, 1), ..., s(n, n)]``."""
    _ensure_rows(n)
    return list(_TABLE[n][1:])


def factorial_monomial_convert(n: int, direction: str = "falling_to_monomial") -> List[MPoly]:
    """Monomial coefficients of the degree-n factorial, index i-1 holding x^i."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if direction not in ("falling_to_monomial", "rising_to_monomial"):
        raise ValueError(f"unknown direction {direction!r}")
    sign_flip = direction == "rising_to_monomial"
    out = []
    for i in range(1, n + 1):
        c = stirling_first(n, i)
        if sign_flip and (n - i) % 2:
            c = -c
        out.append(MPoly.monomial(c, dEps=n - i))
    return out
