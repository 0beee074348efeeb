"""Exact verification of the ordering identities and Stirling relations.

Each ``verify_*`` function evaluates one identity at one parameter point
and returns an :class:`IdentityReport` whose residual is the exact
difference of both sides.  Nothing here is sampled or approximate.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Tuple

from .difference import (
    binom,
    falling_factorial,
    newton_expand,
    rising_factorial,
    stirling_first,
)
from .orderings import alpha
from .poly import EPS, N, ONE, T, ZERO, MPoly, as_mpoly

__all__ = [
    "IDENTITIES",
    "IdentityReport",
    "verify_noncom",
    "verify_derivative_identity",
    "verify_delta_identity",
    "verify_stirling_relation",
    "verify_general_relation",
    "verify_alpha_odd",
    "grid_points",
    "run_grid",
]

IDENTITIES = (
    "noncom",
    "derivative",
    "delta",
    "stirling_rel",
    "general_rel_neg_m",
    "general_rel_pos_m",
    "alpha_odd",
)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: Dict[str, int]
    residual: MPoly
    trivial: bool = False
    setting: str = ""
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.residual.is_zero())

    def to_json(self) -> dict:
        row = {"identity": self.identity, **self.params, "holds": self.holds}
        if self.trivial:
            row["trivial"] = True
        if self.setting:
            row["setting"] = self.setting
        return row

    def json_line(self) -> str:
        return json.dumps(self.to_json())


def _sq_weight(k: int, n: int) -> int:
    return factorial(k) * binom(n, k) ** 2


def verify_noncom(n: int, route: str = "direct") -> IdentityReport:
    """``sum k! t^k C(n,k)^2 N^(n-k falling) = sum k! (t-eps)^k C(n,k)^2 (N+eps)^(n-k rising)``
    with eps and t symbolic.

    ``route="newton"`` instead Newton-expands the right side and compares its
    falling-factorial coefficients with ``(n-j)! t^(n-j) C(n,j)^2``.
    """
    s = T - EPS
    rhs = ZERO
    for k in range(n + 1):
        rhs = rhs + (s**k) * rising_factorial(N + EPS, n - k) * _sq_weight(k, n)
    if route == "direct":
        lhs = ZERO
        for k in range(n + 1):
            lhs = lhs + (T**k) * falling_factorial(N, n - k) * _sq_weight(k, n)
        residual = lhs - rhs
    elif route == "newton":
        coeffs = newton_expand(rhs).coefficients
        residual = ZERO
        for j in range(max(n, len(coeffs) - 1) + 1):
            got = coeffs[j] if j < len(coeffs) else ZERO
            want = (T ** (n - j)) * _sq_weight(n - j, n) if j <= n else ZERO
            # tag the j-th coefficient with N^j so mismatches cannot cancel
            residual = residual + (got - want).shift(dN=j)
    else:
        raise ValueError(f"unknown route {route!r}")
    return IdentityReport("noncom", {"n": n}, residual, setting=route if route != "direct" else "")


def verify_derivative_identity(n: int, eps=1) -> IdentityReport:
    """``sum k! k (eps/2)^(k-1) C(n,k)^2 {N^(n-k falling) + (-1)^k (N+eps)^(n-k rising)} = 0``.

    At eps = 1 this is the t = 1/2 derivative identity as stated; a symbolic
    eps is an extension that is reported separately.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    eps = as_mpoly(eps)
    half = eps * Fraction(1, 2)
    total = ZERO
    for k in range(1, n + 1):
        bracket = falling_factorial(N, n - k, step=eps)
        rising = rising_factorial(N + eps, n - k, step=eps)
        bracket = bracket + rising if k % 2 == 0 else bracket - rising
        total = total + bracket * (half ** (k - 1)) * (_sq_weight(k, n) * k)
    return IdentityReport("derivative", {"n": n}, total, setting=_setting(eps))


def verify_delta_identity(n: int, eps=1) -> IdentityReport:
    """``sum k! (n-k) (eps/2)^k C(n,k)^2 {N^(n-k-1 falling) - (-1)^k (N+(n-k) eps)^(n-k-1 falling)} = 0``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    eps = as_mpoly(eps)
    half = eps * Fraction(1, 2)
    total = ZERO
    for k in range(n):
        d = n - k - 1
        shifted = falling_factorial(N + eps * (n - k), d, step=eps)
        bracket = falling_factorial(N, d, step=eps)
        bracket = bracket - shifted if k % 2 == 0 else bracket + shifted
        total = total + bracket * (half**k) * (_sq_weight(k, n) * (n - k))
    return IdentityReport("delta", {"n": n}, total, setting=_setting(eps))


def _setting(eps: MPoly) -> str:
    if eps == ONE:
        return ""
    return "symbolic_eps" if eps == EPS else f"eps={eps}"


def _half_weight(k: int, a: int, b: int) -> Fraction:
    return Fraction(factorial(k) * binom(a, k) * binom(b, k), 2**k)


def stirling_relation_sum(n: int, j: int) -> Fraction:
    """``sum_{k=0}^{2j+1} k!/2^k C(n-1,k) C(n,k) s(n-k, n-2j-1)``."""
    return sum(
        (_half_weight(k, n - 1, n) * stirling_first(n - k, n - 2 * j - 1) for k in range(2 * j + 2)),
        Fraction(0),
    )


def verify_stirling_relation(n: int, j: int) -> IdentityReport:
    if n < 1 or j < 0:
        raise ValueError("need n >= 1 and j >= 0")
    value = stirling_relation_sum(n, j)
    return IdentityReport(
        "stirling_rel", {"n": n, "j": j}, MPoly.const(value), trivial=n - 2 * j - 1 < 0
    )


def general_relation_range(n: int, m: int, family: str) -> Tuple[int, int]:
    """Inclusive range of valid i for (n, m) in the given family."""
    if n <= 0:
        raise ValueError("n must be positive")
    if family == "general_rel_neg_m":
        if not -n + 1 <= m <= 0:
            raise ValueError(f"m must lie in [{-n + 1}, 0] for {family}, got {m}")
        return 1, n + m + 1
    if family == "general_rel_pos_m":
        if m < 0:
            raise ValueError(f"m must be >= 0 for {family}, got {m}")
        return 1, n + 1
    raise ValueError(f"unknown family {family!r}")


def general_relation_sum(n: int, m: int, i: int, family: str) -> Fraction:
    lo, hi = general_relation_range(n, m, family)
    if not lo <= i <= hi:
        raise ValueError(f"i must lie in [{lo}, {hi}] for n={n}, m={m}, got {i}")
    top = hi  # n+m+1 for the negative family, n+1 for the positive one
    if family == "general_rel_neg_m":
        sign_exp, base = n + m - i, m + 1
    else:
        sign_exp, base = n - i, 1 - m

    def inner(l: int) -> Fraction:
        return sum(
            (_half_weight(k, n + m, n) * stirling_first(top - k, l) for k in range(top - l + 1)),
            Fraction(0),
        )

    total = (2 if sign_exp % 2 == 0 else 0) * inner(i)
    for l in range(i + 1, top + 1):
        total += Fraction(base) ** (l - i) * binom(l - 1, i - 1) * inner(l)
    return total


def verify_general_relation(n: int, m: int, i: int, family: str | None = None) -> IdentityReport:
    """Two-family Stirling relation; the family defaults to the sign of m
    (m = 0 belongs to both and defaults to the non-negative family)."""
    if family is None:
        family = "general_rel_neg_m" if m < 0 else "general_rel_pos_m"
    value = general_relation_sum(n, m, i, family)
    return IdentityReport(family, {"n": n, "m": m, "i": i}, MPoly.const(value))


def verify_alpha_odd(n: int) -> IdentityReport:
    """alpha(n, i) for odd i <= n-1, each placed on N^i in the residual."""
    if n < 1:
        raise ValueError("n must be at least 1")
    residual = MPoly({(i, 0, 0): alpha(n, i) for i in range(1, n, 2)})
    return IdentityReport("alpha_odd", {"n": n}, residual)


# --- grids ----------------------------------------------------------------


def grid_points(identity: str, n_max: int, m_range: int = 6, j_max: int | None = None,
                symbolic_eps: bool = False) -> List[tuple]:
    """Parameter points for ``identity`` in deterministic order."""
    eps = "eps" if symbolic_eps else 1
    pts: List[tuple] = []
    if identity == "noncom":
        pts = [("noncom", n) for n in range(0, n_max + 1)]
    elif identity in ("derivative", "delta"):
        pts = [(identity, n, eps) for n in range(1, n_max + 1)]
    elif identity == "stirling_rel":
        for n in range(1, n_max + 1):
            top = (n - 1) // 2 if j_max is None else min(j_max, (n - 1) // 2)
            pts.extend(("stirling_rel", n, j) for j in range(top + 1))
    elif identity == "general_rel_neg_m":
        for n in range(1, n_max + 1):
            for m in range(max(-n + 1, -m_range), 1):
                lo, hi = general_relation_range(n, m, identity)
                pts.extend((identity, n, m, i) for i in range(lo, hi + 1))
    elif identity == "general_rel_pos_m":
        for n in range(1, n_max + 1):
            for m in range(0, m_range + 1):
                lo, hi = general_relation_range(n, m, identity)
                pts.extend((identity, n, m, i) for i in range(lo, hi + 1))
    elif identity == "alpha_odd":
        pts = [("alpha_odd", n) for n in range(1, n_max + 1)]
    else:
        raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
    return pts


def _run_point(point: tuple) -> IdentityReport:
    name, *args = point
    if name == "noncom":
        return verify_noncom(*args)
    if name == "derivative":
        n, eps = args
        return verify_derivative_identity(n, EPS if eps == "eps" else eps)
    if name == "delta":
        n, eps = args
        return verify_delta_identity(n, EPS if eps == "eps" else eps)
    if name == "stirling_rel":
        return verify_stirling_relation(*args)
    if name.startswith("general_rel"):
        n, m, i = args
        return verify_general_relation(n, m, i, family=name)
    if name == "alpha_odd":
        return verify_alpha_odd(*args)
    raise ValueError(name)


def run_grid(identity: str, n_max: int, m_range: int = 6, j_max: int | None = None,
             jobs: int | None = 1, symbolic_eps: bool = False) -> Iterator[IdentityReport]:
    """Verify every grid point, yielding reports in parameter order.

    ``jobs > 1`` fans points out to worker processes; results are still
    yielded in the deterministic grid order.
    """
    pts = grid_points(identity, n_max, m_range, j_max, symbolic_eps)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(pts) < 2:
        for p in pts:
            yield _run_point(p)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_point, pts, chunksize=max(1, len(pts) // (4 * jobs)))
