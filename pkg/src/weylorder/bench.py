"""Timing comparisons.

``bench_paths`` races the brute-force oracle (enumerate every interleaving,
then normal-order) against the closed-form Weyl expansion.
``bench_kernels`` races the compiled word kernel against its pure-Python
mirror on the same word sets.
"""

from __future__ import annotations

import time
from itertools import combinations
from typing import Callable, Dict, List

from . import kernels
from .algebra import DEFAULT_CAP, brute_force_weyl, clear_caches, normalize
from .difference import binom
from .orderings import weyl_from_normal


def best_time(fn: Callable[[], object], repeat: int = 5, setup: Callable[[], object] | None = None) -> float:
    best = float("inf")
    for _ in range(repeat):
        if setup is not None:
            setup()
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def brute_path(n: int, m: int, cap: int = DEFAULT_CAP):
    return normalize(brute_force_weyl(n, m, cap=cap))


def bench_paths(n_max: int, cap: int = DEFAULT_CAP, repeat: int = 5, n_min: int = 1) -> List[Dict]:
    """Per n (with m = n): oracle time, closed-form time and whether they agree."""
    rows = []
    for n in range(n_min, n_max + 1):
        if 2 * n > cap:
            break
        clear_caches()
        oracle = brute_path(n, n, cap)
        closed = weyl_from_normal(n, n)
        t_brute = best_time(lambda: brute_path(n, n, cap), repeat, setup=clear_caches)
        t_closed = best_time(lambda: weyl_from_normal(n, n), repeat)
        rows.append(
            {
                "n": n,
                "words": binom(2 * n, n),
                "closed_terms": len(closed),
                "t_brute": t_brute,
                "t_closed": t_closed,
                "equal": oracle == closed,
            }
        )
    return rows


def _interleavings(n: int, m: int) -> List[bytes]:
    total = n + m
    out = []
    for pos in combinations(range(total), n):
        w = bytearray(total)
        for i in pos:
            w[i] = 1
        out.append(bytes(w))
    return out


def bench_kernels(n_max: int, repeat: int = 5, n_min: int = 1) -> List[Dict]:
    """Normal-order every interleaving of n ad's and n a's with each backend."""
    rows = []
    for n in range(n_min, n_max + 1):
        words = _interleavings(n, n)
        row = {"n": n, "words": len(words), "t_python": None, "t_cython": None, "equal": True}
        row["t_python"] = best_time(lambda: [kernels.python_kernel(w) for w in words], repeat)
        if kernels.compiled_kernel is not None and 2 * n <= kernels.COMPILED_MAX_LETTERS:
            row["t_cython"] = best_time(lambda: [kernels.compiled_kernel(w) for w in words], repeat)
            row["equal"] = all(kernels.compiled_kernel(w) == kernels.python_kernel(w) for w in words)
        rows.append(row)
    return rows
