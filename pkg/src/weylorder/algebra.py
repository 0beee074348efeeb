"""The algebra generated by ad (creation) and a (annihilation) with
``a ad - ad a = eps``.

Words are tuples over :class:`Letter`; general elements are
:class:`OperatorExpr` (word -> coefficient in eps).  :class:`NormalForm`
(``(p, q) -> coefficient`` meaning ``ad^p a^q``) is the canonical
representative and the only thing operator-level equality is tested on.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from . import kernels
from .difference import binom, falling_factorial
from .errors import CapExceededError, UnbalancedError
from .poly import EPS, ZERO, MPoly, as_mpoly

__all__ = [
    "Letter",
    "AD",
    "A",
    "Word",
    "OperatorExpr",
    "NormalForm",
    "normalize",
    "rewrite_leftmost",
    "reorder_closed_form",
    "brute_force_weyl",
    "balanced_to_npoly",
    "eval_on_number_state",
    "adjoint",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 14


class Letter(enum.IntEnum):
    A = 0
    AD = 1

    def __str__(self) -> str:
        return "ad" if self is Letter.AD else "a"


AD = Letter.AD
A = Letter.A


class Word(tuple):
    """Immutable sequence of letters; the empty word is the identity."""

    def __new__(cls, letters: Iterable = ()):
        return super().__new__(cls, (Letter(x) for x in letters))

    @classmethod
    def power(cls, letter: Letter, k: int) -> "Word":
        return cls((letter,) * k)

    @classmethod
    def ordered(cls, p: int, q: int) -> "Word":
        """``ad^p a^q``."""
        return cls((AD,) * p + (A,) * q)

    @property
    def counts(self) -> Tuple[int, int]:
        """(number of ad, number of a)."""
        p = sum(self)
        return p, len(self) - p

    def to_bytes(self) -> bytes:
        return bytes(self)

    def __add__(self, other) -> "Word":
        return Word(tuple.__add__(self, tuple(other)))

    def __mul__(self, k) -> "Word":
        return Word(tuple.__mul__(self, k))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        if not self:
            return "1"
        parts = []
        i = 0
        while i < len(self):
            j = i
            while j < len(self) and self[j] == self[i]:
                j += 1
            run = j - i
            parts.append(str(self[i]) if run == 1 else f"{self[i]}^{run}")
            i = j
        return " ".join(parts)

    def sort_key(self):
        # longer words first, ad before a
        return (-len(self), tuple(-x for x in self))


def _merge(target: Dict, key, coef: MPoly) -> None:
    v = target.get(key)
    v = coef if v is None else v + coef
    if v.is_zero():
        target.pop(key, None)
    else:
        target[key] = v


class OperatorExpr:
    """Finite linear combination of words with eps-polynomial coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: Dict[Word, MPoly] = {}
        for w, c in (terms or {}).items():
            _merge(clean, Word(w), as_mpoly(c))
        self._terms = clean

    @classmethod
    def from_word(cls, word, coef=1) -> "OperatorExpr":
        return cls({Word(word): coef})

    @classmethod
    def scalar(cls, c) -> "OperatorExpr":
        return cls({Word(): c})

    @property
    def terms(self) -> Dict[Word, MPoly]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, MPoly]]:
        for w in sorted(self._terms, key=Word.sort_key):
            yield w, self._terms[w]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other) -> "OperatorExpr":
        other = _as_expr(other)
        res = dict(self._terms)
        for w, c in other._terms.items():
            _merge(res, w, c)
        out = OperatorExpr()
        out._terms = res
        return out

    __radd__ = __add__

    def __neg__(self) -> "OperatorExpr":
        out = OperatorExpr()
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other) -> "OperatorExpr":
        return self + (-_as_expr(other))

    def __rsub__(self, other) -> "OperatorExpr":
        return _as_expr(other) - self

    def __mul__(self, other) -> "OperatorExpr":
        other = _as_expr(other)
        res: Dict[Word, MPoly] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                _merge(res, w1 + w2, c1 * c2)
        out = OperatorExpr()
        out._terms = res
        return out

    def __rmul__(self, other) -> "OperatorExpr":
        return _as_expr(other) * self

    def __pow__(self, k: int) -> "OperatorExpr":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = OperatorExpr.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def map_coefficients(self, fn) -> "OperatorExpr":
        return OperatorExpr({w: fn(c) for w, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        from .printing import format_operator

        return format_operator(self)

    def __repr__(self) -> str:
        return f"OperatorExpr({str(self)!r})"


def _as_expr(x) -> OperatorExpr:
    if isinstance(x, OperatorExpr):
        return x
    if isinstance(x, Word):
        return OperatorExpr.from_word(x)
    return OperatorExpr.scalar(x)


class NormalForm:
    """``sum c[p, q] ad^p a^q``; structurally canonical."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: Dict[Tuple[int, int], MPoly] = {}
        for (p, q), c in (terms or {}).items():
            if p < 0 or q < 0:
                raise ValueError(f"negative exponents ({p}, {q})")
            _merge(clean, (int(p), int(q)), as_mpoly(c))
        self._terms = clean

    @classmethod
    def _raw(cls, terms) -> "NormalForm":
        out = cls.__new__(cls)
        out._terms = terms
        return out

    @property
    def terms(self) -> Dict[Tuple[int, int], MPoly]:
        return dict(self._terms)

    def items(self):
        for key in sorted(self._terms, key=lambda pq: (-(pq[0] + pq[1]), -pq[0])):
            yield key, self._terms[key]

    def __getitem__(self, key) -> MPoly:
        return self._terms.get(tuple(key), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_balanced(self) -> bool:
        return all(p == q for p, q in self._terms)

    def __add__(self, other: "NormalForm") -> "NormalForm":
        res = dict(self._terms)
        for k, c in other._terms.items():
            _merge(res, k, c)
        return NormalForm._raw(res)

    def __neg__(self) -> "NormalForm":
        return NormalForm._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "NormalForm") -> "NormalForm":
        return self + (-other)

    def scale(self, c) -> "NormalForm":
        c = as_mpoly(c)
        return NormalForm({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "NormalForm":
        """Operator product, reordering each middle ``a^q ad^r`` by the closed form."""
        if not isinstance(other, NormalForm):
            return self.scale(other)
        res: Dict[Tuple[int, int], MPoly] = {}
        for (p, q), c1 in self._terms.items():
            for (r, s), c2 in other._terms.items():
                c12 = c1 * c2
                for (u, v), c in reorder_closed_form(q, r)._terms.items():
                    _merge(res, (p + u, v + s), c12 * c)
        return NormalForm._raw(res)

    __rmul__ = scale

    def subs_eps(self, value) -> "NormalForm":
        return NormalForm({k: c.substitute("eps", value) for k, c in self._terms.items()})

    def to_operator(self) -> OperatorExpr:
        return OperatorExpr({Word.ordered(p, q): c for (p, q), c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        from .printing import format_normal_form

        return format_normal_form(self)

    def __repr__(self) -> str:
        return f"NormalForm({str(self)!r})"


# --- normal ordering ------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _word_normal_form(code: bytes) -> Tuple[Tuple[Tuple[int, int], MPoly], ...]:
    p = sum(code)
    q = len(code) - p
    coeffs = kernels.normal_order_word(code)
    return tuple(((p - k, q - k), MPoly.monomial(c, dEps=k)) for k, c in enumerate(coeffs) if c)


@lru_cache(maxsize=1 << 16)
def _leftmost(code: bytes) -> Tuple[int, ...]:
    i = code.find(b"\x00\x01")
    if i < 0:
        return (1,)
    swapped = _leftmost(code[:i] + b"\x01\x00" + code[i + 2 :])
    contracted = _leftmost(code[:i] + code[i + 2 :])
    out = list(swapped) + [0] * max(0, len(contracted) + 1 - len(swapped))
    for k, c in enumerate(contracted):
        out[k + 1] += c
    return tuple(out)


def rewrite_leftmost(word) -> NormalForm:
    """Normal form of one word by repeatedly rewriting the leftmost ``a ad``
    into ``ad a + eps`` (memoised by word)."""
    code = Word(word).to_bytes()
    p = sum(code)
    q = len(code) - p
    return NormalForm(
        {(p - k, q - k): MPoly.monomial(c, dEps=k) for k, c in enumerate(_leftmost(code))}
    )


def clear_caches() -> None:
    _word_normal_form.cache_clear()
    _leftmost.cache_clear()


def normalize(e, method: str = "kernel") -> NormalForm:
    """Canonical normal form of a word or :class:`OperatorExpr`.

    ``method="kernel"`` uses the compiled/pure-Python word kernel;
    ``method="leftmost"`` uses :func:`rewrite_leftmost`.
    """
    e = _as_expr(e)
    res: Dict[Tuple[int, int], MPoly] = {}
    if method == "kernel":
        for w, coef in e._terms.items():
            for key, c in _word_normal_form(w.to_bytes()):
                _merge(res, key, coef * c)
    elif method == "leftmost":
        for w, coef in e._terms.items():
            for key, c in rewrite_leftmost(w)._terms.items():
                _merge(res, key, coef * c)
    else:
        raise ValueError(f"unknown method {method!r}")
    return NormalForm._raw(res)


def reorder_closed_form(m: int, n: int, eps=EPS) -> NormalForm:
    """Normal form of ``a^m ad^n``:
    ``sum_k k! C(n,k) C(m,k) eps^k ad^(n-k) a^(m-k)``."""
    eps = as_mpoly(eps)
    return NormalForm(
        {
            (n - k, m - k): (eps**k) * (factorial(k) * binom(n, k) * binom(m, k))
            for k in range(min(m, n) + 1)
        }
    )


def brute_force_weyl(n: int, m: int, cap: int = DEFAULT_CAP) -> OperatorExpr:
    """Average of all ``C(n+m, n)`` interleavings of n ad's and m a's."""
    total = n + m
    if total > cap:
        raise CapExceededError(total, cap)
    count = binom(total, n)
    coef = MPoly.const(1) / count
    terms: Dict[Word, MPoly] = {}
    for positions in combinations(range(total), n):
        letters = [A] * total
        for i in positions:
            letters[i] = AD
        terms[Word(letters)] = coef
    out = OperatorExpr()
    out._terms = terms
    return out


def balanced_to_npoly(nf: NormalForm) -> MPoly:
    """Replace each ``ad^k a^k`` by the falling factorial ``N^(k falling)``."""
    out = ZERO
    for (p, q), c in nf._terms.items():
        if p != q:
            raise UnbalancedError(p, q)
        out = out + c * falling_factorial(MPoly.var("N"), p)
    return out


def eval_on_number_state(nf: NormalForm, k: int) -> MPoly:
    """Eigenvalue of a balanced normal form on the k-quantum state.

    ``ad^p a^p`` acts as ``eps^p k (k-1) ... (k-p+1)``; computed with plain
    integers, independently of :func:`balanced_to_npoly`.
    """
    if k < 0:
        raise ValueError("number state index must be non-negative")
    out = ZERO
    for (p, q), c in nf._terms.items():
        if p != q:
            raise UnbalancedError(p, q)
        value = 1
        for j in range(p):
            value *= k - j
        if value:
            out = out + c.shift(dEps=p) * value
    return out


def adjoint(e) -> OperatorExpr:
    """Reverse every word and swap ad <-> a."""
    e = _as_expr(e)
    return OperatorExpr(
        {Word(1 - x for x in reversed(w)): c for w, c in e._terms.items()}
    )
