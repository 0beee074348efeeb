"""Exact sparse polynomials over Q in the fixed variables N, eps and t.

Every coefficient is a :class:`fractions.Fraction`, so equality and the
zero test are exact.  Terms are keyed by the exponent triple
``(dN, dEps, dT)`` and printed in descending graded-lex order.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import WeylOrderError

__all__ = [
    "MPoly",
    "VARIABLES",
    "N",
    "EPS",
    "T",
    "ONE",
    "ZERO",
    "as_mpoly",
    "mpoly_sum",
    "graded_lex_key",
]

VARIABLES = ("N", "eps", "t")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

Exponent = Tuple[int, int, int]
Scalar = Union[int, Fraction]


def graded_lex_key(exp: Exponent) -> tuple:
    return (sum(exp),) + tuple(exp)


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


class MPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent triples to Fractions."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                c = _to_fraction(c)
                if c:
                    if len(exp) != 3 or any(e < 0 for e in exp):
                        raise ValueError(f"bad exponent triple {exp!r}")
                    clean[tuple(exp)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction]) -> "MPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "MPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MPoly":
        exp = [0, 0, 0]
        exp[_INDEX[name]] = power
        return cls({tuple(exp): 1})

    @classmethod
    def monomial(cls, c: Scalar, dN: int = 0, dEps: int = 0, dT: int = 0) -> "MPoly":
        return cls({(dN, dEps, dT): c})

    # --- inspection -----------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in canonical (descending graded-lex) order."""
        for exp in sorted(self._terms, key=graded_lex_key, reverse=True):
            yield exp, self._terms[exp]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0, 0)}

    def constant(self) -> Fraction:
        """Constant term (the whole value when :meth:`is_constant`)."""
        return self._terms.get((0, 0, 0), Fraction(0))

    def coefficient(self, dN: int = 0, dEps: int = 0, dT: int = 0) -> Fraction:
        return self._terms.get((dN, dEps, dT), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if None); -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = _INDEX[var]
        return max(e[i] for e in self._terms)

    def variables(self) -> set:
        return {VARIABLES[i] for e in self._terms for i in range(3) if e[i]}

    def collect(self, var: str) -> Dict[int, "MPoly"]:
        """Split into ``{power: coefficient}`` with respect to ``var``."""
        i = _INDEX[var]
        out: Dict[int, Dict[Exponent, Fraction]] = {}
        for exp, c in self._terms.items():
            rest = list(exp)
            k = rest[i]
            rest[i] = 0
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: MPoly._raw(v) for k, v in out.items()}

    # --- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "MPoly":
        other = as_mpoly(other)
        if not other._terms:
            return self
        res = dict(self._terms)
        for exp, c in other._terms.items():
            v = res.get(exp, 0) + c
            if v:
                res[exp] = v
            else:
                res.pop(exp, None)
        return MPoly._raw(res)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-as_mpoly(other))

    def __rsub__(self, other) -> "MPoly":
        return as_mpoly(other) - self

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return MPoly._raw({e: c * other for e, c in self._terms.items()})
        other = as_mpoly(other)
        res: Dict[Exponent, Fraction] = {}
        for (a0, a1, a2), ca in self._terms.items():
            for (b0, b1, b2), cb in other._terms.items():
                exp = (a0 + b0, a1 + b1, a2 + b2)
                res[exp] = res.get(exp, 0) + ca * cb
        return MPoly._raw({e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        c = _to_fraction(other)
        if not c:
            raise ZeroDivisionError("division of MPoly by zero")
        return self * (1 / c)

    def __pow__(self, k: int) -> "MPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, dN: int = 0, dEps: int = 0, dT: int = 0) -> "MPoly":
        """Multiply by the monomial ``N^dN eps^dEps t^dT``."""
        return MPoly._raw(
            {(e0 + dN, e1 + dEps, e2 + dT): c for (e0, e1, e2), c in self._terms.items()}
        )

    def divide_by_var(self, var: str) -> "MPoly":
        """Exact division by a single variable; raises if a term is not divisible."""
        i = _INDEX[var]
        res = {}
        for exp, c in self._terms.items():
            if exp[i] == 0:
                raise WeylOrderError(f"{self} is not divisible by {var}")
            e = list(exp)
            e[i] -= 1
            res[tuple(e)] = c
        return MPoly._raw(res)

    def substitute(self, var: str, value) -> "MPoly":
        """Replace ``var`` by ``value`` (any MPoly or rational)."""
        value = as_mpoly(value)
        parts = self.collect(var)
        if not parts:
            return ZERO
        powers = {0: ONE}
        result = ZERO
        for k in sorted(parts):
            if k not in powers:
                lo = max(powers)
                p = powers[lo]
                for j in range(lo + 1, k + 1):
                    p = p * value
                    powers[j] = p
            result = result + parts[k] * powers[k]
        return result

    def subs(self, **values) -> "MPoly":
        out = self
        for name, v in values.items():
            out = out.substitute(name, v)
        return out

    def evaluate(self, **values) -> Fraction:
        """Substitute constants for all present variables and return the value."""
        out = self.subs(**values)
        if not out.is_constant():
            raise WeylOrderError(f"unassigned variables in {out}")
        return out.constant()

    # --- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == as_mpoly(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __getstate__(self):
        return self._terms

    def __setstate__(self, state):
        self._terms = state
        self._hash = None

    # --- text -----------------------------------------------------------

    def __str__(self) -> str:
        from .printing import format_mpoly

        return format_mpoly(self)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"N": e[0], "eps": e[1], "t": e[2], "coef": str(c)} for e, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MPoly":
        if data == 0:
            return cls()
        terms = {}
        for row in data["terms"]:
            exp = (int(row.get("N", 0)), int(row.get("eps", 0)), int(row.get("t", 0)))
            terms[exp] = terms.get(exp, 0) + Fraction(row["coef"])
        return cls(terms)


def as_mpoly(x) -> MPoly:
    if isinstance(x, MPoly):
        return x
    return MPoly.const(_to_fraction(x))


def mpoly_sum(polys: Iterable[MPoly]) -> MPoly:
    res: Dict[Exponent, Fraction] = {}
    for p in polys:
        for exp, c in as_mpoly(p)._terms.items():
            res[exp] = res.get(exp, 0) + c
    return MPoly._raw({e: c for e, c in res.items() if c})


ZERO = MPoly()
ONE = MPoly.const(1)
N = MPoly.var("N")
EPS = MPoly.var("eps")
T = MPoly.var("t")
