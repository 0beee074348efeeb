"""Deterministic text, LaTeX and JSON rendering.

Text output re-parses (see :mod:`weylorder.parser`) to an equal object,
except for the ``{...}_s`` brackets of non-normal s-ordered symbols.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .poly import MPoly

__all__ = [
    "format",
    "format_mpoly",
    "format_operator",
    "format_normal_form",
    "format_sorder",
    "format_symmetric",
    "to_json",
    "STYLES",
]

STYLES = ("text", "latex", "json")

# eps and t are written before N, matching N^3 - 3*eps*N^2 + 2*eps^2*N
_TEXT_ORDER = ((1, "eps"), (2, "t"), (0, "N"))
_LATEX_NAMES = {"eps": r"\epsilon", "t": "t", "N": "N"}


def _frac_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _monomial(exp, mag: Fraction, style: str, sep: str) -> str:
    """Unsigned monomial text; ``mag`` is the absolute coefficient."""
    factors = []
    for i, name in _TEXT_ORDER:
        e = exp[i]
        if not e:
            continue
        if style == "latex":
            v = _LATEX_NAMES[name]
            factors.append(v if e == 1 else f"{v}^{{{e}}}")
        else:
            factors.append(name if e == 1 else f"{name}^{e}")
    if mag != 1 or not factors:
        factors.insert(0, _frac_latex(mag) if style == "latex" else str(mag))
    return (" " if style == "latex" else sep).join(factors)


def _join(pieces) -> str:
    """``pieces`` is a sequence of (negative, body)."""
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"


def format_mpoly(p: MPoly, style: str = "text", sep: str = "*") -> str:
    if style == "json":
        # zero prints as the bare JSON number 0 in every style
        return json.dumps(p.to_json()) if p.terms else "0"
    return _join([(c < 0, _monomial(exp, abs(c), style, sep)) for exp, c in p.items()])


def _coef_and_word(c: MPoly, word: str, style: str):
    """Signed piece for ``c * word`` where ``word`` may be empty."""
    if len(c) == 1:
        (exp, v), = c.items()
        mag = _monomial(exp, abs(v), style, " ")
        neg = v < 0
        if word:
            body = word if mag == "1" else f"{mag} {word}"
        else:
            body = mag
        return neg, body
    inner = format_mpoly(c, style, sep=" ")
    if style == "latex":
        inner = rf"\left({inner}\right)"
    else:
        inner = f"({inner})"
    return False, f"{inner} {word}" if word else inner


def _word_text(word, style: str) -> str:
    if style != "latex":
        return str(word) if len(word) else ""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        sym = r"a^{\dagger}" if word[i] == 1 else "a"
        run = j - i
        if run > 1:
            sym = rf"(a^{{\dagger}})^{{{run}}}" if word[i] == 1 else f"a^{{{run}}}"
        parts.append(sym)
        i = j
    return " ".join(parts)


def format_operator(e, style: str = "text") -> str:
    if style == "json":
        return json.dumps(
            {"terms": [{"word": str(w), "coef": c.to_json()} for w, c in e.items()]}
        )
    return _join([_coef_and_word(c, _word_text(w, style), style) for w, c in e.items()])


def _pq_word(p: int, q: int, style: str) -> str:
    from .algebra import Word

    return _word_text(Word.ordered(p, q), style)


def format_normal_form(nf, style: str = "text") -> str:
    if style == "json":
        return json.dumps(
            {"terms": [{"p": p, "q": q, "coef": c.to_json()} for (p, q), c in nf.items()]}
        )
    return _join([_coef_and_word(c, _pq_word(p, q, style), style) for (p, q), c in nf.items()])


def _s_label(s: MPoly, style: str) -> str:
    text = format_mpoly(s, "latex" if style == "latex" else "text")
    return text if len(text) == 1 else "{" + text + "}"


def format_sorder(sc, style: str = "text") -> str:
    if style == "json":
        return json.dumps(
            {
                "s": format_mpoly(sc.s),
                "terms": [
                    {"p": p, "q": q, "coef": c.to_json()} for (p, q), c in sc.items()
                ],
            }
        )
    normal = sc.s.is_constant() and sc.s.constant() == 1
    label = _s_label(sc.s, style)
    pieces = []
    for (p, q), c in sc.items():
        word = _pq_word(p, q, style)
        if word and not normal:
            word = (r"\{" + word + r"\}_" if style == "latex" else "{" + word + "}_") + label
        pieces.append(_coef_and_word(c, word, style))
    return _join(pieces)


def format_symmetric(sf, style: str = "text") -> str:
    if style == "json":
        return json.dumps(sf.to_json())
    pieces = []
    for d, c in sf.terms:
        if style == "latex":
            if d == 1:
                pair = r"\{N+(N+1)\}"
            else:
                pair = rf"\{{N^{{{d}}}+(N+1)^{{{d}}}\}}"
            mag = "" if abs(c) == 1 else _frac_latex(abs(c))
            pieces.append((c < 0, mag + pair))
        else:
            pair = "(N + (N+1))" if d == 1 else f"(N^{d} + (N+1)^{d})"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            pieces.append((c < 0, mag + pair))
    if style == "latex":
        return "".join(("-" if neg else ("+" if i else "")) + body for i, (neg, body) in enumerate(pieces)) or "0"
    return _join(pieces)


def to_json(obj) -> str:
    return format(obj, "json")


def format(obj, style: str = "text") -> str:
    """Render any weylorder value in ``style`` (text, latex or json)."""
    from .algebra import NormalForm, OperatorExpr, Word
    from .orderings import SOrderCoeffs, SymmetricForm

    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}")
    if isinstance(obj, (int, Fraction)):
        obj = MPoly.const(obj)
    if isinstance(obj, MPoly):
        return format_mpoly(obj, style)
    if isinstance(obj, Word):
        obj = OperatorExpr.from_word(obj)
    if isinstance(obj, OperatorExpr):
        return format_operator(obj, style)
    if isinstance(obj, NormalForm):
        return format_normal_form(obj, style)
    if isinstance(obj, SOrderCoeffs):
        return format_sorder(obj, style)
    if isinstance(obj, SymmetricForm):
        return format_symmetric(obj, style)
    raise TypeError(f"cannot format {type(obj).__name__}")
