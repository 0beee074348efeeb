"""Exact operator-ordering calculus for a single boson mode.

Normal, anti-normal, Weyl and general s-orderings of words in ``ad`` and
``a`` with ``[a, ad] = eps``, together with the difference calculus
(factorials with increment, Newton series, Stirling numbers of the first
kind) that turns operator identities into polynomial identities in N.
"""

from .algebra import (
    AD,
    A,
    NormalForm,
    OperatorExpr,
    Word,
    adjoint,
    balanced_to_npoly,
    brute_force_weyl,
    eval_on_number_state,
    normalize,
    reorder_closed_form,
)
from .difference import (
    FactorialBasisExpansion,
    factorial_monomial_convert,
    falling_factorial,
    forward_difference,
    newton_expand,
    rising_factorial,
    stirling_first,
)
from .errors import CapExceededError, ModeError, ParseError, UnbalancedError, WeylOrderError
from .orderings import (
    SOrderCoeffs,
    SymmetricForm,
    alpha,
    antinormal_power,
    normal_power,
    s_transform,
    weyl_from_antinormal,
    weyl_from_normal,
    weyl_symmetric,
)
from .parser import lower, parse, parse_npoly, parse_operator
from .poly import EPS, N, T, MPoly
from .printing import format

__version__ = "0.1.0"

__all__ = [
    "AD",
    "A",
    "NormalForm",
    "OperatorExpr",
    "Word",
    "adjoint",
    "balanced_to_npoly",
    "brute_force_weyl",
    "eval_on_number_state",
    "normalize",
    "reorder_closed_form",
    "FactorialBasisExpansion",
    "factorial_monomial_convert",
    "falling_factorial",
    "forward_difference",
    "newton_expand",
    "rising_factorial",
    "stirling_first",
    "SOrderCoeffs",
    "SymmetricForm",
    "alpha",
    "antinormal_power",
    "normal_power",
    "s_transform",
    "weyl_from_antinormal",
    "weyl_from_normal",
    "weyl_symmetric",
    "CapExceededError",
    "ModeError",
    "ParseError",
    "UnbalancedError",
    "WeylOrderError",
    "lower",
    "parse",
    "parse_npoly",
    "parse_operator",
    "EPS",
    "N",
    "T",
    "MPoly",
    "format",
]
