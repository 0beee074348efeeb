"""Hot-kernel dispatch: the Cython build when importable, else pure Python.

``BACKEND`` names the active implementation.  Both are always reachable
through :data:`python_kernel` and :data:`compiled_kernel` (None when the
extension was not built) so they can be compared.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

python_kernel = _pykernels.normal_order_word
compiled_kernel = _ckernels.normal_order_word if _ckernels is not None else None
COMPILED_MAX_LETTERS = _ckernels.MAX_LETTERS if _ckernels is not None else 0

BACKEND = "cython" if _ckernels is not None else "python"


def available_backends():
    return ["cython", "python"] if _ckernels is not None else ["python"]


def set_backend(name: str) -> None:
    """Switch the active kernel ("cython" or "python")."""
    global BACKEND
    if name not in available_backends():
        raise ValueError(f"backend {name!r} is not available")
    BACKEND = name


def normal_order_word(word: bytes) -> list:
    """Integer coefficients ``c[k]`` of ``eps^k ad^(P-k) a^(Q-k)`` for ``word``."""
    if BACKEND == "cython" and len(word) <= COMPILED_MAX_LETTERS:
        return compiled_kernel(word)
    return python_kernel(word)
