class WeylOrderError(Exception):
    """Base class for all errors raised by weylorder."""


class CapExceededError(WeylOrderError, ValueError):
    def __init__(self, letters: int, cap: int):
        self.letters = letters
        self.cap = cap
        super().__init__(
            f"brute-force enumeration of {letters} letters exceeds the cap of {cap} letters"
        )


class UnbalancedError(WeylOrderError, ValueError):
    def __init__(self, p: int, q: int):
        self.p, self.q = p, q
        super().__init__(
            f"term (ad^{p} a^{q}) is unbalanced; only p == q terms act diagonally"
        )


class ParseError(WeylOrderError, ValueError):
    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        msg = f"{message} at offset {offset}"
        if self.expected:
            msg += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(msg)


class ModeError(ParseError):
    pass
