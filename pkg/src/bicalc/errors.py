"""Exception hierarchy shared by every bicalc module."""


class BicalcError(Exception):
    """Base class for all errors raised by bicalc."""


class ZeroDivisorError(BicalcError, ZeroDivisionError):
    """Inverting a bicomplex number with a vanishing idempotent component."""


class ExactModeUnsupported(BicalcError):
    """A transcendental operation was requested on exact-rational operands."""


class DomainViolation(BicalcError, ValueError):
    """An argument lies outside the domain of the requested kernel."""


class NotStarPolyanalytic(BicalcError, ValueError):
    """A polynomial carries Zb or Zd exponents where only Z and Zs are allowed."""


class NotSplitCompatible(BicalcError, ValueError):
    """A split inner product was requested for a polynomial that is not split."""


class ExponentUnderflow(BicalcError, ValueError):
    """The closed second-kind formula would need a negative exponent."""


class ParseError(BicalcError, ValueError):
    """Malformed expression or number literal.

    ``position`` is the 0-based character offset where parsing failed and
    ``expected`` the set of token kinds that would have been accepted there.
    """

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = frozenset(expected)
        exp = ", ".join(sorted(self.expected))
        detail = f" (expected one of: {exp})" if exp else ""
        super().__init__(f"{message} at offset {position}{detail}")
