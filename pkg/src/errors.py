"""
Exception hierarchy.

Everything derives from ValueError so callers that only care about
"bad input" can catch that.
"""


class AlgebraError(ValueError):
    """Base class for all errors raised by the toolkit."""


class ParameterMismatchError(AlgebraError):
    """Operands live in algebras with different (r, n)."""


class IndexOutOfRangeError(AlgebraError):
    """A generator or variable index is outside its valid range."""


class GuardExceededError(AlgebraError):
    """An enumeration would exceed the configured size bound."""


class NotInBasisError(AlgebraError):
    """An index triple or element is outside the required basis or subspace."""


class CompatibilityError(AlgebraError):
    """Structural data violates a compatibility condition (e.g. sigma(Psi)^T != Psi)."""


class CoefficientError(AlgebraError):
    """A coefficient lies outside its ring (e.g. a denominator not a power of r)."""


class MalformedWordError(AlgebraError):
    """A generator word could not be parsed."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)
