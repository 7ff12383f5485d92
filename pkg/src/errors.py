"""
Exception hierarchy for quatorder

Input errors derive from ValueError so callers can keep catching ValueError
for anything the user supplied.
"""


class QuatOrderError(Exception):
    """Base class for all quatorder errors."""


class InputError(QuatOrderError, ValueError):
    """The caller supplied something invalid."""


class AlgebraMismatchError(InputError):
    """Operands live in different quaternion algebras."""


class InvalidDiscriminantError(InputError):
    """D is not the absolute value of an imaginary quadratic discriminant."""


class NotPrimeError(InputError):
    """A prime was required."""


class NotARingError(InputError):
    """A lattice is not closed under multiplication."""


class MissingOneError(InputError):
    """A lattice does not contain 1."""


class NonIntegralError(InputError):
    """Some lattice element has non-integral trace or norm."""


class NotAnOrderError(InputError):
    """A ternary lattice is not the Gross lattice of a maximal order."""


class NotMaximalError(InputError):
    """An order has discriminant different from p^2."""


class ModulusMismatchError(InputError):
    """Polynomials over different prime fields were combined."""


class SplitFailureError(InputError):
    """O / ell O does not split as a matrix algebra."""


class ParseError(InputError):
    """An order file could not be read."""


class UndecidedError(QuatOrderError):
    """Algorithm 1 exhausted its norm budget without isolating j(O).

    Attributes:
        state: The Algorithm-1 state at the moment the budget ran out
    """

    def __init__(self, message: str, state=None):
        super().__init__(message)
        self.state = state


class InvariantError(QuatOrderError):
    """An internal invariant failed; this signals a bug."""


class PrecisionExhaustedError(InvariantError):
    """Class polynomial coefficients did not stabilise within the retry budget."""


class MassMismatchError(InvariantError):
    """Type enumeration finished without reaching the Eichler mass."""


class CounterexampleError(InvariantError):
    """A property that must hold was violated."""


class OracleMismatchError(InvariantError):
    """Algorithm 2 disagrees with the brute-force supersingular scan."""
