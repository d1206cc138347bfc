"""Exception types shared across the package."""


class MismatchedExtension(ValueError):
    """Arithmetic between quadratic-extension values with different discriminants."""


class UnknownPreset(ValueError):
    """Requested sequence preset name is not registered."""


class DimensionMismatch(ValueError):
    """Vector or matrix operands have incompatible shapes."""


class DegenerateParameters(ValueError):
    """Closed-form formulas are unavailable for these parameters.

    The exact elimination oracles remain usable; the ``reason`` attribute
    names the offending quantity (e.g. ``"x_n = 0"``).
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class PreconditionViolation(ValueError):
    """A documented entry condition of the requested operation fails."""


class SingularMatrix(ArithmeticError):
    """Matrix has no inverse (elimination found a zero pivot column)."""


class SingularBlock(SingularMatrix):
    """Block inversion pivot l = alpha - V A^{-1} U vanished."""


class InternalVerificationFailure(RuntimeError):
    """A self-check inside an exact computation failed.

    These checks guard structural facts the algorithms rely on (zero radical
    coefficients, banded shapes after reduction, unit determinant of the
    transform product).  A failure indicates a bug, never bad user input.
    """
