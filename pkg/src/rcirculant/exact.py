"""Exact scalar arithmetic: rationals and the quadratic extension Q(w), w**2 = D.

Rationals are plain ``fractions.Fraction`` (already canonical: positive
denominator, reduced).  ``QExt`` adds a formal square root w of a shared
rational discriminant D.  If D happens to be the square of a rational, the
radical is not formal at all and the value collapses to a rational at
construction time, so every surviving irrational value has an invertible
norm and division never meets a zero divisor.

A negative D is handled formally; no complex floating type is involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import MismatchedExtension

RationalLike = Union[int, Fraction]
Scalar = Union[int, Fraction, "QExt"]

ZERO = Fraction(0)
ONE = Fraction(1)


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if irrational.

    Tests that numerator and denominator of the canonical form are both
    perfect integer squares; no floating point is involved.
    """
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class QExt:
    """An element alpha + beta*w of Q(w) with w**2 = delta.

    Values are immutable.  Purely rational values are stored with beta = 0
    and delta = 0, so two values are compatible for arithmetic when either
    is rational or their deltas agree.
    """

    __slots__ = ("_alpha", "_beta", "_delta")

    def __init__(self, alpha: RationalLike, beta: RationalLike = 0, delta: RationalLike = 0):
        a = Fraction(alpha)
        b = Fraction(beta)
        d = Fraction(delta)
        if b != 0:
            root = rational_sqrt(d)
            if root is not None:
                a, b = a + b * root, ZERO
        if b == 0:
            d = ZERO
        self._alpha = a
        self._beta = b
        self._delta = d

    @property
    def alpha(self) -> Fraction:
        return self._alpha

    @property
    def beta(self) -> Fraction:
        return self._beta

    @property
    def delta(self) -> Fraction:
        return self._delta

    @property
    def is_rational(self) -> bool:
        return self._beta == 0

    def as_fraction(self) -> Fraction:
        """Rational value of this element; raises if the radical part survives."""
        if self._beta != 0:
            raise ValueError(f"not a rational value: {self!r}")
        return self._alpha

    def conjugate(self) -> QExt:
        return QExt(self._alpha, -self._beta, self._delta)

    # -- coercion helpers ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> QExt | None:
        if isinstance(value, QExt):
            return value
        if isinstance(value, (int, Fraction)):
            return QExt(value)
        return None

    def _join_delta(self, other: QExt) -> Fraction:
        if self._beta == 0:
            return other._delta
        if other._beta == 0:
            return self._delta
        if self._delta != other._delta:
            raise MismatchedExtension(
                f"cannot combine sqrt({self._delta}) with sqrt({other._delta})"
            )
        return self._delta

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> QExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        delta = self._join_delta(o)
        return QExt(self._alpha + o._alpha, self._beta + o._beta, delta)

    __radd__ = __add__

    def __sub__(self, other) -> QExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self) -> QExt:
        return QExt(-self._alpha, -self._beta, self._delta)

    def __mul__(self, other) -> QExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        delta = self._join_delta(o)
        return QExt(
            self._alpha * o._alpha + self._beta * o._beta * delta,
            self._alpha * o._beta + o._alpha * self._beta,
            delta,
        )

    __rmul__ = __mul__

    def inverse(self) -> QExt:
        """Multiplicative inverse via the conjugate; exact.

        The norm alpha**2 - beta**2 * delta cannot vanish for a nonzero
        value because delta of an irrational value is never a rational
        square (eager collapse at construction).
        """
        if self._alpha == 0 and self._beta == 0:
            raise ZeroDivisionError("inverse of zero")
        norm = self._alpha * self._alpha - self._beta * self._beta * self._delta
        return QExt(self._alpha / norm, -self._beta / norm, self._delta)

    def __truediv__(self, other) -> QExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> QExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> QExt:
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = QExt(1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._beta == 0 and o._beta == 0:
            return self._alpha == o._alpha
        return (
            self._alpha == o._alpha
            and self._beta == o._beta
            and self._delta == o._delta
        )

    def __hash__(self) -> int:
        if self._beta == 0:
            return hash(self._alpha)
        return hash((self._alpha, self._beta, self._delta))

    def __bool__(self) -> bool:
        return self._alpha != 0 or self._beta != 0

    def __repr__(self) -> str:
        if self._beta == 0:
            return f"QExt({self._alpha})"
        return f"QExt({self._alpha}, {self._beta}, delta={self._delta})"

    def __str__(self) -> str:
        if self._beta == 0:
            return str(self._alpha)
        return f"{self._alpha} + {self._beta}*sqrt({self._delta})"


def as_fraction(value: Scalar) -> Fraction:
    """Coerce an exact scalar to Fraction; raises if a radical part survives."""
    if isinstance(value, QExt):
        return value.as_fraction()
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse the "num/den" text form (den omitted when 1), sign allowed."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Canonical "num/den" text form, denominator omitted when 1."""
    return str(Fraction(value))
