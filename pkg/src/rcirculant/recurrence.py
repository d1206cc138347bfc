"""Third-order linear recurrence sequences and their named specializations.

The sequence starts W_0 = 0, W_1 = a, W_2 = b and continues with
W_k = p*W_{k-1} + q*W_{k-2} + t*W_{k-3}.  All parameters are exact
rationals; integer-only restrictions are never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnknownPreset


@dataclass(frozen=True)
class RecurrenceParams:
    """The six scalars defining a sequence and its circulant twist.

    ``a`` and ``b`` are W_1 and W_2; ``r`` is the wrap-around factor of the
    associated r-circulant matrix.  a != 0 is demanded only by the
    closed-form paths, not here.
    """

    p: Fraction
    q: Fraction
    t: Fraction
    a: Fraction
    b: Fraction
    r: Fraction

    @staticmethod
    def make(p, q, t, a, b, r) -> "RecurrenceParams":
        return RecurrenceParams(
            Fraction(p), Fraction(q), Fraction(t), Fraction(a), Fraction(b), Fraction(r)
        )

    def replace(self, **overrides) -> "RecurrenceParams":
        fields = {k: getattr(self, k) for k in ("p", "q", "t", "a", "b", "r")}
        fields.update({k: Fraction(v) for k, v in overrides.items()})
        return RecurrenceParams.make(**fields)


PRESETS = {
    "fibonacci": RecurrenceParams.make(1, 1, 0, 1, 1, 1),
    "jacobsthal": RecurrenceParams.make(1, 2, 0, 1, 1, 1),
    "pell": RecurrenceParams.make(2, 1, 0, 1, 2, 1),
    "tribonacci": RecurrenceParams.make(1, 1, 1, 1, 1, 1),
    "skew-tribonacci": RecurrenceParams.make(1, 1, 1, 1, 1, -1),
}


def preset_params(name: str) -> RecurrenceParams:
    """Look up one of the named specializations."""
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise UnknownPreset(f"unknown preset {name!r} (one of: {known})") from None


def generate_sequence(params: RecurrenceParams, count: int) -> list[Fraction]:
    """Return W_0 .. W_{count-1}, computed exactly.

    Windows are materialized eagerly; the closed-form machinery indexes
    freely up to W_{n+2} and n stays desk-scale.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    values = [Fraction(0), params.a, params.b]
    while len(values) < count:
        values.append(
            params.p * values[-1] + params.q * values[-2] + params.t * values[-3]
        )
    return values[:count]
