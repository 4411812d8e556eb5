"""Exact rational helpers shared across the package.

All frequencies, atoms, and weights are `fractions.Fraction` end to end;
floating point enters only at the final complex-exponential evaluation,
after an exact mod-1 reduction of the phase.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction, str]

TWO_PI = 2.0 * math.pi

# phases with an exact complex value; keeps quarter-lattice masks bit-clean
_EXACT_PHASE = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): -1j,
}


def as_fraction(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions, and 'p/q' strings to Fraction (never floats)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


def format_rational(x: Fraction) -> str:
    """Render a Fraction as the interchange form 'p/q' (or 'p' for integers)."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated list of rationals, e.g. '0,1/3,2/3'."""
    items = [part for part in text.split(",") if part.strip() != ""]
    if not items:
        raise ValueError(f"empty rational list: {text!r}")
    return tuple(as_fraction(part) for part in items)


def frac_mod1(x: Fraction) -> Fraction:
    """Exact fractional part in [0, 1)."""
    return x - (x.numerator // x.denominator)


def unit_exp(t) -> complex:
    """e^{2 pi i t}, reducing rational phases mod 1 exactly before rounding.

    Rational t is reduced in integer arithmetic so the float argument stays
    in [0, 2 pi); float t falls back to plain evaluation.
    """
    if isinstance(t, Fraction):
        r = frac_mod1(t)
        exact = _EXACT_PHASE.get(r)
        if exact is not None:
            return exact
        return cmath.exp(1j * (TWO_PI * (r.numerator / r.denominator)))
    if isinstance(t, int):
        return 1 + 0j
    return cmath.exp(1j * (TWO_PI * (t % 1.0)))


def sorted_distinct(values: Iterable[Fraction]) -> tuple[Fraction, ...]:
    """Sort and verify distinctness; raises on duplicates."""
    vals = tuple(sorted(values))
    for a, b in zip(vals, vals[1:]):
        if a == b:
            raise ValueError(f"duplicate value {a}")
    return vals


def lcm_denominator(values: Sequence[Fraction]) -> int:
    """Least common denominator of a list of rationals (1 for the empty list)."""
    out = 1
    for v in values:
        out = out * v.denominator // math.gcd(out, v.denominator)
    return out
