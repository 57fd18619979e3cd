"""Scalar policy shared by every module.

Values are exact (``int`` / ``Fraction``) whenever the objective allows it and
``mpmath.mpf`` otherwise. Comparisons on the float path use a relative
tolerance and report near-ties instead of classifying them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

import mpmath

mpmath.mp.dps = max(mpmath.mp.dps, 50)

TAU = 1e-9

Scalar = Union[int, Fraction, mpmath.mpf]


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def to_mpf(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


class Comparison(NamedTuple):
    """Outcome of comparing ``a`` against ``b``.

    ``sign`` is -1, 0 or 1. ``near_tie`` is set when the float path found
    ``|a - b|`` within the relative tolerance; ``sign`` is then 0.
    """

    sign: int
    near_tie: bool
    gap: Scalar


def compare(a, b, tau: float = TAU) -> Comparison:
    if is_exact(a) and is_exact(b):
        diff = a - b
        return Comparison((diff > 0) - (diff < 0), False, diff)
    fa, fb = to_mpf(a), to_mpf(b)
    diff = fa - fb
    scale = max(abs(fa), abs(fb))
    if abs(diff) <= tau * scale:
        return Comparison(0, True, diff)
    return Comparison(1 if diff > 0 else -1, False, diff)


def to_float(x) -> float:
    return float(to_mpf(x)) if not isinstance(x, int) else float(x)


def to_plain(x):
    """JSON-friendly form: ints stay ints, fractions become ``"p/q"``."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return float(x)
