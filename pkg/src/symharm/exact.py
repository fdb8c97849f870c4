"""Exact rational helpers and continued-fraction convergents.

Frequency ratios are plain :class:`fractions.Fraction` values; Python ints
are arbitrary precision, so products of large harmonicities never overflow.
"""
from __future__ import annotations

import math
import re
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import SymHarmError

Rational = Fraction

#: Decimal digits used when expanding an irrational target into a continued fraction.
CF_PRECISION = 60
#: Maximum number of partial quotients examined before giving up.
CF_MAX_TERMS = 64

_RATIO_RE = re.compile(r"^\s*(\d+)\s*[/:]\s*(\d+)\s*$")


def make_rational(p: int, q: int) -> Fraction:
    """Return ``p/q`` in lowest terms with a positive denominator."""
    if q == 0:
        raise SymHarmError(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p:q"`` (or a bare integer)."""
    m = _RATIO_RE.match(text)
    if m:
        return make_rational(int(m.group(1)), int(m.group(2)))
    if text.strip().isdigit():
        return Fraction(int(text.strip()))
    raise SymHarmError(f"malformed ratio {text!r}")


def format_rational(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


def lcm_all(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise SymHarmError("lcm of an empty list")
    if any(v < 1 for v in values):
        raise SymHarmError(f"lcm needs positive integers, got {values}")
    return math.lcm(*values)


def power_of_two(exponent: Fraction, digits: int = CF_PRECISION) -> Decimal:
    """``2 ** exponent`` to *digits* significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(2) ** (Decimal(exponent.numerator) / Decimal(exponent.denominator))


def partial_quotients(x: Decimal, max_terms: int = CF_MAX_TERMS) -> Iterator[int]:
    """Simple continued-fraction coefficients of a positive decimal."""
    with localcontext() as ctx:
        ctx.prec = max(len(x.as_tuple().digits), CF_PRECISION)
        for _ in range(max_terms):
            a = int(x)  # floor, x > 0
            yield a
            frac = x - a
            if frac == 0:
                return
            x = 1 / frac


def convergents(x: Decimal, max_terms: int = CF_MAX_TERMS) -> Iterator[Fraction]:
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for a in partial_quotients(x, max_terms):
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield Fraction(p, q)


def convergents_within(x: Decimal | Fraction | float | int, rel_tol: float) -> Fraction:
    """First convergent of ``x`` whose relative error is at most ``rel_tol``.

    ``x`` should carry enough digits for the expansion to be stable; pass a
    :class:`~decimal.Decimal` from :func:`power_of_two` for irrational targets.
    The comparison is inclusive.
    """
    if not 0 < rel_tol < 1:
        raise SymHarmError(f"tolerance must lie in (0, 1), got {rel_tol}")
    if isinstance(x, Fraction):
        with localcontext() as ctx:
            ctx.prec = CF_PRECISION
            x = Decimal(x.numerator) / Decimal(x.denominator)
    x = Decimal(x)
    if x <= 0:
        raise SymHarmError(f"need a positive target, got {x}")
    tol = Decimal(str(rel_tol))
    with localcontext() as ctx:
        ctx.prec = CF_PRECISION
        for c in convergents(x):
            err = abs(Decimal(c.numerator) / Decimal(c.denominator) - x) / x
            if err <= tol:
                return c
    raise SymHarmError(f"no convergent of {x} within {rel_tol} after {CF_MAX_TERMS} terms")
