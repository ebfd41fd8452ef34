"""Rational scalars and vectors.

Scalars are :class:`fractions.Fraction` (always normalized, denominator > 0).
Vectors are plain tuples of fractions, which keeps them immutable and hashable.
"""

import re
from fractions import Fraction
from math import gcd, lcm

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class DimensionError(ValueError):
    """Raised when operands do not share the expected dimension."""


def to_rational(value):
    """Coerce ``value`` to a Fraction.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    Floats are rejected: every computation in this package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise ValueError(f"not a rational literal: {value!r}")
        num, den = m.groups()
        den = int(den) if den is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(int(num), den)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(q):
    """Canonical string form: ``"p/q"``, or ``"p"`` when q == 1."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(entries):
    return tuple(to_rational(e) for e in entries)


def zeros(n):
    return (Fraction(0),) * n


def unit(n, i):
    return tuple(Fraction(int(j == i)) for j in range(n))


def check_dim(v, n, name="vector"):
    if len(v) != n:
        raise DimensionError(f"{name} has dimension {len(v)}, expected {n}")


def add(u, v):
    check_dim(v, len(u))
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    check_dim(v, len(u))
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def neg(v):
    return tuple(-a for a in v)


def dot(u, v):
    check_dim(v, len(u))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(v):
    return all(a == 0 for a in v)


def linear_combination(coeffs, vectors, dim):
    out = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for j, a in enumerate(v):
                out[j] += c * a
    return tuple(out)


def common_denominator(values):
    return lcm(*(to_rational(v).denominator for v in values)) if values else 1


def primitive_integer_vector(v):
    """Positive multiple of ``v`` with coprime integer entries."""
    d = common_denominator(v)
    ints = [int(a * d) for a in v]
    g = gcd(*ints)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    return tuple(Fraction(a // g) for a in ints)
