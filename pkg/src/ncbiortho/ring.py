"""Exact division rings: the rationals and the rational quaternions.

Rationals are plain :class:`fractions.Fraction` values.  Quaternions are
:class:`Quaternion` values with four Fraction components.  A :class:`Ring`
tag identifies which of the two a scalar (and every container built from
scalars) belongs to; mixing the two raises :class:`RingMismatchError`.
"""
from __future__ import annotations

import enum
import random
from fractions import Fraction

from .errors import RingMismatchError


class Quaternion:
    """a + b i + c j + d k with rational components."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @property
    def components(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return "Quaternion({}, {}, {}, {})".format(*map(str, self.components))

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for value, unit in zip(self.components, ("", "i", "j", "k")):
            if value == 0:
                continue
            mag = abs(value)
            text = str(mag) if (mag != 1 or not unit) else ""
            if unit and "/" in text:
                text = f"({text})"
            parts.append(("-" if value < 0 else "+", text + unit))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.components == other.components
        return NotImplemented

    def __hash__(self):
        return hash(("Q",) + self.components)

    def __bool__(self):
        return any(self.components)

    def _coerce(self, other):
        if isinstance(other, Quaternion):
            return other
        raise RingMismatchError(
            f"cannot combine a quaternion with {type(other).__name__}"
        )

    def __add__(self, other):
        o = self._coerce(other)
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        a1, b1, c1, d1 = self.components
        a2, b2, c2, d2 = o.components
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        return self._coerce(other) * self

    def conjugate(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        """Squared Euclidean norm, a rational."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("quaternion 0 has no inverse")
        return Quaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def is_real(self):
        return self.b == 0 and self.c == 0 and self.d == 0


def _parse_fraction(obj):
    if isinstance(obj, bool):
        raise ValueError(f"not a rational: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {obj!r}") from exc
    raise ValueError(f"rationals are encoded as strings like '-3/2', got {obj!r}")


def _fraction_str(x):
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


class Ring(enum.Enum):
    RATIONAL = "rational"
    QUATERNION = "quaternion"

    @property
    def commutative(self):
        return self is Ring.RATIONAL

    def zero(self):
        return Fraction(0) if self is Ring.RATIONAL else Quaternion()

    def one(self):
        return Fraction(1) if self is Ring.RATIONAL else Quaternion(1)

    def embed(self, value):
        """Image of a rational number (an element of the center)."""
        value = Fraction(value)
        return value if self is Ring.RATIONAL else Quaternion(value)

    def contains(self, x):
        if self is Ring.RATIONAL:
            return isinstance(x, (Fraction, int)) and not isinstance(x, bool)
        return isinstance(x, Quaternion)

    def check(self, x):
        if not self.contains(x):
            raise RingMismatchError(f"{x!r} is not an element of the {self.value} ring")
        return Fraction(x) if self is Ring.RATIONAL else x

    def parse(self, obj):
        """Decode a JSON scalar: "num/den" or ["a", "b", "c", "d"]."""
        if self is Ring.RATIONAL:
            return _parse_fraction(obj)
        if isinstance(obj, list) and len(obj) == 4:
            return Quaternion(*map(_parse_fraction, obj))
        if isinstance(obj, (str, int)) and not isinstance(obj, bool):
            return Quaternion(_parse_fraction(obj))
        raise ValueError(f"quaternions are encoded as 4-arrays of rational strings, got {obj!r}")

    def dump(self, x):
        x = self.check(x)
        if self is Ring.RATIONAL:
            return _fraction_str(x)
        return [_fraction_str(c) for c in x.components]

    def random(self, rng: random.Random, bound=3, den=3, nonzero=False):
        """Small random element; components are p/q with |p| <= bound, 1 <= q <= den."""
        while True:
            if self is Ring.RATIONAL:
                x = Fraction(rng.randint(-bound, bound), rng.randint(1, den))
            else:
                x = Quaternion(*(Fraction(rng.randint(-bound, bound), rng.randint(1, den))
                                 for _ in range(4)))
            if x or not nonzero:
                return x


def ring_of(x) -> Ring:
    if isinstance(x, Quaternion):
        return Ring.QUATERNION
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return Ring.RATIONAL
    raise RingMismatchError(f"{x!r} is not a supported scalar")


def common_ring(*xs) -> Ring:
    rings = {ring_of(x) for x in xs}
    if len(rings) != 1:
        raise RingMismatchError(f"mixed rings: {sorted(r.value for r in rings)}")
    return rings.pop()


def add(x, y):
    common_ring(x, y)
    return x + y


def mul(x, y):
    common_ring(x, y)
    return x * y


def neg(x):
    ring_of(x)
    return -x


def inv(x):
    """Two-sided multiplicative inverse; ZeroDivisionError for 0."""
    if isinstance(x, Quaternion):
        return x.inverse()
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("0 has no inverse")
    return 1 / x


def is_central(x) -> bool:
    if isinstance(x, Quaternion):
        return x.is_real()
    ring_of(x)
    return True


def parse_ring(name) -> Ring:
    try:
        return Ring(name)
    except ValueError:
        raise ValueError(f"unknown ring {name!r}; expected 'rational' or 'quaternion'") from None


I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
