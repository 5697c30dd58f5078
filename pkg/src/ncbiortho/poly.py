"""Polynomials with coefficients on a fixed side.

``LeftPoly`` is an element sum(a_i x^i) of R[x] and ``RightPoly`` an element
sum(y^j b_j) of R[y].  Only the operations the constructions need are
provided; in particular there is no general product of two polynomials,
only products with polynomials whose coefficients are central.
"""
from __future__ import annotations

from .errors import CentralityError, DegreeError, RingMismatchError
from .ring import Ring, common_ring, is_central, ring_of


class _Poly:
    var = "?"
    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs=(), ring: Ring | None = None):
        coeffs = list(coeffs)
        if ring is None:
            if not coeffs:
                raise ValueError("ring is required for an empty coefficient list")
            ring = common_ring(*coeffs)
        coeffs = [ring.check(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zero(cls, ring):
        return cls((), ring)

    @classmethod
    def constant(cls, c, ring=None):
        return cls([c], ring or ring_of(c))

    @classmethod
    def monomial(cls, ring, n, c=None):
        """x^n (or y^n), optionally with coefficient c."""
        return cls([ring.zero()] * n + [ring.one() if c is None else c], ring)

    def is_zero(self):
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise DegreeError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            raise DegreeError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero()

    def _same(self, other):
        if type(other) is not type(self):
            raise RingMismatchError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if other.ring is not self.ring:
            raise RingMismatchError(f"mixed rings: {self.ring.value}, {other.ring.value}")
        return other

    def __add__(self, other):
        other = self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return type(self)([self.coeff(i) + other.coeff(i) for i in range(n)], self.ring)

    def __neg__(self):
        return type(self)([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.ring, self.coeffs))

    def __repr__(self):
        return f"{type(self).__name__}([{', '.join(map(str, self.coeffs))}], {self.ring.value})"

    def _term(self, c, i):
        raise NotImplementedError

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = ""
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            negative = self.ring.commutative and c < 0
            term = self._term(-c if negative else c, i)
            if not out:
                out = ("-" if negative else "") + term
            else:
                out += (" - " if negative else " + ") + term
        return out


def _power(var, i):
    return "" if i == 0 else var if i == 1 else f"{var}^{i}"


def _wrap(c):
    s = str(c)
    return f"({s})" if any(ch in s[1:] for ch in "+-/ ") else s


class LeftPoly(_Poly):
    """sum(a_i x^i): coefficients act from the left."""

    var = "x"
    __slots__ = ()

    def _term(self, c, i):
        if i == 0:
            return str(c)
        return (_power("x", i) if c == self.ring.one() else f"{_wrap(c)}*{_power('x', i)}")

    def scale(self, c):
        return scale_left(c, self)


class RightPoly(_Poly):
    """sum(y^j b_j): coefficients act from the right."""

    var = "y"
    __slots__ = ()

    def _term(self, c, i):
        if i == 0:
            return str(c)
        return (_power("y", i) if c == self.ring.one() else f"{_power('y', i)}*{_wrap(c)}")

    def scale(self, c):
        return scale_right(self, c)


class CentralPoly(_Poly):
    """Polynomial whose coefficients all lie in the center of the ring.

    Used for the kernel polynomials f(x) and g(y).  ``var`` is kept per
    instance so the same class houses both.
    """

    __slots__ = ("_var",)

    def __init__(self, coeffs=(), ring=None, var="x"):
        super().__init__(coeffs, ring)
        bad = [i for i, c in enumerate(self.coeffs) if not is_central(c)]
        if bad:
            raise CentralityError(f"coefficient {bad[0]} ({self.coeffs[bad[0]]}) is not central")
        if var not in ("x", "y"):
            raise ValueError(f"var must be 'x' or 'y', got {var!r}")
        object.__setattr__(self, "_var", var)

    @property
    def var(self):
        return self._var

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs and self.var == other.var

    def __hash__(self):
        return hash(("CentralPoly", self.ring, self.coeffs, self.var))

    def __add__(self, other):
        other = self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return CentralPoly([self.coeff(i) + other.coeff(i) for i in range(n)], self.ring, self.var)

    def __neg__(self):
        return CentralPoly([-c for c in self.coeffs], self.ring, self.var)

    def __mul__(self, other):
        other = self._same(other)
        return CentralPoly(_convolve(self.coeffs, other.coeffs, self.ring), self.ring, self.var)

    def _term(self, c, i):
        return str(c) if i == 0 else f"{_wrap(c)}*{_power(self.var, i)}"


def as_central(f, ring=None, var="x") -> CentralPoly:
    if isinstance(f, CentralPoly):
        return f
    if isinstance(f, _Poly):
        return CentralPoly(f.coeffs, f.ring, f.var)
    return CentralPoly(f, ring, var)


def _convolve(a, b, ring):
    if not a or not b:
        return []
    out = [ring.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def scale_left(c, p: LeftPoly) -> LeftPoly:
    """c * p, multiplying every coefficient on the left."""
    c = p.ring.check(c)
    return LeftPoly([c * a for a in p.coeffs], p.ring)


def scale_right(q: RightPoly, c) -> RightPoly:
    """q * c, multiplying every coefficient on the right."""
    c = q.ring.check(c)
    return RightPoly([b * c for b in q.coeffs], q.ring)


def mul_central(p: LeftPoly, f) -> LeftPoly:
    """p(x) f(x) for f with central coefficients."""
    f = as_central(f, p.ring, "x")
    if f.ring is not p.ring:
        raise RingMismatchError(f"mixed rings: {p.ring.value}, {f.ring.value}")
    return LeftPoly(_convolve(p.coeffs, f.coeffs, p.ring), p.ring)


def mul_central_right(g, q: RightPoly) -> RightPoly:
    """g(y) q(y) for g with central coefficients."""
    g = as_central(g, q.ring, "y")
    if g.ring is not q.ring:
        raise RingMismatchError(f"mixed rings: {q.ring.value}, {g.ring.value}")
    return RightPoly(_convolve(g.coeffs, q.coeffs, q.ring), q.ring)


def degree(p) -> int:
    return p.degree()


def leading(p):
    return p.leading()
