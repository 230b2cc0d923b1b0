"""Tate normal form curves, the chord-tangent group law in long Weierstrass
form, scalar multiplication, and exact order certification.

The Tate curve for parameters (b, c) is

    y^2 + (1-c)*x*y - b*y = x^3 - b*x^2

on which (0, 0) is the marked point.  All arithmetic is exact over any
field supplied by `fields`; nothing here assumes characteristic 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .fields import DescriptorMismatchError, FieldElement, ZeroDivisorError


class CurveError(Exception):
    """Base class for curve-level errors."""


class PointNotOnCurveError(CurveError):
    """Affine coordinates do not satisfy the curve equation."""


class SingularCurveError(CurveError):
    """The operation requires a nonsingular curve (disc != 0)."""


class DegenerateCoordinatesError(CurveError):
    """A coordinate-map denominator vanished; the input maps to no Tate curve."""


@dataclass(frozen=True)
class TateParams:
    """The (b, c) pair defining a Tate normal form curve."""

    b: FieldElement
    c: FieldElement

    def __post_init__(self):
        if self.b.descriptor != self.c.descriptor:
            raise DescriptorMismatchError("b and c must share one descriptor")

    def curve(self):
        return tate_curve(self)


@dataclass(frozen=True)
class Curve:
    """A long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement

    def __post_init__(self):
        d = self.a1.descriptor
        for coeff in (self.a2, self.a3, self.a4, self.a6):
            if coeff.descriptor != d:
                raise DescriptorMismatchError("curve coefficients must share one descriptor")

    @property
    def descriptor(self):
        return self.a1.descriptor

    @cached_property
    def invariants(self):
        return curve_invariants(self)

    def is_singular(self):
        return self.invariants.disc.is_zero()

    def contains(self, x, y):
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x * x * x + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs

    def point(self, x, y):
        return CurvePoint(self, x, y)

    def infinity(self):
        return CurvePoint(self, None, None)

    def add(self, p, q):
        return add_points(self, p, q)

    def negate(self, p):
        return negate(self, p)

    def mul(self, k, p):
        return scalar_mul(self, k, p)


@dataclass(frozen=True)
class CurveInvariants:
    """Standard Weierstrass invariants; j is None exactly when disc = 0."""

    b2: FieldElement
    b4: FieldElement
    b6: FieldElement
    b8: FieldElement
    c4: FieldElement
    c6: FieldElement
    disc: FieldElement
    j: object


@dataclass(frozen=True)
class CurvePoint:
    """A point of a curve: affine (x, y), or infinity when both are None."""

    curve: Curve
    x: object
    y: object

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("affine points need both coordinates")
        if self.x is not None:
            d = self.curve.descriptor
            if self.x.descriptor != d or self.y.descriptor != d:
                raise DescriptorMismatchError("point coordinates off the curve's field")
            if not self.curve.contains(self.x, self.y):
                raise PointNotOnCurveError(f"({self.x}, {self.y}) is not on the curve")

    @property
    def is_infinity(self):
        return self.x is None

    def __add__(self, other):
        return add_points(self.curve, self, other)

    def __neg__(self):
        return negate(self.curve, self)

    def __sub__(self, other):
        return add_points(self.curve, self, negate(self.curve, other))

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return scalar_mul(self.curve, k, self)

    def __str__(self):
        if self.is_infinity:
            return "infinity"
        return f"({self.x}, {self.y})"


def tate_curve(params):
    """The Tate normal form curve: (a1, a2, a3, a4, a6) = (1-c, -b, -b, 0, 0)."""
    b, c = params.b, params.c
    one = b.descriptor.one()
    zero = b.descriptor.zero()
    return Curve(one - c, -b, -b, zero, zero)


def curve_invariants(e):
    """Exact b2/b4/b6/b8, c4/c6, discriminant and, when it exists, j = c4^3/disc."""
    a1, a2, a3, a4, a6 = e.a1, e.a2, e.a3, e.a4, e.a6
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6
    disc = -(b2 * b2) * b8 - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * b2 * b4 * b6
    if disc.is_zero():
        j = None
    else:
        try:
            j = (c4 * c4 * c4) / disc
        except ZeroDivisorError:
            # nonzero but non-invertible disc: only possible when the
            # descriptor is a ring, not a field; j does not exist there
            j = None
    return CurveInvariants(b2, b4, b6, b8, c4, c6, disc, j)


def negate(e, p):
    """-(x, y) = (x, -y - a1 x - a3); infinity is its own negative."""
    if p.curve != e:
        raise CurveError("point does not belong to this curve")
    if p.is_infinity:
        return p
    return CurvePoint(e, p.x, -p.y - e.a1 * p.x - e.a3)


def add_points(e, p, q):
    """Chord-tangent sum with full case analysis.

    Cases: either operand at infinity; q = -p (vertical chord, sum is
    infinity); p = q with vanishing doubling denominator (2-torsion, sum is
    infinity); the generic chord and tangent formulas otherwise.  The
    doubling denominator is tested before inversion, so no division-by-zero
    is ever raised from here on a nonsingular curve.
    """
    if p.curve != e or q.curve != e:
        raise CurveError("point does not belong to this curve")
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    a1, a2, a3, a4, a6 = e.a1, e.a2, e.a3, e.a4, e.a6
    x1, y1 = p.x, p.y
    x2, y2 = q.x, q.y
    if x1 == x2:
        if y1 != y2:
            return e.infinity()
        denom = 2 * y1 + a1 * x1 + a3
        if denom.is_zero():
            return e.infinity()
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / denom
        nu = (-(x1 * x1 * x1) + a4 * x1 + 2 * a6 - a3 * y1) / denom
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(e, x3, y3)


def scalar_mul(e, k, p):
    """[k]p by double-and-add; [0]p is infinity, negative k negates."""
    if not isinstance(k, int):
        raise TypeError("scalar must be an integer")
    if p.curve != e:
        raise CurveError("point does not belong to this curve")
    if k < 0:
        return negate(e, scalar_mul(e, -k, p))
    result = e.infinity()
    acc = p
    while k:
        if k & 1:
            result = add_points(e, result, acc)
        k >>= 1
        if k:
            acc = add_points(e, acc, acc)
    return result


def prime_factors(n):
    """Distinct prime factors by trial division (intended for n < 2^32)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class OrderCertificate:
    """Record of the multiples checked to pin the exact order of a point.

    `checks` holds (k, at_infinity) pairs: first [n]P, then [n/q]P for each
    distinct prime q dividing n.  The certificate passes when [n]P is
    infinity and none of the proper multiples are.
    """

    n: int
    passed: bool
    checks: tuple
    reason: str

    def __str__(self):
        lines = [f"order {self.n}: {'PASS' if self.passed else 'FAIL'} ({self.reason})"]
        for k, at_inf in self.checks:
            lines.append(f"  [{k}]P {'=' if at_inf else '!='} infinity")
        return "\n".join(lines)


def verify_order(e, p, n, factors=None):
    """Certify that p has exact order n on the nonsingular curve e.

    Checks [n]p = infinity and [n/q]p != infinity for every distinct prime
    q | n; `factors` may supply the primes, otherwise trial division finds
    them.  Raises SingularCurveError before touching the group law when
    disc = 0.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("order target must be a positive integer")
    if p.curve != e:
        raise CurveError("point does not belong to this curve")
    if e.is_singular():
        raise SingularCurveError("curve is singular; the group law does not apply")
    if factors is None:
        factors = prime_factors(n)
    checks = []
    top = scalar_mul(e, n, p)
    checks.append((n, top.is_infinity))
    passed = top.is_infinity
    reason = "" if passed else f"[{n}]P is not infinity"
    for q in factors:
        k = n // q
        part = scalar_mul(e, k, p)
        checks.append((k, part.is_infinity))
        if part.is_infinity and passed:
            passed = False
            reason = f"[{k}]P is already infinity"
    if passed:
        reason = f"exact order {n}"
    return OrderCertificate(n, passed, tuple(checks), reason)


def sutherland_to_tate(x, y):
    """Map modular-curve coordinates (x, y) to Tate parameters (b, c).

    Uses r = (x^2 y - x y + y - 1)/(x^2 y - x), s = (x y - y + 1)/(x y),
    then b = r s (r - 1) and c = s (r - 1).  A vanishing denominator means
    the input does not correspond to a Tate curve and raises
    DegenerateCoordinatesError.
    """
    if x.descriptor != y.descriptor:
        raise DescriptorMismatchError("x and y must share one descriptor")
    r_den = x * x * y - x
    if r_den.is_zero():
        raise DegenerateCoordinatesError("x^2 y - x = 0: degenerate coordinates")
    s_den = x * y
    if s_den.is_zero():
        raise DegenerateCoordinatesError("x y = 0: degenerate coordinates")
    r = (x * x * y - x * y + y - 1) / r_den
    s = (x * y - y + 1) / s_den
    one = x.descriptor.one()
    b = r * s * (r - one)
    c = s * (r - one)
    return TateParams(b, c)
