"""Triangle solvers, angle sums, and area from angle excess or defect.

Identities are evaluated on reduced lengths (length / R), so the spherical
and hyperbolic branches differ only in using circular or hyperbolic
functions. Solvers use half-angle forms, which stay accurate for small and
nearly degenerate triangles where the plain law of cosines cancels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from curvatura import geom
from curvatura.errors import (
    AreaNotDetermined,
    DomainError,
    NoCanonicalUnit,
    NoCircumcenter,
    NotATriangle,
    OutOfRange,
    UnrealizableAngles,
)
from curvatura.geom import Kind, PairTag, SpaceForm


@dataclass(frozen=True)
class Triangle:
    """Sides a, b, c and opposite angles A, B, C (radians)."""

    space: SpaceForm
    a: float
    b: float
    c: float
    A: float
    B: float
    C: float

    @property
    def angle_sum(self) -> float:
        return self.A + self.B + self.C

    @property
    def excess(self) -> float:
        """Angle sum minus pi; negative (a defect) in the hyperbolic plane."""
        return self.A + self.B + self.C - math.pi

    @classmethod
    def from_vertices(cls, space: SpaceForm, p, q, r) -> Triangle:
        """Measure a triangle directly in the model; A is the angle at ``p``."""
        d = geom.distance
        return cls(
            space,
            d(space, q, r),
            d(space, r, p),
            d(space, p, q),
            geom.angle_at(space, p, q, r),
            geom.angle_at(space, q, r, p),
            geom.angle_at(space, r, p, q),
        )

    @classmethod
    def from_sides(cls, space: SpaceForm, a: float, b: float, c: float) -> Triangle:
        return cls(space, a, b, c, *angles_from_sss(space, a, b, c))


def _f(space):
    return {Kind.SPHERICAL: math.sin, Kind.HYPERBOLIC: math.sinh}.get(space.kind, lambda x: x)


def _reduce(space, *lengths):
    return [x / space.radius for x in lengths]


def construct_sas(space: SpaceForm, b: float, c: float, A: float):
    """Vertices (P, Q, R) of the triangle with angle ``A`` at P between PR = b and PQ = c."""
    p = space.origin
    r = geom.exp_map(space, space.direction(0.0), b)
    q = geom.exp_map(space, space.direction(A), c)
    return p, q, r


def side_from_sas(space: SpaceForm, b: float, c: float, A: float) -> float:
    """Side opposite the angle ``A`` enclosed by sides ``b`` and ``c``."""
    if not (b > 0 and c > 0):
        raise DomainError("sides must be positive")
    if not 0 < A < math.pi:
        raise DomainError("angle must lie in (0, pi)")
    if space.kind is Kind.SPHERICAL and (b >= math.pi * space.radius or c >= math.pi * space.radius):
        raise DomainError("spherical sides must be shorter than pi*R")
    if space.kind is Kind.EUCLIDEAN:
        return math.sqrt((b - c) ** 2 + 4 * b * c * math.sin(A / 2) ** 2)
    rb, rc = _reduce(space, b, c)
    f = _f(space)
    h = f((rb - rc) / 2) ** 2 + f(rb) * f(rc) * math.sin(A / 2) ** 2
    if space.kind is Kind.SPHERICAL:
        return 2 * space.radius * math.asin(min(1.0, math.sqrt(h)))
    return 2 * space.radius * math.asinh(math.sqrt(h))


def angles_from_sss(space: SpaceForm, a: float, b: float, c: float):
    """Angles (A, B, C) opposite the sides (a, b, c)."""
    if not (a > 0 and b > 0 and c > 0) or not (a < b + c and b < c + a and c < a + b):
        raise NotATriangle(f"sides {a!r}, {b!r}, {c!r} violate the triangle inequality")
    if space.kind is Kind.SPHERICAL and a + b + c >= 2 * math.pi * space.radius:
        raise NotATriangle("spherical perimeter must be below 2*pi*R")
    f = _f(space)
    ra, rb, rc = _reduce(space, a, b, c)
    s = (ra + rb + rc) / 2
    fs, fa, fb, fc = f(s), f(s - ra), f(s - rb), f(s - rc)

    def half(fx, fy, fz):
        return 2 * math.atan2(math.sqrt(fy * fz), math.sqrt(fs * fx))

    return half(fa, fb, fc), half(fb, fc, fa), half(fc, fa, fb)


def law_of_cosines_residual(space: SpaceForm, a, b, c, A) -> float:
    """Relative residual of the first law of cosines for a measured triangle.

    Spherical: cos a = cos b cos c + sin b sin c cos A;
    hyperbolic: cosh a = cosh b cosh c - sinh b sinh c cos A (reduced sides).
    """
    if space.kind is Kind.EUCLIDEAN:
        rhs = b * b + c * c - 2 * b * c * math.cos(A)
        return abs(a * a - rhs) / (b * b + c * c)
    ra, rb, rc = _reduce(space, a, b, c)
    if space.kind is Kind.SPHERICAL:
        rhs = math.cos(rb) * math.cos(rc) + math.sin(rb) * math.sin(rc) * math.cos(A)
        return abs(math.cos(ra) - rhs)
    rhs = math.cosh(rb) * math.cosh(rc) - math.sinh(rb) * math.sinh(rc) * math.cos(A)
    return abs(math.cosh(ra) - rhs) / (math.cosh(rb) * math.cosh(rc))


def area_from_angles(space: SpaceForm, A: float, B: float, C: float) -> float:
    """Area from angle excess (sphere) or defect (hyperbolic plane).

    Euclidean angles never determine an area: a valid triple raises
    :class:`AreaNotDetermined` (its defect is zero), any other raises
    :class:`UnrealizableAngles`.
    """
    total = A + B + C
    R2 = space.radius**2
    if space.kind is Kind.SPHERICAL:
        if not all(0 < x < math.pi for x in (A, B, C)) or not total > math.pi:
            raise UnrealizableAngles("spherical angles lie in (0, pi) and sum to more than pi")
        return R2 * (total - math.pi)
    if space.kind is Kind.HYPERBOLIC:
        if not all(0 <= x < math.pi for x in (A, B, C)) or not total < math.pi:
            raise UnrealizableAngles("hyperbolic angles must sum to less than pi")
        return R2 * (math.pi - total)
    if abs(total - math.pi) > space.tol:
        raise UnrealizableAngles("Euclidean angles must sum to pi")
    raise AreaNotDetermined("Euclidean angles fix a triangle only up to similarity (defect 0)")


def equilateral_angle(space: SpaceForm, s: float) -> float:
    """Angle of the equilateral triangle with side ``s``."""
    return angles_from_sss(space, s, s, s)[0]


def equilateral_side_closed_form(space: SpaceForm, alpha: float) -> float:
    """cos(s/R) resp. cosh(s/R) = cos(alpha) / (1 - cos(alpha)); cross-check only."""
    x = math.cos(alpha) / (1 - math.cos(alpha))
    if space.kind is Kind.HYPERBOLIC:
        return space.radius * math.acosh(x)
    return space.radius * math.acos(x)


def equilateral_side_for_angle(space: SpaceForm, alpha: float) -> float:
    """The canonical length: side of the equilateral triangle with angles ``alpha``.

    Found by bisection on the monotone map side -> angle, carried to the
    floating-point resolution of the bracket (well below 1e-12 relative).
    """
    if space.kind is Kind.EUCLIDEAN:
        raise NoCanonicalUnit("every Euclidean equilateral triangle has angles pi/3")
    third = math.pi / 3
    R = space.radius
    if space.kind is Kind.HYPERBOLIC:
        if not 0 < alpha < third:
            raise OutOfRange("hyperbolic equilateral angles lie in (0, pi/3)")
        lo, hi = 0.0, R
        while equilateral_angle(space, hi) > alpha:
            lo, hi = hi, 2 * hi
        increasing = False
    else:
        if not third < alpha < math.pi:
            raise OutOfRange("spherical equilateral angles lie in (pi/3, pi)")
        lo, hi = 0.0, 2 * math.pi * R / 3
        increasing = True
    for _ in range(2000):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if (equilateral_angle(space, mid) < alpha) == increasing:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def equilateral_triangle(space: SpaceForm, s: float):
    """Vertices of the equilateral triangle with side ``s``, A at the origin.

    The triangle is symmetric about the first axis.
    """
    alpha = equilateral_angle(space, s)
    a = space.origin
    b = geom.exp_map(space, space.direction(-alpha / 2), s)
    c = geom.exp_map(space, space.direction(alpha / 2), s)
    return a, b, c


def equilateral_median_split(space: SpaceForm, s: float):
    """Lengths (AF, DF) for the equilateral triangle ABC of side ``s``.

    F is the midpoint of BC and D the common point of the perpendicular
    bisectors of the sides.
    """
    if not s > 0:
        raise DomainError("side must be positive")
    if space.kind is Kind.SPHERICAL and s >= 2 * math.pi * space.radius / 3:
        raise DomainError("spherical equilateral sides must be below 2*pi*R/3")
    a, b, c = equilateral_triangle(space, s)
    f = geom.midpoint(space, b, c)
    pair = geom.classify_line_pair(
        space, geom.perpendicular_bisector(space, a, b), geom.perpendicular_bisector(space, a, c)
    )
    if pair.tag is not PairTag.INTERSECTING:
        raise NoCircumcenter(f"perpendicular bisectors are {pair.tag.value}")
    d = pair.point
    ra, rb, rc = (geom.distance(space, d, x) for x in (a, b, c))
    if max(ra, rb, rc) - min(ra, rb, rc) > 1e-9 * max(1.0, ra):
        raise NoCircumcenter("bisector intersection is not equidistant from the vertices")
    return geom.distance(space, a, f), geom.distance(space, d, f)
