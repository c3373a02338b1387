"""Embedded models of the three constant-curvature planes.

The sphere of radius R and the upper sheet of the hyperboloid
x0^2 - x1^2 - x2^2 = R^2 live in R^3 and share every code path; only the
sign ``k`` in the bilinear form differs (see ``curvatura._pykernels``). The
Euclidean plane is handled directly in R^2.

All functions here are pure and all returned objects are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from curvatura import kernels as K
from curvatura.errors import (
    AntipodalError,
    DegenerateAngle,
    DomainError,
    InvalidPoint,
    OffLine,
    PoleError,
)

DEFAULT_TOL = 1e-9


class Kind(str, Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class SpaceForm:
    """One of the three model planes.

    ``radius`` is ignored for the Euclidean plane. ``tol`` is the relative
    tolerance used for postcondition checks and on-line tests; ``horizon``
    (in units of the radius) bounds how far away an intersection may be
    before a pair of lines is reported as asymptotic instead.
    """

    kind: Kind
    radius: float = 1.0
    tol: float = DEFAULT_TOL
    horizon: float = 1e3

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        r = float(self.radius)
        if self.kind is not Kind.EUCLIDEAN and not (math.isfinite(r) and r > 0):
            raise ValueError(f"radius must be finite and positive, got {self.radius!r}")
        object.__setattr__(self, "radius", r if self.kind is not Kind.EUCLIDEAN else 1.0)
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")

    @classmethod
    def spherical(cls, radius=1.0, **kw):
        return cls(Kind.SPHERICAL, radius, **kw)

    @classmethod
    def euclidean(cls, **kw):
        return cls(Kind.EUCLIDEAN, 1.0, **kw)

    @classmethod
    def hyperbolic(cls, radius=1.0, **kw):
        return cls(Kind.HYPERBOLIC, radius, **kw)

    @property
    def sign(self) -> int:
        return {Kind.SPHERICAL: 1, Kind.EUCLIDEAN: 0, Kind.HYPERBOLIC: -1}[self.kind]

    @property
    def curvature(self) -> float:
        return self.sign / self.radius**2

    @property
    def curved(self) -> bool:
        return self.kind is not Kind.EUCLIDEAN

    @property
    def origin(self) -> Point:
        if self.curved:
            return Point((self.radius, 0.0, 0.0))
        return Point((0.0, 0.0))

    def direction(self, theta: float) -> TangentDir:
        """Unit tangent at the origin making angle ``theta`` with the first axis."""
        c, s = math.cos(theta), math.sin(theta)
        if self.curved:
            return TangentDir(self.origin, (0.0, c, s))
        return TangentDir(self.origin, (c, s))

    def form(self, x, y) -> float:
        """The model's bilinear form (plain dot product in the Euclidean plane)."""
        if self.curved:
            return K.form(self.sign, x, y)
        return x[0] * y[0] + x[1] * y[1]

    def point(self, coords) -> Point:
        """Validate ``coords`` against the model and snap them onto it."""
        coords = tuple(float(c) for c in coords)
        if not self.curved:
            if len(coords) != 2:
                raise InvalidPoint("Euclidean points have 2 coordinates")
            return Point(coords)
        if len(coords) != 3:
            raise InvalidPoint("model points have 3 embedding coordinates")
        q = K.form(self.sign, coords, coords)
        if abs(q - self.radius**2) > 1e-6 * self.radius**2 * max(1.0, abs(coords[0]) / self.radius) ** 2:
            raise InvalidPoint(f"B(x,x) = {q!r}, expected {self.radius**2!r}")
        if self.kind is Kind.HYPERBOLIC and coords[0] <= 0:
            raise InvalidPoint("hyperbolic points must lie on the upper sheet")
        return Point(K.normalize(self.sign, self.radius, coords))


@dataclass(frozen=True)
class Point:
    coords: tuple


@dataclass(frozen=True)
class TangentDir:
    base: Point
    vec: tuple


@dataclass(frozen=True)
class Line:
    """A complete geodesic through ``base`` with unit direction ``dir``."""

    base: Point
    dir: TangentDir


class PairTag(str, Enum):
    INTERSECTING = "intersecting"
    COMMON_PERPENDICULAR = "common-perpendicular"
    ASYMPTOTIC = "asymptotic"
    COINCIDENT = "coincident"


@dataclass(frozen=True)
class LinePairClass:
    tag: PairTag
    point: Point | None = None
    angle: float | None = None
    foot1: Point | None = None
    foot2: Point | None = None
    gap: float | None = None


# --------------------------------------------------------------------------
# vector helpers


def _add(x, y, a=1.0, b=1.0):
    return tuple(a * u + b * v for u, v in zip(x, y))


def _norm2(x):
    return math.hypot(*x)


def _tangent(space, p, v):
    return K.tangent_unit(space.sign, space.radius, p.coords, v)


# --------------------------------------------------------------------------
# metric primitives


def distance(space: SpaceForm, p: Point, q: Point) -> float:
    if space.curved:
        return K.distance(space.sign, space.radius, p.coords, q.coords)
    return math.hypot(p.coords[0] - q.coords[0], p.coords[1] - q.coords[1])


def walk(space: SpaceForm, d: TangentDir, t: float) -> Point:
    """Point at signed arc length ``t`` along the geodesic with direction ``d``."""
    if space.curved:
        return Point(K.exp_point(space.sign, space.radius, d.base.coords, d.vec, t))
    b = d.base.coords
    return Point((b[0] + t * d.vec[0], b[1] + t * d.vec[1]))


def exp_map(space: SpaceForm, d: TangentDir, t: float) -> Point:
    if t < 0:
        raise DomainError("exp_map takes a nonnegative length")
    return walk(space, d, t)


def direction(space: SpaceForm, p: Point, q: Point) -> TangentDir:
    """Unit initial direction of the geodesic from ``p`` to ``q``."""
    if space.curved:
        v = _tangent(space, p, q.coords)
        if v is None:
            raise DegenerateAngle("direction undefined (coincident or antipodal points)")
        return TangentDir(p, v)
    dx, dy = q.coords[0] - p.coords[0], q.coords[1] - p.coords[1]
    n = math.hypot(dx, dy)
    if n <= 1e-300:
        raise DegenerateAngle("direction undefined (coincident points)")
    return TangentDir(p, (dx / n, dy / n))


def angle_between(space: SpaceForm, u: TangentDir, w: TangentDir) -> float:
    """Unsigned angle in [0, pi] between two unit tangents at the same point."""
    if space.curved:
        return K.tangent_angle(space.sign, u.vec, w.vec)
    cross = u.vec[0] * w.vec[1] - u.vec[1] * w.vec[0]
    dot = u.vec[0] * w.vec[0] + u.vec[1] * w.vec[1]
    return math.atan2(abs(cross), dot)


def angle_at(space: SpaceForm, vertex: Point, p: Point, q: Point) -> float:
    return angle_between(space, direction(space, vertex, p), direction(space, vertex, q))


def rotate(space: SpaceForm, d: TangentDir, theta: float) -> TangentDir:
    """Turn ``d`` counterclockwise by ``theta`` within its tangent plane."""
    n = left_normal(space, d)
    c, s = math.cos(theta), math.sin(theta)
    v = _add(d.vec, n.vec, c, s)
    if space.curved:
        v = _tangent(space, d.base, v)
    return TangentDir(d.base, v)


def left_normal(space: SpaceForm, d: TangentDir) -> TangentDir:
    """``d`` turned counterclockwise by a right angle."""
    if not space.curved:
        return TangentDir(d.base, (-d.vec[1], d.vec[0]))
    k = space.sign
    c = K.cross(k, d.base.coords, d.vec)
    return TangentDir(d.base, _tangent(space, d.base, (k * c[0], k * c[1], k * c[2])))


def midpoint(space: SpaceForm, p: Point, q: Point) -> Point:
    if not space.curved:
        return Point(((p.coords[0] + q.coords[0]) / 2, (p.coords[1] + q.coords[1]) / 2))
    s = _add(p.coords, q.coords)
    if space.kind is Kind.SPHERICAL and _norm2(s) <= 1e-12 * space.radius:
        raise AntipodalError("antipodal points have no unique midpoint")
    return Point(K.normalize(space.sign, space.radius, s))


# --------------------------------------------------------------------------
# lines


def line_through(space: SpaceForm, p: Point, q: Point) -> Line:
    return Line(p, direction(space, p, q))


def point_on(space: SpaceForm, line: Line, t: float) -> Point:
    return walk(space, line.dir, t)


def _pole(space, line):
    """Unit left normal at the base; B-orthogonal to the whole line."""
    return left_normal(space, line.dir).vec


def signed_distance(space: SpaceForm, line: Line, q: Point) -> float:
    """Distance from ``q`` to ``line``, positive on the left side."""
    if not space.curved:
        b, d = line.base.coords, line.dir.vec
        return d[0] * (q.coords[1] - b[1]) - d[1] * (q.coords[0] - b[0])
    k, R = space.sign, space.radius
    s = k * K.form(k, _pole(space, line), q.coords) / R
    if k > 0:
        return R * math.asin(max(-1.0, min(1.0, s)))
    return R * math.asinh(s)


def contains(space: SpaceForm, line: Line, q: Point) -> bool:
    return abs(signed_distance(space, line, q)) <= space.tol * space.radius


def same_line(space: SpaceForm, l1: Line, l2: Line) -> bool:
    """Line equality as point sets."""
    return contains(space, l1, l2.base) and contains(space, l1, point_on(space, l2, space.radius))


def line_direction_at(space: SpaceForm, line: Line, q: Point) -> TangentDir:
    """Unit tangent of ``line`` at its point ``q``, oriented like ``line.dir``."""
    if not space.curved:
        return TangentDir(q, line.dir.vec)
    k, m = space.sign, _pole(space, line)
    c = K.cross(k, m, q.coords)
    return TangentDir(q, _tangent(space, q, (k * c[0], k * c[1], k * c[2])))


def foot_of_perpendicular(space: SpaceForm, p: Point, line: Line):
    """Closest point of ``line`` to ``p`` and the distance to it."""
    if not space.curved:
        b, d = line.base.coords, line.dir.vec
        t = (p.coords[0] - b[0]) * d[0] + (p.coords[1] - b[1]) * d[1]
        foot = Point((b[0] + t * d[0], b[1] + t * d[1]))
        return foot, distance(space, p, foot)
    k, R = space.sign, space.radius
    m = _pole(space, line)
    proj = _add(p.coords, m, 1.0, -k * K.form(k, p.coords, m))
    if k > 0 and _norm2(proj) <= space.tol * R:
        raise PoleError("point is a pole of the line; every point of it is a foot")
    foot = Point(K.normalize(k, R, proj))
    return foot, distance(space, p, foot)


def perpendicular_at(space: SpaceForm, line: Line, q: Point) -> Line:
    """The line through ``q`` (on ``line``) meeting it at a right angle."""
    if not contains(space, line, q):
        raise OffLine("point is not on the line")
    if not space.curved:
        return Line(q, left_normal(space, line_direction_at(space, line, q)))
    return Line(q, TangentDir(q, _tangent(space, q, _pole(space, line))))


def perpendicular_bisector(space: SpaceForm, p: Point, q: Point) -> Line:
    m = midpoint(space, p, q)
    return perpendicular_at(space, Line(m, direction(space, m, q)), m)


def classify_line_pair(space: SpaceForm, l1: Line, l2: Line) -> LinePairClass:
    if same_line(space, l1, l2):
        return LinePairClass(PairTag.COINCIDENT)
    if not space.curved:
        return _classify_euclidean(space, l1, l2)
    k, R = space.sign, space.radius
    m1, m2 = _pole(space, l1), _pole(space, l2)
    w = K.cross(k, m1, m2)
    c = K.form(k, m1, m2)
    if k > 0:
        s = _norm2(w)
        pt = K.normalize(k, R, w)
        if K.form(k, pt, l1.base.coords) < 0:
            pt = tuple(-x for x in pt)
        return LinePairClass(PairTag.INTERSECTING, Point(pt), math.atan2(s, abs(c)))
    ww = K.form(k, w, w)
    if ww > 0:
        try:
            pt = Point(K.normalize(k, R, w))
        except ValueError:
            # w is light-like to working precision: the crossing is out of reach
            return LinePairClass(PairTag.ASYMPTOTIC, gap=0.0)
        if distance(space, l1.base, pt) > space.horizon * R:
            return LinePairClass(PairTag.ASYMPTOTIC, gap=0.0)
        return LinePairClass(PairTag.INTERSECTING, pt, math.atan2(math.sqrt(ww), abs(c)))
    gap = R * math.asinh(math.sqrt(-ww))
    if gap < space.tol * R:
        return LinePairClass(PairTag.ASYMPTOTIC, gap=0.0)
    # the common perpendicular is the line with pole w
    try:
        f1 = Point(K.normalize(k, R, K.cross(k, m1, w)))
        f2 = Point(K.normalize(k, R, K.cross(k, m2, w)))
    except ValueError:
        return LinePairClass(PairTag.ASYMPTOTIC, gap=0.0)
    return LinePairClass(PairTag.COMMON_PERPENDICULAR, foot1=f1, foot2=f2, gap=distance(space, f1, f2))


def _classify_euclidean(space, l1, l2):
    d1, d2 = l1.dir.vec, l2.dir.vec
    cr = d1[0] * d2[1] - d1[1] * d2[0]
    dot = d1[0] * d2[0] + d1[1] * d2[1]
    if abs(cr) <= space.tol:
        f2, gap = foot_of_perpendicular(space, l1.base, l2)
        return LinePairClass(PairTag.COMMON_PERPENDICULAR, foot1=l1.base, foot2=f2, gap=gap)
    b1, b2 = l1.base.coords, l2.base.coords
    s = ((b2[0] - b1[0]) * d2[1] - (b2[1] - b1[1]) * d2[0]) / cr
    pt = Point((b1[0] + s * d1[0], b1[1] + s * d1[1]))
    return LinePairClass(PairTag.INTERSECTING, pt, math.atan2(abs(cr), abs(dot)))


# --------------------------------------------------------------------------
# isometries (used by property checks and figure framing)


def apply(space: SpaceForm, matrix, p: Point) -> Point:
    """Apply a model isometry given as a 3x3 matrix.

    For the curved models the matrix acts linearly on embedding coordinates;
    in the Euclidean plane it acts on homogeneous coordinates (x, y, 1).
    """
    x = p.coords if space.curved else (p.coords[0], p.coords[1], 1.0)
    y = tuple(sum(matrix[i][j] * x[j] for j in range(3)) for i in range(3))
    if space.curved:
        return Point(K.renormalize(space.sign, space.radius, y))
    return Point((y[0], y[1]))


def rotation(space: SpaceForm, theta: float):
    """Rotation about the origin by ``theta``."""
    c, s = math.cos(theta), math.sin(theta)
    if not space.curved:
        return ((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0))
    return ((1.0, 0.0, 0.0), (0.0, c, -s), (0.0, s, c))


def translation(space: SpaceForm, t: float):
    """Translation by ``t`` along the first axis through the origin."""
    if not space.curved:
        return ((1.0, 0.0, t), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    s = t / space.radius
    if space.sign > 0:
        c, n = math.cos(s), math.sin(s)
        return ((c, -n, 0.0), (n, c, 0.0), (0.0, 0.0, 1.0))
    c, n = math.cosh(s), math.sinh(s)
    return ((c, n, 0.0), (n, c, 0.0), (0.0, 0.0, 1.0))


def compose(a, b):
    """Matrix product ``a @ b`` of two 3x3 isometries."""
    return tuple(tuple(sum(a[i][r] * b[r][j] for r in range(3)) for j in range(3)) for i in range(3))


def inverse(space: SpaceForm, m):
    """Inverse of an isometry matrix produced by :func:`rotation`/:func:`translation`."""
    if space.curved:
        k = space.sign
        j = (1.0, k, k)
        # B-orthogonal: m^-1 = J m^T J
        return tuple(tuple(j[i] * m[r][i] * j[r] for r in range(3)) for i in range(3))
    (a, b, tx), (c, d, ty), _ = m
    det = a * d - b * c
    ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
    return ((ia, ib, -(ia * tx + ib * ty)), (ic, id_, -(ic * tx + id_ * ty)), (0.0, 0.0, 1.0))
