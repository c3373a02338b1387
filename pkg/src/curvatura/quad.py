"""Lambert and Saccheri quadrilaterals, perpendicular profiles, and the
intersection threshold of erected perpendiculars.

Every quantity is produced by a construction in the model; the closed
forms below (``lambert_closed_form``, ``profile_closed_form``,
``threshold_closed_form``) exist only to cross-check those constructions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from curvatura import geom
from curvatura.errors import ConstructionMismatch, DomainError, NoFourthVertex, NotApplicable
from curvatura.geom import Kind, Line, PairTag, Point, SpaceForm

RIGHT = math.pi / 2


@dataclass(frozen=True)
class LambertQuad:
    """Trirectangular quadrilateral ABCD with right angles at A, B, C.

    Sides: a = AB, b = BC, c = CD, d = DA; ``phi`` is the angle at D.
    """

    space: SpaceForm
    a: float
    b: float
    c: float
    d: float
    phi: float
    A: Point
    B: Point
    C: Point
    D: Point

    @property
    def vertices(self):
        return (self.A, self.B, self.C, self.D)

    def right_angles(self):
        s = self.space
        return (
            geom.angle_at(s, self.A, self.D, self.B),
            geom.angle_at(s, self.B, self.A, self.C),
            geom.angle_at(s, self.C, self.B, self.D),
        )


@dataclass(frozen=True)
class SaccheriQuad:
    """Base P0P1 with equal legs P0Q0, P1Q1 erected perpendicularly."""

    space: SpaceForm
    base: float
    leg: float
    summit: float
    summit_angle: float
    summit_angles: tuple
    P0: Point
    P1: Point
    Q1: Point
    Q0: Point

    @property
    def vertices(self):
        return (self.P0, self.P1, self.Q1, self.Q0)

    @property
    def midline(self) -> float:
        """Distance between the base and summit midpoints."""
        s = self.space
        return geom.distance(s, geom.midpoint(s, self.P0, self.P1), geom.midpoint(s, self.Q0, self.Q1))


@dataclass(frozen=True)
class ProfileSample:
    t: float
    h: float
    phi: float


@dataclass(frozen=True)
class PerpProfile:
    space: SpaceForm
    h0: float
    samples: tuple
    closed_form_residual: float

    @property
    def t(self):
        return [x.t for x in self.samples]

    @property
    def h(self):
        return [x.h for x in self.samples]

    @property
    def phi(self):
        return [x.phi for x in self.samples]


def _base_line(space):
    return Line(space.origin, space.direction(0.0))


def _check_positive(*xs):
    if not all(x > 0 for x in xs):
        raise DomainError("lengths must be positive")


def _check_quarter(space, *xs):
    if space.kind is Kind.SPHERICAL and any(x >= RIGHT * space.radius for x in xs):
        raise DomainError("spherical constructions need lengths below pi*R/2")


def lambert_quadrilateral(space: SpaceForm, a: float, b: float) -> LambertQuad:
    """Build ABCD from AB = a and BC = b; D closes the two remaining perpendiculars.

    Raises :class:`NoFourthVertex` (hyperbolic plane only) when the
    perpendicular to AB at A and the perpendicular to BC at C do not meet.
    """
    _check_positive(a, b)
    _check_quarter(space, a, b)
    base = _base_line(space)
    A = space.origin
    B = geom.point_on(space, base, a)
    up = geom.perpendicular_at(space, base, B)
    C = geom.point_on(space, up, b)
    side_c = geom.perpendicular_at(space, up, C)
    side_d = geom.perpendicular_at(space, base, A)
    pair = geom.classify_line_pair(space, side_d, side_c)
    if pair.tag is not PairTag.INTERSECTING:
        raise NoFourthVertex(f"closing perpendiculars are {pair.tag.value}", pair)
    D = pair.point
    return LambertQuad(
        space,
        a,
        b,
        geom.distance(space, C, D),
        geom.distance(space, A, D),
        geom.angle_at(space, D, A, C),
        A,
        B,
        C,
        D,
    )


def lambert_from_adjacent(space: SpaceForm, a: float, d: float) -> LambertQuad:
    """Lambert quadrilateral from AB = a and AD = d.

    C is the foot of the perpendicular from D onto the perpendicular to AB
    at B; this always exists, unlike the closure in
    :func:`lambert_quadrilateral`.
    """
    _check_positive(a, d)
    _check_quarter(space, a, d)
    base = _base_line(space)
    A = space.origin
    B = geom.point_on(space, base, a)
    D = geom.point_on(space, geom.perpendicular_at(space, base, A), d)
    C, _ = geom.foot_of_perpendicular(space, D, geom.perpendicular_at(space, base, B))
    return LambertQuad(
        space,
        a,
        geom.distance(space, B, C),
        geom.distance(space, C, D),
        d,
        geom.angle_at(space, D, A, C),
        A,
        B,
        C,
        D,
    )


def lambert_closed_form(space: SpaceForm, a: float, b: float):
    """(c, d, phi) from the trigonometry of the trirectangle; cross-check only."""
    if space.kind is Kind.EUCLIDEAN:
        return a, b, RIGHT
    R = space.radius
    ra, rb = a / R, b / R
    if space.kind is Kind.HYPERBOLIC:
        rd = math.atanh(math.cosh(ra) * math.tanh(rb))
        rc = math.asinh(math.sinh(ra) * math.cosh(rd))
        phi = math.acos(math.sinh(ra) * math.sinh(rb))
    else:
        rd = math.atan(math.cos(ra) * math.tan(rb))
        rc = math.asin(math.sin(ra) * math.cos(rd))
        phi = math.acos(-math.sin(ra) * math.sin(rb))
    return rc * R, rd * R, phi


def saccheri_quadrilateral(space: SpaceForm, base: float, leg: float) -> SaccheriQuad:
    _check_positive(base, leg)
    _check_quarter(space, base, leg)
    line = _base_line(space)
    P0 = space.origin
    P1 = geom.point_on(space, line, base)
    Q0 = geom.point_on(space, geom.perpendicular_at(space, line, P0), leg)
    Q1 = geom.point_on(space, geom.perpendicular_at(space, line, P1), leg)
    angles = (geom.angle_at(space, Q0, P0, Q1), geom.angle_at(space, Q1, P1, Q0))
    return SaccheriQuad(
        space, base, leg, geom.distance(space, Q0, Q1), angles[0], angles, P0, P1, Q1, Q0
    )


def fold_lambert(space: SpaceForm, base: float, leg: float, tol: float = 1e-10):
    """Saccheri quadrilateral and the Lambert half obtained by folding it.

    The Lambert quadrilateral is built independently with a = base/2 along
    the base and b = the Saccheri midline (on the common perpendicular
    bisector); its side d then equals the leg. Checks summit = 2c,
    summit angle = phi and d = leg to ``tol``.
    """
    sac = saccheri_quadrilateral(space, base, leg)
    lam = lambert_quadrilateral(space, base / 2, sac.midline)
    scale = max(1.0, sac.summit)
    mismatch = max(
        abs(sac.summit - 2 * lam.c) / scale,
        abs(sac.summit_angle - lam.phi),
        abs(lam.d - leg) / max(1.0, leg),
    )
    if mismatch > tol:
        raise ConstructionMismatch(f"fold correspondence off by {mismatch:.3g}")
    return sac, lam


def _euclidean_sample(space, h0, t):
    base = _base_line(space)
    B = geom.point_on(space, geom.perpendicular_at(space, base, space.origin), h0)
    p = geom.Point((B.coords[0] + t, B.coords[1]))
    foot, h = geom.foot_of_perpendicular(space, p, base)
    if h <= space.tol:
        return h, RIGHT
    down = geom.direction(space, p, foot)
    return h, geom.angle_between(space, geom.TangentDir(p, (-1.0, 0.0)), down)


def _base_pole_seen_from_b(space, h0):
    """Pole of the base line in the frame where B is the origin and the
    upper line runs along the first axis; A lies below B."""
    down = space.direction(-RIGHT)
    A = geom.exp_map(space, down, h0)
    base = geom.perpendicular_at(space, Line(space.origin, down), A)
    return geom.left_normal(space, base.dir).vec


def _curved_sample(space, pole, t):
    """Height and foot angle at P(t), measured in the frame centred at P.

    Poles transform linearly under isometries, so sliding the frame by -t
    along the upper line keeps every quantity at unit scale even where the
    model coordinates of P itself would be of size e^t.
    """
    g = geom.translation(space, -t)
    m = tuple(sum(g[i][j] * pole[j] for j in range(3)) for i in range(3))
    k, R = space.sign, space.radius
    # at the origin B(origin, m) = R * m[0]; the tangent plane is the (x1, x2) plane
    s = k * m[0]
    h = R * (math.asin(max(-1.0, min(1.0, s))) if k > 0 else math.asinh(s))
    # toward the base is against the pole on the side where B sits; that side
    # is fixed by t = 0 so the angle stays continuous if P reaches the base
    side = math.copysign(1.0, k * pole[0])
    return abs(h), math.atan2(abs(m[2]), side * m[1])


def profile_closed_form(space: SpaceForm, h0: float, t: float) -> float:
    """sin(h/R) = sin(h0/R) cos(t/R), sinh(h/R) = sinh(h0/R) cosh(t/R)."""
    R = space.radius
    if space.kind is Kind.SPHERICAL:
        return R * math.asin(math.sin(h0 / R) * math.cos(t / R))
    if space.kind is Kind.HYPERBOLIC:
        return R * math.asinh(math.sinh(h0 / R) * math.cosh(t / R))
    return h0


def default_t_grid(t0: float = 0.05, count: int = 8):
    """Geometric grid t0 * 2**k, k = 0..count-1."""
    return [t0 * 2**k for k in range(count)]


def perpendicular_profile(space: SpaceForm, h0: float, t_values) -> PerpProfile:
    """Heights h(t) of a line above a base line it leaves perpendicularly.

    The base line passes through A; B sits at height h0 on the
    perpendicular at A, and the upper line is perpendicular to AB at B.
    For each t the point P(t) at arc length t from B along the upper line
    drops a perpendicular of length h(t) to the base line, meeting the upper
    line at angle phi(t) (measured on the side facing back toward B).
    """
    _check_positive(h0)
    R = space.radius
    if space.kind is Kind.SPHERICAL:
        if h0 >= RIGHT * R:
            raise DomainError("spherical profiles need h0 < pi*R/2")
        if any(t < 0 or t > RIGHT * R for t in t_values):
            raise DomainError("spherical profiles are sampled on 0 <= t <= pi*R/2")
    ts = list(t_values)
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise DomainError("t values must be strictly increasing")
    pole = _base_pole_seen_from_b(space, h0) if space.curved else None
    samples = []
    worst = 0.0
    for t in ts:
        h, phi = _curved_sample(space, pole, t) if space.curved else _euclidean_sample(space, h0, t)
        samples.append(ProfileSample(t, h, phi))
        worst = max(worst, abs(h - profile_closed_form(space, h0, t)) / R)
    return PerpProfile(space, h0, tuple(samples), worst)


def erected_perpendicular_meets(space: SpaceForm, h0: float, t: float) -> geom.LinePairClass:
    """Classify the perpendicular erected at distance t on AE against BH.

    AE and BH are the two perpendiculars to a common segment AB of length
    ``h0`` (A on AE, B on BH).
    """
    ae = _base_line(space)
    B = geom.point_on(space, geom.perpendicular_at(space, ae, space.origin), h0)
    bh = geom.perpendicular_at(space, Line(space.origin, geom.direction(space, space.origin, B)), B)
    E = geom.point_on(space, ae, t)
    return geom.classify_line_pair(space, geom.perpendicular_at(space, ae, E), bh)


def threshold_closed_form(space: SpaceForm, h0: float) -> float:
    return space.radius * math.atanh(1.0 / math.cosh(h0 / space.radius))


def intersection_threshold(space: SpaceForm, h0: float, tol: float = 1e-12) -> float:
    """Distance t* beyond which the erected perpendiculars miss BH.

    Returns ``math.inf`` in the Euclidean plane and on the sphere, where
    every erected perpendicular meets BH.
    """
    _check_positive(h0)
    if space.kind is not Kind.HYPERBOLIC:
        return math.inf

    def meets(t):
        return erected_perpendicular_meets(space, h0, t).tag is PairTag.INTERSECTING

    lo, hi = 0.0, space.radius
    while meets(hi):
        lo, hi = hi, 2 * hi
        if hi > 1e3 * space.radius:
            raise NotApplicable("no threshold within the horizon")
    while hi - lo > tol * space.radius:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if meets(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def birectangular_profile(space: SpaceForm, base: float, left: float, right: float):
    """Birectangular quadrilateral CBDE with right angles at B and D.

    BD = ``base``, CB = ``left``, DE = ``right``; G is where CE meets the
    perpendicular bisector of BD (foot F). Returns (angle CGF, G, vertices).
    """
    _check_positive(base, left, right)
    line = _base_line(space)
    B = space.origin
    D = geom.point_on(space, line, base)
    C = geom.point_on(space, geom.perpendicular_at(space, line, B), left)
    E = geom.point_on(space, geom.perpendicular_at(space, line, D), right)
    F = geom.midpoint(space, B, D)
    bis = geom.perpendicular_at(space, line, F)
    pair = geom.classify_line_pair(space, geom.line_through(space, C, E), bis)
    if pair.tag is not PairTag.INTERSECTING:
        raise DomainError("CE does not cross the perpendicular bisector")
    G = pair.point
    return geom.angle_at(space, G, C, F), G, (C, B, D, E, F)
