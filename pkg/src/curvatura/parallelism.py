"""Angle of parallelism and equal-sided, equal-angled polygon chains."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from curvatura import geom
from curvatura import kernels as K
from curvatura.errors import ConstructionMismatch, DegenerateChain, DomainError, NotApplicable, OutOfRange
from curvatura.geom import Kind, Line, PairTag, Point, SpaceForm


# Beyond this height (in units of R) the model coordinates of G, of size
# e^p, leave no significant digits for an angle of size 2 e^-p.
MAX_HEIGHT = 18.0


def _fig2(space, p):
    """Base line through F = origin and the point G at height p above F."""
    base = Line(space.origin, space.direction(0.0))
    perp = geom.perpendicular_at(space, base, space.origin)
    return base, geom.point_on(space, perp, p), perp


def line_from_foot(space: SpaceForm, p: float, theta: float) -> Line:
    """Line through G making angle ``theta`` with GF, leaning toward +x."""
    if space.curved and p > MAX_HEIGHT * space.radius:
        raise OutOfRange(f"p must stay below {MAX_HEIGHT:g} R to be resolved in double precision")
    _, G, perp = _fig2(space, p)
    # the tangent of FG at G stays accurate even when G is far from F
    up = geom.line_direction_at(space, perp, G)
    down = geom.TangentDir(G, tuple(-x for x in up.vec))
    return Line(G, geom.rotate(space, down, theta))


def meets_base(space: SpaceForm, p: float, theta: float) -> bool:
    """Does the line through G at angle ``theta`` to GF cut the base line?"""
    base, _, _ = _fig2(space, p)
    return geom.classify_line_pair(space, line_from_foot(space, p, theta), base).tag is PairTag.INTERSECTING


def angle_of_parallelism(space: SpaceForm, p: float, iterations: int = 60) -> float:
    """Supremum of the angles at G of lines through G that meet the base line.

    Located by bisection on :func:`meets_base`. In the Euclidean plane this
    is pi/2 for every p; the sphere has no parallels and is rejected.
    """
    if p < 0:
        raise DomainError("p must be nonnegative")
    if space.kind is Kind.SPHERICAL:
        raise NotApplicable("every pair of great circles meets; no angle of parallelism")
    if space.kind is Kind.EUCLIDEAN or p == 0:
        return math.pi / 2
    if p > MAX_HEIGHT * space.radius:
        raise OutOfRange(f"p must stay below {MAX_HEIGHT:g} R to be resolved in double precision")
    lo, hi = 0.0, math.pi / 2
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if meets_base(space, p, mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def parallelism_closed_form(space: SpaceForm, p: float) -> float:
    return 2 * math.atan(math.exp(-p / space.radius))


def receding_angle(space: SpaceForm, p: float, x: float) -> float:
    """Angle AGF for the point A at distance ``x`` from F along the base."""
    base, G, _ = _fig2(space, p)
    return geom.angle_at(space, G, geom.point_on(space, base, x), space.origin)


class CenterTag(str, Enum):
    CIRCLE = "circle"
    HOROCYCLE = "horocycle"
    EQUIDISTANT = "equidistant"


@dataclass(frozen=True)
class ChainCenter:
    tag: CenterTag
    center: Point | None = None
    radius: float | None = None
    axis: Line | None = None
    offset: float | None = None


@dataclass(frozen=True)
class PolygonChain:
    space: SpaceForm
    s: float
    theta: float
    n: int
    vertices: tuple

    def sides(self):
        v = self.vertices
        return [geom.distance(self.space, v[i], v[i + 1]) for i in range(len(v) - 1)]

    def angles(self):
        v = self.vertices
        return [geom.angle_at(self.space, v[i], v[i - 1], v[i + 1]) for i in range(1, len(v) - 1)]


def chain_motion(space: SpaceForm, s: float, theta: float):
    """The isometry advancing the chain by one segment: turn by pi - theta, then move s."""
    return geom.compose(geom.translation(space, s), geom.rotation(space, math.pi - theta))


def build_chain(space: SpaceForm, s: float, theta: float, n: int, centered: bool = False) -> PolygonChain:
    """n segments of length s with interior angle theta at each junction.

    Vertex k is the image of the first vertex under the k-th power of the
    generating motion (:func:`chain_motion`). By default the first vertex is
    the origin and the first segment runs along the first axis. With
    ``centered`` the chain is placed symmetrically about the origin instead
    (middle vertex at the origin for even n, middle segment bisected by it
    for odd n). Hyperboloid coordinates grow like exp(distance/R), so long
    hyperbolic chains should be centered to keep their precision.
    """
    if not s > 0:
        raise DomainError("segment length must be positive")
    if not 0 < theta < math.pi:
        raise DomainError("theta must lie in (0, pi)")
    if n < 3:
        raise DomainError("a chain needs at least 3 segments")
    if space.kind is Kind.SPHERICAL and s >= math.pi * space.radius:
        raise DomainError("spherical segments must be shorter than pi*R")
    g = chain_motion(space, s, theta)
    back_steps = 0
    start = space.origin
    if centered:
        back_steps = n // 2
        if n % 2:
            shift = geom.translation(space, -s / 2)
            g = geom.compose(shift, geom.compose(g, geom.inverse(space, shift)))
            start = geom.apply(space, shift, start)
    vertices = [start]
    back = geom.inverse(space, g)
    for _ in range(back_steps):
        vertices.append(geom.apply(space, back, vertices[-1]))
    vertices.reverse()
    for _ in range(n - back_steps):
        vertices.append(geom.apply(space, g, vertices[-1]))
    return PolygonChain(space, s, theta, n, tuple(vertices))


def classify_chain_center(chain: PolygonChain, tol: float = 1e-9, verify: bool = True) -> ChainCenter:
    """Circle, horocycle or equidistant curve carrying the chain's vertices.

    Decided by the perpendicular bisectors of two consecutive segments:
    meeting gives a circle, a common perpendicular gives an equidistant
    curve about that axis, and asymptotic bisectors give a horocycle. All
    segments are congruent under the generating motion, so any consecutive
    pair would do; the one closest to the origin is used because model
    coordinates lose precision far out. For a chain built from the origin
    that is the first two segments.

    With ``verify`` every vertex is checked against the reported circle or
    curve and :class:`ConstructionMismatch` is raised beyond ``tol``.
    """
    space, v = chain.space, chain.vertices
    if abs(chain.theta - math.pi) <= space.tol:
        raise DegenerateChain("a straight chain has no center")
    i = 0
    if space.curved:
        i = min(range(len(v) - 2), key=lambda j: max(abs(x.coords[0]) for x in v[j : j + 3]))
    b1 = geom.perpendicular_bisector(space, v[i], v[i + 1])
    b2 = geom.perpendicular_bisector(space, v[i + 1], v[i + 2])
    pair = geom.classify_line_pair(space, b1, b2)
    if pair.tag is PairTag.INTERSECTING:
        radii = [geom.distance(space, pair.point, x) for x in v]
        if verify:
            _check_spread(radii, tol, "circle")
        return ChainCenter(CenterTag.CIRCLE, center=pair.point, radius=radii[0])
    if pair.tag is PairTag.COMMON_PERPENDICULAR:
        # the axis pole is the cross product of the bisector poles; working
        # from it directly stays accurate when the feet are far out or close
        # together
        w = K.cross(-1, geom._pole(space, b1), geom._pole(space, b2))
        scale = space.radius * math.sqrt(-K.form(-1, w, w))
        f = pair.foot1
        along = K.cross(-1, w, f.coords)
        axis = Line(f, geom.TangentDir(f, geom._tangent(space, f, tuple(-x for x in along))))
        offsets = [space.radius * math.asinh(abs(K.form(-1, w, x.coords)) / scale) for x in v]
        if verify:
            _check_spread(offsets, tol, "equidistant curve")
        return ChainCenter(CenterTag.EQUIDISTANT, axis=axis, offset=offsets[0])
    if pair.tag is PairTag.ASYMPTOTIC:
        return ChainCenter(CenterTag.HOROCYCLE)
    raise DegenerateChain("perpendicular bisectors coincide")


def _check_spread(values, tol, what):
    spread = max(values) - min(values)
    if spread > tol * max(1.0, max(values)):
        raise ConstructionMismatch(f"vertices are off the {what} by {spread:.3g}")


def critical_chain_side(space: SpaceForm, theta: float, n: int = 3, tol: float = 1e-10) -> float:
    """Side length separating circle chains from equidistant ones (hyperbolic).

    Bisection on the bisector classification of :func:`classify_chain_center`
    (vertex checks are skipped while bracketing, since trial sides can be long).
    """
    if space.kind is not Kind.HYPERBOLIC:
        raise NotApplicable("only hyperbolic chains change type with the side length")

    def circular(s):
        chain = build_chain(space, s, theta, n, centered=True)
        return classify_chain_center(chain, verify=False).tag is CenterTag.CIRCLE

    lo, hi = 0.0, space.radius
    while circular(hi):
        lo, hi = hi, 2 * hi
    while hi - lo > tol * space.radius:
        mid = 0.5 * (lo + hi)
        if circular(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def critical_chain_side_closed_form(space: SpaceForm, theta: float) -> float:
    """The chain motion is parabolic when cosh(s/R) = (3 + cos theta) / (1 - cos theta)."""
    return space.radius * math.acosh((3 + math.cos(theta)) / (1 - math.cos(theta)))
