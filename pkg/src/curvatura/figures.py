"""Figure constructions: each builder returns a populated :class:`Scene`."""

from __future__ import annotations

import math
import string

from curvatura import geom, parallelism, quad
from curvatura.errors import DomainError
from curvatura.geom import Kind, Line, PairTag, SpaceForm
from curvatura.render import Scene


def _num(params, key, default):
    value = params.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"parameter {key!r} must be a number")
    return float(value)


def _nums(params, key, default):
    value = params.get(key, default)
    if not isinstance(value, list) or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value):
        raise DomainError(f"parameter {key!r} must be a list of numbers")
    return [float(x) for x in value]


def _base(space):
    return Line(space.origin, space.direction(0.0))


def fig1(space: SpaceForm, params) -> Scene:
    """Right triangle ABC (right angle at A) and a line ED through C meeting AB at D."""
    unit = 0.5 if space.kind is Kind.SPHERICAL else 1.0  # keep the default on the visible hemisphere
    ab, ac, bd = _num(params, "AB", unit), _num(params, "AC", 0.8 * unit), _num(params, "BD", 0.8 * unit)
    sc = Scene(space, "Right triangle ABC cut by the line ED through C")
    A = space.origin
    base = _base(space)
    B = geom.point_on(space, base, ab)
    C = geom.exp_map(space, space.direction(math.pi / 2), ac)
    D = geom.point_on(space, base, ab + bd)
    E = geom.point_on(space, geom.line_through(space, D, C), geom.distance(space, D, C) + 0.5 * ac)
    for a, b in ((A, D), (A, C), (B, C), (D, E)):
        sc.segment(a, b)
    sc.right_angle(A, B, C)
    for p, name in ((A, "A"), (B, "B"), (C, "C"), (D, "D"), (E, "E")):
        sc.point(p, name)
    return sc


def fig2(space: SpaceForm, params) -> Scene:
    """Perpendicular FG of length p on the base line, lines through G meeting it, and the parallel."""
    if space.kind is not Kind.HYPERBOLIC and space.kind is not Kind.EUCLIDEAN:
        raise DomainError("the parallel construction needs a Euclidean or hyperbolic plane")
    p = _num(params, "p", 1.0)
    fractions = _nums(params, "fractions", [0.5, 0.8, 0.95])
    sc = Scene(space, "Angle of parallelism of the segment FG")
    base = _base(space)
    F = space.origin
    G = geom.point_on(space, geom.perpendicular_at(space, base, F), p)
    limit = parallelism.angle_of_parallelism(space, p)
    sc.line(base)
    sc.segment(F, G)
    sc.right_angle(F, G, geom.point_on(space, base, 1.0))
    for i, f in enumerate(fractions):
        line = parallelism.line_from_foot(space, p, f * limit)
        pair = geom.classify_line_pair(space, line, base)
        if pair.tag is PairTag.INTERSECTING:
            sc.segment(G, pair.point)
            sc.point(pair.point, f"A{i + 1}" if len(fractions) > 1 else "A")
    sc.line(parallelism.line_from_foot(space, p, limit), cls="line parallel")
    sc.point(F, "F")
    sc.point(G, "G")
    sc.point(geom.point_on(space, base, -1.0), "B")
    sc.point(geom.point_on(space, base, 2.5 if space.curved else 3.0), "D")
    return sc


def _labels(count):
    letters = string.ascii_uppercase
    return [letters[i] if i < 26 else f"P{i}" for i in range(count)]


def fig3(space: SpaceForm, params) -> Scene:
    """Chain of equal segments with equal angles and its circumcircle or axis."""
    s = _num(params, "s", 0.5 if space.kind is Kind.SPHERICAL else 1.0)
    theta = _num(params, "theta", 2 * math.pi / 3)
    n = int(_num(params, "n", 6))
    centered = bool(params.get("centered", space.kind is Kind.HYPERBOLIC))
    chain = parallelism.build_chain(space, s, theta, n, centered=centered)
    center = parallelism.classify_chain_center(chain)
    sc = Scene(space, f"Chain of {n} congruent segments: {center.tag.value}")
    v = chain.vertices
    for a, b in zip(v, v[1:]):
        sc.segment(a, b)
    if center.tag is parallelism.CenterTag.CIRCLE:
        sc.circle(center.center, center.radius, cls="circle")
        sc.point(center.center, "O", cls="vertex center")
    elif center.tag is parallelism.CenterTag.EQUIDISTANT:
        sc.line(center.axis, cls="axis")
    closes = geom.distance(space, v[0], v[-1]) <= 1e-9 * (space.radius if space.curved else 1.0)
    shown = v[:-1] if closes else v
    for p, name in zip(shown, _labels(len(shown))):
        sc.point(p, name)
    return sc


def fig4(space: SpaceForm, params) -> Scene:
    """Birectangular quadrilateral CBDE with the perpendicular bisector FG of BD."""
    base, left, right = _num(params, "base", 1.0), _num(params, "left", 0.5), _num(params, "right", 0.8)
    angle, G, (C, B, D, E, F) = quad.birectangular_profile(space, base, left, right)
    sc = Scene(space, f"Quadrilateral CBDE; angle CGF = {angle:.6f}")
    for a, b in ((C, B), (B, D), (D, E), (E, C), (F, G)):
        sc.segment(a, b)
    sc.right_angle(B, C, D)
    sc.right_angle(D, B, E)
    sc.right_angle(F, D, G)
    for p, name in ((C, "C"), (B, "B"), (D, "D"), (E, "E"), (F, "F"), (G, "G")):
        sc.point(p, name)
    return sc


def fig6(space: SpaceForm, params) -> Scene:
    """Saccheri quadrilateral cCDd folded along AB onto the Lambert quadrilateral ABCD."""
    base, leg = _num(params, "base", 1.0), _num(params, "leg", 0.3)
    sac, lam = quad.fold_lambert(space, base, leg)
    sc = Scene(space, f"Fold: summit {sac.summit:.6f} = 2 x {lam.c:.6f}")
    c, C, D, d = sac.P0, sac.P1, sac.Q1, sac.Q0
    B = geom.midpoint(space, c, C)
    A = geom.midpoint(space, d, D)
    for a, b in ((c, C), (C, D), (D, d), (d, c)):
        sc.segment(a, b)
    sc.segment(A, B, cls="segment fold")
    sc.right_angle(c, C, d)
    sc.right_angle(C, c, D)
    sc.right_angle(B, C, A)
    sc.right_angle(A, B, D)
    for p, name in ((c, "c"), (C, "C"), (D, "D"), (d, "d"), (A, "A"), (B, "B")):
        sc.point(p, name)
    return sc


def fig7(space: SpaceForm, params) -> Scene:
    """Perpendiculars erected on AE, meeting BH before the threshold and missing it after."""
    h0 = _num(params, "h0", 1.0)
    ts = _nums(params, "t", [0.4, 0.6, 0.7, 0.85, 1.0])
    sc = Scene(space, "Perpendiculars erected on AE against BH")
    ae = _base(space)
    A = space.origin
    B = geom.point_on(space, geom.perpendicular_at(space, ae, A), h0)
    bh = geom.perpendicular_at(space, Line(A, geom.direction(space, A, B)), B)
    sc.line(ae)
    sc.line(bh)
    sc.segment(A, B)
    sc.right_angle(A, B, geom.point_on(space, ae, 0.5))
    for t in ts:
        E = geom.point_on(space, ae, t)
        up = geom.perpendicular_at(space, ae, E)
        pair = geom.classify_line_pair(space, up, bh)
        if pair.tag is PairTag.INTERSECTING:
            sc.segment(E, pair.point)
            sc.point(pair.point, cls="vertex meet")
        else:
            sc.line(up, cls="line missing")
        sc.point(E)
    sc.point(A, "A")
    sc.point(B, "B")
    sc.point(geom.point_on(space, ae, max(ts) + 0.3), "E")
    sc.point(geom.point_on(space, bh, -(max(ts) + 0.3)), "H")
    return sc


def profile(space: SpaceForm, params) -> Scene:
    """Base line, the line leaving AB perpendicularly at B, and the dropped perpendiculars."""
    h0 = _num(params, "h0", 0.5 * (space.radius if space.curved else 1.0))
    R = space.radius if space.curved else 1.0
    steps = [k / 6 * math.pi / 2 for k in range(1, 7)] if space.kind is Kind.SPHERICAL else [0.25, 0.5, 0.75, 1.0, 1.25]
    default = [R * t for t in steps]
    ts = _nums(params, "t", default)
    prof = quad.perpendicular_profile(space, h0, ts)
    sc = Scene(space, "Perpendicular distances from a line to a base line")
    base = _base(space)
    A = space.origin
    B = geom.point_on(space, geom.perpendicular_at(space, base, A), h0)
    upper = geom.perpendicular_at(space, Line(A, geom.direction(space, A, B)), B)
    upper = Line(B, geom.TangentDir(B, tuple(-x for x in upper.dir.vec)))
    sc.line(base)
    sc.line(upper)
    sc.segment(A, B)
    for sample in prof.samples:
        P = geom.point_on(space, upper, sample.t)
        foot, _ = geom.foot_of_perpendicular(space, P, base)
        if sample.h > 1e-12:
            sc.segment(P, foot)
        sc.point(P)
    sc.point(A, "A")
    sc.point(B, "B")
    return sc


BUILDERS = {
    "fig1": fig1,
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig6": fig6,
    "fig7": fig7,
    "profile": profile,
}

DEFAULT_KIND = {"fig2": "hyperbolic", "fig7": "hyperbolic"}


def build(figure_id: str, space: SpaceForm, params) -> Scene:
    try:
        builder = BUILDERS[figure_id]
    except KeyError:
        raise DomainError(f"unknown figure {figure_id!r}") from None
    return builder(space, params)

