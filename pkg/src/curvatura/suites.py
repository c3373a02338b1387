"""Named property suites run by ``curvatura check``.

A suite is a function ``(space, rng, samples, tol) -> Tally`` registered for
the spaces where its statement is meaningful. Every (suite, space) pair
draws from its own random stream derived from the seed and the pair's
labels, so a report depends only on the configuration and never on the
order or parallelism of execution.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from curvatura import duality, geom, parallelism, quad, sampling, trig
from curvatura.errors import (
    AreaNotDetermined,
    ConstructionMismatch,
    GeometryError,
    NoCanonicalUnit,
    NoFourthVertex,
    NotApplicable,
    UnknownSuite,
)
from curvatura.geom import Kind, Line, PairTag, SpaceForm
from curvatura.kernels import triangle_area_quadrature

RIGHT = math.pi / 2
S, E, H = "spherical", "euclidean", "hyperbolic"


def _num(x):
    if isinstance(x, float) and not math.isfinite(x):
        return repr(x)
    return x


@dataclass
class Tally:
    """Running result of one suite in one space."""

    suite: str
    space: str
    samples: int = 0
    failures: int = 0
    worst: float = 0.0
    witness: dict | None = None
    _failed_witness: bool = field(default=False, repr=False)

    def check(self, ok: bool, residual: float = 0.0, **witness):
        """Record one verdict; the witness is the first failure, else the worst case."""
        residual = abs(residual) if math.isfinite(residual) else math.inf
        if not ok:
            self.failures += 1
            if not self._failed_witness:
                self.witness = {k: _num(v) for k, v in witness.items()}
                self._failed_witness = True
        if residual > self.worst or self.witness is None:
            self.worst = max(self.worst, residual)
            if not self._failed_witness:
                self.witness = {k: _num(v) for k, v in witness.items()}

    def sample(self):
        self.samples += 1

    def as_dict(self):
        return {
            "id": self.suite,
            "space": self.space,
            "samples": self.samples,
            "failures": self.failures,
            "worst_residual": _num(self.worst),
            "witness": self.witness,
        }


@dataclass(frozen=True)
class Suite:
    id: str
    spaces: tuple
    run: object
    summary: str
    cost: int = 1  # samples are divided by this for expensive suites

    def count(self, samples):
        return max(1, samples // self.cost)


SUITES: dict[str, Suite] = {}


def suite(id, spaces, summary, cost=1):
    def register(fn):
        SUITES[id] = Suite(id, tuple(spaces), fn, summary, cost)
        return fn

    return register


def _t(tol, default):
    return default if tol is None else tol


# ---------------------------------------------------------------------------
# model primitives


@suite("G-tri", (S, E, H), "triangle inequality for the model distance")
def _triangle_inequality(space, rng, n, tol, t):
    for _ in range(n):
        p, q, r = (sampling.random_point(space, rng) for _ in range(3))
        d = geom.distance
        slack = d(space, p, r) - d(space, p, q) - d(space, q, r)
        t.sample()
        t.check(slack <= 1e-12, max(0.0, slack), p=p.coords, q=q.coords, r=r.coords)


@suite("G-iso", (S, E, H), "distances and angles are invariant under model isometries")
def _isometry_invariance(space, rng, n, tol, t):
    lim = _t(tol, 1e-10)
    for _ in range(n):
        p, q, r = sampling.random_triangle(space, rng)
        m = sampling.random_isometry(space, rng)
        mp, mq, mr = (geom.apply(space, m, x) for x in (p, q, r))
        res = max(
            abs(geom.distance(space, mp, mq) - geom.distance(space, p, q)),
            abs(geom.angle_at(space, mp, mq, mr) - geom.angle_at(space, p, q, r)),
        )
        t.sample()
        t.check(res < lim, res, p=p.coords, q=q.coords, r=r.coords)


@suite("G-foot", (S, E, H), "perpendicular foot inverts the exponential map")
def _foot_round_trip(space, rng, n, tol, t):
    lim = _t(tol, 1e-9)
    scale = space.radius if space.curved else 1.0
    for _ in range(n):
        line = sampling.random_line(space, rng)
        q = geom.point_on(space, line, rng.uniform(-1.0, 1.0) * scale)
        h = rng.uniform(0.01, 1.3 if space.kind is Kind.SPHERICAL else 2.0) * scale
        up = geom.perpendicular_at(space, line, q)
        p = geom.exp_map(space, up.dir, h)
        foot, dist = geom.foot_of_perpendicular(space, p, line)
        res = max(geom.distance(space, foot, q), abs(dist - h)) / scale
        t.sample()
        t.check(res < lim, res, q=q.coords, h=h)


@suite("G-pairs", (S, E, H), "line-pair classification is consistent with each model")
def _pair_trichotomy(space, rng, n, tol, t):
    lim = _t(tol, 1e-9)
    for _ in range(n):
        l1, l2 = sampling.random_line(space, rng), sampling.random_line(space, rng)
        pair = geom.classify_line_pair(space, l1, l2)
        ok, res = True, 0.0
        if space.kind is Kind.SPHERICAL:
            ok = pair.tag in (PairTag.INTERSECTING, PairTag.COINCIDENT)
        elif space.kind is Kind.EUCLIDEAN:
            ok = pair.tag is not PairTag.ASYMPTOTIC
        if pair.tag is PairTag.INTERSECTING:
            res = max(abs(geom.signed_distance(space, l, pair.point)) for l in (l1, l2))
        elif pair.tag is PairTag.COMMON_PERPENDICULAR and space.curved:
            res = max(
                abs(geom.signed_distance(space, l1, pair.foot1)),
                abs(geom.signed_distance(space, l2, pair.foot2)),
                abs(geom.angle_between(space, geom.direction(space, pair.foot1, pair.foot2),
                                       geom.line_direction_at(space, l1, pair.foot1)) - RIGHT),
            )
        t.sample()
        t.check(ok and res < lim, res, tag=pair.tag.value)


# ---------------------------------------------------------------------------
# triangles


@suite("S13", (E, H), "exterior-angle bounds for a right triangle cut by a line through C")
def _s13(space, rng, n, tol, t):
    for _ in range(n):
        b, c, extra = rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0), rng.uniform(0.05, 2.0)
        A = space.origin
        ab = Line(A, space.direction(0.0))
        B = geom.point_on(space, ab, b)
        C = geom.exp_map(space, space.direction(RIGHT), c)
        D = geom.point_on(space, ab, b + extra)
        dc = geom.line_through(space, D, C)
        E_ = geom.point_on(space, dc, geom.distance(space, D, C) + 1.0)
        acd = geom.angle_at(space, C, A, D)
        mid = geom.angle_at(space, C, A, B) + geom.angle_at(space, B, A, C)
        ace = geom.angle_at(space, C, A, E_)
        margin = min(mid - acd, ace - mid)
        t.sample()
        t.check(margin > 1e-9, max(0.0, -margin), AB=b, AC=c, BD=extra, ACD=acd, middle=mid, ACE=ace)


def _random_radius(space, rng):
    if not space.curved:
        return space
    return SpaceForm(space.kind, radius=rng.choice((0.5, 1.0, 2.0, 3.0)))


@suite("LOC", (S, E, H), "first law of cosines on model-measured triangles")
def _law_of_cosines(space, rng, n, tol, t):
    lim = _t(tol, 1e-9)
    for _ in range(n):
        sp = _random_radius(space, rng)
        tri = trig.Triangle.from_vertices(sp, *sampling.random_triangle(sp, rng))
        sides = (tri.a, tri.b, tri.c)
        angles = (tri.A, tri.B, tri.C)
        res = max(
            trig.law_of_cosines_residual(sp, sides[i], sides[i - 2], sides[i - 1], angles[i])
            for i in range(3)
        )
        t.sample()
        t.check(res < lim, res, radius=sp.radius, sides=sides, angles=angles)


@suite("S73-74", (S, E, H), "angle-sum sign follows the curvature sign; curved sums vary with size")
def _angle_sum(space, rng, n, tol, t):
    sign = space.sign
    for _ in range(n):
        tri = trig.Triangle.from_vertices(space, *sampling.random_triangle(space, rng))
        ex = tri.excess
        got = 0 if abs(ex) <= 1e-9 else (1 if ex > 0 else -1)
        b, c, A = rng.uniform(0.3, 1.2), rng.uniform(0.3, 1.2), rng.uniform(0.3, 2.5)
        big = trig.Triangle.from_vertices(space, *trig.construct_sas(space, b, c, A))
        small = trig.Triangle.from_vertices(space, *trig.construct_sas(space, b / 2, c / 2, A))
        gap = abs(big.angle_sum - small.angle_sum)
        varies = gap > 1e-6 if space.curved else gap < 1e-9
        t.sample()
        t.check(got == sign and varies, gap if not space.curved else 0.0,
                excess=ex, sides=(tri.a, tri.b, tri.c), sum_gap=gap)


def _split(space, p, q, r, frac):
    m = geom.point_on(space, geom.line_through(space, q, r), frac * geom.distance(space, q, r))
    return m


@suite("S81-82", (S, E, H), "area from angles is additive and matches integrated area")
def _defect_area(space, rng, n, tol, t):
    lim_add = _t(tol, 1e-10)
    lim_oracle = 1e-5
    R2 = space.radius**2
    for _ in range(n):
        p, q, r = sampling.random_triangle(space, rng, min_angle=0.05)
        whole = trig.Triangle.from_vertices(space, p, q, r)
        t.sample()
        if not space.curved:
            try:
                trig.area_from_angles(space, whole.A, whole.B, whole.C)
                t.check(False, 0.0, note="Euclidean angles returned an area")
            except AreaNotDetermined:
                t.check(True)
            continue
        m = _split(space, p, q, r, rng.uniform(0.2, 0.8))
        left = trig.Triangle.from_vertices(space, p, q, m)
        right = trig.Triangle.from_vertices(space, p, m, r)
        add = abs(left.excess + right.excess - whole.excess)
        area = abs(whole.excess) * R2
        oracle = triangle_area_quadrature(space.sign, space.radius, p.coords, q.coords, r.coords)
        rel = abs(oracle - area) / area
        t.check(add < lim_add and rel < lim_oracle, max(add, rel), additivity=add, oracle_rel=rel,
                area=area, oracle=oracle)


@suite("S80", (S, E, H), "equilateral angle and side determine each other")
def _canonical_unit(space, rng, n, tol, t):
    lim = _t(tol, 1e-10)
    if not space.curved:
        t.sample()
        try:
            trig.equilateral_side_for_angle(space, math.pi / 3)
            t.check(False, note="Euclidean space produced a canonical unit")
        except NoCanonicalUnit:
            t.check(True)
        return
    third = math.pi / 3
    lo, hi = (third + 1e-3, math.pi - 1e-3) if space.kind is Kind.SPHERICAL else (1e-3, third - 1e-6)
    for _ in range(n):
        alpha = rng.uniform(lo, hi)
        s = trig.equilateral_side_for_angle(space, alpha)
        res = abs(trig.equilateral_angle(space, s) - alpha)
        t.sample()
        t.check(res < lim, res, alpha=alpha, side=s)
    if space.kind is Kind.HYPERBOLIC:
        deficit = math.radians(1e-4 / 3600)
        delta = 3 * deficit  # total angle defect of the triangle
        s = trig.equilateral_side_for_angle(space, third - deficit)
        est = math.sqrt(4 * delta / math.sqrt(3)) * space.radius
        rel = abs(s - est) / est
        t.sample()
        t.check(rel < 0.01, rel, side=s, estimate=est)


@suite("S76-77", (S, E, H), "median split of an equilateral triangle against one third")
def _median_ratio(space, rng, n, tol, t):
    top = {Kind.SPHERICAL: 2.0, Kind.EUCLIDEAN: 3.0, Kind.HYPERBOLIC: 4.0}[space.kind]
    for _ in range(n):
        s = rng.uniform(0.05, top)
        af, df = trig.equilateral_median_split(space, s)
        gap = df - af / 3
        if space.kind is Kind.HYPERBOLIC:
            ok = gap < 0
        elif space.kind is Kind.SPHERICAL:
            ok = gap > 0
        else:
            ok = abs(gap) < _t(tol, 1e-12)
        t.sample()
        t.check(ok, gap if not space.curved else 0.0, side=s, AF=af, DF=df)


# ---------------------------------------------------------------------------
# quadrilaterals and profiles


def _lambert_sample(space, rng):
    top = 1.4 if space.kind is Kind.SPHERICAL else 2.0
    while True:
        a, b = rng.uniform(0.05, top), rng.uniform(0.05, top)
        try:
            return quad.lambert_quadrilateral(space, a, b)
        except NoFourthVertex:
            continue


def _sign(x, eps=1e-9):
    return 0 if abs(x) <= eps else (1 if x > 0 else -1)


@suite("S39", (S, E, H), "fourth Lambert angle and Saccheri summit angles follow the curvature sign")
def _hypotheses(space, rng, n, tol, t):
    lim = _t(tol, 1e-9)
    for _ in range(n):
        lam = _lambert_sample(space, rng)
        right = max(abs(x - RIGHT) for x in lam.right_angles())
        top = 1.4 if space.kind is Kind.SPHERICAL else 2.0
        sac = quad.saccheri_quadrilateral(space, rng.uniform(0.05, top), rng.uniform(0.05, top))
        equal = abs(sac.summit_angles[0] - sac.summit_angles[1])
        ok = (
            _sign(lam.phi - RIGHT) == space.sign
            and _sign(sac.summit_angle - RIGHT) == space.sign
            and right < lim
            and equal < lim
        )
        t.sample()
        t.check(ok, max(right, equal), a=lam.a, b=lam.b, phi=lam.phi, summit_angle=sac.summit_angle)


@suite("S66-67", (S, E, H), "Lambert sides next to the fourth angle against the opposite sides")
def _side_comparison(space, rng, n, tol, t):
    for _ in range(n):
        lam = _lambert_sample(space, rng)
        db, ca = lam.d - lam.b, lam.c - lam.a
        if space.kind is Kind.EUCLIDEAN:
            ok = abs(db) < 1e-9 and abs(ca) < 1e-9
        else:
            ok = _sign(db, 0) == -space.sign and _sign(ca, 0) == -space.sign
        t.sample()
        t.check(ok, 0.0 if space.curved else max(abs(db), abs(ca)), a=lam.a, b=lam.b, c=lam.c, d=lam.d)


@suite("fold", (S, E, H), "Saccheri quadrilateral folds onto a Lambert quadrilateral")
def _fold(space, rng, n, tol, t):
    lim = _t(tol, 1e-10)
    top = 1.4 if space.kind is Kind.SPHERICAL else 2.0
    for _ in range(n):
        base, leg = rng.uniform(0.05, top), rng.uniform(0.05, top)
        t.sample()
        try:
            sac, lam = quad.fold_lambert(space, base, leg, tol=lim)
        except ConstructionMismatch as exc:
            t.check(False, math.inf, base=base, leg=leg, error=str(exc))
            continue
        res = max(abs(sac.summit - 2 * lam.c), abs(sac.summit_angle - lam.phi), abs(lam.d - leg))
        t.check(True, res, base=base, leg=leg)


@suite("S23", (S, E, H), "birectangular quadrilateral: shorter left side iff acute angle at the bisector")
def _birectangular(space, rng, n, tol, t):
    top = 1.3 if space.kind is Kind.SPHERICAL else 2.0
    for _ in range(n):
        base = rng.uniform(0.1, top)
        left, right = rng.uniform(0.05, top), rng.uniform(0.05, top)
        if abs(left - right) < 0.01:
            right = left + 0.01 if left + 0.01 < top else left - 0.01
        angle, _, _ = quad.birectangular_profile(space, base, left, right)
        acute = angle < RIGHT - 1e-9
        obtuse = angle > RIGHT + 1e-9
        ok = acute if left < right else obtuse
        t.sample()
        t.check(ok, 0.0, base=base, CB=left, DE=right, CGF=angle)


def _strictly(xs, increasing=True):
    pairs = list(zip(xs, xs[1:]))
    return all((b > a) if increasing else (b < a) for a, b in pairs)


@suite("S55-57", (S,), "spherical profile decreases more than linearly")
def _sphere_profile(space, rng, n, tol, t):
    lim = _t(tol, 1e-9)
    R = space.radius
    grid = [k * RIGHT * R / 12 for k in range(1, 12)]
    for _ in range(n):
        h0 = rng.uniform(0.1, 1.4) * R
        prof = quad.perpendicular_profile(space, h0, [0.0, *grid])
        h = prof.h
        dec = [a - b for a, b in zip(h, h[1:])]
        ok = _strictly(h, False) and _strictly(dec, True) and prof.closed_form_residual < lim
        t.sample()
        t.check(ok, prof.closed_form_residual, h0=h0)


@suite("S58-60", (S,), "spherical foot angles grow more obtuse")
def _sphere_angles(space, rng, n, tol, t):
    R = space.radius
    grid = [k * RIGHT * R / 12 for k in range(1, 12)]
    for _ in range(n):
        h0 = rng.uniform(0.1, 1.4) * R
        phi = quad.perpendicular_profile(space, h0, grid).phi
        ok = _strictly(phi, True) and min(phi) > RIGHT
        t.sample()
        t.check(ok, 0.0, h0=h0, phi=phi)


@suite("S64", (S,), "spherical profile reaches the base line at a quarter circle")
def _sphere_meets(space, rng, n, tol, t):
    lim = _t(tol, 1e-9)
    R = space.radius
    for _ in range(n):
        h0 = rng.uniform(0.1, 1.4) * R
        h = quad.perpendicular_profile(space, h0, [RIGHT * R]).h[0]
        t.sample()
        t.check(abs(h) < lim * R, h, h0=h0)


@suite("S68-70", (H,), "hyperbolic profile grows more than linearly and without bound")
def _hyper_profile(space, rng, n, tol, t):
    lim = _t(tol, 1e-9)
    R = space.radius
    grid = [0.0, *(0.25 * k * R for k in range(1, 17))]
    for _ in range(n):
        h0 = rng.uniform(0.1, 2.0) * R
        prof = quad.perpendicular_profile(space, h0, grid)
        h = prof.h
        d1 = [b - a for a, b in zip(h, h[1:])]
        ok = _strictly(h, True) and _strictly(d1, True) and prof.closed_form_residual < lim
        t.sample()
        t.check(ok, prof.closed_form_residual, h0=h0)
    # unbounded growth: h exceeds 10 somewhere on t <= 40 for h0 = 0.5
    tv = 1.0
    reached = None
    while tv <= 40.0 and reached is None:
        h = quad.perpendicular_profile(space, 0.5 * R, [tv * R]).h[0]
        if h > 10.0 * R:
            reached = tv
        tv += 1.0
    t.sample()
    t.check(reached is not None, 0.0, h0=0.5, reached_at=reached)


@suite("S69", (H,), "hyperbolic foot angles grow more acute")
def _hyper_angles(space, rng, n, tol, t):
    grid = [0.25 * k * space.radius for k in range(1, 17)]
    for _ in range(n):
        h0 = rng.uniform(0.1, 2.0) * space.radius
        phi = quad.perpendicular_profile(space, h0, grid).phi
        ok = _strictly(phi, False) and max(phi) < RIGHT
        t.sample()
        t.check(ok, 0.0, h0=h0, phi=phi)


@suite("E-profile", (E,), "Euclidean profile is constant")
def _flat_profile(space, rng, n, tol, t):
    lim = _t(tol, 1e-12)
    for _ in range(n):
        h0 = rng.uniform(0.1, 3.0)
        prof = quad.perpendicular_profile(space, h0, quad.default_t_grid())
        res = max(max(abs(x - h0) for x in prof.h), max(abs(x - RIGHT) for x in prof.phi))
        t.sample()
        t.check(res < lim, res, h0=h0)


@suite("S72", (S, E, H), "erected perpendiculars stop meeting exactly where Lambert closing fails", cost=5)
def _threshold(space, rng, n, tol, t):
    lim = _t(tol, 1e-8)
    for _ in range(n):
        top = 1.4 if space.kind is Kind.SPHERICAL else 2.0
        a, b = rng.uniform(0.05, top), rng.uniform(0.05, top)
        ts = quad.intersection_threshold(space, a)
        try:
            quad.lambert_quadrilateral(space, a, b)
            failed = False
        except NoFourthVertex:
            failed = True
        t.sample()
        if space.kind is not Kind.HYPERBOLIC:
            t.check(ts == math.inf and not failed, 0.0, a=a, b=b)
            continue
        res = abs(ts - quad.threshold_closed_form(space, a)) / space.radius
        consistent = failed == (b >= ts) or abs(b - ts) < 1e-8
        t.check(consistent and res < lim, res, a=a, b=b, threshold=ts, no_fourth_vertex=failed)


# ---------------------------------------------------------------------------
# parallels and chains


@suite("S16", (S, E, H), "angle of parallelism: limit of meeting angles, decreasing, consistent with the threshold", cost=5)
def _parallelism(space, rng, n, tol, t):
    if space.kind is Kind.SPHERICAL:
        t.sample()
        try:
            parallelism.angle_of_parallelism(space, 1.0)
            t.check(False, note="sphere produced an angle of parallelism")
        except NotApplicable:
            t.check(True)
        return
    if space.kind is Kind.EUCLIDEAN:
        for _ in range(n):
            p = rng.uniform(0.0, 5.0)
            t.sample()
            t.check(parallelism.angle_of_parallelism(space, p) == RIGHT, 0.0, p=p)
        return
    lim = _t(tol, 1e-7)
    ps = sorted(rng.uniform(0.01, 5.0) for _ in range(n))
    values = []
    for p in ps:
        v = parallelism.angle_of_parallelism(space, p)
        values.append(v)
        res = abs(v - parallelism.parallelism_closed_form(space, p))
        t.sample()
        t.check(res < lim, res, p=p, angle=v)
    t.sample()
    t.check(_strictly(values, False) and parallelism.angle_of_parallelism(space, 0.0) == RIGHT, 0.0)
    for _ in range(max(1, n // 4)):
        h0 = rng.uniform(0.1, 3.0) * space.radius
        ts = quad.intersection_threshold(space, h0)
        res = abs(math.tanh(ts / space.radius) * math.cosh(h0 / space.radius) - 1.0)
        t.sample()
        t.check(res < 1e-8, res, h0=h0, threshold=ts)
    limit = parallelism.angle_of_parallelism(space, 1.0)
    recede = [parallelism.receding_angle(space, 1.0, 2.0**k) for k in range(7)]
    gap = limit - recede[-1]
    t.sample()
    rising = all(b >= a for a, b in zip(recede, recede[1:]))
    t.check(rising and -1e-12 <= gap < 1e-3, gap, receding=recede, limit=limit)


@suite("S15-chain", (S, E, H), "equal-sided equal-angled chains: concyclic, or not, by curvature", cost=5)
def _chains(space, rng, n, tol, t):
    lim = _t(tol, 1e-9)
    if space.kind is not Kind.HYPERBOLIC:
        top = 3.0 if space.kind is Kind.EUCLIDEAN else 1.5
        for _ in range(n):
            s, theta = rng.uniform(0.1, top), rng.uniform(0.2, math.pi - 0.2)
            size = rng.randint(3, 12)
            chain = parallelism.build_chain(space, s, theta, size)
            t.sample()
            try:
                c = parallelism.classify_chain_center(chain, tol=lim)
                ok = c.tag is parallelism.CenterTag.CIRCLE
            except ConstructionMismatch:
                ok = False
            t.check(ok, 0.0, s=s, theta=theta, n=size)
        return
    for _ in range(n):
        theta = rng.uniform(math.pi / 3, 5 * math.pi / 6)
        crit = parallelism.critical_chain_side(space, theta)
        res = abs(crit - parallelism.critical_chain_side_closed_form(space, theta)) / space.radius
        tags = []
        mismatch = False
        for f in (0.25, 0.5, 0.75, 0.9, 1.1, 1.5, 2.0):
            chain = parallelism.build_chain(space, f * crit, theta, 4, centered=True)
            try:
                tags.append(parallelism.classify_chain_center(chain, tol=lim).tag)
            except ConstructionMismatch:
                mismatch = True
                tags.append(None)
        circle = parallelism.CenterTag.CIRCLE
        equi = parallelism.CenterTag.EQUIDISTANT
        ok = not mismatch and tags == [circle] * 4 + [equi] * 3 and res < 1e-8
        t.sample()
        t.check(ok, res, theta=theta, s_crit=crit, tags=[x.value if x else None for x in tags])


# ---------------------------------------------------------------------------
# transport


@suite("S82-transport", (H,), "spherical identities at imaginary sides reproduce hyperbolic ones")
def _transport(space, rng, n, tol, t):
    lim = _t(tol, 1e-10)
    R = space.radius
    for _ in range(n):
        tri = trig.Triangle.from_vertices(space, *sampling.random_triangle(space, rng))
        sides = [x / R for x in (tri.a, tri.b, tri.c)]
        angles = (tri.A, tri.B, tri.C)
        worst = 0.0
        ok = True
        for i in range(3):
            rot = (sides[i], sides[i - 2], sides[i - 1])
            rep = duality.transport_check("LawOfCosines", rot, (angles[i],), tol=lim)
            ok &= rep.passed
            once, twice = duality.transport_twice("LawOfCosines", rot, (angles[i],))
            inv = abs(once - twice)
            ok &= inv < 1e-13
            worst = max(worst, rep.agreement, abs(rep.hyperbolic_residual), inv)
        # solver consistency: hyperbolic SAS side equals the spherical law at imaginary sides
        b, c, A = sides[1], sides[2], angles[0]
        a_h = trig.side_from_sas(space, b * R, c * R, A) / R
        z = cmath.cos(1j * b) * cmath.cos(1j * c) + cmath.sin(1j * b) * cmath.sin(1j * c) * math.cos(A)
        solver = abs(z - math.cosh(a_h)) / (math.cosh(b) * math.cosh(c))
        ok &= solver < lim
        alpha = [rng.uniform(0.0, 1.0) for _ in range(3)]
        total = sum(alpha)
        alpha = [x * rng.uniform(0.0, math.pi) / total for x in alpha] if total else alpha
        sph, hyp = duality.area_transport(R, alpha)
        area_gap = abs(sph - hyp)
        ok &= area_gap <= 4 * math.ulp(max(abs(hyp), 1.0))
        t.sample()
        t.check(ok, max(worst, solver), sides=sides, angles=angles, area_gap=area_gap)


# ---------------------------------------------------------------------------
# runner


@dataclass(frozen=True)
class CheckConfig:
    suites: tuple = ("all",)
    samples: int = 100
    seed: int = 0
    tol: float | None = None
    spaces: tuple = (S, E, H)
    jobs: int = 1


def resolve(names):
    if not names or "all" in names:
        return list(SUITES)
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise UnknownSuite(f"unknown suite: {', '.join(unknown)}")
    return list(dict.fromkeys(names))


def run_one(suite_id: str, space_name: str, samples: int, seed: int, tol) -> dict:
    entry = SUITES[suite_id]
    space = sampling.SPACES[space_name]()
    tally = Tally(suite_id, space_name)
    rng = sampling.stream(seed, suite_id, space_name)
    try:
        entry.run(space, rng, entry.count(samples), tol, tally)
    except GeometryError as exc:
        tally.failures += 1
        tally.witness = {"error": type(exc).__name__, "detail": str(exc)}
    return tally.as_dict()


def run_checks(config: CheckConfig) -> dict:
    if config.samples < 1:
        raise ValueError("samples must be at least 1")
    jobs = [
        (sid, sp)
        for sid in resolve(config.suites)
        for sp in SUITES[sid].spaces
        if sp in config.spaces
    ]
    args = [(sid, sp, config.samples, config.seed, config.tol) for sid, sp in jobs]
    if config.jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(run_one, *zip(*args)))
    else:
        results = [run_one(*a) for a in args]
    return {
        "seed": config.seed,
        "samples": config.samples,
        "tol": config.tol,
        "results": results,
        "failures": sum(r["failures"] for r in results),
    }
