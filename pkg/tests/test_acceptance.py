"""Acceptance criteria 1-12.

Each criterion is a function returning ``(passed, detail)``. Under pytest
every criterion is one test, and a line per criterion is printed in the
terminal summary. Running this file directly prints the same lines.
"""

from __future__ import annotations

import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from curvatura import cli, duality, geom, kernels, parallelism as par, quad, sampling, trig
from curvatura.duality import IdentityId
from curvatura.errors import NoFourthVertex
from curvatura.geom import Kind, PairTag, SpaceForm
from curvatura.parallelism import CenterTag

SPACES = (SpaceForm.spherical(1.0), SpaceForm.euclidean(), SpaceForm.hyperbolic(1.0))
S, E, H = SPACES
SEED = 20241016
RIGHT = math.pi / 2
GOLDEN = Path(__file__).parent / "golden"

RESULTS: dict[int, tuple[bool, str]] = {}


def _triangles(space, label, count):
    rng = sampling.stream(SEED, label, space.kind.value)
    for _ in range(count):
        p, q, r = sampling.random_triangle(space, rng)
        yield trig.Triangle.from_vertices(space, p, q, r)


def law_of_cosines():
    worst = 0.0
    for space in SPACES:
        for tri in _triangles(space, "loc", 1000):
            for a, b, c, A in ((tri.a, tri.b, tri.c, tri.A), (tri.b, tri.c, tri.a, tri.B), (tri.c, tri.a, tri.b, tri.C)):
                worst = max(worst, trig.law_of_cosines_residual(space, a, b, c, A))
    return worst < 1e-9, f"worst relative residual {worst:.2e} over 3 x 1000 triangles"


def angle_sum_trichotomy():
    bad, total, flat = 0, 0, 0.0
    for space in SPACES:
        for tri in _triangles(space, "sum", 1000):
            total += 1
            x = tri.excess
            if space.sign == 0:
                # sign 0 is read as |excess| at rounding level
                flat = max(flat, abs(x))
                bad += abs(x) > 1e-12
            else:
                bad += math.copysign(1, x) != space.sign or x == 0
    return bad == 0, f"{bad} exceptions in {total} triangles; Euclidean |excess| <= {flat:.1e}"


def area_oracle():
    worst = 0.0
    for space in (S, H):
        for tri in _triangles(space, "area", 50):
            p, q, r = trig.construct_sas(space, tri.b, tri.c, tri.A)
            exact = trig.area_from_angles(space, tri.A, tri.B, tri.C)
            approx = kernels.triangle_area_quadrature(space.sign, space.radius, p.coords, q.coords, r.coords)
            worst = max(worst, abs(approx - exact) / exact)
    return worst < 1e-5, f"worst relative deviation {worst:.2e} over 2 x 50 triangles"


def imaginary_radius_transport():
    fails, worst = 0, 0.0
    for tri in _triangles(H, "transport", 1000):
        rep = duality.transport_check(IdentityId.LAW_OF_COSINES, (tri.a, tri.b, tri.c), (tri.A,), tol=1e-10)
        fails += not rep.passed
        worst = max(worst, rep.agreement, abs(rep.hyperbolic_residual))
    rng = sampling.stream(SEED, "area-transport")
    area_gap = 0.0
    for _ in range(1000):
        R = rng.uniform(0.1, 10.0)
        raw = [rng.random() for _ in range(3)]
        total = rng.uniform(0.0, math.pi) / sum(raw)
        sph, hyp = duality.area_transport(R, [x * total for x in raw])
        area_gap = max(area_gap, abs(sph - hyp) / max(abs(hyp), 1e-300))
    ok = fails == 0 and area_gap <= 4 * sys.float_info.epsilon
    return ok, f"{fails}/1000 transport failures (worst {worst:.1e}); area relative gap {area_gap:.1e}"


def median_ratio():
    worst_e, wrong = 0.0, 0
    for space in SPACES:
        rng = sampling.stream(SEED, "median", space.kind.value)
        top = 2.0 if space.kind is Kind.SPHERICAL else 3.0
        for _ in range(100):
            af, df = trig.equilateral_median_split(space, rng.uniform(0.01, top))
            if space.sign == 0:
                worst_e = max(worst_e, abs(df - af / 3))
            elif space.sign > 0:
                wrong += not df > af / 3
            else:
                wrong += not df < af / 3
    ok = wrong == 0 and worst_e < 1e-12
    return ok, f"{wrong} wrong-side cases; Euclidean |DF - AF/3| <= {worst_e:.1e}"


def quadrilateral_trichotomy():
    wrong, flat, fold = 0, 0.0, 0.0
    for space in SPACES:
        rng = sampling.stream(SEED, "lambert", space.kind.value)
        n = 0
        while n < 500:
            a, b = rng.uniform(0.05, 1.4), rng.uniform(0.05, 1.4)
            if space.sign < 0 and math.cosh(a) * math.tanh(b) >= 0.999:
                continue
            phi = quad.lambert_quadrilateral(space, a, b).phi
            n += 1
            if space.sign == 0:
                flat = max(flat, abs(phi - RIGHT))
                wrong += abs(phi - RIGHT) > 1e-12
            else:
                wrong += math.copysign(1, phi - RIGHT) != space.sign
            if n <= 100:
                base, leg = rng.uniform(0.1, 1.4), rng.uniform(0.05, 0.6)
                sac, lam = quad.fold_lambert(space, base, leg)
                fold = max(fold, abs(sac.summit - 2 * lam.c), abs(sac.summit_angle - lam.phi), abs(sac.midline - lam.b))
    ok = wrong == 0 and fold < 1e-10
    return ok, f"{wrong} sign mismatches in 1500; fold residual {fold:.1e}; Euclidean |phi - pi/2| <= {flat:.1e}"


def _strict(xs, up):
    return all((b > a) if up else (b < a) for a, b in zip(xs, xs[1:]))


def profiles():
    notes = []
    grid = [k * RIGHT / 24 for k in range(0, 24)]
    ok = True
    for h0 in (0.2, 0.5, 1.0, 1.4):
        prof = quad.perpendicular_profile(S, h0, grid)
        dec = [a - b for a, b in zip(prof.h, prof.h[1:])]
        end = quad.perpendicular_profile(S, h0, [RIGHT]).h[0]
        ok &= _strict(prof.h, False) and _strict(dec, True) and abs(end) < 1e-9
        ok &= all(p > RIGHT for p in prof.phi[1:]) and _strict(prof.phi[1:], True)
    notes.append("sphere decreasing, concave, zero at pi R/2")
    ts = [0.5 * k for k in range(81)]
    prof = quad.perpendicular_profile(H, 0.5, ts)
    past10 = next((t for t, h in zip(ts, prof.h) if h > 10), None)
    ok &= _strict(prof.h, True) and past10 is not None and past10 <= 40
    # h'' decays like e^-2t; convexity is checked where doubles can still see it
    near = quad.perpendicular_profile(H, 0.5, [0.25 * k for k in range(49)]).h
    second = [a - 2 * b + c for a, b, c in zip(near, near[1:], near[2:])]
    ok &= all(x > 0 for x in second)
    ok &= all(p < RIGHT for p in prof.phi[1:]) and _strict(prof.phi[1:], False)
    notes.append(f"hyperbolic h > 10 from t = {past10}")
    flat = quad.perpendicular_profile(E, 1.0, [0.5, 1, 2, 5, 10])
    spread = max(abs(h - 1.0) for h in flat.h)
    ok &= spread < 1e-12
    notes.append(f"Euclidean spread {spread:.1e}")
    return ok, "; ".join(notes)


def threshold():
    worst, flips = 0.0, True
    for h0 in (0.25, 0.5, 1.0, 2.0):
        t = quad.intersection_threshold(H, h0)
        worst = max(worst, abs(t - quad.threshold_closed_form(H, h0)))
        below = quad.erected_perpendicular_meets(H, h0, t - 5e-9).tag
        above = quad.erected_perpendicular_meets(H, h0, t + 5e-9).tag
        flips &= below is PairTag.INTERSECTING and above is not PairTag.INTERSECTING
    rng = sampling.stream(SEED, "threshold-lambert")
    mismatches = 0
    for _ in range(200):
        h0 = rng.uniform(0.1, 2.0)
        tstar = quad.threshold_closed_form(H, h0)
        t = tstar * rng.choice((rng.uniform(0.2, 0.999), rng.uniform(1.001, 2.0)))
        try:
            quad.lambert_quadrilateral(H, t, h0)
            missing = False
        except NoFourthVertex:
            missing = True
        meets = quad.erected_perpendicular_meets(H, h0, t).tag is PairTag.INTERSECTING
        mismatches += missing == meets
    ok = worst < 1e-8 and flips and mismatches == 0
    return ok, f"closed-form gap {worst:.1e}; flips within 1e-8: {flips}; {mismatches}/200 Lambert mismatches"


def angle_of_parallelism():
    zero = par.angle_of_parallelism(H, 0.0) == RIGHT
    grid = [0.1 * k for k in range(50)]
    values = [par.angle_of_parallelism(H, p) for p in grid]
    monotone = _strict(values, False)
    gap = max(abs(par.angle_of_parallelism(H, p) - 2 * math.atan(math.exp(-p))) for p in (0.1, 0.5, 1, 2, 5))
    ok = zero and monotone and gap < 1e-7
    return ok, f"Pi(0) exact: {zero}; strictly decreasing on 50 points: {monotone}; closed-form gap {gap:.1e}"


def canonical_unit():
    worst = 0.0
    for space, lo, hi in ((H, 1e-3, math.pi / 3 - 1e-3), (S, math.pi / 3 + 1e-3, math.pi - 1e-2)):
        for k in range(41):
            alpha = lo + (hi - lo) * k / 40
            back = trig.equilateral_angle(space, trig.equilateral_side_for_angle(space, alpha))
            worst = max(worst, abs(back - alpha))
    gauss = math.pi / 3 - math.radians(1e-4 / 3600)
    s = trig.equilateral_side_for_angle(H, gauss)
    delta = 3 * (math.pi / 3 - gauss)
    estimate = math.sqrt(4 * delta / math.sqrt(3))
    rel = abs(s - estimate) / estimate
    ok = worst < 1e-10 and rel < 0.01 and abs(delta - 1.4544e-9) < 1e-13
    return ok, f"round trip {worst:.1e}; Gauss side {s:.6e} vs estimate {estimate:.6e} ({rel:.1e} relative)"


def chains():
    rng = sampling.stream(SEED, "chains")
    worst_e = 0.0
    for _ in range(100):
        s, theta, n = rng.uniform(0.1, 2.0), rng.uniform(0.3, math.pi - 0.3), rng.randint(3, 10)
        chain = par.build_chain(E, s, theta, n)
        c = par.classify_chain_center(chain)
        radii = [geom.distance(E, c.center, v) for v in chain.vertices]
        worst_e = max(worst_e, max(radii) - min(radii))
    seen, spread, crit_gap = set(), 0.0, 0.0
    for theta in (1.2, 1.6, 2.0, 2.4, 2.8):
        crit = par.critical_chain_side(H, theta)
        crit_gap = max(crit_gap, abs(crit - par.critical_chain_side_closed_form(H, theta)))
        for factor in (0.5, 0.9, 1.1, 1.5, 2.0):
            chain = par.build_chain(H, factor * crit, theta, 4, centered=True)
            c = par.classify_chain_center(chain)
            seen.add(c.tag)
            expect = CenterTag.CIRCLE if factor < 1 else CenterTag.EQUIDISTANT
            if c.tag is not expect:
                seen.add("mismatch")
            if c.tag is CenterTag.EQUIDISTANT:
                offsets = [abs(geom.signed_distance(H, c.axis, v)) for v in chain.vertices]
                spread = max(spread, max(offsets) - min(offsets))
    ok = worst_e < 1e-9 and {CenterTag.CIRCLE, CenterTag.EQUIDISTANT} <= seen and "mismatch" not in seen and spread < 1e-9
    tags = sorted(t.value for t in seen if isinstance(t, CenterTag))
    return ok, (
        f"Euclidean radius spread {worst_e:.1e}; hyperbolic outcomes {tags}; "
        f"s_crit gap {crit_gap:.1e}; axis offset spread {spread:.1e}"
    )


def _cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "curvatura.cli", *argv], input=stdin, capture_output=True, text=True, encoding="utf-8"
    )


def command_line(tmp=None):
    requests = sorted(GOLDEN.glob("*.json"))
    identical = len(requests) == 12 and all(
        _cli("solve", str(r)).stdout == r.with_suffix(".out").read_text() for r in requests
    )
    full = _cli("check", "--suite", "all", "--samples", "100", "--seed", "1")
    svgs, bad = 0, []
    for fig in sorted(cli.figures.BUILDERS):
        for kind in ("spherical", "euclidean", "hyperbolic"):
            proc = _cli("figure", "--id", fig, "--params", json.dumps({"space": {"kind": kind}}), "--out", "-")
            if proc.returncode != 0:
                continue  # refused constructions emit no SVG
            svgs += 1
            try:
                ET.fromstring(proc.stdout)
            except ET.ParseError:
                bad.append(f"{fig}/{kind}")
    ok = identical and full.returncode == 0 and not bad and svgs > 0
    return ok, f"golden byte-identity: {identical}; check --suite all exit {full.returncode}; {svgs} SVGs, malformed {bad}"


CRITERIA = {
    1: ("law-of-cosines fidelity", law_of_cosines),
    2: ("angle-sum trichotomy", angle_sum_trichotomy),
    3: ("defect/excess area vs quadrature", area_oracle),
    4: ("imaginary-radius transport", imaginary_radius_transport),
    5: ("median ratio", median_ratio),
    6: ("quadrilateral trichotomy and fold", quadrilateral_trichotomy),
    7: ("perpendicular profiles", profiles),
    8: ("intersection threshold", threshold),
    9: ("angle of parallelism", angle_of_parallelism),
    10: ("canonical unit", canonical_unit),
    11: ("polygon chains", chains),
    12: ("command line", command_line),
}


def report_line(number):
    name, _ = CRITERIA[number]
    ok, detail = RESULTS[number]
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"criterion-{n:02d}")
def test_criterion(number):
    _, check = CRITERIA[number]
    RESULTS[number] = check()
    ok, detail = RESULTS[number]
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number in sorted(CRITERIA):
        RESULTS[number] = CRITERIA[number][1]()
        failed += not RESULTS[number][0]
        print(report_line(number), flush=True)
    sys.exit(1 if failed else 0)
