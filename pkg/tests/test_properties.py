"""Property-based checks of the geometric invariants."""

import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from curvatura import duality, geom, kernels, parallelism as par, quad, trig
from curvatura.duality import IdentityId
from curvatura.geom import Kind

from conftest import E, H1, S1

SPACES = st.sampled_from([S1, E, H1])
angles = st.floats(0.05, math.pi - 0.05)


def lengths(space, lo=0.05):
    top = 1.4 if space.kind is Kind.SPHERICAL else 3.0
    return st.floats(lo, top)


@st.composite
def sas(draw, spaces=SPACES):
    space = draw(spaces)
    b, c = draw(lengths(space)), draw(lengths(space))
    A = draw(angles)
    return space, b, c, A


@given(sas())
def test_angle_sum_sign_matches_curvature(args):
    space, b, c, A = args
    tri = trig.Triangle.from_vertices(space, *trig.construct_sas(space, b, c, A))
    if space.sign == 0:
        assert abs(tri.excess) < 1e-12
    else:
        assume(abs(tri.excess) > 1e-13)
        assert math.copysign(1, tri.excess) == space.sign


@given(sas())
def test_law_of_cosines_on_constructed_triangles(args):
    space, b, c, A = args
    tri = trig.Triangle.from_vertices(space, *trig.construct_sas(space, b, c, A))
    assert trig.law_of_cosines_residual(space, tri.a, tri.b, tri.c, tri.A) < 1e-9


@given(sas(), st.floats(-math.pi, math.pi), st.floats(0, 2))
def test_isometries_preserve_triangles(args, turn, shift):
    space, b, c, A = args
    g = geom.compose(geom.rotation(space, turn), geom.translation(space, shift))
    p, q, r = trig.construct_sas(space, b, c, A)
    p2, q2, r2 = (geom.apply(space, g, x) for x in (p, q, r))
    assert geom.distance(space, q2, r2) == pytest.approx(geom.distance(space, q, r), rel=1e-10, abs=1e-12)
    assert geom.angle_at(space, p2, q2, r2) == pytest.approx(A, abs=1e-9)


@given(sas())
def test_sss_inverts_sas(args):
    space, b, c, A = args
    a = trig.side_from_sas(space, b, c, A)
    assume(a > 1e-6)
    assert trig.angles_from_sss(space, a, b, c)[0] == pytest.approx(A, abs=1e-7)


@settings(max_examples=25, deadline=None)
@given(sas(st.sampled_from([S1, H1])))
def test_area_matches_quadrature(args):
    space, b, c, A = args
    p, q, r = trig.construct_sas(space, b, c, A)
    tri = trig.Triangle.from_vertices(space, p, q, r)
    assume(min(tri.A, tri.B, tri.C) > 0.02)
    exact = trig.area_from_angles(space, tri.A, tri.B, tri.C)
    approx = kernels.triangle_area_quadrature(space.sign, space.radius, p.coords, q.coords, r.coords)
    assert approx == pytest.approx(exact, rel=1e-5)


@given(st.floats(0.05, 3.0), st.floats(0.05, 3.0), st.floats(0.05, 3.0))
def test_transport_of_law_of_cosines(a, b, c):
    assume(a < b + c and b < a + c and c < a + b)
    assume(min(a + b - c, a + c - b, b + c - a) > 1e-3)
    A = trig.angles_from_sss(H1, a, b, c)[0]
    assert duality.transport_check(IdentityId.LAW_OF_COSINES, (a, b, c), (A,)).passed


@given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1), st.floats(0.2, 5))
def test_area_transport_agrees(x, y, z, R):
    total = x + y + z
    assume(total > 0)
    scale = (math.pi - 1e-6) / total * 0.999
    angs = (x * scale, y * scale, z * scale)
    sph, hyp = duality.area_transport(R, angs)
    assert sph == pytest.approx(hyp, rel=1e-14, abs=1e-14)


@given(st.floats(0.05, 3.0))
def test_median_ratio_sign(s):
    af, df = trig.equilateral_median_split(H1, s)
    assert df < af / 3
    assume(s < 2.0)
    af, df = trig.equilateral_median_split(S1, s)
    assert df > af / 3


@given(st.floats(0.05, 1.4), st.floats(0.05, 1.4))
def test_lambert_fourth_angle_trichotomy(a, b):
    for space, sign in ((S1, 1), (E, 0)):
        phi = quad.lambert_quadrilateral(space, a, b).phi
        if sign:
            assert phi > math.pi / 2
        else:
            assert phi == pytest.approx(math.pi / 2, abs=1e-12)
    assume(math.cosh(a) * math.tanh(b) < 0.999)
    assert quad.lambert_quadrilateral(H1, a, b).phi < math.pi / 2


@given(st.floats(0.01, 5.0), st.floats(0.01, 5.0))
def test_parallelism_monotone(p, q):
    assume(abs(p - q) > 1e-6)
    lo, hi = sorted((p, q))
    assert par.angle_of_parallelism(H1, lo) > par.angle_of_parallelism(H1, hi)


@given(st.floats(0.1, 1.5), st.floats(2.1, 2.9), st.integers(3, 8))
def test_euclidean_chains_concyclic(s, theta, n):
    chain = par.build_chain(E, s, theta, n)
    c = par.classify_chain_center(chain)
    radii = [geom.distance(E, c.center, v) for v in chain.vertices]
    assert max(radii) - min(radii) < 1e-9
