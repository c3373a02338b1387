import cmath
import math

import pytest

from curvatura import duality, trig
from curvatura.duality import IdentityId
from curvatura.errors import UnrealizableAngles

from conftest import H1


def test_law_of_cosines_equilateral():
    A = trig.angles_from_sss(H1, 1, 1, 1)[0]
    rep = duality.transport_check(IdentityId.LAW_OF_COSINES, (1.0, 1.0, 1.0), (A,))
    assert abs(rep.hyperbolic_residual) < 1e-12
    assert abs(rep.spherical_at_imaginary) < 1e-12
    assert rep.max_imag_part < 1e-13
    assert rep.passed


def test_pythagoras_is_exact_under_substitution():
    a, b = 0.3, 0.4
    lhs = cmath.cos(1j * a) * cmath.cos(1j * b)
    assert abs(lhs - math.cosh(a) * math.cosh(b)) < 1e-14
    rep = duality.transport_check(IdentityId.RIGHT_TRIANGLE_PYTHAGORAS, (a, b))
    assert rep.passed and rep.agreement < 1e-14


def test_girard_form():
    rep = duality.transport_check(IdentityId.GIRARD_AREA, (1.0,), (0.5, 0.6, 0.7))
    assert rep.passed


@pytest.mark.parametrize(
    "R,angles,expected",
    [(1.0, (math.pi / 6,) * 3, math.pi / 2), (2.0, (0.1, 0.2, 0.3), 10.166370614359172), (1.0, (0, 0, 0), math.pi)],
)
def test_area_transport_examples(R, angles, expected):
    sph, hyp = duality.area_transport(R, angles)
    assert sph == pytest.approx(expected, rel=1e-15)
    assert hyp == pytest.approx(expected, rel=1e-15)


def test_area_transport_rejects_spherical_angles():
    with pytest.raises(UnrealizableAngles):
        duality.area_transport(1.0, (1.0, 1.0, 1.5))


def test_wrong_angle_fails():
    rep = duality.transport_check(IdentityId.LAW_OF_COSINES, (1.0, 1.0, 1.0), (0.8,))
    assert not rep.passed


def test_symmetry_under_negation():
    A = trig.angles_from_sss(H1, 0.7, 0.9, 1.2)[0]
    plus, minus = duality.transport_twice(IdentityId.LAW_OF_COSINES, (0.7, 0.9, 1.2), (A,))
    assert abs(plus - minus) < 1e-14


def test_registry_lists_all_identities():
    for ident in IdentityId:
        sph, hyp = duality.residuals(ident)
        assert callable(sph) and callable(hyp)
