import math

import pytest

from curvatura import geom, parallelism as par
from curvatura.errors import OutOfRange
from curvatura.geom import SpaceForm
from curvatura.parallelism import CenterTag

from conftest import E, H1, S1


def test_angle_of_parallelism_examples():
    assert par.angle_of_parallelism(H1, 0.0) == math.pi / 2
    assert par.angle_of_parallelism(H1, 1.0) == pytest.approx(0.705026843555238, abs=1e-9)
    assert par.angle_of_parallelism(H1, 15.0) == pytest.approx(2 * math.atan(math.exp(-15.0)), abs=1e-9)
    with pytest.raises(OutOfRange):
        par.angle_of_parallelism(H1, 30.0)
    assert par.angle_of_parallelism(E, 2.0) == math.pi / 2


def test_angle_of_parallelism_scales():
    H2 = SpaceForm.hyperbolic(2.0)
    assert par.angle_of_parallelism(H2, 2.0) == pytest.approx(par.angle_of_parallelism(H1, 1.0), abs=1e-9)


def test_meets_base_below_supremum():
    limit = par.angle_of_parallelism(H1, 0.8)
    assert par.meets_base(H1, 0.8, 0.95 * limit)
    assert not par.meets_base(H1, 0.8, 1.05 * limit)


def test_receding_angle_tends_to_parallel():
    values = [par.receding_angle(H1, 1.0, x) for x in (1, 2, 4, 8)]
    assert all(b >= a for a, b in zip(values, values[1:]))
    assert values[-1] == pytest.approx(par.angle_of_parallelism(H1, 1.0), abs=1e-3)


def test_chain_hexagon():
    chain = par.build_chain(E, 1.0, 2 * math.pi / 3, 6)
    v = chain.vertices
    assert geom.distance(E, v[0], v[6]) < 1e-9
    c = par.classify_chain_center(chain)
    assert c.tag is CenterTag.CIRCLE and c.radius == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("space,s", [(H1, 0.1), (S1, 0.5)])
def test_chain_concyclic(space, s):
    chain = par.build_chain(space, s, 2 * math.pi / 3, 12)
    c = par.classify_chain_center(chain)
    assert c.tag is CenterTag.CIRCLE
    radii = [geom.distance(space, c.center, p) for p in chain.vertices]
    assert max(radii) - min(radii) < 1e-9


def test_chain_equidistant():
    chain = par.build_chain(H1, 5.0, 2 * math.pi / 3, 4, centered=True)
    c = par.classify_chain_center(chain)
    assert c.tag is CenterTag.EQUIDISTANT
    offsets = [abs(geom.signed_distance(H1, c.axis, p)) for p in chain.vertices]
    assert max(offsets) - min(offsets) < 1e-9
    assert c.offset == pytest.approx(0.558392358283088, abs=1e-12)


def test_chain_sides_and_angles(space):
    chain = par.build_chain(space, 0.4, 2.0, 5)
    assert chain.sides() == pytest.approx([0.4] * 5, abs=1e-12)
    assert chain.angles() == pytest.approx([2.0] * 4, abs=1e-12)


def test_critical_side():
    theta = 2 * math.pi / 3
    crit = par.critical_chain_side(H1, theta)
    assert crit == pytest.approx(math.log(3), abs=1e-8)
    assert crit == pytest.approx(par.critical_chain_side_closed_form(H1, theta), abs=1e-8)
    below = par.classify_chain_center(par.build_chain(H1, 0.9 * crit, theta, 4, centered=True))
    above = par.classify_chain_center(par.build_chain(H1, 1.1 * crit, theta, 4, centered=True))
    assert below.tag is CenterTag.CIRCLE and above.tag is CenterTag.EQUIDISTANT
