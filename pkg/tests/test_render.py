import math
import re
import xml.etree.ElementTree as ET

import pytest

from curvatura import geom, render
from curvatura.errors import RenderDomain
from curvatura.geom import Line
from curvatura.render import Scene

from conftest import E, H1, S1


def test_disk_projection_of_origin_and_far_point():
    sc = Scene(H1, "t")
    assert sc.project(H1.origin) == (0.0, 0.0)
    x, y = sc.project(geom.exp_map(H1, H1.direction(0.0), 5.0))
    assert x == pytest.approx(math.tanh(2.5)) and y == 0.0


def test_disk_arcs_meet_boundary_orthogonally():
    ident = lambda p: (f"{p[0]!r}", f"{p[1]!r}")  # noqa: E731
    u, v = (0.3, 0.1), (-0.2, 0.5)
    d = render._disk_arc(u, v, ident, 1.0)
    r = float(re.search(r" A (\S+) ", d).group(1))
    # centre from the chord data, then |c|^2 = 1 + r^2 for orthogonality
    ru, rv = (u[0] ** 2 + u[1] ** 2 + 1) / 2, (v[0] ** 2 + v[1] ** 2 + 1) / 2
    cross = u[0] * v[1] - u[1] * v[0]
    cx, cy = (ru * v[1] - rv * u[1]) / cross, (rv * u[0] - ru * v[0]) / cross
    assert cx**2 + cy**2 == pytest.approx(1 + r**2, rel=1e-3)
    assert math.hypot(u[0] - cx, u[1] - cy) == pytest.approx(r, rel=1e-3)


def test_diameters_are_straight():
    d = render._disk_arc((0.5, 0.0), (-0.3, 0.0), lambda p: (str(p[0]), str(p[1])), 1.0)
    assert " A " not in d and " L " in d


def test_hidden_hemisphere_is_refused():
    with pytest.raises(RenderDomain):
        Scene(S1, "t").point(geom.exp_map(S1, S1.direction(0.0), 2.0))


def test_one_element_per_primitive():
    sc = Scene(E, "t")
    a, b = E.origin, geom.exp_map(E, E.direction(0.0), 1.0)
    sc.segment(a, b)
    sc.line(Line(a, E.direction(1.0)))
    sc.point(a, "A")
    sc.point(b)
    root = ET.fromstring(sc.to_svg())
    shapes = [el for el in root if el.get("class")]
    assert [el.get("class") for el in shapes] == ["segment", "line", "vertex", "label", "vertex"]


def test_title_escaped():
    svg = Scene(H1, "a < b & c").to_svg()
    assert ET.fromstring(svg).find("{http://www.w3.org/2000/svg}title").text == "a < b & c"
