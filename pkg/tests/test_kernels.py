"""The compiled and pure-Python kernels must agree."""

import importlib
import math
import os
import subprocess
import sys

import pytest

from curvatura import _pykernels as py

try:
    from curvatura import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled extension not built")

P_H = (math.cosh(0.7), math.sinh(0.7) * 0.6, math.sinh(0.7) * 0.8)
Q_H = (math.cosh(1.3), -math.sinh(1.3), 0.0)
P_S = (math.cos(0.7), math.sin(0.7) * 0.6, math.sin(0.7) * 0.8)
Q_S = (math.cos(1.3), -math.sin(1.3), 0.0)
CASES = [(-1, P_H, Q_H), (1, P_S, Q_S)]


@needs_ext
@pytest.mark.parametrize("k,p,q", CASES)
def test_scalar_kernels_agree(k, p, q):
    assert cy.form(k, p, q) == pytest.approx(py.form(k, p, q), rel=1e-15)
    assert cy.cross(k, p, q) == pytest.approx(py.cross(k, p, q), rel=1e-15)
    assert cy.distance(k, 1.0, p, q) == pytest.approx(py.distance(k, 1.0, p, q), rel=1e-14)
    v = py.tangent_unit(k, 1.0, p, q)
    assert cy.tangent_unit(k, 1.0, p, q) == pytest.approx(v, rel=1e-13, abs=1e-15)
    assert cy.exp_point(k, 1.0, p, v, 0.4) == pytest.approx(py.exp_point(k, 1.0, p, v, 0.4), rel=1e-14)
    assert cy.normalize(k, 1.0, [2 * x for x in p]) == pytest.approx(py.normalize(k, 1.0, [2 * x for x in p]))


@needs_ext
@pytest.mark.parametrize("k,p,q", CASES)
def test_quadrature_agrees(k, p, q):
    r = (1.0, 0.0, 0.0)
    a = cy.triangle_area_quadrature(k, 1.0, p, q, r)
    b = py.triangle_area_quadrature(k, 1.0, p, q, r)
    assert a == pytest.approx(b, rel=1e-12)


def test_octant_quadrature():
    area = py.triangle_area_quadrature(1, 1.0, (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    assert area == pytest.approx(math.pi / 2, rel=1e-10)


def test_gauss_legendre_integrates_polynomials():
    nodes, weights = py.gauss_legendre01(8)
    assert sum(weights) == pytest.approx(1.0, rel=1e-15)
    assert sum(w * x**15 for x, w in zip(nodes, weights)) == pytest.approx(1 / 16, rel=1e-13)


def test_null_vector_rejected():
    with pytest.raises(ValueError):
        py.normalize(-1, 1.0, (1.0, 1.0, 0.0))


def test_env_var_selects_python_backend():
    env = dict(os.environ, CURVATURA_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from curvatura import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == py.BACKEND


@needs_ext
def test_default_backend_is_compiled():
    env = {k: v for k, v in os.environ.items() if k != "CURVATURA_PURE_PYTHON"}
    out = subprocess.run(
        [sys.executable, "-c", "from curvatura import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == cy.BACKEND
