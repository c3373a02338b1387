"""Pure-Python model kernels.

Reference implementation of the scalar primitives that every construction
goes through. ``_ckernels.pyx`` mirrors this module function for function;
``curvatura.kernels`` picks whichever one is importable.

Conventions shared by both backends
-----------------------------------
``k`` is the curvature sign of the embedded model, +1 for the sphere and -1
for the hyperboloid. Points and vectors are 3-tuples in embedding
coordinates already scaled by the radius ``R``. The bilinear form is

    B(x, y) = x0*y0 + k*(x1*y1 + x2*y2)

so model points satisfy B(p, p) = R**2, and a tangent vector v at p has
squared length k*B(v, v).
"""

import math
from functools import lru_cache

BACKEND = "python"


def form(k, x, y):
    return x[0] * y[0] + k * (x[1] * y[1] + x[2] * y[2])


def cross(k, x, y):
    """Vector B-orthogonal to both ``x`` and ``y``."""
    c0 = x[1] * y[2] - x[2] * y[1]
    c1 = x[2] * y[0] - x[0] * y[2]
    c2 = x[0] * y[1] - x[1] * y[0]
    return (c0, k * c1, k * c2)


def renormalize(k, R, x):
    """Snap a point that has drifted slightly off the model back onto it.

    The hyperboloid is handled by recomputing x0 from (x1, x2), which stays
    exact however far the point is from the origin.
    """
    if k > 0:
        s = R / math.sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])
        return (x[0] * s, x[1] * s, x[2] * s)
    return (math.sqrt(R * R + x[1] * x[1] + x[2] * x[2]), x[1], x[2])


def normalize(k, R, x):
    """Scale a vector of arbitrary length onto the model (upper sheet for k < 0)."""
    q = form(k, x, x)
    if not q > 0.0:
        raise ValueError("vector does not represent a model point")
    s = R / math.sqrt(q)
    if k < 0 and x[0] < 0.0:
        s = -s
    return renormalize(k, R, (x[0] * s, x[1] * s, x[2] * s))


def distance(k, R, p, q):
    d0 = p[0] - q[0]
    d1 = p[1] - q[1]
    d2 = p[2] - q[2]
    if k > 0:
        s0 = p[0] + q[0]
        s1 = p[1] + q[1]
        s2 = p[2] + q[2]
        chord = math.sqrt(d0 * d0 + d1 * d1 + d2 * d2)
        span = math.sqrt(s0 * s0 + s1 * s1 + s2 * s2)
        return 2.0 * R * math.atan2(chord, span)
    # acosh(1 + x) = log1p(x + sqrt(x*(x + 2))) with x = B(p,q)/R^2 - 1; near
    # the diagonal x is taken from -B(p-q, p-q) / (2R^2) to avoid cancellation
    x = form(k, p, q) / (R * R) - 1.0
    if x < 1.0:
        x = -(d0 * d0 - d1 * d1 - d2 * d2) / (2.0 * R * R)
    if x <= 0.0:
        return 0.0
    return R * math.log1p(x + math.sqrt(x * (x + 2.0)))


def exp_point(k, R, p, v, t):
    s = t / R
    if k > 0:
        a = math.cos(s)
        b = R * math.sin(s)
    else:
        a = math.cosh(s)
        b = R * math.sinh(s)
    return renormalize(k, R, (a * p[0] + b * v[0], a * p[1] + b * v[1], a * p[2] + b * v[2]))


def tangent_unit(k, R, p, v, eps=1e-13):
    """Project ``v`` onto the tangent plane at ``p`` and normalize.

    Returns None when the projection vanishes (relative to ``|v|``).
    """
    c = form(k, p, v) / (R * R)
    w0 = v[0] - c * p[0]
    w1 = v[1] - c * p[1]
    w2 = v[2] - c * p[2]
    n2 = k * (w0 * w0 + k * (w1 * w1 + w2 * w2))
    scale = math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    if not n2 > 0.0 or math.sqrt(n2) <= eps * scale:
        return None
    n = math.sqrt(n2)
    return (w0 / n, w1 / n, w2 / n)


def tangent_angle(k, u, w):
    """Unsigned angle between unit tangent vectors at a common point."""
    d0 = u[0] - w[0]
    d1 = u[1] - w[1]
    d2 = u[2] - w[2]
    s0 = u[0] + w[0]
    s1 = u[1] + w[1]
    s2 = u[2] + w[2]
    dd = max(0.0, k * (d0 * d0 + k * (d1 * d1 + d2 * d2)))
    ss = max(0.0, k * (s0 * s0 + k * (s1 * s1 + s2 * s2)))
    return 2.0 * math.atan2(math.sqrt(dd), math.sqrt(ss))


@lru_cache(maxsize=None)
def gauss_legendre01(n):
    """Gauss-Legendre nodes and weights on [0, 1] by Newton iteration."""
    nodes = []
    weights = []
    for i in range(1, n + 1):
        x = math.cos(math.pi * (i - 0.25) / (n + 0.5))
        for _ in range(100):
            p0, p1 = 1.0, x
            for j in range(2, n + 1):
                p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
            dp = n * (x * p1 - p0) / (x * x - 1.0)
            dx = p1 / dp
            x -= dx
            if abs(dx) < 1e-16:
                break
        p0, p1 = 1.0, x
        for j in range(2, n + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        nodes.append(0.5 * (1.0 - x))
        weights.append(1.0 / ((1.0 - x * x) * dp * dp))
    return tuple(nodes), tuple(weights)


def _flat_triangle(k, x0, y0, x1, y1, x2, y2, nodes, weights):
    ux, uy = x1 - x0, y1 - y0
    vx, vy = x2 - x1, y2 - y1
    jac = abs(ux * vy - uy * vx)
    total = 0.0
    for u, wu in zip(nodes, weights):
        inner = 0.0
        for v, wv in zip(nodes, weights):
            x = x0 + u * ux + u * v * vx
            y = y0 + u * uy + u * v * vy
            inner += wv * (1.0 + k * (x * x + y * y)) ** -1.5
        total += wu * u * inner
    return jac * total


def _leaf_area(k, p, q, r, nodes, weights):
    """Area of a small unit-radius geodesic triangle by central projection."""
    c = normalize(k, 1.0, (p[0] + q[0] + r[0], p[1] + q[1] + r[1], p[2] + q[2] + r[2]))
    e1 = tangent_unit(k, 1.0, c, (0.0, 1.0, 0.0), 1e-3)
    if e1 is None:
        e1 = tangent_unit(k, 1.0, c, (0.0, 0.0, 1.0), 1e-3)
    e2 = tangent_unit(k, 1.0, c, cross(k, c, e1))
    pts = []
    for x in (p, q, r):
        a = form(k, x, c)
        if not a > 0.0:
            raise ValueError("triangle leaves the projection chart")
        pts.append((k * form(k, x, e1) / a, k * form(k, x, e2) / a))
    (x0, y0), (x1, y1), (x2, y2) = pts
    return _flat_triangle(k, x0, y0, x1, y1, x2, y2, nodes, weights)


def _mid(k, x, y):
    return normalize(k, 1.0, (x[0] + y[0], x[1] + y[1], x[2] + y[2]))


def triangle_area_quadrature(k, R, p, q, r, order=12, levels=3):
    """Area of the geodesic triangle pqr by integrating the area element.

    The triangle is first split into 4**levels geodesic subtriangles at
    edge midpoints. Each piece is mapped by central projection (gnomonic on
    the sphere, Beltrami-Klein on the hyperboloid) about its own centroid,
    where geodesics become straight segments and the area element is
    R^2 (1 + k(x^2 + y^2))^(-3/2) dx dy, and integrated with a collapsed
    (Duffy) tensor Gauss-Legendre rule of the given order.
    """
    nodes, weights = gauss_legendre01(order)
    tris = [tuple((x[0] / R, x[1] / R, x[2] / R) for x in (p, q, r))]
    for _ in range(levels):
        nxt = []
        for a, b, d in tris:
            ab, bd, da = _mid(k, a, b), _mid(k, b, d), _mid(k, d, a)
            nxt.extend(((a, ab, da), (ab, b, bd), (da, bd, d), (ab, bd, da)))
        tris = nxt
    return R * R * sum(_leaf_area(k, a, b, d, nodes, weights) for a, b, d in tris)
