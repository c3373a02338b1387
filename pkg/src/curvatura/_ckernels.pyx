# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled model kernels; drop-in replacement for ``_pykernels``."""

from libc.math cimport sqrt, atan2, log1p, cos, sin, cosh, sinh, fabs, pow

from curvatura._pykernels import gauss_legendre01

BACKEND = "cython"


cdef inline double _form(double k, double x0, double x1, double x2,
                         double y0, double y1, double y2) nogil:
    return x0 * y0 + k * (x1 * y1 + x2 * y2)


def form(double k, x, y):
    return _form(k, x[0], x[1], x[2], y[0], y[1], y[2])


def cross(double k, x, y):
    cdef double x0 = x[0], x1 = x[1], x2 = x[2]
    cdef double y0 = y[0], y1 = y[1], y2 = y[2]
    return (x1 * y2 - x2 * y1, k * (x2 * y0 - x0 * y2), k * (x0 * y1 - x1 * y0))


cdef inline tuple _renormalize(double k, double R, double x0, double x1, double x2):
    cdef double s
    if k > 0:
        s = R / sqrt(x0 * x0 + x1 * x1 + x2 * x2)
        return (x0 * s, x1 * s, x2 * s)
    return (sqrt(R * R + x1 * x1 + x2 * x2), x1, x2)


cdef inline tuple _normalize(double k, double R, double x0, double x1, double x2):
    cdef double q = _form(k, x0, x1, x2, x0, x1, x2)
    cdef double s
    if not q > 0.0:
        raise ValueError("vector does not represent a model point")
    s = R / sqrt(q)
    if k < 0 and x0 < 0.0:
        s = -s
    return _renormalize(k, R, x0 * s, x1 * s, x2 * s)


def renormalize(double k, double R, x):
    return _renormalize(k, R, x[0], x[1], x[2])


def normalize(double k, double R, x):
    return _normalize(k, R, x[0], x[1], x[2])


def distance(double k, double R, p, q):
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double q0 = q[0], q1 = q[1], q2 = q[2]
    cdef double d0 = p0 - q0, d1 = p1 - q1, d2 = p2 - q2
    cdef double s0, s1, s2, x
    if k > 0:
        s0 = p0 + q0
        s1 = p1 + q1
        s2 = p2 + q2
        return 2.0 * R * atan2(sqrt(d0 * d0 + d1 * d1 + d2 * d2),
                               sqrt(s0 * s0 + s1 * s1 + s2 * s2))
    x = _form(k, p0, p1, p2, q0, q1, q2) / (R * R) - 1.0
    if x < 1.0:
        x = -(d0 * d0 - d1 * d1 - d2 * d2) / (2.0 * R * R)
    if x <= 0.0:
        return 0.0
    return R * log1p(x + sqrt(x * (x + 2.0)))


def exp_point(double k, double R, p, v, double t):
    cdef double s = t / R
    cdef double a, b
    if k > 0:
        a = cos(s)
        b = R * sin(s)
    else:
        a = cosh(s)
        b = R * sinh(s)
    return _renormalize(k, R, a * p[0] + b * v[0], a * p[1] + b * v[1], a * p[2] + b * v[2])


def tangent_unit(double k, double R, p, v, double eps=1e-13):
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double v0 = v[0], v1 = v[1], v2 = v[2]
    cdef double c = _form(k, p0, p1, p2, v0, v1, v2) / (R * R)
    cdef double w0 = v0 - c * p0, w1 = v1 - c * p1, w2 = v2 - c * p2
    cdef double n2 = k * _form(k, w0, w1, w2, w0, w1, w2)
    cdef double scale = sqrt(v0 * v0 + v1 * v1 + v2 * v2)
    cdef double n
    if not n2 > 0.0 or sqrt(n2) <= eps * scale:
        return None
    n = sqrt(n2)
    return (w0 / n, w1 / n, w2 / n)


def tangent_angle(double k, u, w):
    cdef double u0 = u[0], u1 = u[1], u2 = u[2]
    cdef double w0 = w[0], w1 = w[1], w2 = w[2]
    cdef double d0 = u0 - w0, d1 = u1 - w1, d2 = u2 - w2
    cdef double s0 = u0 + w0, s1 = u1 + w1, s2 = u2 + w2
    cdef double dd = k * _form(k, d0, d1, d2, d0, d1, d2)
    cdef double ss = k * _form(k, s0, s1, s2, s0, s1, s2)
    if dd < 0.0:
        dd = 0.0
    if ss < 0.0:
        ss = 0.0
    return 2.0 * atan2(sqrt(dd), sqrt(ss))


cdef double _flat_triangle(double k, double x0, double y0, double x1, double y1,
                           double x2, double y2, double[:] nodes, double[:] weights,
                           int n) nogil:
    cdef double ux = x1 - x0, uy = y1 - y0
    cdef double vx = x2 - x1, vy = y2 - y1
    cdef double jac = fabs(ux * vy - uy * vx)
    cdef double total = 0.0, inner, u, v, x, y
    cdef int i, j
    for i in range(n):
        u = nodes[i]
        inner = 0.0
        for j in range(n):
            v = nodes[j]
            x = x0 + u * ux + u * v * vx
            y = y0 + u * uy + u * v * vy
            inner += weights[j] * pow(1.0 + k * (x * x + y * y), -1.5)
        total += weights[i] * u * inner
    return jac * total


cdef int _unit_normalize(double k, double* x) nogil:
    cdef double q = _form(k, x[0], x[1], x[2], x[0], x[1], x[2])
    cdef double s
    if not q > 0.0:
        return -1
    s = 1.0 / sqrt(q)
    if k < 0 and x[0] < 0.0:
        s = -s
    x[0] *= s
    x[1] *= s
    x[2] *= s
    if k < 0:
        x[0] = sqrt(1.0 + x[1] * x[1] + x[2] * x[2])
    return 0


cdef int _tangent(double k, double* c, double* v, double* out, double eps) nogil:
    cdef double a = _form(k, c[0], c[1], c[2], v[0], v[1], v[2])
    cdef double w0 = v[0] - a * c[0], w1 = v[1] - a * c[1], w2 = v[2] - a * c[2]
    cdef double n2 = k * _form(k, w0, w1, w2, w0, w1, w2)
    cdef double scale = sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    if not n2 > 0.0 or sqrt(n2) <= eps * scale:
        return -1
    n2 = sqrt(n2)
    out[0] = w0 / n2
    out[1] = w1 / n2
    out[2] = w2 / n2
    return 0


cdef int _leaf(double k, double* p, double* q, double* r, double[:] nodes,
               double[:] weights, int n, double* area) nogil:
    cdef double c[3]
    cdef double t[3]
    cdef double e1[3]
    cdef double e2[3]
    cdef double xs[3]
    cdef double ys[3]
    cdef double* pts[3]
    cdef double a
    cdef int i
    for i in range(3):
        c[i] = p[i] + q[i] + r[i]
    if _unit_normalize(k, c) != 0:
        return -1
    t[0] = 0.0
    t[1] = 1.0
    t[2] = 0.0
    if _tangent(k, c, t, e1, 1e-3) != 0:
        t[1] = 0.0
        t[2] = 1.0
        if _tangent(k, c, t, e1, 1e-3) != 0:
            return -1
    t[0] = c[1] * e1[2] - c[2] * e1[1]
    t[1] = k * (c[2] * e1[0] - c[0] * e1[2])
    t[2] = k * (c[0] * e1[1] - c[1] * e1[0])
    if _tangent(k, c, t, e2, 1e-13) != 0:
        return -1
    pts[0] = p
    pts[1] = q
    pts[2] = r
    for i in range(3):
        a = _form(k, pts[i][0], pts[i][1], pts[i][2], c[0], c[1], c[2])
        if not a > 0.0:
            return -1
        xs[i] = k * _form(k, pts[i][0], pts[i][1], pts[i][2], e1[0], e1[1], e1[2]) / a
        ys[i] = k * _form(k, pts[i][0], pts[i][1], pts[i][2], e2[0], e2[1], e2[2]) / a
    area[0] += _flat_triangle(k, xs[0], ys[0], xs[1], ys[1], xs[2], ys[2], nodes, weights, n)
    return 0


cdef int _subdivide(double k, double* a, double* b, double* d, int level,
                    double[:] nodes, double[:] weights, int n, double* area) nogil:
    cdef double ab[3]
    cdef double bd[3]
    cdef double da[3]
    cdef int i
    if level == 0:
        return _leaf(k, a, b, d, nodes, weights, n, area)
    for i in range(3):
        ab[i] = a[i] + b[i]
        bd[i] = b[i] + d[i]
        da[i] = d[i] + a[i]
    if _unit_normalize(k, ab) or _unit_normalize(k, bd) or _unit_normalize(k, da):
        return -1
    if _subdivide(k, a, ab, da, level - 1, nodes, weights, n, area):
        return -1
    if _subdivide(k, ab, b, bd, level - 1, nodes, weights, n, area):
        return -1
    if _subdivide(k, da, bd, d, level - 1, nodes, weights, n, area):
        return -1
    return _subdivide(k, ab, bd, da, level - 1, nodes, weights, n, area)


def triangle_area_quadrature(double k, double R, p, q, r, int order=12, int levels=3):
    cdef double a[3]
    cdef double b[3]
    cdef double d[3]
    cdef double area = 0.0
    cdef int i, status
    for i in range(3):
        a[i] = p[i] / R
        b[i] = q[i] / R
        d[i] = r[i] / R
    gn, gw = gauss_legendre01(order)
    cdef double[:] nodes = array_of(gn)
    cdef double[:] weights = array_of(gw)
    with nogil:
        status = _subdivide(k, a, b, d, levels, nodes, weights, order, &area)
    if status != 0:
        raise ValueError("triangle leaves the projection chart")
    return R * R * area


cdef array_of(values):
    from array import array
    return array("d", values)
