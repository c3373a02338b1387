"""SVG scenes for the three models.

Hyperbolic scenes are drawn in the Poincare disk, where geodesics are
circular arcs orthogonal to the boundary and angles are shown truly.
Spherical scenes use orthographic projection of the hemisphere facing the
origin. Euclidean scenes are drawn directly. Each construction primitive
becomes exactly one SVG element carrying a ``class`` attribute, so figures
can be audited by counting elements.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from curvatura import geom
from curvatura.errors import RenderDomain
from curvatura.geom import Kind, Line, Point, SpaceForm

SIZE = 520.0
SVG_NS = "http://www.w3.org/2000/svg"


def _fmt(x):
    return f"{x:.3f}".rstrip("0").rstrip(".")


class Scene:
    """Collects primitives in model coordinates and renders them to SVG."""

    def __init__(self, space: SpaceForm, title: str):
        self.space = space
        self.title = title
        self._items = []  # (kind, payload, css class)

    # -- projection -------------------------------------------------------

    def project(self, p: Point):
        """Model point to plane coordinates (disk or orthographic or identity)."""
        x = p.coords
        if not all(math.isfinite(v) for v in x):
            raise RenderDomain("point has non-finite coordinates")
        if self.space.kind is Kind.EUCLIDEAN:
            return x[0], x[1]
        R = self.space.radius
        if self.space.kind is Kind.HYPERBOLIC:
            return x[1] / (x[0] + R), x[2] / (x[0] + R)
        if x[0] < -1e-12 * R:
            raise RenderDomain("point lies on the hidden hemisphere")
        return x[1] / R, x[2] / R

    # -- primitives -------------------------------------------------------

    def point(self, p: Point, label: str | None = None, cls: str = "vertex"):
        self._items.append(("point", self.project(p), cls))
        if label:
            self._items.append(("label", (self.project(p), label), "label"))

    def segment(self, p: Point, q: Point, cls: str = "segment"):
        self._items.append(("path", self._geodesic(p, q), cls))

    def line(self, line: Line, cls: str = "line"):
        self._items.append(("path", self._full_line(line), cls))

    def circle(self, center: Point, radius: float, cls: str = "circle"):
        steps = 96
        d0 = self._any_direction(center)
        pts = [
            self.project(geom.walk(self.space, geom.rotate(self.space, d0, 2 * math.pi * i / steps), radius))
            for i in range(steps)
        ]
        self._items.append(("path", ("poly", pts, True), cls))

    def right_angle(self, vertex: Point, toward1: Point, toward2: Point, size: float | None = None):
        s = self.space
        e = size or 0.08 * (s.radius if s.curved else self._scale_hint())
        a = self.project(geom.exp_map(s, geom.direction(s, vertex, toward1), e))
        b = self.project(geom.exp_map(s, geom.direction(s, vertex, toward2), e))
        o = self.project(vertex)
        corner = (a[0] + b[0] - o[0], a[1] + b[1] - o[1])
        self._items.append(("path", ("poly", [a, corner, b], False), "right-angle"))

    def _scale_hint(self):
        pts = [p for kind, p, _ in self._items if kind == "point"]
        if len(pts) < 2:
            return 1.0
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        return max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)

    def _any_direction(self, p):
        s = self.space
        if not s.curved:
            return geom.TangentDir(p, (1.0, 0.0))
        v = geom._tangent(s, p, (0.0, 1.0, 0.0)) or geom._tangent(s, p, (0.0, 0.0, 1.0))
        return geom.TangentDir(p, v)

    def _geodesic(self, p, q):
        s = self.space
        if s.kind is Kind.HYPERBOLIC:
            return ("arc", self.project(p), self.project(q))
        if s.kind is Kind.EUCLIDEAN:
            return ("poly", [self.project(p), self.project(q)], False)
        d = geom.distance(s, p, q)
        if d == 0:
            return ("poly", [self.project(p)] * 2, False)
        dirn = geom.direction(s, p, q)
        steps = max(2, int(48 * d / s.radius) + 2)
        return ("poly", [self.project(geom.walk(s, dirn, d * i / steps)) for i in range(steps + 1)], False)

    def _full_line(self, line):
        s = self.space
        if s.kind is Kind.HYPERBOLIC:
            b, v, R = line.base.coords, line.dir.vec, s.radius
            ends = []
            for sign in (1.0, -1.0):
                w = tuple(bi + sign * R * vi for bi, vi in zip(b, v))
                ends.append((w[1] / w[0], w[2] / w[0]))
            return ("arc", ends[1], ends[0])
        if s.kind is Kind.EUCLIDEAN:
            return ("eline", self.project(line.base), line.dir.vec)
        runs, current = [], []
        steps = 192
        for i in range(steps + 1):
            p = geom.walk(s, line.dir, 2 * math.pi * s.radius * i / steps)
            if p.coords[0] >= 0:
                current.append((p.coords[1] / s.radius, p.coords[2] / s.radius))
            elif current:
                runs.append(current)
                current = []
        if current:
            runs.append(current)
        return ("runs", runs)

    # -- output -----------------------------------------------------------

    def _bounds(self):
        if self.space.curved:
            return -1.08, -1.08, 1.08, 1.08
        pts = []
        for kind, payload, _ in self._items:
            if kind == "point":
                pts.append(payload)
            elif kind == "path" and payload[0] == "poly":
                pts.extend(payload[1])
        if not pts:
            return -1.0, -1.0, 1.0, 1.0
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-6)
        pad = 0.12 * span
        cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
        half = span / 2 + pad
        return cx - half, cy - half, cx + half, cy + half

    def to_svg(self) -> str:
        x0, y0, x1, y1 = self._bounds()
        scale = SIZE / (x1 - x0)

        def sx(p):
            return _fmt((p[0] - x0) * scale), _fmt((y1 - p[1]) * scale)

        root = ET.Element(
            "svg",
            {
                "xmlns": SVG_NS,
                "version": "1.1",
                "width": _fmt(SIZE),
                "height": _fmt(SIZE),
                "viewBox": f"0 0 {_fmt(SIZE)} {_fmt(SIZE)}",
            },
        )
        ET.SubElement(root, "title").text = self.title
        ET.SubElement(
            root,
            "style",
        ).text = (
            ".boundary{fill:none;stroke:#999}.segment,.line,.circle,.axis,.right-angle"
            "{fill:none;stroke:#222;stroke-width:1.5}.line{stroke:#36c}.circle,.axis{stroke:#c63;"
            "stroke-dasharray:5 4}.missing{stroke:#c33}.vertex{fill:#000}.label{font:14px serif}"
        )
        if self.space.curved:
            cx, cy = sx((0.0, 0.0))
            ET.SubElement(root, "circle", {"class": "boundary", "cx": cx, "cy": cy, "r": _fmt(scale)})
        for kind, payload, cls in self._items:
            if kind == "point":
                x, y = sx(payload)
                ET.SubElement(root, "circle", {"class": cls, "cx": x, "cy": y, "r": "3"})
            elif kind == "label":
                (px, py), text = payload
                x, y = sx((px, py))
                el = ET.SubElement(
                    root, "text", {"class": cls, "x": _fmt(float(x) + 6), "y": _fmt(float(y) - 6)}
                )
                el.text = text
            else:
                ET.SubElement(root, "path", {"class": cls, "d": self._path_data(payload, sx, scale, (x0, y0, x1, y1))})
        ET.indent(root)
        return ET.tostring(root, encoding="unicode", xml_declaration=False) + "\n"

    def _path_data(self, payload, sx, scale, box):
        kind = payload[0]
        if kind == "poly":
            pts, closed = payload[1], payload[2]
            d = "M " + " L ".join(" ".join(sx(p)) for p in pts)
            return d + (" Z" if closed else "")
        if kind == "runs":
            return " ".join("M " + " L ".join(" ".join(sx(p)) for p in run) for run in payload[1] if len(run) > 1)
        if kind == "eline":
            (bx, by), (dx, dy) = payload[1], payload[2]
            reach = 2 * max(box[2] - box[0], box[3] - box[1]) + math.hypot(bx, by)
            a, b = (bx - reach * dx, by - reach * dy), (bx + reach * dx, by + reach * dy)
            return f"M {' '.join(sx(a))} L {' '.join(sx(b))}"
        _, u, v = payload
        return _disk_arc(u, v, sx, scale)


def _disk_arc(u, v, sx, scale):
    """Poincare-disk geodesic from u to v: an arc orthogonal to the unit circle."""
    cross = u[0] * v[1] - u[1] * v[0]
    if abs(cross) < 1e-9 * max(1.0, math.hypot(*u) * math.hypot(*v)):
        return f"M {' '.join(sx(u))} L {' '.join(sx(v))}"
    # centre c with c.u = (|u|^2 + 1)/2 and c.v = (|v|^2 + 1)/2
    ru = (u[0] ** 2 + u[1] ** 2 + 1) / 2
    rv = (v[0] ** 2 + v[1] ** 2 + 1) / 2
    cx = (ru * v[1] - rv * u[1]) / cross
    cy = (rv * u[0] - ru * v[0]) / cross
    r = math.sqrt(max(cx * cx + cy * cy - 1.0, 0.0))
    turn = (u[0] - cx) * (v[1] - cy) - (u[1] - cy) * (v[0] - cx)
    sweep = 0 if turn > 0 else 1
    return f"M {' '.join(sx(u))} A {_fmt(r * scale)} {_fmt(r * scale)} 0 0 {sweep} {' '.join(sx(v))}"
