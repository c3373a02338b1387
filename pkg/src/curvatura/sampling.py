"""Seeded random instances for property checks.

Every stream is derived from a (seed, label) pair through SHA-256, so
results do not depend on the order or concurrency in which streams are
consumed.
"""

from __future__ import annotations

import hashlib
import math
import random

from curvatura import geom
from curvatura.errors import DegenerateAngle
from curvatura.geom import Kind, SpaceForm

SPACES = {
    "spherical": SpaceForm.spherical,
    "euclidean": SpaceForm.euclidean,
    "hyperbolic": SpaceForm.hyperbolic,
}


def stream(seed: int, *labels) -> random.Random:
    key = ":".join([str(seed), *map(str, labels)]).encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:8], "big"))


def reach(space: SpaceForm) -> float:
    """Default sampling radius around the origin.

    Spherical samples stay in the open hemisphere about the origin, and
    hyperbolic samples stay where model coordinates keep full precision.
    """
    return {Kind.SPHERICAL: 1.2, Kind.EUCLIDEAN: 3.0, Kind.HYPERBOLIC: 2.5}[space.kind] * (
        space.radius if space.curved else 1.0
    )


def random_point(space: SpaceForm, rng: random.Random, max_dist: float | None = None) -> geom.Point:
    r = reach(space) if max_dist is None else max_dist
    # area-uniform in the Euclidean sense; good enough spread for checks
    t = r * math.sqrt(rng.random())
    return geom.walk(space, space.direction(rng.uniform(-math.pi, math.pi)), t)


def random_direction(space: SpaceForm, rng: random.Random, p: geom.Point) -> geom.TangentDir:
    """Uniformly random unit direction at ``p``."""
    if space.curved:
        v = geom._tangent(space, p, (0.0, 1.0, 0.0)) or geom._tangent(space, p, (0.0, 0.0, 1.0))
        frame = geom.TangentDir(p, v)
    else:
        frame = geom.TangentDir(p, (1.0, 0.0))
    return geom.rotate(space, frame, rng.uniform(-math.pi, math.pi))


def random_line(space: SpaceForm, rng: random.Random, max_dist: float | None = None) -> geom.Line:
    p = random_point(space, rng, max_dist)
    return geom.Line(p, random_direction(space, rng, p))


def random_triangle(space: SpaceForm, rng: random.Random, max_dist: float | None = None, min_angle: float = 0.02):
    """Three points forming a triangle with every angle at least ``min_angle``."""
    while True:
        p, q, r = (random_point(space, rng, max_dist) for _ in range(3))
        try:
            angles = (
                geom.angle_at(space, p, q, r),
                geom.angle_at(space, q, r, p),
                geom.angle_at(space, r, p, q),
            )
        except DegenerateAngle:
            continue
        if min(angles) >= min_angle:
            return p, q, r


def random_isometry(space: SpaceForm, rng: random.Random, max_shift: float = 2.0):
    """Rotation, translation along the first axis, rotation."""
    scale = space.radius if space.curved else 1.0
    return geom.compose(
        geom.rotation(space, rng.uniform(-math.pi, math.pi)),
        geom.compose(
            geom.translation(space, rng.uniform(0.0, max_shift) * scale),
            geom.rotation(space, rng.uniform(-math.pi, math.pi)),
        ),
    )
