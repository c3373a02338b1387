"""Imaginary-radius transport between spherical and hyperbolic identities.

Each registered identity has a spherical and a hyperbolic residual (left
side minus right side), both written on reduced lengths. The spherical
residual is written once with :mod:`cmath` so it can be evaluated at purely
imaginary sides; ``cos(ix) = cosh x`` and ``sin(ix) = i sinh x`` then turn it
into the hyperbolic residual. Complex numbers never leave this module.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from curvatura import trig
from curvatura.errors import BranchError, DomainError, UnrealizableAngles
from curvatura.geom import SpaceForm


class IdentityId(str, Enum):
    LAW_OF_COSINES = "LawOfCosines"
    RIGHT_TRIANGLE_PYTHAGORAS = "RightTrianglePythagoras"
    GIRARD_AREA = "GirardArea"


def _scaled(lhs, *terms):
    """Residual lhs - sum(terms), relative to the size of the terms involved."""
    scale = 1.0 + abs(lhs) + sum(abs(t) for t in terms)
    return (lhs - sum(terms)) / scale


# Law of cosines: sides (a, b, c), angles (A, ...), A opposite a.
def _loc_spherical(sides, angles):
    a, b, c = sides
    return _scaled(cmath.cos(a), cmath.cos(b) * cmath.cos(c), cmath.sin(b) * cmath.sin(c) * math.cos(angles[0]))


def _loc_hyperbolic(sides, angles):
    a, b, c = sides
    return _scaled(math.cosh(a), math.cosh(b) * math.cosh(c), -math.sinh(b) * math.sinh(c) * math.cos(angles[0]))


# Right triangle: legs (a, b) and hypotenuse c.
def _pyth_spherical(sides, angles):
    a, b, c = sides
    return _scaled(cmath.cos(c), cmath.cos(a) * cmath.cos(b))


def _pyth_hyperbolic(sides, angles):
    a, b, c = sides
    return _scaled(math.cosh(c), math.cosh(a) * math.cosh(b))


# Girard: the single "side" is the radius r; the left side is the
# hyperbolic area computed by the trig module on a plane of radius r.
def _girard_lhs(r, angles):
    return trig.area_from_angles(SpaceForm.hyperbolic(r), *angles)


def _girard_spherical(sides, angles):
    r = sides[0]
    rho = abs(r)  # the hyperbolic plane being compared has real radius |r|
    return _scaled(_girard_lhs(rho, angles), r * r * (sum(angles) - math.pi))


def _girard_hyperbolic(sides, angles):
    r = sides[0]
    return _scaled(_girard_lhs(r, angles), r * r * (math.pi - sum(angles)))


_REGISTRY = {
    IdentityId.LAW_OF_COSINES: (_loc_spherical, _loc_hyperbolic),
    IdentityId.RIGHT_TRIANGLE_PYTHAGORAS: (_pyth_spherical, _pyth_hyperbolic),
    IdentityId.GIRARD_AREA: (_girard_spherical, _girard_hyperbolic),
}


def register(identity, spherical, hyperbolic):
    """Add an identity to the registry (both residuals take ``(sides, angles)``)."""
    _REGISTRY[identity] = (spherical, hyperbolic)


def residuals(identity):
    return _REGISTRY[IdentityId(identity) if isinstance(identity, str) else identity]


@dataclass(frozen=True)
class TransportReport:
    identity: IdentityId
    sides: tuple
    angles: tuple
    spherical_at_imaginary: complex
    hyperbolic_residual: float
    max_imag_part: float
    tol: float

    @property
    def agreement(self) -> float:
        return abs(self.spherical_at_imaginary.real - self.hyperbolic_residual)

    @property
    def passed(self) -> bool:
        return (
            self.agreement <= self.tol
            and self.max_imag_part <= self.tol
            and abs(self.hyperbolic_residual) <= self.tol
        )


def _prepare(identity, sides, angles):
    sides = tuple(float(x) for x in sides)
    angles = tuple(float(x) for x in angles)
    if not all(math.isfinite(x) for x in sides + angles):
        raise DomainError("inputs must be finite")
    if identity is IdentityId.RIGHT_TRIANGLE_PYTHAGORAS and len(sides) == 2:
        a, b = sides
        sides = (a, b, math.acosh(math.cosh(a) * math.cosh(b)))
    return sides, angles


def _evaluate(fn, sides, angles):
    value = complex(fn(sides, angles))
    if not (cmath.isfinite(value)):
        raise BranchError("transported evaluation left the principal-branch domain")
    return value


def transport_check(identity, reduced_sides, angles=(), tol: float = 1e-10) -> TransportReport:
    """Evaluate the spherical residual at i*x and the hyperbolic one at x.

    ``reduced_sides`` are hyperbolic lengths divided by the radius (for
    GirardArea, the radius itself). The report passes when the two
    residuals agree within ``tol``, the transported value is real within
    ``tol`` and the hyperbolic identity itself holds within ``tol``.
    """
    identity = IdentityId(identity)
    sides, angles = _prepare(identity, reduced_sides, angles)
    spherical, hyperbolic = _REGISTRY[identity]
    if any(x < 0 for x in sides):
        raise DomainError("reduced sides must be nonnegative")
    transported = _evaluate(spherical, tuple(1j * x for x in sides), angles)
    hyp = float(hyperbolic(sides, angles))
    return TransportReport(identity, sides, angles, transported, hyp, abs(transported.imag), tol)


def transport_twice(identity, reduced_sides, angles=()) -> tuple[complex, complex]:
    """Spherical residual at x and after two transports (x -> i*i*x = -x)."""
    identity = IdentityId(identity)
    sides, angles = _prepare(identity, reduced_sides, angles)
    spherical, _ = _REGISTRY[identity]
    once = tuple(1j * x for x in sides)
    twice = tuple(1j * z for z in once)
    return _evaluate(spherical, sides, angles), _evaluate(spherical, twice, angles)


def area_transport(R: float, angles) -> tuple[float, float]:
    """Girard's spherical area at radius iR next to the hyperbolic defect area.

    Both equal R^2 (pi - alpha - beta - gamma).
    """
    alpha, beta, gamma = (float(x) for x in angles)
    if not R > 0:
        raise DomainError("radius must be positive")
    if min(alpha, beta, gamma) < 0 or not alpha + beta + gamma < math.pi:
        raise UnrealizableAngles("hyperbolic angles must be nonnegative and sum to less than pi")
    r = 1j * R
    spherical = r * r * (alpha + beta + gamma - math.pi)
    if abs(spherical.imag) > 0.0:
        raise BranchError("imaginary-radius area is not real")
    return spherical.real, trig.area_from_angles(SpaceForm.hyperbolic(R), alpha, beta, gamma)
