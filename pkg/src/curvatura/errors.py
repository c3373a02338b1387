"""Exception hierarchy.

Every error carries a stable ``code`` string; the CLI reports it verbatim in
``{"ok": false, "error": {"code": ..., "detail": ...}}`` responses.
"""


class GeometryError(ValueError):
    code = "geometry-error"


class InvalidPoint(GeometryError):
    code = "invalid-point"


class DegenerateAngle(GeometryError):
    code = "degenerate-angle"


class PoleError(GeometryError):
    code = "pole"


class OffLine(GeometryError):
    code = "off-line"


class AntipodalError(GeometryError):
    code = "antipodal"


class DomainError(GeometryError):
    code = "domain"


class NotATriangle(GeometryError):
    code = "not-a-triangle"


class UnrealizableAngles(GeometryError):
    code = "unrealizable-angles"


class AreaNotDetermined(GeometryError):
    """Euclidean angles fix a triangle only up to similarity."""

    code = "area-not-determined-by-angles"


class NoCanonicalUnit(GeometryError):
    code = "no-canonical-unit"


class OutOfRange(GeometryError):
    code = "out-of-range"


class NoCircumcenter(GeometryError):
    code = "no-circumcenter"


class NoFourthVertex(GeometryError):
    """The two closing sides of a Lambert quadrilateral do not meet.

    ``pair`` is the :class:`~curvatura.geom.LinePairClass` of the two
    closing lines (common perpendicular or asymptotic).
    """

    code = "no-fourth-vertex"

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotApplicable(GeometryError):
    code = "not-applicable"


class DegenerateChain(GeometryError):
    code = "degenerate-chain"


class ConstructionMismatch(GeometryError):
    """Two independent routes to the same quantity disagree."""

    code = "construction-mismatch"


class BranchError(GeometryError):
    code = "branch"


class RenderDomain(GeometryError):
    code = "render-domain"


class SchemaError(ValueError):
    code = "schema"


class UnknownSuite(KeyError):
    code = "unknown-suite"
