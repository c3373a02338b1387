"""Backend selection for the model kernels.

The compiled extension is used when it imports; otherwise (or when the
``CURVATURA_PURE_PYTHON`` environment variable is set to a non-empty value
other than ``0``) the pure-Python module is used. Both expose the same
functions; see ``_pykernels`` for the conventions.
"""

import os

if os.environ.get("CURVATURA_PURE_PYTHON", "0") not in ("", "0"):
    from curvatura._pykernels import *  # noqa: F401,F403
    from curvatura._pykernels import BACKEND
else:
    try:
        from curvatura._ckernels import *  # noqa: F401,F403
        from curvatura._ckernels import BACKEND
    except ImportError:
        from curvatura._pykernels import *  # noqa: F401,F403
        from curvatura._pykernels import BACKEND

from curvatura._pykernels import gauss_legendre01  # noqa: F401,E402

__all__ = [
    "BACKEND",
    "form",
    "cross",
    "renormalize",
    "normalize",
    "distance",
    "exp_point",
    "tangent_unit",
    "tangent_angle",
    "triangle_area_quadrature",
    "gauss_legendre01",
]
