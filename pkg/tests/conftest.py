import math
import sys

import pytest

from curvatura.geom import SpaceForm

S1 = SpaceForm.spherical(1.0)
E = SpaceForm.euclidean()
H1 = SpaceForm.hyperbolic(1.0)


@pytest.fixture(params=["spherical", "euclidean", "hyperbolic"])
def space(request):
    return {"spherical": S1, "euclidean": E, "hyperbolic": H1}[request.param]


def close(a, b, tol=1e-12):
    return all(math.isclose(x, y, rel_tol=tol, abs_tol=tol) for x, y in zip(a, b))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.report_line(number))
