import numpy as np
import pytest
from hypothesis import strategies as st

from quatbound.qmat import QMatrix
from quatbound.qpoly import RightPolynomial
from quatbound.quat import ONE, Quaternion

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)


def rand_quat(rng, scale=1.0):
    return Quaternion(*(rng.standard_normal(4) * scale))


def rand_matrix(rng, m, n, scale=1.0):
    return QMatrix(rng.standard_normal((m, n, 4)) * scale)


def rand_monic(rng, n, scale=1.0):
    return RightPolynomial([rand_quat(rng, scale) for _ in range(n)] + [ONE])


def rpoly(*coeffs):
    """Right polynomial from ascending coefficients given as reals or quaternions."""
    return RightPolynomial([Quaternion.coerce(c) for c in coeffs])


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
