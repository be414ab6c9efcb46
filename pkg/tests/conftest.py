import numpy as np
import pytest

from wedgemass import _kernels
from wedgemass.element import NODE_POSITIONS, WedgeElement, random_element


@pytest.fixture(params=["numpy", "numba"])
def backend(request, monkeypatch):
    """Run a test once per kernel implementation."""
    impl = _kernels.numpy_impl if request.param == "numpy" else _kernels.numba_impl
    if impl is None:
        pytest.skip("numba not installed")
    monkeypatch.setattr(_kernels, "BACKEND", impl)
    return impl


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def identity_element():
    return WedgeElement(NODE_POSITIONS)


@pytest.fixture
def random_elements(rng):
    return [random_element(rng) for _ in range(100)]


def affine_element(rng, density=1.0):
    """Nodes = A @ natural position + b, det A > 0. Returns (element, det A)."""
    a = rng.normal(size=(3, 3))
    if np.linalg.det(a) < 0:
        a[:, 0] *= -1
    return WedgeElement(NODE_POSITIONS @ a.T + rng.normal(size=3), density), np.linalg.det(a)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
