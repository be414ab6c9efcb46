import numpy as np
import pytest

from wedgemass import _kernels
from wedgemass.element import NODE_POSITIONS
from wedgemass.mass import Scheme, element_masses

pytestmark = pytest.mark.skipif(_kernels.numba_impl is None, reason="numba not installed")


def test_backends_agree_on_dets(rng):
    nodes = NODE_POSITIONS + rng.normal(scale=0.3, size=(50, 6, 3))
    pts = rng.uniform(-1, 1, size=(13, 3))
    a = _kernels.numpy_impl.jacobian_dets(nodes, pts)
    b = _kernels.numba_impl.jacobian_dets(nodes, pts)
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=1e-15)


def test_backends_agree_on_weighted_sum(rng):
    s = rng.normal(size=(20, 7))
    c = rng.normal(size=(7, 36))
    np.testing.assert_allclose(_kernels.numpy_impl.weighted_sum(s, c),
                               _kernels.numba_impl.weighted_sum(s, c), rtol=1e-13)


def test_det3_backends(rng):
    m = rng.normal(size=(10, 3, 3))
    np.testing.assert_allclose(_kernels.numpy_impl.det3(m), _kernels.numba_impl.det3(m),
                               rtol=1e-14)
    np.testing.assert_allclose(_kernels.numpy_impl.det3(m), np.linalg.det(m), rtol=1e-12)


@pytest.mark.parametrize("scheme", list(Scheme))
def test_mass_backends_agree(scheme, rng, monkeypatch):
    nodes = NODE_POSITIONS + rng.uniform(-0.2, 0.2, size=(30, 6, 3))
    out = {}
    for impl in (_kernels.numpy_impl, _kernels.numba_impl):
        monkeypatch.setattr(_kernels, "BACKEND", impl)
        out[impl.name] = element_masses(nodes, scheme)
    np.testing.assert_allclose(out["numpy"], out["numba"], rtol=1e-13, atol=1e-17)


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setattr(_kernels, "DISABLE_NUMBA", True)
    assert _kernels.active() is _kernels.numpy_impl
    monkeypatch.setattr(_kernels, "DISABLE_NUMBA", False)
    assert _kernels.active() is _kernels.numba_impl
