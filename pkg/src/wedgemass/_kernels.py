"""Hot inner loops, compiled with numba when available.

Set ``WEDGEMASS_DISABLE_NUMBA=1`` before import to force the pure-numpy
path. Both implementations are always importable as ``numba_impl`` and
``numpy_impl`` so tests and benchmarks can compare them directly.
"""

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

DISABLE_NUMBA = os.environ.get("WEDGEMASS_DISABLE_NUMBA", "").lower() in {"1", "true", "yes"}


# ---------------------------------------------------------------------------
# pure numpy
# ---------------------------------------------------------------------------

def shape_gradients(points):
    """(p, 6, 3) natural-coordinate gradients of the six shape functions."""
    xi, eta, zeta = points[:, 0], points[:, 1], points[:, 2]
    lo = 0.5 * (1.0 - zeta)
    hi = 0.5 * (1.0 + zeta)
    tri = 0.5 * (1.0 - xi - eta)
    zero = np.zeros_like(xi)
    g = np.stack([
        np.stack([-lo, -lo, -tri], axis=-1),
        np.stack([lo, zero, -0.5 * xi], axis=-1),
        np.stack([zero, lo, -0.5 * eta], axis=-1),
        np.stack([-hi, -hi, tri], axis=-1),
        np.stack([hi, zero, 0.5 * xi], axis=-1),
        np.stack([zero, hi, 0.5 * eta], axis=-1),
    ], axis=1)
    return g


def _np_det3(j):
    # cofactor expansion, term order as in the element reference formula
    return (j[..., 0, 0] * j[..., 1, 1] * j[..., 2, 2]
            - j[..., 0, 0] * j[..., 1, 2] * j[..., 2, 1]
            - j[..., 2, 0] * j[..., 1, 1] * j[..., 0, 2]
            - j[..., 1, 0] * j[..., 0, 1] * j[..., 2, 2]
            + j[..., 1, 0] * j[..., 2, 1] * j[..., 0, 2]
            + j[..., 2, 0] * j[..., 0, 1] * j[..., 1, 2])


def _np_jacobian_dets(nodes, points):
    grads = shape_gradients(points)
    jac = np.einsum("eim,pin->epmn", nodes, grads)
    return _np_det3(jac)


def _np_weighted_sum(samples, coefs):
    return samples @ coefs



numpy_impl = SimpleNamespace(
    name="numpy",
    det3=_np_det3,
    jacobian_dets=_np_jacobian_dets,
    weighted_sum=_np_weighted_sum,
)


# ---------------------------------------------------------------------------
# numba
# ---------------------------------------------------------------------------

if numba is not None:

    @numba.njit(cache=True)
    def _nb_det3(j):
        return (j[0, 0] * j[1, 1] * j[2, 2]
                - j[0, 0] * j[1, 2] * j[2, 1]
                - j[2, 0] * j[1, 1] * j[0, 2]
                - j[1, 0] * j[0, 1] * j[2, 2]
                + j[1, 0] * j[2, 1] * j[0, 2]
                + j[2, 0] * j[0, 1] * j[1, 2])

    @numba.njit(cache=True)
    def _nb_jacobian_dets(nodes, points):
        ne = nodes.shape[0]
        npt = points.shape[0]
        out = np.empty((ne, npt))
        g = np.empty((6, 3))
        jac = np.empty((3, 3))
        for p in range(npt):
            xi = points[p, 0]
            eta = points[p, 1]
            zeta = points[p, 2]
            lo = 0.5 * (1.0 - zeta)
            hi = 0.5 * (1.0 + zeta)
            tri = 0.5 * (1.0 - xi - eta)
            g[0, 0] = -lo
            g[0, 1] = -lo
            g[0, 2] = -tri
            g[1, 0] = lo
            g[1, 1] = 0.0
            g[1, 2] = -0.5 * xi
            g[2, 0] = 0.0
            g[2, 1] = lo
            g[2, 2] = -0.5 * eta
            g[3, 0] = -hi
            g[3, 1] = -hi
            g[3, 2] = tri
            g[4, 0] = hi
            g[4, 1] = 0.0
            g[4, 2] = 0.5 * xi
            g[5, 0] = 0.0
            g[5, 1] = hi
            g[5, 2] = 0.5 * eta
            for e in range(ne):
                for m in range(3):
                    for n in range(3):
                        s = 0.0
                        for i in range(6):
                            s += nodes[e, i, m] * g[i, n]
                        jac[m, n] = s
                out[e, p] = _nb_det3(jac)
        return out

    @numba.njit(cache=True)
    def _nb_weighted_sum(samples, coefs):
        ne, nk = samples.shape
        m = coefs.shape[1]
        out = np.zeros((ne, m))
        for e in range(ne):
            for k in range(nk):
                s = samples[e, k]
                for i in range(m):
                    out[e, i] += s * coefs[k, i]
        return out

    def _nb_det3_batch(j):
        j = np.asarray(j, dtype=np.float64)
        if j.ndim == 2:
            return _nb_det3(j)
        flat = j.reshape(-1, 3, 3)
        return np.array([_nb_det3(m) for m in flat]).reshape(j.shape[:-2])

    numba_impl = SimpleNamespace(
        name="numba",
        det3=_nb_det3_batch,
        jacobian_dets=_nb_jacobian_dets,
        weighted_sum=_nb_weighted_sum,
    )
else:  # pragma: no cover
    numba_impl = None


def active():
    """The implementation selected at import time."""
    if DISABLE_NUMBA or numba_impl is None:
        return numpy_impl
    return numba_impl


BACKEND = active()


def jacobian_dets(nodes, points):
    """Metric at each point for a batch of elements.

    nodes: (n, 6, 3) float64, points: (p, 3) float64 -> (n, p).
    """
    return BACKEND.jacobian_dets(np.ascontiguousarray(nodes, dtype=np.float64),
                                 np.ascontiguousarray(points, dtype=np.float64))


def weighted_sum(samples, coefs):
    """out[e] = sum_k samples[e, k] * coefs[k]; coefs may carry any trailing shape."""
    coefs = np.asarray(coefs, dtype=np.float64)
    flat = np.ascontiguousarray(coefs.reshape(coefs.shape[0], -1))
    out = BACKEND.weighted_sum(np.ascontiguousarray(samples, dtype=np.float64), flat)
    return out.reshape((out.shape[0],) + coefs.shape[1:])


def det3(j):
    return BACKEND.det3(j)
