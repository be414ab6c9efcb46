"""Constant, linear (4-point) and exact (7-point) metric interpolations."""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .element import CENTROID, NODE_POSITIONS, _point_array, as_nodes

CM_POINTS = np.array([CENTROID])
LM_POINTS = np.array([
    [1 / 12, 1 / 12, -1 / 4],
    [13 / 12, 1 / 12, -1 / 4],   # outside the reference wedge
    [1 / 12, 13 / 12, -1 / 4],   # outside the reference wedge
    [1 / 12, 1 / 12, 3 / 4],
])
# The seventh EX sample sits at the natural origin (midpoint of edge 1-4),
# where the metric equals its constant coefficient. Only there does the
# seven-term interpolant below reproduce the metric polynomial identically;
# sampling the centroid instead leaves an O(1) error proportional to
# (1 - zeta**2) * (j1 + j2) / 3.
EX_CENTER = (0.0, 0.0, 0.0)
EX_POINTS = np.vstack([NODE_POSITIONS, [EX_CENTER]])

SAMPLE_POINTS = {"cm": CM_POINTS, "lm": LM_POINTS, "ex": EX_POINTS}
for _pts in SAMPLE_POINTS.values():
    _pts.flags.writeable = False


@dataclass(frozen=True)
class MetricSamples:
    scheme: str
    values: np.ndarray

    def __post_init__(self):
        if self.scheme not in SAMPLE_POINTS:
            raise ValueError(f"unknown interpolation {self.scheme!r}")
        values = np.array(self.values, dtype=float).ravel()
        if values.size != len(SAMPLE_POINTS[self.scheme]):
            raise ValueError(f"{self.scheme} takes {len(SAMPLE_POINTS[self.scheme])} samples, "
                             f"got {values.size}")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)


def sample_metrics(nodes, scheme):
    """(n, k) sampled metrics for a batch of (n, 6, 3) elements."""
    return _kernels.jacobian_dets(nodes, SAMPLE_POINTS[scheme])


def _sample(element, scheme):
    return MetricSamples(scheme, sample_metrics(as_nodes(element)[None], scheme)[0])


def sample_cm(element):
    return _sample(element, "cm")


def sample_lm(element):
    return _sample(element, "lm")


def sample_ex(element):
    return _sample(element, "ex")


def interpolation_weights(scheme, p):
    """Coefficient functions multiplying each sample, evaluated at p.

    Works on a single point or an (n, 3) array, returning (..., k).
    """
    x = _point_array(p)
    xi, eta, zeta = x[..., 0], x[..., 1], x[..., 2]
    if scheme == "cm":
        return np.ones(x.shape[:-1] + (1,))
    if scheme == "lm":
        return np.stack([11 / 12 - xi - eta - zeta, -1 / 12 + xi, -1 / 12 + eta, 1 / 4 + zeta],
                        axis=-1)
    if scheme == "ex":
        return np.stack([
            0.5 * (-xi - eta - zeta + xi * zeta + eta * zeta + zeta * zeta),
            0.5 * (xi - xi * zeta),
            0.5 * (eta - eta * zeta),
            -0.5 * (xi + eta - zeta + xi * zeta + eta * zeta - zeta * zeta),
            0.5 * (xi + xi * zeta),
            0.5 * (eta + eta * zeta),
            1.0 - zeta * zeta,
        ], axis=-1)
    raise ValueError(f"unknown interpolation {scheme!r}")


def evaluate_interpolant(samples, p):
    return interpolation_weights(samples.scheme, p) @ samples.values
