"""Element mass matrices: closed-form CM/LM/EX rules and Gauss quadrature."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .coefficients import FLOAT_TABLES
from .element import as_nodes, shape_values
from .errors import UnknownSchemeError
from .metric import sample_metrics


class Scheme(str, enum.Enum):
    CM = "cm"
    LM = "lm"
    EX = "ex"
    GAUSS2 = "gauss2"
    GAUSS9 = "gauss9"
    REFERENCE = "reference"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UnknownSchemeError(
                f"unknown scheme {value!r}; choose from {', '.join(s.value for s in cls)}"
            ) from None

    @property
    def closed_form(self):
        return self in (Scheme.CM, Scheme.LM, Scheme.EX)


KINDS = ("consistent", "lumped")


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


@dataclass(frozen=True)
class QuadratureRule:
    points: np.ndarray   # (p, 3) natural coordinates
    weights: np.ndarray  # (p,), sum to the reference volume 1

    def __len__(self):
        return len(self.weights)


def _tensor_rule(tri_points, tri_weights, line_points, line_weights):
    pts, wts = [], []
    for (xi, eta), wt in zip(tri_points, tri_weights):
        for zeta, wl in zip(line_points, line_weights):
            pts.append((xi, eta, zeta))
            wts.append(wt * wl)
    points = np.array(pts, dtype=float)
    weights = np.array(wts, dtype=float)
    points.flags.writeable = False
    weights.flags.writeable = False
    return QuadratureRule(points, weights)


def _collapsed_triangle(n):
    """Conical-product Gauss rule on the unit triangle, exact to degree 2n - 2."""
    x, w = np.polynomial.legendre.leggauss(n)
    u, wu = 0.5 * (x + 1.0), 0.5 * w
    pts, wts = [], []
    for ui, wi in zip(u, wu):
        for vj, wj in zip(u, wu):
            pts.append((ui, (1.0 - ui) * vj))
            wts.append(wi * wj * (1.0 - ui))
    return pts, wts


def _build_rules():
    g2 = 1.0 / math.sqrt(3.0)
    g3 = math.sqrt(3.0 / 5.0)
    line3 = ([-g3, 0.0, g3], [5 / 9, 8 / 9, 5 / 9])
    return {
        Scheme.GAUSS2: _tensor_rule([(1 / 3, 1 / 3)], [0.5], [-g2, g2], [1.0, 1.0]),
        Scheme.GAUSS9: _tensor_rule([(1 / 6, 1 / 6), (2 / 3, 1 / 6), (1 / 6, 2 / 3)],
                                    [1 / 6] * 3, *line3),
        # integrand is cubic in (xi, eta) and quartic in zeta
        Scheme.REFERENCE: _tensor_rule(*_collapsed_triangle(3), *line3),
    }


_RULES = _build_rules()


def gauss_rule(scheme):
    scheme = Scheme.parse(scheme)
    if scheme not in _RULES:
        raise UnknownSchemeError(f"{scheme.value} is not a quadrature rule")
    return _RULES[scheme]


def evaluation_count(scheme):
    """Number of metric evaluations a scheme needs per element."""
    scheme = Scheme.parse(scheme)
    if scheme.closed_form:
        return {Scheme.CM: 1, Scheme.LM: 4, Scheme.EX: 7}[scheme]
    return len(_RULES[scheme])


def _quadrature_tables(rule, kind):
    phi = shape_values(rule.points)
    if kind == "consistent":
        return phi[:, :, None] * phi[:, None, :]
    return phi


_QUAD_TABLES = {(s, k): _quadrature_tables(r, k) for s, r in _RULES.items() for k in KINDS}


def element_masses(nodes, scheme, kind="consistent", density=1.0):
    """Mass matrices for a batch of elements.

    Parameters
    ----------
    nodes : array_like, shape (n, 6, 3)
    scheme : Scheme or str
    kind : {"consistent", "lumped"}
    density : float

    Returns
    -------
    ndarray of shape (n, 6, 6) for consistent, (n, 6) for lumped.
    """
    scheme = Scheme.parse(scheme)
    _check_kind(kind)
    nodes = np.asarray(nodes, dtype=float)
    if scheme.closed_form:
        samples = sample_metrics(nodes, scheme.value)
        table, divisor = FLOAT_TABLES[(scheme.value, kind)]
        return _kernels.weighted_sum(samples, table) * (density / divisor)
    rule = _RULES[scheme]
    samples = _kernels.jacobian_dets(nodes, rule.points) * rule.weights
    return _kernels.weighted_sum(samples, _QUAD_TABLES[(scheme, kind)]) * density


def _single(element, scheme, kind, density):
    if density is None:
        density = getattr(element, "density", 1.0)
    return element_masses(as_nodes(element)[None], scheme, kind, density)[0]


def consistent_mass(element, scheme, density=None):
    """6x6 consistent mass matrix; density defaults to the element's own."""
    return _single(element, scheme, "consistent", density)


def lumped_mass(element, scheme, density=None):
    """Diagonal of the lumped mass matrix as a 6-vector."""
    return _single(element, scheme, "lumped", density)


def consistent_cm(element, density=None):
    return consistent_mass(element, Scheme.CM, density)


def lumped_cm(element, density=None):
    return lumped_mass(element, Scheme.CM, density)


def consistent_lm(element, density=None):
    return consistent_mass(element, Scheme.LM, density)


def lumped_lm(element, density=None):
    return lumped_mass(element, Scheme.LM, density)


def consistent_ex(element, density=None):
    return consistent_mass(element, Scheme.EX, density)


def lumped_ex(element, density=None):
    return lumped_mass(element, Scheme.EX, density)


def consistent_quadrature(element, rule, density=None):
    """Consistent mass by an arbitrary quadrature rule (Scheme id or QuadratureRule)."""
    return _quadrature(element, rule, "consistent", density)


def lumped_quadrature(element, rule, density=None):
    return _quadrature(element, rule, "lumped", density)


def _quadrature(element, rule, kind, density):
    if density is None:
        density = getattr(element, "density", 1.0)
    if not isinstance(rule, QuadratureRule):
        rule = gauss_rule(rule)
    if len(rule) == 0:
        raise ValueError("quadrature rule has no points")
    samples = _kernels.jacobian_dets(as_nodes(element)[None], rule.points) * rule.weights
    return _kernels.weighted_sum(samples, _quadrature_tables(rule, kind))[0] * density
