"""Six-node wedge geometry: shape functions, jacobian, metric polynomial."""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import _kernels

#: natural positions of nodes 1..6 (bottom triangle at zeta=-1, top at +1)
NODE_POSITIONS = np.array([
    [0.0, 0.0, -1.0],
    [1.0, 0.0, -1.0],
    [0.0, 1.0, -1.0],
    [0.0, 0.0, 1.0],
    [1.0, 0.0, 1.0],
    [0.0, 1.0, 1.0],
])
NODE_POSITIONS.flags.writeable = False

CENTROID = (1.0 / 3.0, 1.0 / 3.0, 0.0)

#: exponents (xi, eta, zeta) of the metric polynomial terms, in coefficient order
METRIC_MONOMIALS = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
                    (1, 0, 1), (0, 1, 1), (0, 0, 2))


@dataclass(frozen=True)
class NaturalPoint:
    xi: float
    eta: float
    zeta: float

    def inside(self, tol=0.0):
        """True if the point lies in the reference wedge (points outside are legal)."""
        return (self.xi >= -tol and self.eta >= -tol
                and self.xi + self.eta <= 1.0 + tol
                and -1.0 - tol <= self.zeta <= 1.0 + tol)

    def as_array(self):
        return np.array([self.xi, self.eta, self.zeta], dtype=float)


def _point_array(p):
    if isinstance(p, NaturalPoint):
        return p.as_array()
    return np.asarray(p, dtype=float)


@dataclass(frozen=True)
class WedgeElement:
    """Six nodes (rows) in global Cartesian coordinates plus a uniform density."""

    nodes: np.ndarray
    density: float = 1.0

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        if nodes.shape != (6, 3):
            raise ValueError(f"wedge needs 6x3 nodal coordinates, got shape {nodes.shape}")
        if not np.all(np.isfinite(nodes)):
            raise ValueError("nodal coordinates must be finite")
        nodes.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "density", float(self.density))

    @classmethod
    def from_coords(cls, coords, density=1.0):
        """Build from 18 numbers ordered x1, y1, z1, x2, ..., z6."""
        coords = np.asarray(coords, dtype=float).ravel()
        if coords.size != 18:
            raise ValueError(f"expected 18 coordinates, got {coords.size}")
        return cls(coords.reshape(6, 3), density)

    def ex_sample_metrics(self):
        # local import: metric.py depends on this module
        from .metric import EX_POINTS
        return _kernels.jacobian_dets(self.nodes[None], EX_POINTS)[0]

    def is_valid(self):
        """Metric strictly positive at the six nodes and the centroid."""
        return bool(np.all(self.ex_sample_metrics() > 0.0))

    def first_invalid_point(self):
        """(index, natural point) of the first non-positive EX sample, or None."""
        from .metric import EX_POINTS
        dets = self.ex_sample_metrics()
        for k, d in enumerate(dets):
            if not d > 0.0:
                return k, NaturalPoint(*EX_POINTS[k])
        return None


def as_nodes(element):
    if isinstance(element, WedgeElement):
        return element.nodes
    nodes = np.asarray(element, dtype=float)
    if nodes.shape != (6, 3):
        raise ValueError(f"wedge needs 6x3 nodal coordinates, got shape {nodes.shape}")
    return nodes


def shape_values(p):
    """Shape functions phi^1..phi^6 at a natural point; also accepts (n, 3) arrays."""
    x = _point_array(p)
    xi, eta, zeta = x[..., 0], x[..., 1], x[..., 2]
    tri = 1.0 - xi - eta
    lo = 0.5 * (1.0 - zeta)
    hi = 0.5 * (1.0 + zeta)
    return np.stack([tri * lo, xi * lo, eta * lo, tri * hi, xi * hi, eta * hi], axis=-1)


def shape_gradients(p):
    """(6, 3) derivatives d(phi^i)/d(xi, eta, zeta)."""
    x = _point_array(p)
    grads = _kernels.shape_gradients(np.atleast_2d(x))
    return grads[0] if x.ndim == 1 else grads


def det3(m):
    """Determinant by the six-term cofactor expansion."""
    return _kernels.numpy_impl.det3(np.asarray(m, dtype=float))


def jacobian_matrix(element, p):
    """J[m, n] = d(X . e_m) / d(xi_n) at natural point p."""
    return as_nodes(element).T @ shape_gradients(p)


def metric(element, p):
    """Jacobian determinant at p."""
    return float(det3(jacobian_matrix(element, p)))


@dataclass(frozen=True)
class JacobianDecomposition:
    """J(xi, eta, zeta) = J0 + xi*J1 + eta*J2 + zeta*J3."""

    J0: np.ndarray
    J1: np.ndarray
    J2: np.ndarray
    J3: np.ndarray

    def at(self, p):
        xi, eta, zeta = _point_array(p)
        return self.J0 + xi * self.J1 + eta * self.J2 + zeta * self.J3

    def stack(self):
        return np.stack([self.J0, self.J1, self.J2, self.J3])


def _gradient_basis():
    # shape gradients are affine in (xi, eta, zeta); read off the four parts
    g0 = shape_gradients((0.0, 0.0, 0.0))
    return np.stack([g0,
                     shape_gradients((1.0, 0.0, 0.0)) - g0,
                     shape_gradients((0.0, 1.0, 0.0)) - g0,
                     shape_gradients((0.0, 0.0, 1.0)) - g0])


_GRADIENT_BASIS = _gradient_basis()
_GRADIENT_BASIS.flags.writeable = False


def decompose_jacobian(element):
    nodes = as_nodes(element)
    parts = np.einsum("im,kin->kmn", nodes, _GRADIENT_BASIS)
    return JacobianDecomposition(*parts)


@dataclass(frozen=True)
class MetricPoly:
    """J = j0 + j1*xi + j2*eta + j3*zeta + j4*xi*zeta + j5*eta*zeta + j6*zeta**2.

    ``residual`` is the largest coefficient of any other cubic monomial found
    during expansion; it vanishes up to roundoff for every wedge.
    """

    coeffs: np.ndarray
    residual: float = field(default=0.0)

    def __call__(self, p):
        x = _point_array(p)
        xi, eta, zeta = x[..., 0], x[..., 1], x[..., 2]
        j = self.coeffs
        return (j[0] + j[1] * xi + j[2] * eta + j[3] * zeta
                + j[4] * xi * zeta + j[5] * eta * zeta + j[6] * zeta * zeta)

    def __iter__(self):
        return iter(self.coeffs.tolist())

    def __getitem__(self, k):
        return self.coeffs[k]


# monomials of (1, xi, eta, zeta)-products of degree 3 keyed by the
# exponent triple; index 0 stands for the constant factor
_VAR_EXPONENT = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def metric_poly_coefficients(nodes):
    """Batch metric-polynomial expansion.

    Each jacobian column is an affine combination of the decomposition parts,
    so the determinant expands multilinearly into 64 column-pick determinants.
    Returns ``(coeffs, residual)`` with coeffs of shape (n, 7) and residual of
    shape (n,) holding the largest stray (non-canonical) monomial coefficient.
    """
    nodes = np.asarray(nodes, dtype=float)
    parts = np.einsum("eim,kin->ekmn", nodes, _GRADIENT_BASIS)
    terms = {}
    for k1, k2, k3 in product(range(4), repeat=3):
        cols = np.stack([parts[:, k1, :, 0], parts[:, k2, :, 1], parts[:, k3, :, 2]], axis=-1)
        d = _kernels.numpy_impl.det3(cols)
        key = tuple(np.add(np.add(_VAR_EXPONENT[k1], _VAR_EXPONENT[k2]), _VAR_EXPONENT[k3]))
        terms[key] = terms.get(key, 0.0) + d
    n = nodes.shape[0]
    coeffs = np.stack([terms.get(m, np.zeros(n)) for m in METRIC_MONOMIALS], axis=-1)
    stray = [np.abs(v) for key, v in terms.items() if key not in METRIC_MONOMIALS]
    residual = np.max(np.stack(stray), axis=0) if stray else np.zeros(n)
    return coeffs, residual


def metric_poly(element):
    coeffs, residual = metric_poly_coefficients(as_nodes(element)[None])
    return MetricPoly(coeffs[0], float(residual[0]))


def random_element(rng, perturbation=0.2, density=1.0, max_tries=1000):
    """Random valid wedge: perturbed reference nodes under a random affine map.

    The affine part has positive determinant; perturbations are uniform in
    [-perturbation, perturbation] per coordinate. Draws until the validity
    predicate holds.
    """
    for _ in range(max_tries):
        a = rng.normal(size=(3, 3))
        if np.linalg.det(a) < 0:
            a[:, 0] = -a[:, 0]
        if abs(np.linalg.det(a)) < 0.1:
            continue
        local = NODE_POSITIONS + rng.uniform(-perturbation, perturbation, size=(6, 3))
        nodes = local @ a.T + rng.normal(size=3)
        e = WedgeElement(nodes, density)
        if e.is_valid():
            return e
    raise RuntimeError("could not draw a valid element; lower the perturbation")
