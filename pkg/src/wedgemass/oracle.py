"""Exact integration over the reference wedge with rational monomial integrals.

This path never samples the metric: it expands the integrand into monomials
of (xi, eta, zeta) and integrates each one in closed form. It is the ground
truth the closed-form rules and the quadrature rules are checked against.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .element import METRIC_MONOMIALS, as_nodes, metric_poly_coefficients

_FACTORIALS = tuple(factorial(n) for n in range(11))


@lru_cache(maxsize=None)
def monomial_integral(a, b, c):
    """Integral of xi**a * eta**b * zeta**c over the reference wedge, as a Fraction.

    Triangle part a! b! / (a + b + 2)!, line part over zeta in [-1, 1].
    """
    if min(a, b, c) < 0:
        raise ValueError("exponents must be non-negative")
    if a + b + 2 > 10:
        raise ValueError("degree too high for the precomputed factorial table")
    tri = Fraction(_FACTORIALS[a] * _FACTORIALS[b], _FACTORIALS[a + b + 2])
    line = Fraction(2, c + 1) if c % 2 == 0 else Fraction(0)
    return tri * line


class TriVarPoly:
    """Sparse polynomial in (xi, eta, zeta): {(a, b, c): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, value):
        return cls({(0, 0, 0): value})

    @classmethod
    def linear(cls, c0=0, cxi=0, ceta=0, czeta=0):
        return cls({(0, 0, 0): c0, (1, 0, 0): cxi, (0, 1, 0): ceta, (0, 0, 1): czeta})

    def __add__(self, other):
        if not isinstance(other, TriVarPoly):
            other = TriVarPoly.constant(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TriVarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TriVarPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TriVarPoly):
            return TriVarPoly({k: v * other for k, v in self.terms.items()})
        out = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in other.terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0) + v1 * v2
        return TriVarPoly(out)

    __rmul__ = __mul__

    def __call__(self, xi, eta, zeta):
        return sum(v * xi ** a * eta ** b * zeta ** c for (a, b, c), v in self.terms.items())

    def __eq__(self, other):
        return isinstance(other, TriVarPoly) and self.terms == other.terms

    def __repr__(self):
        return f"TriVarPoly({self.terms!r})"

    def integrate(self):
        """Exact integral over the reference wedge (Fraction for rational input)."""
        return sum((v * monomial_integral(*k) for k, v in self.terms.items()), Fraction(0))


XI = TriVarPoly({(1, 0, 0): 1})
ETA = TriVarPoly({(0, 1, 0): 1})
ZETA = TriVarPoly({(0, 0, 1): 1})
HALF = Fraction(1, 2)

SHAPE_POLYS = (
    HALF * (1 - XI - ETA) * (1 - ZETA),
    HALF * XI * (1 - ZETA),
    HALF * ETA * (1 - ZETA),
    HALF * (1 - XI - ETA) * (1 + ZETA),
    HALF * XI * (1 + ZETA),
    HALF * ETA * (1 + ZETA),
)

# interpolation coefficient functions, exact
INTERPOLATION_POLYS = {
    "cm": (TriVarPoly.constant(1),),
    "lm": (
        Fraction(11, 12) - XI - ETA - ZETA,
        Fraction(-1, 12) + XI,
        Fraction(-1, 12) + ETA,
        Fraction(1, 4) + ZETA,
    ),
    "ex": (
        HALF * (-XI - ETA - ZETA + XI * ZETA + ETA * ZETA + ZETA * ZETA),
        HALF * (XI - XI * ZETA),
        HALF * (ETA - ETA * ZETA),
        -HALF * (XI + ETA - ZETA + XI * ZETA + ETA * ZETA - ZETA * ZETA),
        HALF * (XI + XI * ZETA),
        HALF * (ETA + ETA * ZETA),
        1 - ZETA * ZETA,
    ),
}


def _monomial_poly(exps):
    return TriVarPoly({tuple(exps): 1})


def weighted_integrals(weight, kind="consistent"):
    """Exact integrals of weight * phi^i * phi^j (or weight * phi^i) as Fractions."""
    if kind == "consistent":
        return [[(weight * SHAPE_POLYS[i] * SHAPE_POLYS[j]).integrate() for j in range(6)]
                for i in range(6)]
    if kind == "lumped":
        return [(weight * SHAPE_POLYS[i]).integrate() for i in range(6)]
    raise ValueError(f"kind must be 'consistent' or 'lumped', got {kind!r}")


@lru_cache(maxsize=None)
def _metric_moment_tensor(kind):
    # (7, 6, 6) or (7, 6): exact integrals of phi products times each metric monomial
    rows = [weighted_integrals(_monomial_poly(m), kind) for m in METRIC_MONOMIALS]
    out = np.array([[[float(v) for v in r] for r in t] if kind == "consistent"
                    else [float(v) for v in t] for t in rows])
    out.flags.writeable = False
    return out


def exact_masses(nodes, kind="consistent", density=1.0):
    """Exact element mass matrices for a batch of (n, 6, 3) elements."""
    coeffs, _ = metric_poly_coefficients(np.asarray(nodes, dtype=float))
    return np.tensordot(coeffs, _metric_moment_tensor(kind), axes=(1, 0)) * density


def exact_consistent(element, density=None):
    if density is None:
        density = getattr(element, "density", 1.0)
    return exact_masses(as_nodes(element)[None], "consistent", density)[0]


def exact_lumped(element, density=None):
    if density is None:
        density = getattr(element, "density", 1.0)
    return exact_masses(as_nodes(element)[None], "lumped", density)[0]


def exact_volume(element):
    """Integral of the metric: j0 + (j1 + j2 + j6) / 3 via monomial integrals."""
    coeffs, _ = metric_poly_coefficients(as_nodes(element)[None])
    moments = np.array([float(monomial_integral(*m)) for m in METRIC_MONOMIALS])
    return float(coeffs[0] @ moments)


def regenerate_table(scheme, kind, divisor):
    """Rebuild a coefficient table by exact integration, scaled by divisor.

    Returns a nested list of Fractions with the leading sample axis; entries
    that are not integers indicate the divisor (or the table) is wrong.
    """
    return [_scale(weighted_integrals(w, kind), divisor) for w in INTERPOLATION_POLYS[scheme]]


def _scale(table, divisor):
    if isinstance(table, list):
        return [_scale(t, divisor) for t in table]
    return table * divisor


def compare_with_printed(scheme, kind):
    """List of (sample, index, printed, regenerated) mismatches; empty means exact."""
    from .coefficients import integer_table
    printed, divisor = integer_table(scheme, kind)
    regen = np.array(regenerate_table(scheme, kind, divisor), dtype=object)
    mismatches = []
    for idx in np.ndindex(printed.shape):
        if Fraction(int(printed[idx])) != regen[idx]:
            mismatches.append((idx[0], idx[1:], int(printed[idx]), regen[idx]))
    return mismatches
