from fractions import Fraction

import numpy as np
import pytest

from wedgemass.coefficients import TABLES, integer_table
from wedgemass.element import NODE_POSITIONS, WedgeElement, metric_poly
from wedgemass.mass import consistent_quadrature
from wedgemass.oracle import (
    ETA,
    SHAPE_POLYS,
    XI,
    ZETA,
    TriVarPoly,
    compare_with_printed,
    exact_consistent,
    exact_lumped,
    exact_volume,
    monomial_integral,
    regenerate_table,
)
from wedgemass.study import coarse_element


@pytest.mark.parametrize("exps, expected", [
    ((0, 0, 0), Fraction(1)),
    ((1, 0, 0), Fraction(1, 3)),
    ((0, 0, 1), Fraction(0)),
    ((0, 0, 2), Fraction(1, 3)),
    ((1, 1, 0), Fraction(1, 12)),
    ((2, 0, 4), Fraction(1, 12) * Fraction(2, 5)),
])
def test_monomial_integral(exps, expected):
    assert monomial_integral(*exps) == expected


def test_monomial_integral_against_nested_quadrature():
    # independent check: tensor Gauss-Legendre on the square mapped by Duffy
    x, w = np.polynomial.legendre.leggauss(8)
    u, wu = 0.5 * (x + 1), 0.5 * w
    for a, b, c in [(2, 1, 0), (0, 3, 2), (1, 1, 4)]:
        tri = sum(wi * wj * (1 - ui) * ui ** a * ((1 - ui) * vj) ** b
                  for ui, wi in zip(u, wu) for vj, wj in zip(u, wu))
        line = sum(wk * xk ** c for xk, wk in zip(x, w))
        assert float(monomial_integral(a, b, c)) == pytest.approx(tri * line, rel=1e-13, abs=1e-15)


def test_monomial_integral_rejects_negative():
    with pytest.raises(ValueError):
        monomial_integral(-1, 0, 0)


def test_trivarpoly_algebra():
    p = (1 + XI) * (1 - XI)
    assert p == TriVarPoly({(0, 0, 0): 1, (2, 0, 0): -1})
    assert (XI * ETA * ZETA)(2, 3, 4) == 24
    assert (XI - XI) == TriVarPoly()
    assert (2 - XI)(0.5, 0, 0) == 1.5


def test_shape_polys_match_numeric(rng):
    from wedgemass.element import shape_values
    for p in rng.uniform(-1, 1, size=(5, 3)):
        np.testing.assert_allclose([float(s(*p)) for s in SHAPE_POLYS], shape_values(p), atol=1e-15)


def test_shape_polys_partition_of_unity():
    assert sum(SHAPE_POLYS, TriVarPoly()) == TriVarPoly.constant(1)


@pytest.mark.parametrize("key", list(TABLES))
def test_printed_tables_regenerate_exactly(key):
    scheme, kind = key
    assert compare_with_printed(scheme, kind) == []
    printed, divisor = integer_table(scheme, kind)
    regen = np.array(regenerate_table(scheme, kind, divisor), dtype=object)
    assert all(v.denominator == 1 for v in regen.ravel())
    assert np.array_equal(regen.astype(np.int64), printed)


def test_constant_metric_gives_printed_cm(identity_element):
    printed, divisor = integer_table("cm", "consistent")
    np.testing.assert_allclose(exact_consistent(identity_element, 2.0), 2.0 * printed[0] / divisor,
                               rtol=1e-15)


def test_coarse_half_volume():
    assert exact_volume(coarse_element(0.5)) == pytest.approx(1.7708333333333333, rel=1e-15)
    assert exact_consistent(coarse_element(0.5)).sum() == pytest.approx(1.7708333333333333,
                                                                        rel=1e-14)


def test_dual_oracle(random_elements):
    for e in random_elements:
        a = exact_consistent(e)
        b = consistent_quadrature(e, "reference")
        np.testing.assert_allclose(a, b, atol=1e-13 * np.abs(a).max())


def test_row_sums_equal_lumped(random_elements):
    for e in random_elements:
        np.testing.assert_allclose(exact_consistent(e).sum(axis=1), exact_lumped(e), rtol=1e-13)


def test_linearity_and_axis_scaling(random_elements):
    for e in random_elements[:20]:
        base = exact_consistent(e, 1.0)
        np.testing.assert_allclose(exact_consistent(e, 2.5), 2.5 * base, rtol=1e-14)
        for axis in range(3):
            scaled = e.nodes.copy()
            scaled[:, axis] *= 1.7
            np.testing.assert_allclose(exact_consistent(WedgeElement(scaled)), 1.7 * base,
                                       rtol=1e-12, atol=1e-15)


def test_volume_matches_metric_poly(random_elements):
    for e in random_elements[:10]:
        j = metric_poly(e).coeffs
        assert exact_volume(e) == pytest.approx(j[0] + (j[1] + j[2] + j[6]) / 3, rel=1e-14)


def test_oracle_independent_of_samples():
    # nodes at natural positions scaled in z: constant metric 3
    e = WedgeElement(NODE_POSITIONS * [1, 1, 3])
    assert exact_volume(e) == pytest.approx(3.0)
