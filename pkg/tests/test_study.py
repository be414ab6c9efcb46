import csv
import io
import json

import numpy as np
import pytest

from wedgemass.element import metric_poly
from wedgemass.study import (
    DEFAULT_SCHEMES,
    averaged_abs_error,
    coarse_element,
    coarse_metric_coefficients,
    delta_grid,
    records_to_csv,
    records_to_json,
    run_study,
)


def test_coarse_element_nodes():
    np.testing.assert_array_equal(coarse_element(0.0).nodes,
                                  [[0, 0, -1], [1, 0, -1], [0, 1, -1],
                                   [0, 0, 1], [1, 0, 1], [0, 1, 1]])
    e = coarse_element(1.0)
    np.testing.assert_array_equal(e.nodes[4], [2, 0, 1])
    np.testing.assert_array_equal(e.nodes[3], [0, 0, 2])
    assert e.density == 1.0


def test_coarse_rejects_negative():
    with pytest.raises(ValueError):
        coarse_element(-0.1)


@pytest.mark.parametrize("delta", np.arange(0, 2.0001, 0.25))
def test_coarse_metric_closed_form(delta):
    np.testing.assert_allclose(metric_poly(coarse_element(delta)).coeffs,
                               coarse_metric_coefficients(delta), rtol=1e-13, atol=1e-13)


def test_averaged_abs_error():
    a = np.arange(36.0).reshape(6, 6)
    assert averaged_abs_error(a, a) == 0.0
    b = a.copy()
    b[2, 3] += 0.36
    assert averaged_abs_error(b, a) == pytest.approx(0.01)
    with pytest.raises(ValueError):
        averaged_abs_error(np.zeros(6), np.zeros((6, 6)))


def test_delta_grid():
    g = delta_grid()
    assert len(g) == 41 and g[0] == 0.0 and g[-1] == 2.0 and g[1] == 0.05
    assert delta_grid(0.5, 0.5, 0.1) == [0.5]
    with pytest.raises(ValueError):
        delta_grid(0, 1, 0)
    with pytest.raises(ValueError):
        delta_grid(1, 0, 0.1)


def test_run_study_structure():
    recs = run_study([1.0, 0.0, 0.5])
    assert [r.delta for r in recs] == [0.0, 0.5, 1.0]
    assert list(recs[0].errors) == [s.value for s in DEFAULT_SCHEMES]
    assert recs[0].evaluations == {"cm": 1, "lm": 4, "ex": 7, "gauss2": 2, "gauss9": 9}
    for r in recs:
        assert all(v >= 0 for v in r.errors.values())


def test_delta_zero_row():
    r = run_study([0.0])[0]
    for s in ("cm", "lm", "ex", "gauss9"):
        assert r.errors[s] <= 1e-14
    # one-point triangle part cannot integrate the quadratic shape products
    assert r.errors["gauss2"] > 1e-3


def test_study_orderings_moderate_range():
    for r in run_study(delta_grid(0.05, 1.5, 0.05)):
        assert r.errors["ex"] <= 1e-12
        assert r.errors["lm"] < r.errors["cm"] < r.errors["gauss2"]
        assert r.errors["ex"] < r.errors["gauss9"]


def test_lumped_study():
    recs = run_study([0.0, 1.0], kind="lumped")
    assert recs[0].errors["cm"] <= 1e-14
    assert recs[1].errors["ex"] <= 1e-12 < recs[1].errors["lm"] < recs[1].errors["cm"]


def test_study_is_reproducible():
    a = records_to_csv(run_study())
    b = records_to_csv(run_study())
    assert a == b


def test_csv_and_json_share_fields():
    recs = run_study([0.0, 0.1], schemes=["ex", "cm"])
    rows = list(csv.DictReader(io.StringIO(records_to_csv(recs))))
    objs = json.loads(records_to_json(recs))
    assert list(rows[0]) == list(objs[0]) == ["delta", "ex_error", "cm_error",
                                              "ex_evaluations", "cm_evaluations"]
    assert float(rows[1]["cm_error"]) == objs[1]["cm_error"] == recs[1].errors["cm"]
    assert rows[1]["ex_evaluations"] == "7"
