"""Coarse-element accuracy study: averaged absolute error per scheme over a delta grid."""

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .element import WedgeElement
from .mass import Scheme, element_masses, evaluation_count
from .oracle import exact_masses

DEFAULT_SCHEMES = (Scheme.CM, Scheme.LM, Scheme.EX, Scheme.GAUSS2, Scheme.GAUSS9)


def coarse_nodes(delta):
    """Nodal coordinates of the coarse family; delta = 0 is the parent prism."""
    if delta < 0:
        raise ValueError(f"coarseness must be non-negative, got {delta}")
    d = 1.0 + delta
    return np.array([
        [0.0, 0.0, -1.0],
        [1.0, 0.0, -1.0],
        [0.0, 1.0, -1.0],
        [0.0, 0.0, d],
        [d, 0.0, 1.0],
        [0.0, d, 1.0],
    ])


def coarse_element(delta):
    return WedgeElement(coarse_nodes(delta), density=1.0)


def coarse_metric_coefficients(delta):
    """Closed-form metric polynomial of the coarse family, for regression checks."""
    d = delta
    return np.array([
        8 + 12 * d + 6 * d ** 2 + d ** 3,
        -(4 * d + 2 * d ** 2),
        -(4 * d + 2 * d ** 2),
        8 * d + 8 * d ** 2 + 2 * d ** 3,
        -2 * d ** 2,
        -2 * d ** 2,
        2 * d ** 2 + d ** 3,
    ]) / 8.0


def averaged_abs_error(approx, exact):
    approx = np.asarray(approx, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if approx.shape != exact.shape:
        raise ValueError(f"shape mismatch: {approx.shape} vs {exact.shape}")
    return float(np.mean(np.abs(approx - exact)))


@dataclass(frozen=True)
class StudyRecord:
    delta: float
    errors: dict        # scheme value -> averaged absolute error
    evaluations: dict   # scheme value -> metric evaluations per element

    def as_dict(self):
        out = {"delta": self.delta}
        for s, v in self.errors.items():
            out[f"{s}_error"] = v
        for s, v in self.evaluations.items():
            out[f"{s}_evaluations"] = v
        return out


def delta_grid(delta_min=0.0, delta_max=2.0, step=0.05):
    """Inclusive, drift-free grid (values rounded to 12 decimals)."""
    if step <= 0:
        raise ValueError("step must be positive")
    if delta_max < delta_min:
        raise ValueError("delta_max must not be below delta_min")
    n = int(math.floor((delta_max - delta_min) / step + 1e-9)) + 1
    return [round(delta_min + i * step, 12) for i in range(n)]


def run_study(deltas=None, schemes=DEFAULT_SCHEMES, kind="consistent"):
    """Error of each scheme against the exact oracle for every delta, ascending."""
    deltas = delta_grid() if deltas is None else sorted(float(d) for d in deltas)
    if not deltas:
        raise ValueError("delta grid is empty")
    schemes = [Scheme.parse(s) for s in schemes]
    nodes = np.stack([coarse_nodes(d) for d in deltas])
    exact = exact_masses(nodes, kind)
    axes = tuple(range(1, exact.ndim))
    errors = {s.value: np.mean(np.abs(element_masses(nodes, s, kind) - exact), axis=axes)
              for s in schemes}
    counts = {s.value: evaluation_count(s) for s in schemes}
    return [StudyRecord(d, {s: float(errors[s][i]) for s in errors}, dict(counts))
            for i, d in enumerate(deltas)]


def _fmt(v):
    return v if isinstance(v, int) else repr(float(v))


def records_to_csv(records):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = [r.as_dict() for r in records]
    if rows:
        writer.writerow(list(rows[0]))
        for row in rows:
            writer.writerow([_fmt(v) for v in row.values()])
    return buf.getvalue()


def records_to_json(records):
    return json.dumps([r.as_dict() for r in records], indent=2) + "\n"
