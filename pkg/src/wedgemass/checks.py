"""Self-verification used by ``wedgemass verify``."""

from dataclasses import dataclass

import numpy as np

from .coefficients import TABLES
from .element import random_element
from .mass import element_masses
from .oracle import compare_with_printed, exact_masses


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def check_tables():
    results = []
    for scheme, kind in TABLES:
        bad = compare_with_printed(scheme, kind)
        divisor = TABLES[(scheme, kind)][1]
        if bad:
            k, idx, printed, regen = bad[0]
            detail = (f"{len(bad)} mismatches; first: sample {k + 1} entry {idx} "
                      f"printed {printed}, integrated {regen}")
        else:
            detail = f"all entries reproduced exactly (divisor {divisor})"
        results.append(CheckResult(f"table {scheme}/{kind}", not bad, detail))
    return results


def random_valid_nodes(n, seed=0, perturbation=0.2):
    rng = np.random.default_rng(seed)
    return np.stack([random_element(rng, perturbation).nodes for _ in range(n)])


def check_ex_exactness(n=1000, seed=0, rtol=1e-12):
    nodes = random_valid_nodes(n, seed)
    results = []
    for kind in ("consistent", "lumped"):
        approx = element_masses(nodes, "ex", kind)
        exact = exact_masses(nodes, kind)
        axes = tuple(range(1, exact.ndim))
        scale = np.max(np.abs(exact), axis=axes)
        worst = float(np.max(np.max(np.abs(approx - exact), axis=axes) / scale))
        results.append(CheckResult(f"EX {kind} == exact oracle ({n} elements, seed {seed})",
                                   worst <= rtol, f"max relative error {worst:.3e} <= {rtol:g}"))
    return results


def run_all(n=1000, seed=0):
    return check_tables() + check_ex_exactness(n, seed)
