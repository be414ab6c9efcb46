"""Consistent and lumped mass matrices for the six-node solid wedge element."""

from .element import (
    NaturalPoint,
    WedgeElement,
    JacobianDecomposition,
    MetricPoly,
    shape_values,
    shape_gradients,
    jacobian_matrix,
    decompose_jacobian,
    metric,
    metric_poly,
    random_element,
)
from .metric import (
    MetricSamples,
    sample_cm,
    sample_lm,
    sample_ex,
    evaluate_interpolant,
)
from .mass import (
    Scheme,
    QuadratureRule,
    gauss_rule,
    evaluation_count,
    element_masses,
    consistent_mass,
    lumped_mass,
    consistent_cm,
    lumped_cm,
    consistent_lm,
    lumped_lm,
    consistent_ex,
    lumped_ex,
    consistent_quadrature,
    lumped_quadrature,
)
from .oracle import (
    TriVarPoly,
    monomial_integral,
    exact_consistent,
    exact_lumped,
    exact_masses,
    exact_volume,
)
from .study import (
    StudyRecord,
    coarse_element,
    averaged_abs_error,
    run_study,
)
from .mesh import Mesh, GlobalMassMatrix, parse_mesh, assemble_global
from .errors import WedgeMassError, MeshError, InvalidElementError, UnknownSchemeError

__version__ = "0.1.0"
