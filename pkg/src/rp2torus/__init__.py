"""Pseudo-Kahler geometry of convex projective torus structures.

Coordinates H2 x C carry a family of pseudo-Kahler structures indexed by a
weight function, a Hamiltonian circle action, an SL(2,R) action with
moment map, and, fiberwise, an explicit hyperbolic affine sphere.  The
package evaluates all of these numerically and verifies the structural
identities with seeded finite-difference suites.
"""

from ._kernels import backend
from .actions import (
    MomentValue,
    algebra_element,
    circle_act,
    circle_differential,
    circle_generator,
    hamiltonian,
    moment_map,
    sl2_act,
    sl2_basis,
    sl2_differential,
    sl2_generator,
)
from .fd import fd_exterior_derivative, fd_gradient, fd_jacobian
from .halfplane import (
    J0,
    conjugate_structure,
    d_linear_complex_structure,
    linear_complex_structure,
    mobius_transform,
    normalizing_matrix,
    structure_metric,
    tangent_inner,
)
from .kahler import (
    complex_structure_at,
    coordinate_tangent,
    metric_at,
    metric_determinant,
    omega_at,
    quadratic_form_origin,
    tensorial_metric,
)
from .pick import (
    ModuliPoint,
    PickForm,
    PickTensor,
    PickVariation,
    cubic_form,
    norm_sq,
    norm_sq_rate,
    pick_form,
    pick_tensor,
    tensor_from_form,
    tensor_to_cubic,
    variation,
)
from .sphere import (
    CubicCoefficient,
    FrameSolution,
    SpectralData,
    blaschke_constant,
    blaschke_determinant,
    closed_frame,
    export_mesh,
    frame_ode_matrices,
    integrate_frame,
    lattice_holonomy,
    parametrize,
    spectral_data,
    titeica_constant,
    triangle_limit,
    wang_constant,
    wang_newton,
    wang_residual,
)
from .verify import SUITES, VerificationReport, run_suite
from .weights import WeightFunction

__version__ = "0.1.0"

__all__ = [
    "J0",
    "CubicCoefficient",
    "FrameSolution",
    "ModuliPoint",
    "MomentValue",
    "PickForm",
    "PickTensor",
    "PickVariation",
    "SUITES",
    "SpectralData",
    "VerificationReport",
    "WeightFunction",
    "algebra_element",
    "backend",
    "blaschke_constant",
    "blaschke_determinant",
    "circle_act",
    "circle_differential",
    "circle_generator",
    "closed_frame",
    "complex_structure_at",
    "conjugate_structure",
    "coordinate_tangent",
    "cubic_form",
    "d_linear_complex_structure",
    "export_mesh",
    "fd_exterior_derivative",
    "fd_gradient",
    "fd_jacobian",
    "frame_ode_matrices",
    "hamiltonian",
    "integrate_frame",
    "lattice_holonomy",
    "linear_complex_structure",
    "metric_at",
    "metric_determinant",
    "mobius_transform",
    "moment_map",
    "norm_sq",
    "norm_sq_rate",
    "normalizing_matrix",
    "omega_at",
    "parametrize",
    "pick_form",
    "pick_tensor",
    "quadratic_form_origin",
    "run_suite",
    "sl2_act",
    "sl2_basis",
    "sl2_differential",
    "sl2_generator",
    "spectral_data",
    "structure_metric",
    "tangent_inner",
    "tensor_from_form",
    "tensor_to_cubic",
    "tensorial_metric",
    "titeica_constant",
    "triangle_limit",
    "variation",
    "wang_constant",
    "wang_newton",
    "wang_residual",
]
