"""Exact-arithmetic toolkit for Cayley hypersurfaces.

Generation of the defining polynomials and their one-parameter deformation,
affine symmetry algebras by exact rational linear algebra, and the geometric
invariants (trace conditions, Pick invariant, signature, Hessian
determinant, ruling) of the resulting graphs.
"""

from .generate import (
    cayley_poly,
    coefficient_closed_form,
    compositions,
    family_poly,
    family_prefactor,
    graph_function,
    monomial_count,
    partitions,
    variant_surface_4,
)
from .geometry import (
    Signature,
    SymmetricTensor,
    graph_of,
    hessian_determinant,
    indicator_tensor,
    invariants_bundle,
    metric_inverse,
    pick_invariant,
    ruling_check,
    signature,
    taylor_tensor,
    trace,
)
from .poly import (
    Polynomial,
    PolyMatrix,
    determinant,
    divide_exact,
    format_latex,
    format_plain,
    poly_from_json_dict,
    poly_to_json_dict,
    substitute_affine,
    variables,
    weighted_degree_check,
)
from .symmetry import (
    AffineTransformation,
    AffineVectorField,
    InexactExponentialError,
    SymmetryAlgebra,
    apply_field,
    cayley_fields,
    commutator,
    coordinate_field,
    euler_field,
    exp_field,
    field_to_json_dict,
    isotropy_at_origin,
    orbit_point,
    parameters_for_point,
    span_contains,
    symmetry_algebra,
    weight_scaling,
)

__version__ = "0.1.0"

__all__ = [
    "AffineTransformation",
    "AffineVectorField",
    "InexactExponentialError",
    "PolyMatrix",
    "Polynomial",
    "Signature",
    "SymmetricTensor",
    "SymmetryAlgebra",
    "apply_field",
    "cayley_fields",
    "cayley_poly",
    "coefficient_closed_form",
    "commutator",
    "compositions",
    "coordinate_field",
    "determinant",
    "divide_exact",
    "euler_field",
    "exp_field",
    "family_poly",
    "family_prefactor",
    "field_to_json_dict",
    "format_latex",
    "format_plain",
    "graph_function",
    "graph_of",
    "hessian_determinant",
    "indicator_tensor",
    "invariants_bundle",
    "isotropy_at_origin",
    "metric_inverse",
    "monomial_count",
    "orbit_point",
    "parameters_for_point",
    "partitions",
    "pick_invariant",
    "poly_from_json_dict",
    "poly_to_json_dict",
    "ruling_check",
    "signature",
    "span_contains",
    "substitute_affine",
    "symmetry_algebra",
    "taylor_tensor",
    "trace",
    "variables",
    "variant_surface_4",
    "weight_scaling",
    "weighted_degree_check",
]
