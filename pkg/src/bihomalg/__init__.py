"""Exact construction, validation and decomposition of graded BiHom matrix
algebras over the rationals and prime fields."""

from .algebra import CheckResult, GradedBiHomAlgebra, TwistMap, ValidationReport
from .classify import (
    SimplicityReport,
    Verdict,
    brute_force_graded_ideals,
    decompose_simple,
    graded_simple,
    graded_subspace_candidate_count,
    ideal_in_zero_part_is_central,
    maximal_length,
    nonzero_star_product,
    restrict_to_ideal,
    support_multiplicative,
)
from .connections import (
    ClassPartition,
    ConnectionWitness,
    connected,
    connected_by_enumeration,
    connection_classes,
    verify_witness,
)
from .decompose import (
    DecompositionReport,
    GradedIdeal,
    centre,
    class_zero_part,
    class_zero_part_alt,
    decompose,
    degree_zero_generated,
    ideal_for_class,
    orthogonality,
    zero_part_forms_agree,
)
from .fields import FieldSpec, Scalar, is_prime, prime_field, primitive_root_of_unity, rationals
from .groups import BiHomGroup, GroupAuto, GroupSpec
from .linalg import (
    LinearSolver,
    Mat,
    Subspace,
    annihilator_kernel,
    intersect,
    product_span,
    span,
    subspace_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BiHomGroup",
    "CheckResult",
    "ClassPartition",
    "ConnectionWitness",
    "DecompositionReport",
    "FieldSpec",
    "GradedBiHomAlgebra",
    "GradedIdeal",
    "GroupAuto",
    "GroupSpec",
    "LinearSolver",
    "Mat",
    "Scalar",
    "SimplicityReport",
    "Subspace",
    "TwistMap",
    "ValidationReport",
    "Verdict",
    "annihilator_kernel",
    "brute_force_graded_ideals",
    "centre",
    "class_zero_part",
    "class_zero_part_alt",
    "connected",
    "connected_by_enumeration",
    "connection_classes",
    "decompose",
    "decompose_simple",
    "degree_zero_generated",
    "graded_simple",
    "graded_subspace_candidate_count",
    "ideal_for_class",
    "ideal_in_zero_part_is_central",
    "intersect",
    "is_prime",
    "maximal_length",
    "nonzero_star_product",
    "orthogonality",
    "prime_field",
    "primitive_root_of_unity",
    "product_span",
    "rationals",
    "restrict_to_ideal",
    "span",
    "subspace_sum",
    "support_multiplicative",
    "verify_witness",
    "zero_part_forms_agree",
]
