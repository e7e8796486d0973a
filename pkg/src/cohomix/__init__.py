"""Exact-arithmetic cohomology of Grassmannians and Hilbert schemes of
points in the plane.

Everything runs over the rationals (fractions.Fraction) with zero
tolerance: fixed-point enumeration, attracting-cell dimensions,
presentation of the cohomology ring by vector-field relations, the
Gotzmann embedding of Hilb_k(P^2) into a Grassmannian of forms, Betti
numbers through the fixed-point filtration, equivariant localization, and
two obstructions to regularity of group actions (cyclotomic roots,
nilpotent Jordan type).
"""

from .algebra import (
    IntegerPolynomial,
    MultiPoly,
    Partition,
    RationalMatrix,
    cyclotomic_polynomial,
    euler_phi,
    jordan_type,
    matrix_rank,
    partitions_in_box,
    schur_evaluate,
    strip_cyclotomic_factors,
)
from .equivariant import (
    EquivariantClass,
    LaurentPolynomial,
    eq_schur_class,
    localization_rank_check,
    restrict_class,
)
from .errors import (
    BoxViolation,
    ConditionViolated,
    IndexOutOfRange,
    InternalInvariantViolation,
    InvalidDegree,
    InvalidDimensions,
    NotNilpotent,
    NotPolynomial,
    UnknownFixedPoint,
)
from .filtration import (
    INCONCLUSIVE,
    NOT_REGULAR,
    BettiTable,
    EvaluationMatrix,
    SchurBasisSelection,
    b2_regularity_verdict,
    evaluation_matrix,
    filtration_betti,
    poincare_of_hilb,
    select_schur_basis,
)
from .gotzmann import (
    MonomialBasis,
    PartitionTriple,
    TorusAction,
    build_torus_action,
    degree_k_part,
    enumerate_hilb_fixed_points,
    hilb_minus_cell_dimension,
    jordan_regularity_check,
    monomial_basis,
    nilpotent_matrix_on_Rk,
    tangent_weights,
)
from .grassmann import (
    FixedSubspace,
    GradedPresentation,
    WeightSystem,
    enumerate_fixed_subspaces,
    equivariant_presentation,
    graded_dimension,
    graded_dimensions,
    minus_cell_dimension,
    ordinary_presentation,
    plus_cell_dimension,
    poincare_from_cells,
    poincare_from_regular_sequence,
    relation_generator,
    specialize_v,
    w_degree,
)

__version__ = "1.0.0"

__all__ = [
    "BettiTable",
    "BoxViolation",
    "ConditionViolated",
    "EquivariantClass",
    "EvaluationMatrix",
    "FixedSubspace",
    "GradedPresentation",
    "INCONCLUSIVE",
    "IndexOutOfRange",
    "IntegerPolynomial",
    "InternalInvariantViolation",
    "InvalidDegree",
    "InvalidDimensions",
    "LaurentPolynomial",
    "MonomialBasis",
    "MultiPoly",
    "NOT_REGULAR",
    "NotNilpotent",
    "NotPolynomial",
    "Partition",
    "PartitionTriple",
    "RationalMatrix",
    "SchurBasisSelection",
    "TorusAction",
    "UnknownFixedPoint",
    "WeightSystem",
    "b2_regularity_verdict",
    "build_torus_action",
    "cyclotomic_polynomial",
    "degree_k_part",
    "enumerate_fixed_subspaces",
    "enumerate_hilb_fixed_points",
    "eq_schur_class",
    "equivariant_presentation",
    "euler_phi",
    "evaluation_matrix",
    "filtration_betti",
    "graded_dimension",
    "graded_dimensions",
    "hilb_minus_cell_dimension",
    "jordan_regularity_check",
    "jordan_type",
    "localization_rank_check",
    "matrix_rank",
    "minus_cell_dimension",
    "monomial_basis",
    "nilpotent_matrix_on_Rk",
    "ordinary_presentation",
    "partitions_in_box",
    "plus_cell_dimension",
    "poincare_from_cells",
    "poincare_from_regular_sequence",
    "poincare_of_hilb",
    "relation_generator",
    "restrict_class",
    "schur_evaluate",
    "select_schur_basis",
    "specialize_v",
    "strip_cyclotomic_factors",
    "tangent_weights",
    "w_degree",
]
