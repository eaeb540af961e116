"""Affine and modified affine Solomon-Stiffler codes over GF(q)."""

__version__ = "0.1.0"

from .analysis import (
    BestKnownTable,
    OptimalityReport,
    classify,
    classify_distance_optimal,
    defect_upper_bound_lines,
    defect_upper_bound_thm2,
    find_avoiding_functional,
    griesmer_defect,
    griesmer_sum,
    load_best_known_table,
)
from .construction import (
    ConstructionError,
    LinearCode,
    RankError,
    SSParams,
    affine_ss,
    gaussian_binomial,
    lines_code,
    modified_affine_ss,
    puncture,
    repetition_copy,
    select_subspaces,
    simplex_code,
    subcodes,
)
from .families import FamilySpec, closed_form_wdist, printed_wdist, verify_family
from .gf import FieldError, FieldSpec, field_make, field_of_order, mult_subgroup
from .io import format_matrix, parse_matrix, read_matrix, write_matrix
from .linalg import Subspace, dot, pairwise_trivial, projective_reps, rank, subspace_points
from .weights import (
    ENUM_GUARD,
    EnumerationGuardError,
    WeightDistribution,
    min_distance,
    min_weight_support,
    weight_distribution,
    weight_distribution_enum,
    weight_distribution_hyperplane,
)
