"""Exact computations for leading terms of relations on the level 5 standard
module of the twisted affine algebra A2(2), with the partition counts and
specialized characters they are compared against."""

from .cyclotomic import CycNum, omega_antisym, omega_pow
from .qseries import TruncatedSeries, progression_product, psi_coefficients
from .vertexrel import (
    GradedMonomial,
    Relation,
    RelationDescriptor,
    bracket,
    compare_monomials,
    enumerate_descriptors,
    generate_relation,
    triple_coeff,
)
from .echelon import (
    LeadingTermReport,
    RelationMatrix,
    build_matrix,
    leading_terms,
    row_reduce,
    scan,
    scan_cell,
    verify_certificate,
)
from .partitions import (
    ConditionSet,
    ForbiddenPattern,
    builtin_condition_set,
    candidates,
    count_series,
    length7_candidates,
    parse_condition_set,
    satisfies,
)
from .characters import (
    DominantWeight,
    borcea_compare,
    chi5,
    principal_character,
    specialization_data,
)

__version__ = "0.1.0"
