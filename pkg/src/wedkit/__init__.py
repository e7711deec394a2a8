"""wedkit: exact rational computation with finite-dimensional algebras.

Submodules
----------
linalg      dense Fraction matrices, fraction-free elimination
algebra     structure-constant algebras, radicals, semisimple blocks
wedderburn  multiplicative sections of A -> A/rad(A) and their conjugacy
quiver      path algebras, ADE classification, positive roots, envelopes
tensor      symmetric-group actions on tensor powers, twisted traces,
            projectors, Kimura dimension, trace pairings, nil bounds
ga          additive-group representations as nilpotent matrices
"""

from .linalg import Matrix, kron, mat_mul, kernel_basis, solve, rank, rational, format_rational
from .algebra import (
    Algebra,
    Subspace,
    Block,
    SemisimpleReport,
    WedderburnReport,
    triangular_algebra,
    full_matrix_algebra,
    polynomial_quotient_algebra,
    group_algebra,
    cyclic_group_table,
    symmetric_group_table,
    product_algebra,
    algebra_from_matrices,
)
from .wedderburn import Section, lift_section, conjugate_sections, lift_section_fixing
from .quiver import (
    Quiver,
    RootSystem,
    EnvelopeReport,
    path_algebra,
    radical_is_arrow_ideal,
    dynkin_classify,
    positive_roots,
    envelope,
)
from .tensor import (
    Permutation,
    GradedObject,
    TensorMorphism,
    perm_matrix,
    twisted_trace,
    twisted_supertrace,
    antisymmetrizer,
    symmetrizer,
    projector_rank,
    lambda_trace,
    sym_trace,
    power_traces_to_elementary,
    elementary_to_power_traces,
    kimura_dim,
    pairing_kernel,
    nagata_higman_check,
    supertrace,
)
from .ga import (
    GaRep,
    JordanType,
    jordan_type,
    clebsch_gordan_set,
    hom_dim,
    hom_dim_oracle,
    clebsch_gordan,
    clebsch_gordan_oracle,
    intertwiner_basis,
    category_radical,
    radical_chain_vanishing,
    search_chain_counterexample,
    sl2_consistency,
)

__version__ = "0.1.0"
