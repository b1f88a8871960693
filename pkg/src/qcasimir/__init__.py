"""Exact computer algebra for the higher-order quantum Casimir invariants of
the classical types B, C, D: root data, Weyl characters, the block characters
G_{n,k} with their hook expansions, torus images, determinantal identities,
and the triangular change of basis certifying the generating sets."""

from .casimir import (
    CasimirImage,
    DegenerateEvaluation,
    c0_rational_eval,
    ch_g_via_antisym,
    ch_g_via_hooks,
    closed_form_g0,
    closed_form_g1,
    constituents,
    eigenvalue_direct,
    eigenvalue_via_hc,
    g_rational_eval,
    h_element,
    hc_combination,
    hc_denominator,
    hc_divisibility_failures,
    hc_image,
    hc_value,
)
from .chars import (
    GAElem,
    GridMismatch,
    RankMismatch,
    RankTooLargeForEnumeration,
    SignedPerm,
    act,
    alternant,
    antisymmetrize,
    coset_representatives,
    divide_by_denominator,
    enumerate_weyl,
    ext_power_char,
    ga_eval,
    is_w_invariant,
    natural_character,
    sgn,
    simple_reflections,
    weyl_character,
    weyl_denominator,
)
from .ebasis import (
    CertificateFailed,
    EBasisExpr,
    HalvingFailed,
    PartitionTooLong,
    SingularLeadingCoefficient,
    TriangularEntry,
    TriangularSolution,
    conjugate_partition,
    expected_leading_coeff,
    fundamental_character_relation,
    g_in_e_basis,
    generation_certificate,
    hook_matrix_printed,
    jt_character,
    round_trip_ok,
    solution_ok_in_characters,
    triangular_solve,
)
from .exact import (
    DivisionByZero,
    EPoly,
    NotDivisible,
    QLaurent,
    ZeroBase,
    det_bareiss,
    det_cofactor,
    det_exact,
)
from .roots import (
    BarNotApplicable,
    HookWeight,
    IndexOutOfRange,
    LengthMismatch,
    LieType,
    NotDominant,
    RankTooSmall,
    RootSystem,
    Weight,
    WrongType,
    build_root_system,
    eps,
    hook_weight,
    mu_weight,
    pairing,
    partition_to_weight,
    tau,
    weyl_dimension,
)

__version__ = "0.1.0"
