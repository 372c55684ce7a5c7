"""Adinkras from doubly-even binary codes and their signed monodromy groups."""

from .codes import (
    BinaryWord,
    LinearCode,
    ParityClass,
    classify_code,
    contains,
    coset_representatives,
    enumerate_doubly_even_codes,
    parse_code_text,
    span_members,
)
from .graph import (
    Adinkra,
    TwoColorCycle,
    ValidationReport,
    build_cubical,
    build_quotient,
    connected_components,
    disjoint_union,
    export_dot,
    solve_odd_dashing,
    switch_vertex,
    two_colored_cycles,
    validate,
)
from .monodromy import (
    AnalysisReport,
    GarMatrices,
    TheoremViolation,
    analyze,
    chi0,
    compute_K,
    find_relation,
    gar_matrices,
    genus_and_d,
    sigma_kernel,
    signed_monodromy_group,
    unsigned_monodromy,
    zeta_generators,
)
from .signed import SignedGroup, SignedPermutation, closure
from .vee import (
    VeeElement,
    abs_vee,
    center,
    conjugacy_class,
    elements,
    normal_subgroups,
    omega,
    omega_squared,
    recognize_quotient,
)

__all__ = [
    "Adinkra",
    "AnalysisReport",
    "BinaryWord",
    "GarMatrices",
    "LinearCode",
    "ParityClass",
    "SignedGroup",
    "SignedPermutation",
    "TheoremViolation",
    "TwoColorCycle",
    "ValidationReport",
    "VeeElement",
    "abs_vee",
    "analyze",
    "build_cubical",
    "build_quotient",
    "center",
    "chi0",
    "classify_code",
    "closure",
    "compute_K",
    "conjugacy_class",
    "connected_components",
    "contains",
    "coset_representatives",
    "disjoint_union",
    "elements",
    "enumerate_doubly_even_codes",
    "export_dot",
    "find_relation",
    "gar_matrices",
    "genus_and_d",
    "normal_subgroups",
    "omega",
    "omega_squared",
    "parse_code_text",
    "recognize_quotient",
    "sigma_kernel",
    "signed_monodromy_group",
    "solve_odd_dashing",
    "span_members",
    "switch_vertex",
    "two_colored_cycles",
    "unsigned_monodromy",
    "validate",
    "zeta_generators",
]
