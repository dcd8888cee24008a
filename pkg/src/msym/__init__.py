"""Exact mod-2 topology of symmetric products of real curves with maximal
real locus: generating-function Betti sums, CW models of the real loci,
GF(2) homology from matrix rank, and equality certification."""

from .fibration import (
    FIBER_TOL,
    ROUNDTRIP_TOL,
    CirclePoint,
    DomainError,
    FiberError,
    FibrationReport,
    SimplexPoint,
    SymTriple,
    diagonal_curve_point,
    enumerate_diagonal_fiber_boundary_intersections,
    enumerate_diagonal_section_intersections,
    is_boundary_point,
    local_trivialization,
    on_fiber_boundary_curve,
    on_section_curve,
    run_property_suite,
    shift_lift,
    t_inverse,
    t_map,
    theta,
    unshift_lift,
)
from .genfun import (
    GradedPoly,
    IntegralityViolation,
    RangeError,
    betti_sum_large_n,
    betti_sum_sym,
    closed_form_sym2,
    closed_form_sym3,
    poincare_sym,
)
from .homology import (
    BettiVector,
    BitMatrixF2,
    ChainComplexF2,
    CWFormatError,
    InterfaceMismatch,
    InvalidComplexError,
    betti,
    boundary_matrix,
    disjoint_union,
    euler_char,
    glue,
    is_nullhomologous,
    label_subcomplex,
    product,
    rename_cells,
    without_labels,
)
from .mcheck import (
    BUNDLE_FORMULA,
    CW_MODELS,
    M_VARIETY,
    STRICT_INEQUALITY,
    UNSUPPORTED_RANGE,
    MVarietyReport,
    SmithViolationError,
    VerificationError,
    check,
    sweep,
)
from .realmodels import (
    HalfSurface,
    RealLocusDecomposition,
    build_B,
    build_half_surface,
    build_sym2_circle,
    build_sym3_circle,
    build_Y,
    circle,
    disc,
    point,
    real_sym2_decomposition,
    real_sym3_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "BUNDLE_FORMULA",
    "BettiVector",
    "BitMatrixF2",
    "ChainComplexF2",
    "CirclePoint",
    "CWFormatError",
    "CW_MODELS",
    "DomainError",
    "FIBER_TOL",
    "FiberError",
    "FibrationReport",
    "GradedPoly",
    "HalfSurface",
    "IntegralityViolation",
    "InterfaceMismatch",
    "InvalidComplexError",
    "MVarietyReport",
    "M_VARIETY",
    "ROUNDTRIP_TOL",
    "RangeError",
    "RealLocusDecomposition",
    "STRICT_INEQUALITY",
    "SimplexPoint",
    "SmithViolationError",
    "SymTriple",
    "UNSUPPORTED_RANGE",
    "VerificationError",
    "betti",
    "betti_sum_large_n",
    "betti_sum_sym",
    "boundary_matrix",
    "build_B",
    "build_Y",
    "build_half_surface",
    "build_sym2_circle",
    "build_sym3_circle",
    "check",
    "circle",
    "closed_form_sym2",
    "closed_form_sym3",
    "diagonal_curve_point",
    "disc",
    "disjoint_union",
    "enumerate_diagonal_fiber_boundary_intersections",
    "enumerate_diagonal_section_intersections",
    "euler_char",
    "glue",
    "is_boundary_point",
    "is_nullhomologous",
    "label_subcomplex",
    "local_trivialization",
    "on_fiber_boundary_curve",
    "on_section_curve",
    "point",
    "poincare_sym",
    "product",
    "real_sym2_decomposition",
    "real_sym3_decomposition",
    "rename_cells",
    "run_property_suite",
    "shift_lift",
    "sweep",
    "t_inverse",
    "t_map",
    "theta",
    "unshift_lift",
    "without_labels",
]
