"""Exact multitrace analysis and commutator factorization for
finite-dimensional associative algebras over the rationals."""

from .linalg import (
    BothZero,
    DimensionMismatch,
    LinearSolution,
    Matrix,
    NotSquare,
    Polynomial,
    Rational,
    SingularMatrix,
    char_poly,
    frac,
    kron,
    mat_mul,
    poly_gcd,
    rank,
    solve_linear,
    vadd,
    vector,
    viszero,
    vneg,
    vscale,
    vsub,
    vzero,
)
from .algebra import (
    ActionLawViolation,
    Algebra,
    EmptyBlockList,
    IndexOutOfRange,
    InvalidAlgebra,
    InvalidWMData,
    NotInRadical,
    NotSemisimple,
    Subspace,
    TriangularAlgebra,
    ValidationReport,
    WMData,
    build_direct_sum,
    build_triangular,
    build_ut,
    commutator,
    commutator_subspace,
    is_gbt,
    multiply,
    peirce_component,
    quotient_dim,
    radical,
    verify_wm_data,
)
from .multitrace import (
    Multitrace,
    conjugate_wm,
    is_multitrace_zero,
    multitrace,
    semisimple_projection,
)
from .sylvester import (
    BimoduleProblem,
    NoncommutingOperators,
    SylvesterSolution,
    find_shift,
    shift_candidates,
    solve_sylvester,
    spectra_disjoint,
)
from .factor import (
    CommutatorDecision,
    DegeneratePolynomial,
    FactorizationCertificate,
    NonzeroMultitrace,
    NonzeroTrace,
    NotGBT,
    ams_factor,
    gbt_factor,
    is_commutator,
    poly_image_witness,
    zero_diagonal_similarity,
)
from .gallery import GalleryEntry, example0, gallery_names, get_entry, m2_dual, run_entry

__version__ = "0.1.0"
