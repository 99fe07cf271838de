"""Growth (Poincare) series of Weyl groups of Kac-Moody algebras.

Exact integer enumeration of Weyl group elements through the orbit of the
Weyl vector, closed-form Poincare polynomials for the finite types, Bott
series for the affine ones, parabolic coset series, and denominator
polynomial fits P(H) = P(G)/Q with the shipped table for the 48
hyperbolic algebras.
"""

from weylgrowth._core import (  # noqa: F401
    CartanMatrix,
    CatalogEntry,
    DenominatorFit,
    DisconnectedError,
    FactorizationReport,
    GrowthSeries,
    LevelNotEnumeratedError,
    NonUnitConstantError,
    NotFiniteError,
    NotGCMError,
    SchemaErrorException,
    SingularError,
    TruncationTooShallowError,
    UnknownTypeError,
    VerificationReport,
    WeylError,
    affine_cartan,
    affine_poincare,
    canonical_word,
    classify,
    compute_R,
    degrees,
    determinant,
    display,
    finite_cartan,
    finite_order,
    finite_poincare,
    finite_types,
    fit_denominator,
    growth_series,
    h48_cartan,
    inverse_cartan,
    load_algebra_file,
    load_catalog,
    paper_constants,
    parabolic_coset_growth,
    polynomial_terminates,
    positive_root_count,
    rational_check,
    reduced_words,
    reflect,
    rho,
    search_denominator,
    series_div,
    series_mul,
    validate_gcm,
    verify_entry,
    verify_factorization,
    weyl_order,
)

__version__ = "0.1.0"
