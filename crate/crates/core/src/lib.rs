//! Rationally deformed Morse potentials from Wronskians of generalized
//! Bessel polynomials, with exact certification and numeric cross-checks.

pub mod algebra;
pub mod bessel;
pub mod error;
pub mod morse;
pub mod oracle;
pub mod partitions;
pub mod quadrature;
pub mod sign;

pub use algebra::{
    format_rational, parse_rational, poly_arith, rf_normalize, sturm_positive_roots, wronskian,
    ArithOp, Polynomial, Rational, RationalFunction,
};
pub use bessel::{
    gen_bessel, gen_bessel_scaled, identity_residual, laguerre, rbessel, BesselIndex, IdentityKind,
    OdeCoefficients,
};
pub use error::{Error, Result};
pub use morse::{
    bound_spectrum, certify_admissible, deformed_eigenfunction, deformed_potential, eop_weight,
    morse_potential, qrs_energy, seed_polynomial, seed_wronskian, verify_equivalence,
    AdmissibilityCertificate, DeformationSpec, EquivalenceReport, MorseParam, QuasiRational,
};
pub use oracle::{
    eigen_solve, isospectral_check, node_count, richardson, sample_potential, Grid, SpectrumReport,
};
pub use partitions::{conjugate, is_juxtaposed_pairs, ConjugationResult, SeedSet};
pub use quadrature::{gram_matrix, integrate_half_line, GramReport, Integrand};
pub use sign::Sign;
