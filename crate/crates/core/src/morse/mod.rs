//! Morse potential in the variable `y = e^x`, its seed solutions and the
//! rational deformations built from seed Wronskians.

mod deform;
mod equivalence;
mod param;
mod quasi;

pub use deform::{
    bound_spectrum, certify_admissible, deformed_eigenfunction, deformed_potential,
    deformed_potential_unchecked, eigen_numerator, eop_weight, eop_weight_alternative,
    morse_potential, plus_deformed_potential, predicted_energies, qrs_energy, seed_polynomial,
    seed_wronskian, AdmissibilityCertificate, DeformationSpec, IndexCheck, SeedRole,
};
pub use equivalence::{reflected_bessel_monic, verify_equivalence, EquivalenceReport};
pub use param::MorseParam;
pub use quasi::{basic_solution, QuasiRational};
