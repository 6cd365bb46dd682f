//! Exact enumeration and verification of square-free monomial Cremona
//! transformations.
//!
//! A set of n monomials of common degree d in n variables defines a rational
//! self-map of projective space; it is birational exactly when the log
//! matrix of the set has determinant plus or minus d. This crate decides
//! that criterion exactly, applies the duality and leaf/root reduction
//! principles with replayable certificates, and reproduces the complete
//! classification up to variable relabelling for n <= 6: 3 maps for n = 4,
//! 10 for n = 5, and 58 for n = 6.

pub mod birational;
pub mod catalog;
pub mod census;
pub mod clutter;
pub mod duality;
pub mod error;
pub mod mask;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod symmetry;

pub use birational::{
    classify_degree_two, cycle_determinant, is_cremona, standard_involution, CremonaVerdict,
    DegreeTwoShape,
};
pub use catalog::{catalog_csv, catalog_json, catalog_json_string};
pub use census::{
    census, census_by_orbit_extension, census_with_pruning, classify_type_n6_d3,
    cross_check_duality, verify_gcd_lemma, CensusQuery, CensusReport, CubicType, DegreeCensus,
    PruneOptions, Representative,
};
pub use clutter::Clutter;
pub use duality::{
    delete_leaf, dual_complement, pluck_root, reduce_to_base, ReductionCertificate, ReductionStep,
    StepKind, Terminal,
};
pub use error::Error;
pub use mask::Mask;
pub use matrix::{cycle_incidence_matrix, exact_determinant, LogMatrix};
pub use monomial::{IncidenceProfile, Monomial, MonomialSet};
pub use oracle::brute_force_oracle;
pub use symmetry::{
    canonical_form, extend_orbits, find_isomorphism, maximal_cones, orbit_size, stabilizer,
    CanonicalForm, Cone, ConeDecomposition, Permutation, Stabilizer,
};
