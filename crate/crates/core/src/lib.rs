//! Exact tools for h-vectors of simplicial balls: face calculus, integer
//! homology, monomial ideals, impossibility certificates, and an explicit
//! construction of shellable balls with prescribed h-vectors.

pub mod complex;
pub mod construction;
pub mod error;
pub mod graph;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod monomial;
pub mod obstruction;
pub mod scalar;

pub use complex::{
    face, glue, h_from_certificate, verify_shelling, CountVector, Face, GlueMap, GluePair,
    GlueTarget, Role, ShellingCertificate, SimplicialComplex,
};
pub use error::{Error, Result};
pub use scalar::ExactInt;

use num_bigint::BigInt;

/// Arbitrary-precision integer matrix; the default for boundary maps.
pub type IntMatrix = matrix::Matrix<BigInt>;
/// Machine-word integer matrix for callers with small entries.
pub type WordMatrix = matrix::Matrix<i64>;
/// Smith normal form over arbitrary-precision integers.
pub type IntSmithForm = matrix::SmithForm<BigInt>;
/// Homology profile with arbitrary-precision torsion coefficients.
pub type IntHomology = homology::HomologyProfile<BigInt>;
