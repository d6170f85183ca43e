use thiserror::Error;

use crate::complex::Face;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("face vertices must be strictly increasing: {0:?}")]
    UnsortedFace(Vec<u32>),

    #[error("facet {0} contains facet {1}")]
    NotAnAntichain(Face, Face),

    #[error("complex is not pure")]
    NotPure,

    #[error("face {0} is not in the complex")]
    FaceNotInComplex(Face),

    #[error("f-vector must start with f_-1 = 1, got {0}")]
    BadEmptyFaceCount(i64),

    #[error("expected a vector of role {expected}, got {found}")]
    WrongRole {
        expected: &'static str,
        found: &'static str,
    },

    #[error("vector has length {len}, expected {expected}")]
    BadLength { len: usize, expected: usize },

    #[error("h_d must vanish for a ball, got h_{d} = {value}")]
    NonzeroTop { d: usize, value: i64 },

    #[error("not an M-vector (first failure at index {index})")]
    NotAnMVector { index: usize },

    #[error("Hilbert function not realizable by a lex ideal at degree {degree}")]
    NotRealizable { degree: usize },

    #[error("degree mismatch in total order comparison: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error(
        "monomial set is not an initial segment of the partial order (missing predecessor of {0})"
    )]
    NotInitialSegment(String),

    #[error("vertex index {index} exceeds the vertex budget {budget}")]
    IndexOverflow { index: u32, budget: u32 },

    #[error("not a shelling: step {step} ({reason})")]
    NotAShelling { step: usize, reason: String },

    #[error("glue failure: {0}")]
    Glue(String),

    #[error("construction hypotheses violated: {0}")]
    ConditionsViolated(String),

    #[error("internal construction error: {0}")]
    Internal(String),

    #[error("parameter violation: {0}")]
    Parameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
