use thiserror::Error;

/// Errors surfaced by the engine. Contract violations that can only arise
/// from engine bugs (mismatched ambient rings between internally built
/// values, broken field arithmetic) panic instead.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("quotient is not zero-dimensional: variable {var} (component {component}) has no pure power among the leading monomials")]
    NotZeroDimensional { var: usize, component: usize },

    #[error("ideal is not maximal-primary up to exponent bound {bound}")]
    NotPrimary { bound: u32 },

    #[error("ideal containment fails: generator index {index} of the smaller ideal is not a member")]
    NotContained { index: usize },

    #[error("table not stabilized - increase n_max (window {window}, length {len})")]
    NotStabilized { window: usize, len: usize },

    #[error("binomial fit produced non-integer coefficients (wrong dimension or short table)")]
    NonIntegerFit,

    #[error("not a parameter ideal: {generators} generators for dimension {dimension}")]
    NotParameterIdeal { generators: usize, dimension: usize },

    #[error("module is not Cohen-Macaulay for the given ideal: colength {colength} != multiplicity {multiplicity}")]
    NotCohenMacaulay { colength: u64, multiplicity: u64 },

    #[error("module is zero (no generators survive the presentation)")]
    ZeroModule,

    #[error("not a homogeneous ideal: the ring part does not multiply the module into the module part")]
    NotHomogeneousIdeal,

    #[error("truncation exponent {truncation} is insufficient: results did not stabilize")]
    TruncationInsufficient { truncation: u32 },

    #[error("declared dimension {declared} conflicts with detected dimension {detected}")]
    DimensionMismatch { declared: usize, detected: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
