use thiserror::Error;

use crate::zring::MixedVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: expected (alpha, beta) = {expected:?}, found {found:?}")]
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("digit {digit} is not an element of Z{modulus}")]
    InvalidDigit { digit: u32, modulus: u8 },

    #[error("column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    /// Enumeration would visit `2^required_log2` elements, above the cap.
    #[error("enumeration needs 2^{required_log2} elements, cap is {cap}")]
    CapExceeded { required_log2: u32, cap: u64 },

    #[error("code is not additive complementary dual; {witness} lies in C and its dual")]
    NotAcd { witness: MixedVector },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("rows are linearly dependent over Z2")]
    DependentBasis,

    #[error("delta = {delta} is smaller than the basis size {basis}")]
    DeltaTooSmall { delta: usize, basis: usize },

    #[error("rows {0} and {1} are not orthogonal")]
    NotSelfOrthogonal(usize, usize),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    /// A cross-check that cannot fail for a correct implementation did fail.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
