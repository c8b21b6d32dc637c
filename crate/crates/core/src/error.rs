use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature is empty")]
    EmptySignature,
    #[error("zero order must be at least 1, got {0}")]
    NonPositiveOrder(i64),
    #[error("sum of orders {0} does not give an integral genus")]
    NonIntegralGenus(i64),
    #[error("genus {0} is below 2")]
    GenusTooSmall(i64),
    #[error("invalid quadratic order {0}: must be -1 or a positive integer")]
    InvalidOrder(i64),
    #[error("quadratic signature has negative genus")]
    NegativeGenus,
    #[error("quadratic signature has base genus {0}, hyperelliptic loci need base genus 0")]
    NotHyperelliptic(u32),
    #[error("double cover genus mismatch: Riemann-Hurwitz gives {riemann_hurwitz}, zero orders give {from_zeros}")]
    InconsistentCover {
        riemann_hurwitz: i64,
        from_zeros: i64,
    },
    #[error("h0 jumped by more than one at prefix length {0}")]
    NonMonotoneH(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("hyperelliptic locus induces {locus:?}, not the stratum {stratum:?}")]
    ModeMismatch { locus: Vec<u32>, stratum: Vec<u32> },
    #[error("Lyapunov sum {sum} is below the lower bound {kappa}")]
    BelowLowerBound { sum: String, kappa: String },
    #[error("spectrum has {got} entries, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("w-list sum {from_w} disagrees with the hyperelliptic sum formula {from_formula}")]
    CrossCheckFailure {
        from_w: String,
        from_formula: String,
    },
    #[error("no embedded table for genus {0}")]
    UnsupportedGenus(u32),
    #[error("cyclic cover constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("N = {0} must be even")]
    OddN(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
