use thiserror::Error;

/// Errors raised by the computation modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid branch index {0}: exceptional fibers need multiplicity >= 2")]
    InvalidBranchIndex(String),
    #[error("invalid genus {0}: must be non-negative")]
    InvalidGenus(String),
    #[error("malformed index string {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("expected {expected} coefficients (b plus one per cone point), got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("cohomology classes live over different signatures")]
    SignatureMismatch,
    #[error("class is not in normal form (need 0 <= beta_j < alpha_j)")]
    NotNormalized,
    #[error("alternative class is not Z/2-extension equivalent to the index class")]
    NotEquivalent,
    #[error("alternative class does not satisfy the Jankins-Neumann criteria")]
    NotRealizable,
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("triple {0:?} lies on the reducible wall (eta_2 vanishes)")]
    DegenerateReducible([u64; 3]),
    #[error("triple {0:?} admits no SU(1,1) solution (|xi_2|^2 < 1)")]
    ConstructionInfeasible([u64; 3]),
    #[error("conjugated matrix has imaginary part {0:e} above tolerance")]
    NonRealResult(f64),
    #[error("rotation order mismatch for {beta}/{alpha}: gcd formula {formula}, matrix powers {numeric:?}")]
    NumericalMismatch {
        alpha: u64,
        beta: u64,
        formula: u64,
        numeric: Option<u64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
