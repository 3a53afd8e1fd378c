use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not hermitian (max |H - H^dagger| = {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("expected a polynomial of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("characteristic polynomial has an imaginary residue of {residual:e}")]
    ImaginaryResidue { residual: f64 },
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("invalid multi-index: {0}")]
    BadIndex(String),
    #[error("basis mode {basis} does not match coordinate mode {coords}")]
    ModeMismatch { basis: String, coords: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("trace is {trace}, expected 1")]
    NonUnitTrace { trace: f64 },
    #[error("grade {k} out of range 1..={max}")]
    GradeOutOfRange { k: usize, max: usize },
    #[error("expected a grade-{expected} tensor, got grade {found}")]
    GradeMismatch { expected: usize, found: usize },
    #[error("operation not supported for m = {0}")]
    UnsupportedM(usize),
    #[error("invariant set does not fit configuration kind {0}")]
    KindMismatch(String),
    #[error("closed-form roots have an imaginary residue of {residual:e}")]
    ComplexRoots { residual: f64 },
    #[error("factorized characteristic polynomial disagrees with the direct one (relative residual {residual:e})")]
    FactorizationMismatch { residual: f64 },
    #[error("matrix is not unitary (max |U U^dagger - I| = {residual:e})")]
    NotUnitary { residual: f64 },
    #[error("2r^2 - T4 = {0:e} is negative beyond tolerance")]
    NegativeDiscriminant(f64),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("resolution must be at least 2, got {0}")]
    BadResolution(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
