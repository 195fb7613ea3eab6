use thiserror::Error;

/// Crate-wide error type. Every fallible operation reports through this enum
/// so the CLI can map failures onto its exit-code contract.
#[derive(Debug, Error)]
pub enum Error {
    #[error("gcd undefined: both inputs are zero")]
    GcdUndefined,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not irreducible over Q: {0}")]
    NotIrreducible(String),
    #[error("interval endpoint is a root; deflate the shared factor or perturb the endpoint")]
    EndpointIsRoot,
    #[error("invalid interval: lower bound must be strictly below upper bound")]
    InvalidInterval,
    #[error("number field mismatch")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("characteristic polynomial has non-integer coefficients")]
    NonIntegerCharPoly,
    #[error("bracket index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("antisymmetry conflict in bracket table at pair ({0}, {1})")]
    AntisymmetryConflict(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("algebra is not nilpotent: lower central series stabilizes at a nonzero term")]
    NotNilpotent,
    #[error("algebra is not 2-step nilpotent")]
    NotTwoStep,
    #[error("basis is not adapted: the derived algebra must be spanned by the trailing coordinates")]
    BasisNotAdapted,
    #[error("skew matrix must have even size")]
    OddSize,
    #[error("matrix is not skew-symmetric with zero diagonal")]
    NotSkew,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("expected a polynomial in 3 variables of degree 3")]
    WrongShape,
    #[error("unknown catalog entry '{name}'; valid names: {valid}")]
    UnknownEntry { name: String, valid: String },
    #[error("catalog entry '{name}' expects {expected} parameters, got {got}")]
    ParameterArity {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("no certificate is known for catalog entry '{0}'")]
    NoCertificate(String),
    #[error("certificate parameters out of range: {0}")]
    BadCertificateParams(String),
    #[error("invalid scalar literal '{0}'")]
    BadScalar(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
