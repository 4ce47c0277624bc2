use thiserror::Error;

/// Errors produced by the algebra and the group pipelines built on it.
#[derive(Debug, Error)]
pub enum VersorError {
    #[error("signature mismatch: Cl({0},{1}) vs Cl({2},{3})")]
    SignatureMismatch(usize, usize, usize, usize),

    #[error("invalid signature: p={p}, q={q} (need p+q <= 5)")]
    InvalidSignature { p: usize, q: usize },

    #[error("mirror vector is null (alpha^2 = {0:e})")]
    NullMirror(f64),

    #[error("expected a grade-{expected} multivector")]
    WrongGrade { expected: usize },

    #[error("versor is not unit: A*reverse(A) = {0}")]
    NonUnitVersor(f64),

    #[error("multivector has mixed even/odd grade content")]
    MixedParity,

    #[error("unknown group id: {0}")]
    UnknownGroup(String),

    #[error("I2(n) requires n >= 3, got {0}")]
    BadDihedralOrder(usize),

    #[error("closure exceeded {limit} elements; input does not generate a finite set")]
    ClosureOverflow { limit: usize },

    #[error("no power of the versor acts as the identity below bound {0}")]
    OrderNotFound(usize),

    #[error("no invariant plane with rotation angle 2*pi/{h} found")]
    NoCoxeterPlane { h: usize },

    #[error("rotation angle {angle} does not match any exponent grid point m/{h}")]
    ExponentMismatch { angle: f64, h: usize },

    #[error("conformal point has zero weight (point at infinity)")]
    PointAtInfinity,

    #[error("spinor has odd-grade content above tolerance")]
    NotASpinor,

    #[error("{0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, VersorError>;
