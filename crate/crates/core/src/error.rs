use thiserror::Error;

use crate::numerics::Scalar;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input: malformed matrices, out-of-range parameters, foreign labels.
    Validation,
    /// A configured size limit was hit before the computation could finish.
    ResourceGuard,
    /// Something that is a theorem failed to hold, or an iteration failed to settle.
    Internal,
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: entry ({row}, {col}) is not the conjugate of entry ({col}, {row})")]
    NotHermitian { row: usize, col: usize },

    #[error("matrix must be square and non-empty with dimension at most {max}, got {rows}x{cols}")]
    MatrixShape { rows: usize, cols: usize, max: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm})")]
    NoConvergence { sweeps: usize, off_norm: Scalar },

    #[error("quadratic has no positive root: {reason}")]
    NoPositiveRoot { reason: String },

    #[error("quadratic has two positive roots {smaller} and {larger}")]
    TwoPositiveRoots { smaller: Scalar, larger: Scalar },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("F is singular: smallest eigenvalue of F*F is {smallest}")]
    SingularMatrix { smallest: Scalar },

    #[error("trace condition violated: Tr(F*F) = {trace}, Tr((F*F)^-1) = {inverse_trace}")]
    TraceCondition { trace: Scalar, inverse_trace: Scalar },

    #[error("spectrum entries must be strictly positive, got {0}")]
    NonPositiveEigenvalue(Scalar),

    #[error("{}", describe_orphan(.orphan, .closest, .gap))]
    UnmatchedElement {
        orphan: Scalar,
        closest: Option<Scalar>,
        gap: Option<Scalar>,
    },

    #[error("expected {expected} power sums, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("label {label} does not belong to the {catalog} catalog")]
    ForeignLabel { label: String, catalog: String },

    #[error("resource guard: {what} would reach {value}, limit is {limit}")]
    ResourceGuard { what: &'static str, value: String, limit: String },

    #[error("cannot derive the spectrum of {label}: {reason}")]
    UnreachableLabel { label: String, reason: String },

    #[error(
        "theorem inequality violated at n = {n}, t = {t}: {lhs} > {rhs} ({which})"
    )]
    InequalityViolation {
        n: usize,
        t: Scalar,
        lhs: Scalar,
        rhs: Scalar,
        which: &'static str,
    },

    #[error("growth table has {have} rows, at least {needed} are required")]
    InsufficientRows { have: usize, needed: usize },
}

fn describe_orphan(orphan: &Scalar, closest: &Option<Scalar>, gap: &Option<Scalar>) -> String {
    match (closest, gap) {
        (Some(c), Some(g)) => format!(
            "element {orphan} has no partner within tolerance (closest candidate {c}, gap {g})"
        ),
        _ => format!("element {orphan} has no partner: nothing left to match against"),
    }
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ResourceGuard { .. } => ErrorKind::ResourceGuard,
            Error::InequalityViolation { .. } | Error::NoConvergence { .. } => ErrorKind::Internal,
            _ => ErrorKind::Validation,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
