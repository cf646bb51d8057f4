use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the kernel can report.
///
/// Variants split into two classes, see [`Error::exit_code`]: malformed
/// input (syntax, usage) and well-formed input that violates a semantic
/// side condition (normalization, degree range, unknown atoms, ...).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: expected {}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },

    #[error("ill-formed proposition: {0}")]
    IllFormed(String),

    #[error("complex number components must be finite")]
    NonFinite,

    #[error("assertion degree out of range: |degree|^2 = {norm_sqr} exceeds 1")]
    DegreeOutOfRange { norm_sqr: f64 },

    #[error(
        "normalization violation: sum of |degree|^2 = {sum}, must equal 1 within {tolerance:e}"
    )]
    NormalizationViolation { sum: f64, tolerance: f64 },

    #[error("superposition needs at least 2 parts, found {found}")]
    Arity { found: usize },

    #[error("assertion is graded, a classical assertion is required")]
    NotClassical,

    #[error("assertion is classical, a graded assertion is required")]
    NotGraded,

    #[error("subject is not a classical conjunction")]
    NotConjunction,

    #[error("subject is not a quantum superposition")]
    NotSuperposition,

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("atom `{0}` appears twice")]
    DuplicateAtom(String),

    #[error("superposition names atom `{0}` in more than one part")]
    DuplicateOperand(String),

    #[error("superposition operand `{0}` is not an atom")]
    NonAtomicOperand(String),

    #[error("amplitude vector has {found} entries for a basis of {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("truth value {0} lies outside [0, 1]")]
    TruthValueOutOfRange(f64),

    #[error("atom `{0}` carries no probability in this context")]
    NotProbabilized(String),

    #[error("invalid probability context: {0}")]
    InvalidContext(String),

    #[error("no truth value assigned to `{0}`")]
    UnvaluedAtom(String),

    #[error("`{0}` is not a Lukasiewicz formula over P-atoms")]
    NotLukasiewicz(String),

    #[error("compose/decompose round trip altered `{0}`")]
    RoundTrip(String),

    #[error("depends on failed statement `{0}`")]
    FailedDependency(String),

    #[error("derivation line {line}: {reason}")]
    InvalidStep { line: usize, reason: String },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Process exit status for this error: 1 for syntax and usage problems,
    /// 2 for semantic violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } | Error::NonFinite | Error::IllFormed(_) | Error::Usage(_) => 1,
            _ => 2,
        }
    }

    pub(crate) fn syntax(offset: usize, expected: &[&'static str]) -> Self {
        Error::Syntax {
            offset,
            expected: expected.to_vec(),
        }
    }
}
