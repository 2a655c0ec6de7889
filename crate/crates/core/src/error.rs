use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("modulus mismatch: {0} vs {1}")]
    Modulus(u32, u32),
    #[error("expression mismatch: {0}")]
    Expression(String),
    #[error("twist mismatch: {0}")]
    Twist(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("correspondence is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("invalid structure `{name}`: {}", violations.join("; "))]
    InvalidStructure { name: String, violations: Vec<String> },
    #[error("unknown variety `{0}`")]
    UnknownVariety(String),
    #[error("unknown field `{0}`")]
    UnknownField(String),
    #[error("no rational space registered for {field} on {expr}")]
    UnknownSpace { field: String, expr: String },
    #[error("invalid field poset: {0}")]
    Poset(String),
    #[error("not a summand: {0}")]
    NotSummand(String),
    #[error("not a projector: {0}")]
    NotProjector(String),
    #[error("zero projector has no profile")]
    ZeroProjector,
    #[error("hypothesis-1 violated: {0}")]
    Hypothesis1(String),
    #[error("lower-ness violated: {0}")]
    LowerNess(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("model error: {0}")]
    Model(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors that signal a violated mathematical hypothesis (an expected
    /// negative outcome) rather than a defect in the engine.
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(
            self,
            Error::InvalidStructure { .. }
                | Error::Hypothesis1(_)
                | Error::LowerNess(_)
                | Error::Hypothesis(_)
                | Error::NotSummand(_)
                | Error::NotProjector(_)
        )
    }
}
