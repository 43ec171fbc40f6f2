use thiserror::Error;

pub type Result<T, E = HkError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HkError {
    #[error("n must be ≥ 2 (got {0})")]
    InvalidN(u64),
    #[error("k must be ≥ 1 (got {0})")]
    InvalidK(u64),
    #[error("vertex id {id} out of range for {order} vertices")]
    IdOutOfRange { id: u64, order: String },
    #[error("label has {got} digits, expected {expected}")]
    LabelLength { expected: usize, got: usize },
    #[error("digit {digit} out of range for n={n}")]
    DigitOutOfRange { digit: u32, n: u32 },
    #[error("cannot parse label {0:?}")]
    LabelSyntax(String),
    #[error("prefix length {len} must lie in [1, {max}]")]
    PrefixLength { len: usize, max: u32 },
    #[error("collapse level {level} must lie in [1, {max}]")]
    CollapseLevel { level: u32, max: u32 },
    #[error("graph with {order} vertices exceeds the materialization cap of {cap}; use analytic operations instead")]
    BudgetExceeded { order: String, cap: u64 },
    #[error("graph is disconnected (vertex {0} unreachable)")]
    Disconnected(u32),
    #[error("arithmetic overflow in the chosen integer type")]
    Overflow,
    #[error("gamma undefined for n=2")]
    GammaUndefined,
    #[error("regression needs at least 3 distinct points, got {0}")]
    TooFewPoints(usize),
    #[error("non-positive value {0} cannot be log-transformed")]
    NonPositive(String),
    #[error("params mismatch: analytic (n={0}, k={1}) vs empirical (n={2}, k={3})")]
    ParamsMismatch(u32, u32, u32, u32),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("invalid sweep: {0}")]
    Sweep(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for HkError {
    fn from(e: std::io::Error) -> Self {
        HkError::Io(e.to_string())
    }
}
