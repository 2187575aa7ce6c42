use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("fiber genus must be at least 2, got {0}")]
    GenusTooSmall(usize),
    #[error("letter {letter} out of range for {generators} generators")]
    LetterOutOfRange { letter: i32, generators: usize },
    #[error("chain index h={h} out of range 1..={max}")]
    ChainOutOfRange { h: usize, max: usize },
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i32),
    #[error("expected {expected} handle words for base genus {base_genus}, got {got}")]
    HandleCount {
        base_genus: usize,
        expected: usize,
        got: usize,
    },
    #[error("index {index} out of range for {len} factors")]
    FactorIndex { index: usize, len: usize },
    #[error("fiber genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("base genus mismatch: {0} vs {1}")]
    BaseMismatch(usize, usize),
    #[error("signature is not an integer: {0}")]
    NonIntegralSignature(Ratio<i64>),
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("example {name} is not defined at genus {genus}")]
    UnsupportedExample { name: String, genus: usize },
    #[error("generator index {index} out of range 1..={max}")]
    GeneratorIndex { index: usize, max: usize },
}
