use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {message}")]
pub struct ParseError {
    message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("code length {length} exceeds the exhaustive cap of {cap}; request sampled mode")]
    ExhaustiveCapExceeded { length: usize, cap: usize },
    #[error("generator and parity-check matrices are inconsistent: {0}")]
    Inconsistent(String),
    #[error("coset table needs 2^{syndrome_bits} entries, above the 2^{cap} cap")]
    TableCapExceeded { syndrome_bits: usize, cap: usize },
    #[error("dual tensor code has dimension {dim}, above the enumeration cap of {cap}; request sampled mode")]
    EnumerationCapExceeded { dim: usize, cap: usize },
    #[error("no decomposition x = r + c within the row/column bounds exists")]
    NoDecomposition,
    #[error("word is not a codeword of the dual tensor code")]
    NotACodeword,
    #[error("sampling budget of {budget} draws exhausted without meeting the distance target")]
    BudgetExhausted { budget: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is not a Latin square: {0}")]
    NotLatin(String),
    #[error("no identity element")]
    NoIdentity,
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("invalid group description: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("generator set is not closed under inversion: {0} has inverse {1} outside the set")]
    NotSymmetric(usize, usize),
    #[error("generator set contains the identity")]
    ContainsIdentity,
    #[error("generator set contains {0} twice")]
    Duplicate(usize),
    #[error("element {0} is outside the group of order {1}")]
    OutOfRange(usize, usize),
    #[error("Cayley graph is disconnected ({reached} of {order} elements reachable)")]
    Disconnected { reached: usize, order: usize },
    #[error("generator sets have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("generator set is empty")]
    Empty,
    #[error("expected a {expected:?} generator set")]
    WrongSide { expected: crate::complex::Side },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QTannerError {
    #[error("component code length {found} does not match generator set size {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("hx · hzᵀ is nonzero at ({0}, {1})")]
    NotOrthogonal(usize, usize),
    #[error("syndrome has length {found}, expected {expected}")]
    SyndromeLength { expected: usize, found: usize },
    #[error("error vector has length {found}, expected {expected}")]
    ErrorLength { expected: usize, found: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LiftError {
    #[error("matrix {0} is not full rank over F_2")]
    RankDeficient(&'static str),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix {0} must have entries in F_2")]
    NotBinary(&'static str),
    #[error("row spaces of the lifted-product restriction and the direct quantum Tanner build differ ({0})")]
    Correspondence(&'static str),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    QTanner(#[from] QTannerError),
}
