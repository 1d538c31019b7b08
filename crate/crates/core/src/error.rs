use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of size {size} exceeds the cap of {cap} elements")]
    FieldTooLarge { size: u128, cap: u64 },
    #[error("{divisor} does not divide {value}")]
    NotADivisor { divisor: u64, value: u64 },
    #[error("GF({q}) is not a subfield of GF({size})")]
    NotASubfield { q: u64, size: u64 },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("polynomial coefficients do not lie in GF({q})")]
    NotOverSubfield { q: u64 },
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },
    #[error("designed distance {delta} is outside [2, {n}]")]
    InvalidDelta { delta: usize, n: usize },
    #[error("code length {0} must be greater than 1")]
    InvalidLength(usize),
    #[error("parameters fall outside the closed-form dimension range")]
    OutOfLemmaRange,
    #[error("code is not narrow-sense (b = {0})")]
    NotNarrowSense(usize),
    #[error("code is not primitive (n = {n}, q^m - 1 = {full})")]
    NotPrimitive { n: usize, full: u64 },
    #[error("word has length {got}, code has length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("point {0} appears more than once")]
    DuplicatePoint(usize),
    #[error("point {0} is zero")]
    ZeroPoint(usize),
    #[error("point {0} equals one")]
    PointIsOne(usize),
    #[error("locator exponent {0} appears more than once")]
    DuplicateLocator(usize),
    #[error("locator exponent {exponent} is outside [1, {n})")]
    LocatorOutOfRange { exponent: usize, n: usize },
    #[error("expected {expected} locators, got {got}")]
    WrongLocatorCount { expected: usize, got: usize },
    #[error("S_{index} does not lie in GF(q)^*")]
    CriterionFailed { index: usize },
    #[error("designed distance {delta} must lie in [2, {max}]")]
    DeltaOutOfRange { delta: usize, max: usize },
    #[error("m = {m} is not a multiple of p*t = {pt}")]
    BadModulus { m: u32, pt: u32 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("root exponent {exponent} is not divisible by q - 1 = {q_minus_one}")]
    NormCheckFailed { exponent: u64, q_minus_one: u64 },
    #[error("budget of {budget} candidates exhausted before a decision")]
    BudgetExceeded { budget: u64 },
    #[error("enumeration space of {size} exceeds the limit {limit}")]
    TooLarge { size: u128, limit: u64 },
    #[error("code has dimension 0")]
    DegenerateCode,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("record does not match the recomputed value: {0}")]
    RecordMismatch(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::NotADivisor { .. } => "NotADivisor",
            Error::NotASubfield { .. } => "NotASubfield",
            Error::FieldMismatch => "FieldMismatch",
            Error::DivisionByZeroPolynomial => "DivisionByZeroPolynomial",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotSeparable => "NotSeparable",
            Error::NotOverSubfield { .. } => "NotOverSubfield",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::InvalidDelta { .. } => "InvalidDelta",
            Error::InvalidLength(_) => "InvalidLength",
            Error::OutOfLemmaRange => "OutOfLemmaRange",
            Error::NotNarrowSense(_) => "NotNarrowSense",
            Error::NotPrimitive { .. } => "NotPrimitive",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::DuplicatePoint(_) => "DuplicatePoint",
            Error::ZeroPoint(_) => "ZeroPoint",
            Error::PointIsOne(_) => "PointIsOne",
            Error::DuplicateLocator(_) => "DuplicateLocator",
            Error::LocatorOutOfRange { .. } => "LocatorOutOfRange",
            Error::WrongLocatorCount { .. } => "WrongLocatorCount",
            Error::CriterionFailed { .. } => "CriterionFailed",
            Error::DeltaOutOfRange { .. } => "DeltaOutOfRange",
            Error::BadModulus { .. } => "BadModulus",
            Error::BadParameters(_) => "BadParameters",
            Error::NormCheckFailed { .. } => "NormCheckFailed",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::TooLarge { .. } => "TooLarge",
            Error::DegenerateCode => "DegenerateCode",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::RecordMismatch(_) => "RecordMismatch",
            Error::Internal(_) => "Internal",
        }
    }
}
