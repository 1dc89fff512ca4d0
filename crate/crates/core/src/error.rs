use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series order must be at least 1")]
    ZeroOrder,
    #[error("exponent {exponent} is outside a series of order {order}")]
    ExponentOutOfRange { exponent: usize, order: usize },
    #[error("exponent {0} given more than once")]
    DuplicateExponent(usize),
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(BigInt),
    #[error("comparison window {upto} exceeds available order {order}")]
    WindowTooLarge { upto: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("factor (1 - q^0) vanishes identically")]
    DegenerateFactor,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("exponent for j = {j} is negative")]
    NegativeExponent { j: i64 },
    #[error("exponent for j = {j} is not an integer")]
    NonIntegralExponent { j: i64 },
    #[error("unknown series identifier `{0}`")]
    UnknownSeries(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("malformed partition text `{0}`")]
    Parse(String),
    #[error("parts must be positive and listed in decreasing order")]
    Order,
    #[error("unknown partition class `{0}`")]
    UnknownClass(String),
    #[error("partition {partition} admits {count} decompositions in class {class}")]
    Ambiguous { partition: String, class: String, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("series order must be at least 1")]
    ZeroOrder,
    #[error("enumeration limit {enum_limit} exceeds series order {series_order}")]
    LimitExceedsOrder { enum_limit: usize, series_order: usize },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
