use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("ambient size {0} is not supported (must be at most 32)")]
    UnsupportedSize(usize),
    #[error("entry {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("value {0} appears more than once; a partial ranking must be injective")]
    NotInjective(usize),
    #[error("{0} is not below {1} in the natural partial order")]
    NotComparable(String, String),
    #[error("subset has {got} elements, expected {expected}")]
    SubsetSize { expected: usize, got: usize },

    #[error("multiplication table is malformed: {0}")]
    MalformedTable(String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {element} has {count} inverses, expected exactly one")]
    InverseCount { element: usize, count: usize },
    #[error("element {element} does not lie in D-class {class}")]
    NotInClass { element: usize, class: usize },
    #[error("element {0} is not an idempotent of the requested D-class")]
    NotIdempotent(usize),
    #[error("representation is not multiplicative: {0}")]
    NotMultiplicative(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partitions have different weights: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("partition of {weight} does not fit in rank {n}")]
    WeightTooLarge { weight: usize, n: usize },

    #[error("expected an element in the {expected} basis")]
    BasisMismatch { expected: &'static str },
    #[error("order-{order} statistics need rank at least {order}, got {k}")]
    OrderTooLarge { order: usize, k: usize },
    #[error("interpretable cell does not fit the block: {0}")]
    CellOutsideBlock(String),
    #[error("ranking {ranking} does not have range {{1..{k}}}")]
    WrongRange { ranking: String, k: usize },
    #[error("the two computation routes disagree: {0}")]
    RouteMismatch(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("configuration error: {0}")]
    Config(String),
}
