use thiserror::Error;

/// Errors raised while building or combining soft sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SoftSetError {
    #[error("duplicate universe element `{0}`")]
    DuplicateElement(String),

    #[error("duplicate attribute `{0}`")]
    DuplicateAttribute(String),

    #[error("value of attribute `{attribute}` contains `{element}`, which is not in the universe")]
    UnknownElement { attribute: String, element: String },

    #[error("attribute `{0}` has no value")]
    MissingValue(String),

    #[error("value given for `{0}`, which is not a declared attribute")]
    UnknownAttribute(String),

    #[error("matrix is {found_rows}x{found_cols}, expected {expected_rows}x{expected_cols}")]
    DimensionMismatch {
        expected_rows: usize,
        expected_cols: usize,
        found_rows: usize,
        found_cols: usize,
    },

    #[error("matrix row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("matrix entry ({row},{col}) is {value}; only 0 and 1 are allowed")]
    InvalidEntry { row: usize, col: usize, value: i64 },

    #[error("soft sets are defined over different universes")]
    UniverseMismatch,

    #[error("similarity is undefined: the universe or both attribute sets are empty")]
    EmptyDenominator,

    #[error("{count} attributes exceeds the ordering search limit of {limit}")]
    TooManyAttributes { count: usize, limit: usize },

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = SoftSetError> = std::result::Result<T, E>;
