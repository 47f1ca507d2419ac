//! Crate-wide error type.

use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word exceeds the maximum supported length")]
    WordTooLong,
    #[error("cannot parse word: {0}")]
    WordSyntax(String),
    #[error("empty pattern")]
    EmptyPattern,
    #[error("pattern exceeds the supported length")]
    PatternTooLong,
    #[error("pattern is not normalized")]
    NotNormalized,
    #[error("empty pattern set")]
    EmptyPatternSet,
    #[error("degenerate pattern: the avoidance tree would be empty")]
    DegeneratePattern,
    #[error("pattern sets must be of inversion or restricted-growth kind")]
    UnsupportedKind,
    #[error("restricted-growth patterns must themselves be valid restricted growth sequences")]
    InvalidRgsPattern,
    #[error("node budget exhausted")]
    BudgetExceeded,
    #[error("requested depth exceeds the supported word length")]
    DepthOutOfRange,
    #[error("prefix does not avoid the pattern set")]
    PrefixContainsPattern,

    #[error("rule syntax error at line {line}, column {col}: {msg}")]
    RuleSyntax { line: usize, col: usize, msg: String },
    #[error("templates on lines {first} and {second} for family `{family}` have overlapping guards")]
    OverlappingGuards { family: String, first: usize, second: usize },
    #[error("no template matches label {0}")]
    UnmatchedLabel(String),
    #[error("negative repeat count while expanding {0}")]
    NegativeRepeat(String),
    #[error("parameter of label {0} out of range at level {1}")]
    ParamOutOfRange(String, usize),
    #[error("unknown weight sequence `{0}`")]
    UnknownSequence(String),
    #[error("invalid rule document: {0}")]
    RuleDoc(String),

    #[error("division by a series with no nonzero coefficient")]
    DivisionByZero,
    #[error("square root requires an even valuation")]
    SqrtValuation,
    #[error("square root requires a perfect-square leading coefficient")]
    SqrtLeading,
    #[error("series has residual negative-valuation terms")]
    NegativeValuation,
    #[error("series is not known up to the requested order")]
    OrderTooShort,
    #[error("non-integral value in a counting sequence")]
    NonIntegral,
    #[error("negative value in a counting sequence")]
    NegativeCount,
    #[error("unknown formula id `{0}`")]
    UnknownFormula(String),
    #[error("formula parameter missing or out of range")]
    BadFormulaParam,
    #[error("sequences cannot be aligned by a shift of 0 or 1")]
    OffsetMismatch,
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;
