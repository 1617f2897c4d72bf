use thiserror::Error;

use crate::semigroup::ElementId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table has {rows} rows but a row of length {len}; expected {n}x{n}")]
    TableShape { n: usize, rows: usize, len: usize },

    #[error("table entry [{row}][{col}] = {value} is out of range for {n} elements")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NonAssociative { i: usize, j: usize, k: usize },

    #[error("empty generator set")]
    EmptyGeneratorSet,

    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("image {image} is outside 1..={degree}")]
    ImageOutOfRange { image: usize, degree: usize },

    #[error(
        "generator {index} has shape {rows}x{cols}; all generators must be square of the same size"
    )]
    MatrixShape {
        index: usize,
        rows: usize,
        cols: usize,
    },

    #[error("matrix entry exceeds the overflow bound {bound}")]
    EntryOverflow { bound: u64 },

    #[error("closure exceeded the cap of {0} elements")]
    ClosureBoundExceeded(usize),

    #[error("involution map has length {found}, expected {expected}")]
    InvolutionLength { expected: usize, found: usize },

    #[error("involution is not a permutation: {0} is hit twice or out of range")]
    NotPermutation(usize),

    #[error("involution is not involutive at element {0}")]
    NotInvolutive(ElementId),

    #[error("involution is not an antihomomorphism at ({0}, {1})")]
    NotAntihomomorphic(ElementId, ElementId),

    #[error("transpose of element {0} is not in the semigroup")]
    InvolutionNotClosed(ElementId),

    #[error("transpose involution requires matrix provenance")]
    TransposeWithoutMatrices,

    #[error("inverse along is not unique: both {0} and {1} solve bad=d=dab, b in dS and Sd")]
    MultipleSolutions(ElementId, ElementId),

    #[error("enumeration is limited to order 1..=4, got {0}")]
    OrderTooLarge(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
