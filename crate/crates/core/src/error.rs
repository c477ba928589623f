use thiserror::Error;

use crate::mosaic::Side;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("grid field `{field}` has length {found}, expected {expected}")]
    GridSizeMismatch {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("grid size must be at least 1")]
    GridEmpty,

    #[error("grid field `{field}` is not a permutation of 1..={size}: value {value} in row {row}")]
    GridNotPermutation {
        field: &'static str,
        size: usize,
        value: usize,
        row: usize,
    },

    #[error("grid row {row} places both markers in column {col}")]
    GridMarkerClash { row: usize, col: usize },

    #[error("grid JSON is malformed: {0}")]
    GridJson(String),

    #[error("no {marker} marker at row {row}")]
    NoSuchMarker { marker: char, row: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("rows {row} and {row_plus} interleave; interchange refused")]
    InterleavingRows { row: usize, row_plus: usize },

    #[error("columns {col} and {col_plus} interleave; interchange refused")]
    InterleavingCols { col: usize, col_plus: usize },

    #[error("rows {row} and {row_plus} share a marker column; interchange refused")]
    SharedEndpointRows { row: usize, row_plus: usize },

    #[error("columns {col} and {col_plus} share a marker row; interchange refused")]
    SharedEndpointCols { col: usize, col_plus: usize },

    #[error("no destabilization available at block ({row},{col}): {reason}")]
    NoDestabilization {
        row: usize,
        col: usize,
        reason: &'static str,
    },

    #[error("mosaic text is malformed at line {line}: {reason}")]
    MosaicFormat { line: usize, reason: String },

    #[error("mosaic is not suitably connected: cell ({row},{col}) disagrees across its {side} edge")]
    NotSuitablyConnected { row: usize, col: usize, side: Side },

    #[error("diagram has {found} crossings; the bracket oracle is capped at {max}")]
    TooManyCrossings { found: usize, max: usize },

    #[error("mosaic counting supports 1..={max}, got {n}")]
    CountUnsupported { n: usize, max: usize },

    #[error("bounds are defined for n >= 3, got {n}")]
    BoundsUnsupported { n: usize },

    #[error("every component is rectangular; the slide reduction needs a non-rectangular one")]
    NoNonRectangularComponent,

    #[error("some component is not rectangular; rectangle-link classification refused")]
    NotARectangleLink,

    #[error("chain construction needs k >= 3, got {k}")]
    ChainTooSmall { k: usize },

    #[error("necklace construction needs k >= 4, got {k}")]
    NecklaceTooSmall { k: usize },

    #[error("torus parameters need 2 <= p < q, got ({p},{q})")]
    TorusParams { p: usize, q: usize },

    #[error("double slide needs q >= p+2, got ({p},{q})")]
    TorusDoubleParams { p: usize, q: usize },

    #[error("orientation has {found} entries for {expected} components")]
    OrientationMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
