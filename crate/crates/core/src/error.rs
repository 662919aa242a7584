use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("grid needs at least one axis")]
    NoDimensions,
    #[error("axis {0} has zero cells")]
    EmptyAxis(usize),
    #[error("grid cell count overflows")]
    TooLarge,
    #[error("cell spacing must be positive and finite, got {0}")]
    InvalidSpacing(f64),
    #[error("velocity must be finite and non-negative, got {0}")]
    InvalidVelocity(f64),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coordinate {coord} out of range on axis {axis} (extent {extent})")]
    CoordOutOfRange {
        axis: usize,
        coord: usize,
        extent: usize,
    },
    #[error("index {index} out of range for {len} cells")]
    IndexOutOfRange { index: usize, len: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QueueError {
    #[error("cell {0} is not in the queue")]
    Absent(usize),
    #[error("new key {new} is larger than current key {old} for cell {cell}")]
    KeyIncrease { cell: usize, old: f64, new: f64 },
    #[error("key {key} exceeds the untidy queue range (head at {head}, range {range})")]
    RangeExceeded { key: f64, head: f64, range: f64 },
    #[error("invalid untidy queue configuration: {0}")]
    Config(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("start set is empty")]
    NoSources,
    #[error("start cell {0} is out of range")]
    SourceOutOfRange(usize),
    #[error("start cell {0} lies on an obstacle")]
    SourceOnObstacle(usize),
    #[error("FIM epsilon must be non-negative, got {0}")]
    InvalidEpsilon(f64),
    #[error(transparent)]
    Queue(#[from] QueueError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NormError {
    #[error("field shapes differ: {0} vs {1} cells")]
    ShapeMismatch(usize, usize),
    #[error("cell {0} is infinite in one field only")]
    MaskMismatch(usize),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad magic line {found:?}, expected {expected:?}")]
    BadMagic { expected: String, found: String },
    #[error("malformed header: {0}")]
    Header(String),
    #[error("payload has {got} bytes, expected {expected}")]
    Payload { expected: usize, got: usize },
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BenchError {
    #[error("invalid experiment: {0}")]
    Spec(String),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}
