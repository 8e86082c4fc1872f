//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// A file header field is missing, has the wrong type, or an invalid value.
    #[error("malformed header field `{field}`: {reason}")]
    MalformedHeader { field: &'static str, reason: String },

    #[error("truncated payload: expected {expected} bytes, got {actual}")]
    TruncatedPayload { expected: usize, actual: usize },

    #[error("trailing data after payload: {extra} unexpected bytes")]
    TrailingData { extra: usize },

    #[error("unsupported dtype `{dtype}` for kind `{kind}`")]
    UnsupportedDtype { dtype: String, kind: String },

    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    #[error("constant volume: min equals max, min-max normalization undefined")]
    ConstantVolume,

    #[error("crop target {target:?} exceeds source shape {source:?}")]
    CropTooLarge {
        target: [usize; 3],
        source: [usize; 3],
    },

    #[error("channel mismatch: {context}")]
    ChannelMismatch { context: String },

    #[error("spatial extents {shape:?} not divisible by {divisor}")]
    IndivisibleShape { shape: [usize; 3], divisor: usize },

    #[error("shape {shape:?} too small: need at least {min} voxels per axis")]
    ShapeTooSmall { shape: [usize; 3], min: usize },

    #[error("window {window} larger than volume extent {extent}")]
    WindowTooLarge { window: usize, extent: usize },

    #[error("dataset manifest is empty")]
    EmptyDataset,

    #[error("non-finite loss at epoch {epoch}, pair {pair}: {value}")]
    NanLoss { epoch: usize, pair: usize, value: f64 },

    #[error("label {label} empty in {which} map")]
    LabelEmpty { label: i32, which: &'static str },

    #[error("no fold-free field found in {attempts} attempts (smoothing too weak for the requested amplitude)")]
    FieldGenerationFailed { attempts: usize },

    #[error("unknown parameter `{name}` in checkpoint")]
    UnknownParameter { name: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
