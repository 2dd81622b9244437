use std::path::PathBuf;

use thiserror::Error;

/// Coarse classification used by callers that need to turn an error into a
/// process exit code: bad arguments, bad data, or a failed I/O operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage,
    Data,
    Io,
}

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("{path}: empty recording")]
    EmptyRecording { path: PathBuf },

    #[error("{path}: {byte_len} bytes is not a whole number of interleaved float32 I/Q pairs")]
    RaggedRecording { path: PathBuf, byte_len: u64 },

    #[error("segment window of {window} samples with stride {stride} cannot be cut from {available} samples")]
    WindowTooLarge {
        window: usize,
        stride: usize,
        available: u64,
    },

    #[error("segment range [{start}, {start}+{len}) exceeds recording length {available}")]
    RangeOutOfBounds { start: u64, len: usize, available: u64 },

    #[error("z-normalization needs at least 2 samples, got {len}")]
    TooFewSamples { len: usize },

    #[error("invalid STFT geometry: fft_size={fft_size}, overlap={overlap} (need fft_size > 0 and 0 <= overlap < fft_size)")]
    BadStftGeometry { fft_size: usize, overlap: usize },

    #[error("segment of {len} samples is shorter than one window of {fft_size}")]
    SegmentTooShort { len: usize, fft_size: usize },

    #[error("dB conversion epsilon must be positive, got {epsilon}")]
    BadEpsilon { epsilon: f64 },

    #[error("negative power {value} at row {row}, col {col}; power spectra must be nonnegative")]
    NegativePower { row: usize, col: usize, value: f64 },

    #[error("unknown colormap {name:?}")]
    UnknownColormap { name: String },

    #[error("unknown normalization policy {name:?}")]
    UnknownNorm { name: String },

    #[error("unknown window function {name:?}")]
    UnknownWindow { name: String },

    #[error("target SNR is undefined for an all-zero signal")]
    ZeroPowerSignal,

    #[error("target SNR must be finite, got {value}")]
    BadSnrTarget { value: f64 },

    #[error("Rician K factor must be nonnegative and finite, got {value}")]
    BadRicianK { value: f64 },

    #[error("frequency shift {shift_hz} Hz outside the representable band (|shift| < {nyquist} Hz)")]
    ShiftOutOfBand { shift_hz: f64, nyquist: f64 },

    #[error("sample rate must be positive and finite, got {value}")]
    BadSampleRate { value: f64 },

    #[error("mix ratio alpha must lie in [0, 1], got {alpha}")]
    BadMixRatio { alpha: f64 },

    #[error("mixing needs a non-empty interferer")]
    EmptyInterferer,

    #[error("SNR estimation needs at least one annotation box")]
    NoBoxes,

    #[error("SNR estimation needs cells both inside and outside the annotation boxes")]
    DegenerateBoxCoverage,

    #[error("{path}:{line}: malformed label line: {reason}")]
    MalformedLabel {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("class id {class_id} has no entry in the class map")]
    UnmappedClass { class_id: u32 },

    #[error("{name:?}: unrecognized capture naming convention")]
    UnrecognizedName { name: String },

    #[error("{name:?}: expected {expected} underscore-separated fields, found {found}")]
    FieldCount {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("{name:?}: field {field} should be {kind}, got {value:?}")]
    BadField {
        name: String,
        field: &'static str,
        kind: &'static str,
        value: String,
    },

    #[error("class maps disagree across splits: id {class_id} is {first:?} in one split and {second:?} in another")]
    ClassMapConflict {
        class_id: u32,
        first: String,
        second: String,
    },

    #[error("{path}: no class map found (expected classes.txt or class_map.tsv)")]
    MissingClassMap { path: PathBuf },

    #[error("{path}: source layout not recognized as a YOLO dataset")]
    UnrecognizedLayout { path: PathBuf },

    #[error("manifest column {column:?} missing")]
    ManifestColumnMissing { column: &'static str },

    #[error("manifest row {row}: bad value for {column:?}: {value:?}")]
    ManifestBadValue {
        row: usize,
        column: &'static str,
        value: String,
    },

    #[error("manifest row {sample_id}: stored sample id does not match its recomputed content hash {recomputed}")]
    SampleIdMismatch {
        sample_id: String,
        recomputed: String,
    },

    #[error("manifest row {sample_id}: {detail}")]
    InconsistentRow {
        sample_id: String,
        detail: &'static str,
    },

    #[error("no usable source recordings under the given inputs")]
    NoSources,

    #[error("SNR sweep needs at least one target value")]
    EmptySnrList,

    #[error("image dimensions {image_w}x{image_h} do not match spectrogram {spec_w}x{spec_h}")]
    DimensionMismatch {
        image_w: u32,
        image_h: u32,
        spec_w: u32,
        spec_h: u32,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Csv { path: PathBuf, message: String },

    #[error("{path}: {message}")]
    ImageEncode { path: PathBuf, message: String },
}

impl CoreError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CoreError::Io {
            path: path.into(),
            source,
        }
    }

    /// Which exit-code bucket this error belongs to. Parameter mistakes are
    /// usage errors; malformed content is a data error; anything touching the
    /// filesystem is an I/O error.
    pub fn class(&self) -> ErrorClass {
        use CoreError::*;
        match self {
            BadStftGeometry { .. }
            | BadEpsilon { .. }
            | UnknownColormap { .. }
            | UnknownNorm { .. }
            | UnknownWindow { .. }
            | BadSnrTarget { .. }
            | BadRicianK { .. }
            | ShiftOutOfBand { .. }
            | BadSampleRate { .. }
            | BadMixRatio { .. }
            | EmptySnrList
            | WindowTooLarge { .. } => ErrorClass::Usage,

            Io { .. } | Csv { .. } | ImageEncode { .. } => ErrorClass::Io,

            _ => ErrorClass::Data,
        }
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
