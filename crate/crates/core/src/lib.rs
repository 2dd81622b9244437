//! Batch conversion of raw I/Q drone RF captures into reproducible
//! spectrogram datasets.
//!
//! The pipeline runs in fixed stages: memory-map interleaved float32 I/Q
//! recordings and slice them into equal segments (`iq_io`), transform each
//! segment to a DC-centered power spectrogram (`spectro`), optionally apply
//! physics-level augmentations such as exact-SNR noise, block fading,
//! frequency shifts, and interferer mixing (`augment`), keep YOLO boxes
//! aligned through those transforms (`annotate`), and assemble the results
//! into an SNR-stratified directory tree with a manifest that can rebuild
//! any sample byte for byte (`dataset`).
//!
//! Everything random flows from one master seed through named per-sample,
//! per-stage streams, so a dataset is a pure function of its inputs and
//! configuration.

pub mod annotate;
pub mod augment;
pub mod dataset;
pub mod error;
pub mod iq_io;
pub mod matrix;
pub mod seed;
pub mod spectro;

pub use error::{CoreError, ErrorClass, Result};
pub use matrix::Matrix;
/// The complex sample type every signal-path function speaks.
pub use num_complex::Complex64;

/// Sampling rate assumed when a capture's naming does not state one, in Hz.
pub const DEFAULT_SAMPLE_RATE_HZ: f64 = 20e6;
