//! Raw capture access.
//!
//! Captures are flat binary files of interleaved little-endian float32 pairs,
//! I then Q, one pair per complex sample. Files are memory mapped so a batch
//! run can slice windows out of multi-gigabyte recordings without copying
//! whole files through the heap.

use std::fs::File;
use std::path::{Path, PathBuf};

use memmap2::Mmap;
use num_complex::Complex64;

use crate::error::{CoreError, Result};

pub const BYTES_PER_SAMPLE: u64 = 8;

/// An open capture file. Holds the mapping for its whole lifetime; sample
/// reads decode straight out of the mapped pages.
#[derive(Debug)]
pub struct RawRecording {
    path: PathBuf,
    map: Mmap,
    sample_count: u64,
}

impl RawRecording {
    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn sample_count(&self) -> u64 {
        self.sample_count
    }

    pub fn byte_len(&self) -> u64 {
        self.map.len() as u64
    }

    /// Decode one complex sample.
    #[inline]
    pub fn sample(&self, index: u64) -> Complex64 {
        let off = (index * BYTES_PER_SAMPLE) as usize;
        let i = f32::from_le_bytes(self.map[off..off + 4].try_into().unwrap());
        let q = f32::from_le_bytes(self.map[off + 4..off + 8].try_into().unwrap());
        Complex64::new(i as f64, q as f64)
    }

    /// Decode a contiguous run of samples.
    pub fn read_range(&self, start: u64, len: usize) -> Result<Vec<Complex64>> {
        let end = start + len as u64;
        if end > self.sample_count {
            return Err(CoreError::RangeOutOfBounds {
                start,
                len,
                available: self.sample_count,
            });
        }
        Ok((start..end).map(|i| self.sample(i)).collect())
    }

    /// Fraction of non-finite I or Q components among the first `limit`
    /// samples. A high density is the usual symptom of a capture that is not
    /// actually float32 interleaved I/Q.
    pub fn non_finite_fraction(&self, limit: u64) -> f64 {
        let n = self.sample_count.min(limit);
        if n == 0 {
            return 0.0;
        }
        let mut bad = 0u64;
        for i in 0..n {
            let s = self.sample(i);
            if !s.re.is_finite() || !s.im.is_finite() {
                bad += 1;
            }
        }
        bad as f64 / n as f64
    }
}

/// How many leading samples `open_recording` inspects for the corrupt-capture
/// heuristic, and the density above which it flags the file.
pub const QUALITY_SCAN_SAMPLES: u64 = 65_536;
pub const QUALITY_WARN_FRACTION: f64 = 0.01;

/// Outcome of opening a capture: the recording plus an advisory warning when
/// the leading samples look like the file is not what it claims to be.
pub struct OpenedRecording {
    pub recording: RawRecording,
    /// Set when more than [`QUALITY_WARN_FRACTION`] of the scanned samples
    /// carry NaN or infinite components. Advisory; the file still opens.
    pub quality_warning: Option<String>,
}

/// Map a capture file. Errors on an empty file and on a byte length that is
/// not a whole number of I/Q pairs.
pub fn open_recording(path: &Path) -> Result<OpenedRecording> {
    let file = File::open(path).map_err(|e| CoreError::io(path, e))?;
    let meta = file.metadata().map_err(|e| CoreError::io(path, e))?;
    if meta.len() == 0 {
        return Err(CoreError::EmptyRecording { path: path.into() });
    }
    if meta.len() % BYTES_PER_SAMPLE != 0 {
        return Err(CoreError::RaggedRecording {
            path: path.into(),
            byte_len: meta.len(),
        });
    }
    // Safety: the mapping is read-only and private to this process. A file
    // truncated behind our back would fault, which is the standard accepted
    // hazard of mapped input files.
    let map = unsafe { Mmap::map(&file) }.map_err(|e| CoreError::io(path, e))?;
    let sample_count = meta.len() / BYTES_PER_SAMPLE;
    let recording = RawRecording {
        path: path.into(),
        map,
        sample_count,
    };
    let frac = recording.non_finite_fraction(QUALITY_SCAN_SAMPLES);
    let quality_warning = (frac > QUALITY_WARN_FRACTION).then(|| {
        format!(
            "{}: {:.1}% of the first {} samples are NaN or infinite; is this really float32 I/Q?",
            path.display(),
            frac * 100.0,
            recording.sample_count.min(QUALITY_SCAN_SAMPLES)
        )
    });
    Ok(OpenedRecording {
        recording,
        quality_warning,
    })
}

/// One windowed slice of a recording, fully decoded.
#[derive(Debug, Clone)]
pub struct IqSegment {
    pub samples: Vec<Complex64>,
    pub sample_rate_hz: f64,
    pub start_sample: u64,
    pub source_path: PathBuf,
}

impl IqSegment {
    pub fn start_time_s(&self) -> f64 {
        self.start_sample as f64 / self.sample_rate_hz
    }

    pub fn end_time_s(&self) -> f64 {
        (self.start_sample + self.samples.len() as u64) as f64 / self.sample_rate_hz
    }

    /// Mean of |x|^2 over the segment.
    pub fn mean_power(&self) -> f64 {
        mean_power(&self.samples)
    }
}

/// Deterministic slicing plan: window start offsets into a recording of
/// `total` samples. The final partial window is dropped, so every planned
/// segment has exactly `window` samples.
pub fn slice_plan(total: u64, window: usize, stride: usize) -> Result<Vec<u64>> {
    if window == 0 || stride == 0 || window as u64 > total {
        return Err(CoreError::WindowTooLarge {
            window,
            stride,
            available: total,
        });
    }
    let count = (total - window as u64) / stride as u64 + 1;
    Ok((0..count).map(|k| k * stride as u64).collect())
}

/// Cut a recording into fully decoded segments. Segment count follows
/// [`slice_plan`]: floor((total - window) / stride) + 1.
pub fn slice_segments(
    rec: &RawRecording,
    window: usize,
    stride: usize,
    sample_rate_hz: f64,
) -> Result<Vec<IqSegment>> {
    slice_plan(rec.sample_count(), window, stride)?
        .into_iter()
        .map(|start| read_segment(rec, start, window, sample_rate_hz))
        .collect()
}

/// Decode one window out of a recording.
pub fn read_segment(
    rec: &RawRecording,
    start: u64,
    window: usize,
    sample_rate_hz: f64,
) -> Result<IqSegment> {
    Ok(IqSegment {
        samples: rec.read_range(start, window)?,
        sample_rate_hz,
        start_sample: start,
        source_path: rec.path().into(),
    })
}

/// Guard against division blowups on silent input.
pub const POWER_EPS: f64 = 1e-12;

pub fn mean_power(samples: &[Complex64]) -> f64 {
    if samples.is_empty() {
        return 0.0;
    }
    samples.iter().map(|s| s.norm_sqr()).sum::<f64>() / samples.len() as f64
}

/// Scale to unit average power: x / sqrt(mean |x|^2 + eps). An all-zero input
/// stays all-zero, and renormalizing an already normalized signal is a no-op
/// to within the epsilon guard.
pub fn power_normalize(samples: &[Complex64]) -> Vec<Complex64> {
    let scale = (mean_power(samples) + POWER_EPS).sqrt();
    samples.iter().map(|s| s / scale).collect()
}

/// Independently shift and scale the real and imaginary components to zero
/// mean, unit variance (population variance). Components with no spread are
/// zeroed rather than amplified.
pub fn z_normalize(samples: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = samples.len();
    if n < 2 {
        return Err(CoreError::TooFewSamples { len: n });
    }
    let nf = n as f64;
    let mean_re = samples.iter().map(|s| s.re).sum::<f64>() / nf;
    let mean_im = samples.iter().map(|s| s.im).sum::<f64>() / nf;
    let var_re = samples.iter().map(|s| (s.re - mean_re).powi(2)).sum::<f64>() / nf;
    let var_im = samples.iter().map(|s| (s.im - mean_im).powi(2)).sum::<f64>() / nf;
    let sd_re = (var_re + POWER_EPS).sqrt();
    let sd_im = (var_im + POWER_EPS).sqrt();
    Ok(samples
        .iter()
        .map(|s| Complex64::new((s.re - mean_re) / sd_re, (s.im - mean_im) / sd_im))
        .collect())
}
