//! Spectrogram computation and rendering.
//!
//! The pipeline is: complex STFT -> power -> dB -> normalization to [0, 1] ->
//! image orientation -> PNG. Spectra are two-sided with DC centered, so a
//! complex baseband capture shows its full bandwidth with negative
//! frequencies in the lower half of the rendered image and +Fs/2 at row 0.

mod colormap;
mod render;

pub use colormap::Colormap;
pub use render::{
    check_dimensions, image_dimensions, render_png, render_spectrogram_png, to_image_orientation,
};

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{CoreError, Result};
use crate::iq_io::IqSegment;
use crate::matrix::Matrix;

/// Variance guard for the z-score normalizations.
const ZSCORE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowKind {
    Hann,
    Rect,
}

impl WindowKind {
    /// Window coefficients of length n. The Hann window is the symmetric
    /// form, w[k] = 0.5 (1 - cos(2 pi k / (n - 1))), zero at both ends.
    pub fn coefficients(self, n: usize) -> Vec<f64> {
        match self {
            WindowKind::Rect => vec![1.0; n],
            WindowKind::Hann => {
                if n < 2 {
                    return vec![1.0; n];
                }
                (0..n)
                    .map(|k| {
                        let phase = 2.0 * std::f64::consts::PI * k as f64 / (n - 1) as f64;
                        0.5 * (1.0 - phase.cos())
                    })
                    .collect()
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WindowKind::Hann => "hann",
            WindowKind::Rect => "rect",
        }
    }
}

impl std::str::FromStr for WindowKind {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hann" => Ok(WindowKind::Hann),
            "rect" | "rectangular" | "boxcar" => Ok(WindowKind::Rect),
            other => Err(CoreError::UnknownWindow { name: other.into() }),
        }
    }
}

/// Short-time transform geometry. `overlap` is the number of samples shared
/// between consecutive windows, so the hop is `fft_size - overlap`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StftParams {
    pub fft_size: usize,
    pub overlap: usize,
    pub window: WindowKind,
    /// Number of frames one dataset tile should span; used to size the
    /// segment window cut from a recording.
    pub num_frames_target: usize,
}

impl Default for StftParams {
    fn default() -> Self {
        StftParams {
            fft_size: 1024,
            overlap: 128,
            window: WindowKind::Hann,
            num_frames_target: 1500,
        }
    }
}

impl StftParams {
    pub fn validate(&self) -> Result<()> {
        if self.fft_size == 0 || self.overlap >= self.fft_size {
            return Err(CoreError::BadStftGeometry {
                fft_size: self.fft_size,
                overlap: self.overlap,
            });
        }
        Ok(())
    }

    #[inline]
    pub fn hop(&self) -> usize {
        self.fft_size - self.overlap
    }

    /// How many samples a segment must hold to produce exactly
    /// `num_frames_target` frames.
    pub fn segment_window(&self) -> usize {
        (self.num_frames_target.max(1) - 1) * self.hop() + self.fft_size
    }

    /// Frame count for an input of `len` samples:
    /// floor((len - fft_size) / hop) + 1.
    pub fn frames_for(&self, len: usize) -> Result<usize> {
        self.validate()?;
        if len < self.fft_size {
            return Err(CoreError::SegmentTooShort {
                len,
                fft_size: self.fft_size,
            });
        }
        Ok((len - self.fft_size) / self.hop() + 1)
    }
}

/// Power spectrogram. `power` has one row per frame and one DC-centered
/// column per frequency bin, ordered from -Fs/2 up to just under +Fs/2 in
/// step with `freq_axis_hz`. `time_axis_s` holds each frame's center time.
/// `source_id` links back to the manifest row that produced it, when one
/// exists.
#[derive(Debug, Clone)]
pub struct Spectrogram {
    pub power: Matrix,
    pub freq_axis_hz: Vec<f64>,
    pub time_axis_s: Vec<f64>,
    pub sample_rate_hz: f64,
    pub params: StftParams,
    pub source_id: Option<String>,
}

impl Spectrogram {
    pub fn frames(&self) -> usize {
        self.power.rows()
    }

    pub fn bins(&self) -> usize {
        self.power.cols()
    }
}

/// Reusable FFT plan for one geometry. Worth keeping around when many
/// segments share the same parameters.
pub struct StftPlan {
    params: StftParams,
    window: Vec<f64>,
    fft: Arc<dyn Fft<f64>>,
}

impl StftPlan {
    pub fn new(params: StftParams) -> Result<Self> {
        params.validate()?;
        Ok(StftPlan {
            params,
            window: params.window.coefficients(params.fft_size),
            fft: FftPlanner::new().plan_fft_forward(params.fft_size),
        })
    }

    pub fn params(&self) -> &StftParams {
        &self.params
    }

    /// Transform a sample run into a power spectrogram.
    pub fn run(&self, samples: &[Complex64], sample_rate_hz: f64) -> Result<Spectrogram> {
        let n = self.params.fft_size;
        let hop = self.params.hop();
        let frames = self.params.frames_for(samples.len())?;

        let mut power = Matrix::zeros(frames, n);
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        // Centered column j picks up DFT bin (j + ceil(n/2)) mod n, which
        // lands DC on column floor(n/2) and -Fs/2 on column 0.
        let half_up = (n + 1) / 2;

        for m in 0..frames {
            let start = m * hop;
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = samples[start + k] * self.window[k];
            }
            self.fft.process(&mut buf);
            let row = power.row_mut(m);
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = buf[(j + half_up) % n].norm_sqr();
            }
        }

        let half_down = (n / 2) as f64;
        let freq_axis_hz = (0..n)
            .map(|j| (j as f64 - half_down) * sample_rate_hz / n as f64)
            .collect();
        let time_axis_s = (0..frames)
            .map(|m| (m * hop + n / 2) as f64 / sample_rate_hz)
            .collect();

        Ok(Spectrogram {
            power,
            freq_axis_hz,
            time_axis_s,
            sample_rate_hz,
            params: self.params,
            source_id: None,
        })
    }
}

/// One-shot STFT over a sample run.
pub fn stft(samples: &[Complex64], sample_rate_hz: f64, params: &StftParams) -> Result<Spectrogram> {
    StftPlan::new(*params)?.run(samples, sample_rate_hz)
}

/// One-shot STFT over a decoded segment.
pub fn stft_segment(segment: &IqSegment, params: &StftParams) -> Result<Spectrogram> {
    stft(&segment.samples, segment.sample_rate_hz, params)
}

/// Convert a power spectrogram to decibels: 10 log10(p + epsilon). The
/// epsilon keeps silent cells finite; it must be positive, and any negative
/// power value is rejected as corrupt rather than silently absorbed.
pub fn to_db(spec: &Spectrogram, epsilon: f64) -> Result<Spectrogram> {
    let db = db_matrix(&spec.power, epsilon)?;
    Ok(Spectrogram {
        power: db,
        freq_axis_hz: spec.freq_axis_hz.clone(),
        time_axis_s: spec.time_axis_s.clone(),
        sample_rate_hz: spec.sample_rate_hz,
        params: spec.params,
        source_id: spec.source_id.clone(),
    })
}

pub fn db_matrix(power: &Matrix, epsilon: f64) -> Result<Matrix> {
    if !(epsilon > 0.0) {
        return Err(CoreError::BadEpsilon { epsilon });
    }
    let mut out = power.clone();
    for r in 0..out.rows() {
        for c in 0..out.cols() {
            let p = out.get(r, c);
            if p < 0.0 {
                return Err(CoreError::NegativePower {
                    row: r,
                    col: c,
                    value: p,
                });
            }
            out.set(r, c, 10.0 * (p + epsilon).log10());
        }
    }
    Ok(out)
}

/// Normalization applied to the dB matrix before colorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    /// Rescale the whole matrix to [0, 1]. A constant matrix maps to 0.5
    /// everywhere so downstream colorization stays defined.
    GlobalMinMax,
    /// Z-score each frequency bin across time, then min-max to [0, 1].
    PerFreqZscore,
    /// Z-score each frame across frequency, then min-max to [0, 1].
    PerTimeZscore,
}

impl NormKind {
    pub fn name(self) -> &'static str {
        match self {
            NormKind::GlobalMinMax => "global_minmax",
            NormKind::PerFreqZscore => "per_freq_zscore",
            NormKind::PerTimeZscore => "per_time_zscore",
        }
    }

    pub const ALL: [NormKind; 3] = [
        NormKind::GlobalMinMax,
        NormKind::PerFreqZscore,
        NormKind::PerTimeZscore,
    ];
}

impl std::str::FromStr for NormKind {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "global_minmax" | "minmax" => Ok(NormKind::GlobalMinMax),
            "per_freq_zscore" => Ok(NormKind::PerFreqZscore),
            "per_time_zscore" => Ok(NormKind::PerTimeZscore),
            other => Err(CoreError::UnknownNorm { name: other.into() }),
        }
    }
}

/// Rescale a matrix into [0, 1]. Constant input maps to 0.5.
pub fn global_minmax(m: &Matrix) -> Matrix {
    let mut out = m.clone();
    match m.min_max() {
        None => out,
        Some((lo, hi)) if hi == lo => {
            out.map_in_place(|_| 0.5);
            out
        }
        Some((lo, hi)) => {
            let span = hi - lo;
            out.map_in_place(|v| (v - lo) / span);
            out
        }
    }
}

/// Z-score each column (one frequency bin observed across time). Columns with
/// no spread collapse to zero.
pub fn zscore_per_freq(m: &Matrix) -> Matrix {
    let (rows, cols) = (m.rows(), m.cols());
    let mut out = m.clone();
    if rows == 0 || cols == 0 {
        return out;
    }
    for c in 0..cols {
        let mean = (0..rows).map(|r| m.get(r, c)).sum::<f64>() / rows as f64;
        let var = (0..rows).map(|r| (m.get(r, c) - mean).powi(2)).sum::<f64>() / rows as f64;
        let sd = (var + ZSCORE_EPS).sqrt();
        for r in 0..rows {
            out.set(r, c, (m.get(r, c) - mean) / sd);
        }
    }
    out
}

/// Z-score each row (one frame observed across frequency). Rows with no
/// spread collapse to zero.
pub fn zscore_per_time(m: &Matrix) -> Matrix {
    let (rows, cols) = (m.rows(), m.cols());
    let mut out = m.clone();
    if rows == 0 || cols == 0 {
        return out;
    }
    for r in 0..rows {
        let row = m.row(r);
        let mean = row.iter().sum::<f64>() / cols as f64;
        let var = row.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / cols as f64;
        let sd = (var + ZSCORE_EPS).sqrt();
        let out_row = out.row_mut(r);
        for (slot, &v) in out_row.iter_mut().zip(row) {
            *slot = (v - mean) / sd;
        }
    }
    out
}

/// Apply one normalization policy to a dB matrix, producing values in [0, 1].
pub fn normalize_spectrogram(db: &Matrix, policy: NormKind) -> Matrix {
    match policy {
        NormKind::GlobalMinMax => global_minmax(db),
        NormKind::PerFreqZscore => global_minmax(&zscore_per_freq(db)),
        NormKind::PerTimeZscore => global_minmax(&zscore_per_time(db)),
    }
}

/// How a spectrogram becomes pixels: dB floor epsilon, normalization policy,
/// and palette. The seed records which draw produced a randomized policy so
/// the choice can be reproduced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderPolicy {
    pub colormap: Colormap,
    pub spec_norm: NormKind,
    pub epsilon_db: f64,
    pub seed: u64,
}

impl Default for RenderPolicy {
    fn default() -> Self {
        RenderPolicy {
            colormap: Colormap::Viridis,
            spec_norm: NormKind::GlobalMinMax,
            epsilon_db: 1e-12,
            seed: 0,
        }
    }
}

impl RenderPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon_db > 0.0) {
            return Err(CoreError::BadEpsilon {
                epsilon: self.epsilon_db,
            });
        }
        Ok(())
    }

    /// Draw a colormap and normalization uniformly under the given seed.
    /// The same seed always yields the same policy.
    pub fn randomized(seed: u64) -> RenderPolicy {
        use rand::Rng;
        let mut rng = crate::seed::stream_rng(seed, "render-policy");
        let colormap = Colormap::ALL[rng.gen_range(0..Colormap::ALL.len())];
        let spec_norm = NormKind::ALL[rng.gen_range(0..NormKind::ALL.len())];
        RenderPolicy {
            colormap,
            spec_norm,
            epsilon_db: 1e-12,
            seed,
        }
    }
}

/// Full path from a power spectrogram to a ready-to-render image matrix:
/// dB conversion, normalization to [0, 1], then image orientation with
/// +Fs/2 at row 0.
pub fn spectrogram_image(spec: &Spectrogram, policy: &RenderPolicy) -> Result<Matrix> {
    policy.validate()?;
    let db = db_matrix(&spec.power, policy.epsilon_db)?;
    let norm = normalize_spectrogram(&db, policy.spec_norm);
    Ok(to_image_orientation(&norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::stream_rng;
    use rand::Rng;

    fn tone(n: usize, bin: f64, amp: f64) -> Vec<Complex64> {
        (0..n)
            .map(|k| {
                let phase = 2.0 * std::f64::consts::PI * bin * k as f64 / n as f64;
                amp * Complex64::new(phase.cos(), phase.sin())
            })
            .collect()
    }

    #[test]
    fn hann_window_shape() {
        let w = WindowKind::Hann.coefficients(8);
        assert!(w[0].abs() < 1e-15 && w[7].abs() < 1e-15);
        for k in 0..8 {
            assert!((w[k] - w[7 - k]).abs() < 1e-15, "symmetry at {k}");
        }
        // Peak of the symmetric window sits between the two middle taps.
        assert!(w[3] > w[2] && w[4] > w[5]);
        assert_eq!(WindowKind::Rect.coefficients(4), vec![1.0; 4]);
    }

    #[test]
    fn single_tone_lands_in_centered_bin() {
        let n = 32;
        let params = StftParams {
            fft_size: n,
            overlap: 0,
            window: WindowKind::Rect,
            num_frames_target: 1,
        };
        for k0 in [-12i64, -1, 0, 1, 5, 15] {
            let x = tone(n, k0 as f64, 1.0);
            let spec = stft(&x, 1000.0, &params).unwrap();
            assert_eq!(spec.frames(), 1);
            let expect_col = (n as i64 / 2 + k0) as usize;
            let peak = spec.power.get(0, expect_col);
            assert!(
                (peak - (n * n) as f64).abs() < 1e-6,
                "bin {k0}: peak {peak} at col {expect_col}"
            );
            let leak: f64 = (0..n)
                .filter(|&j| j != expect_col)
                .map(|j| spec.power.get(0, j))
                .sum();
            assert!(leak < 1e-12, "bin {k0}: leakage {leak}");
            // Axis agrees with the layout.
            assert!(
                (spec.freq_axis_hz[expect_col] - k0 as f64 * 1000.0 / n as f64).abs() < 1e-9
            );
        }
    }

    #[test]
    fn axes_are_dc_centered() {
        let params = StftParams {
            fft_size: 16,
            overlap: 8,
            window: WindowKind::Hann,
            num_frames_target: 1,
        };
        let x = vec![Complex64::new(1.0, 0.0); 64];
        let spec = stft(&x, 1600.0, &params).unwrap();
        assert_eq!(spec.freq_axis_hz[0], -800.0);
        assert_eq!(spec.freq_axis_hz[8], 0.0);
        assert_eq!(*spec.freq_axis_hz.last().unwrap(), 700.0);
        // 64 samples, window 16, hop 8: floor((64-16)/8)+1 = 7 frames.
        assert_eq!(spec.frames(), 7);
        assert_eq!(spec.time_axis_s.len(), 7);
        // Frame centers advance by hop / Fs.
        let dt = spec.time_axis_s[1] - spec.time_axis_s[0];
        assert!((dt - 8.0 / 1600.0).abs() < 1e-12);
    }

    #[test]
    fn frame_count_formula_and_errors() {
        let params = StftParams {
            fft_size: 8,
            overlap: 4,
            window: WindowKind::Rect,
            num_frames_target: 4,
        };
        assert_eq!(params.frames_for(8).unwrap(), 1);
        assert_eq!(params.frames_for(11).unwrap(), 1);
        assert_eq!(params.frames_for(12).unwrap(), 2);
        assert!(matches!(
            params.frames_for(7),
            Err(CoreError::SegmentTooShort { .. })
        ));
        assert_eq!(params.segment_window(), 3 * 4 + 8);

        let bad = StftParams {
            fft_size: 8,
            overlap: 8,
            ..params
        };
        assert!(matches!(
            bad.validate(),
            Err(CoreError::BadStftGeometry { .. })
        ));
    }

    #[test]
    fn impulse_spreads_flat() {
        let n = 16;
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        x[0] = Complex64::new(1.0, 0.0);
        let params = StftParams {
            fft_size: n,
            overlap: 0,
            window: WindowKind::Rect,
            num_frames_target: 1,
        };
        let spec = stft(&x, 1.0, &params).unwrap();
        for j in 0..n {
            assert!((spec.power.get(0, j) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rect_window_preserves_frame_energy() {
        let mut rng = stream_rng(11, "parseval-unit");
        let n = 64;
        let x: Vec<Complex64> = (0..n * 3)
            .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
            .collect();
        let params = StftParams {
            fft_size: n,
            overlap: 0,
            window: WindowKind::Rect,
            num_frames_target: 3,
        };
        let spec = stft(&x, 1.0, &params).unwrap();
        for m in 0..3 {
            let freq_sum: f64 = spec.power.row(m).iter().sum();
            let time_sum: f64 = x[m * n..(m + 1) * n].iter().map(|s| s.norm_sqr()).sum();
            let rel = (freq_sum - n as f64 * time_sum).abs() / (n as f64 * time_sum);
            assert!(rel < 1e-12, "frame {m}: relative error {rel}");
        }
    }

    #[test]
    fn db_conversion_matches_ln_reference() {
        let mut rng = stream_rng(3, "db-ref");
        let vals: Vec<f64> = (0..200).map(|_| rng.gen::<f64>() * 1e4).collect();
        let m = Matrix::from_vec(20, 10, vals.clone());
        let eps = 1e-12;
        let db = db_matrix(&m, eps).unwrap();
        for (i, &p) in vals.iter().enumerate() {
            let reference = 10.0 * ((p + eps).ln() / std::f64::consts::LN_10);
            let got = db.as_slice()[i];
            assert!(
                (got - reference).abs() < 1e-9,
                "entry {i}: {got} vs {reference}"
            );
        }
    }

    #[test]
    fn db_conversion_rejects_bad_input() {
        let ok = Matrix::from_vec(1, 2, vec![1.0, 2.0]);
        assert!(matches!(
            db_matrix(&ok, 0.0),
            Err(CoreError::BadEpsilon { .. })
        ));
        assert!(matches!(
            db_matrix(&ok, -1.0),
            Err(CoreError::BadEpsilon { .. })
        ));
        let neg = Matrix::from_vec(1, 2, vec![1.0, -0.5]);
        assert!(matches!(
            db_matrix(&neg, 1e-12),
            Err(CoreError::NegativePower { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn db_floor_is_epsilon_bound() {
        // An all-zero power cell sits exactly at 10 log10(eps).
        let m = Matrix::zeros(2, 2);
        let db = db_matrix(&m, 1e-12).unwrap();
        assert!((db.get(0, 0) - -120.0).abs() < 1e-9);
    }

    #[test]
    fn global_minmax_range_and_constant_case() {
        let m = Matrix::from_vec(2, 2, vec![-30.0, -10.0, -20.0, 10.0]);
        let n = global_minmax(&m);
        assert_eq!(n.get(0, 0), 0.0);
        assert_eq!(n.get(1, 1), 1.0);
        assert!((n.get(1, 0) - 0.25).abs() < 1e-12);

        let flat = Matrix::from_vec(2, 3, vec![-55.5; 6]);
        let n = global_minmax(&flat);
        assert!(n.as_slice().iter().all(|&v| v == 0.5));
    }

    #[test]
    fn per_freq_zscore_centers_each_column() {
        let mut rng = stream_rng(9, "zscore-cols");
        let rows = 40;
        let cols = 6;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                // Give each column its own offset and scale.
                let base = c as f64 * 13.0 - 30.0;
                let spread = 1.0 + c as f64;
                let _ = r;
                data.push(base + spread * (rng.gen::<f64>() - 0.5));
            }
        }
        let m = Matrix::from_vec(rows, cols, data);
        let z = zscore_per_freq(&m);
        for c in 0..cols {
            let mean = (0..rows).map(|r| z.get(r, c)).sum::<f64>() / rows as f64;
            let var = (0..rows).map(|r| z.get(r, c).powi(2)).sum::<f64>() / rows as f64;
            assert!(mean.abs() < 1e-9, "col {c} mean {mean}");
            assert!((var - 1.0).abs() < 1e-6, "col {c} var {var}");
        }
        // Full policy output is clamped into [0, 1].
        let n = normalize_spectrogram(&m, NormKind::PerFreqZscore);
        let (lo, hi) = n.min_max().unwrap();
        assert!(lo >= 0.0 && hi <= 1.0);
    }

    #[test]
    fn zscore_guards_zero_variance() {
        // One constant column among varying ones must come out zero.
        let m = Matrix::from_vec(3, 2, vec![5.0, 1.0, 5.0, 2.0, 5.0, 3.0]);
        let z = zscore_per_freq(&m);
        for r in 0..3 {
            assert!(z.get(r, 0).abs() < 1e-5, "constant column leaked {}", z.get(r, 0));
        }

        let zt = zscore_per_time(&Matrix::from_vec(1, 3, vec![7.0, 7.0, 7.0]));
        assert!(zt.as_slice().iter().all(|&v| v.abs() < 1e-5));
    }

    #[test]
    fn per_time_zscore_centers_each_row() {
        let m = Matrix::from_vec(2, 4, vec![1.0, 2.0, 3.0, 4.0, 10.0, 10.0, 30.0, 30.0]);
        let z = zscore_per_time(&m);
        for r in 0..2 {
            let mean = z.row(r).iter().sum::<f64>() / 4.0;
            assert!(mean.abs() < 1e-9);
        }
        assert_eq!(z.get(1, 0), z.get(1, 1));
    }
}
