//! Signal-level augmentation.
//!
//! All operators work on the raw complex baseband samples, before any
//! spectrogram is computed, so the augmented data behaves like a different
//! capture of the same emitter rather than a doctored picture: noise has the
//! right time-frequency statistics, fading scales signal and image contrast
//! together, and a frequency shift moves both the energy and its annotation.
//!
//! When several operators run on one sample, they apply in channel order:
//! fading (the channel), then frequency offset, then co-channel interference,
//! then receiver noise at the requested SNR.

use std::path::PathBuf;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::annotate::YoloBox;
use crate::error::{CoreError, Result};
use crate::iq_io::{mean_power, power_normalize};
use crate::seed::stream_rng;
use crate::spectro::Spectrogram;

/// Channel model selecting which impairments the plan applies before the
/// additive noise stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseModel {
    /// Additive white Gaussian noise only.
    Awgn,
    /// Rayleigh block fading followed by AWGN.
    Rayleigh,
    /// Rician block fading followed by AWGN.
    Rician,
}

impl NoiseModel {
    pub fn name(self) -> &'static str {
        match self {
            NoiseModel::Awgn => "awgn",
            NoiseModel::Rayleigh => "rayleigh",
            NoiseModel::Rician => "rician",
        }
    }
}

impl std::str::FromStr for NoiseModel {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "awgn" => Ok(NoiseModel::Awgn),
            "rayleigh" => Ok(NoiseModel::Rayleigh),
            "rician" => Ok(NoiseModel::Rician),
            other => Err(CoreError::BadField {
                name: other.into(),
                field: "noise_model",
                kind: "one of awgn, rayleigh, rician",
                value: other.into(),
            }),
        }
    }
}

pub const DEFAULT_RICIAN_K: f64 = 10.0;

/// Add circularly symmetric complex Gaussian noise sized for an exact target
/// SNR: sigma^2 = P_s / 10^(SNR_dB / 10), split evenly between the real and
/// imaginary components. Returns the noisy signal together with the noise
/// alone, so callers can keep matched noise-only references.
pub fn add_awgn(
    samples: &[Complex64],
    target_snr_db: f64,
    rng: &mut impl Rng,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    if !target_snr_db.is_finite() {
        return Err(CoreError::BadSnrTarget {
            value: target_snr_db,
        });
    }
    let signal_power = mean_power(samples);
    if signal_power <= 0.0 {
        return Err(CoreError::ZeroPowerSignal);
    }
    let noise_power = signal_power / 10f64.powf(target_snr_db / 10.0);
    let component_sd = (noise_power / 2.0).sqrt();

    let mut noisy = Vec::with_capacity(samples.len());
    let mut noise = Vec::with_capacity(samples.len());
    for &x in samples {
        let g_re: f64 = rng.sample(StandardNormal);
        let g_im: f64 = rng.sample(StandardNormal);
        let n = Complex64::new(component_sd * g_re, component_sd * g_im);
        noise.push(n);
        noisy.push(x + n);
    }
    Ok((noisy, noise))
}

/// Block-flat fading: draw one complex channel gain and apply it to the whole
/// segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FadingModel {
    /// h ~ CN(0, 1): uniformly random phase, Rayleigh magnitude, E|h|^2 = 1.
    Rayleigh,
    /// h = sqrt(K/(K+1)) + sqrt(1/(K+1)) g with g ~ CN(0, 1). The K factor is
    /// the power ratio of the deterministic line-of-sight part to the
    /// scattered part; K -> infinity degenerates to h = 1 and K = 0 recovers
    /// Rayleigh. E|h|^2 = 1 for every K.
    Rician { k: f64 },
}

/// Draw one channel gain under the given model.
pub fn draw_channel_gain(model: FadingModel, rng: &mut impl Rng) -> Result<Complex64> {
    let mut scattered = || -> Complex64 {
        // CN(0, 1): each component N(0, 1/2).
        Complex64::new(
            rng.sample::<f64, _>(StandardNormal) * 0.5f64.sqrt(),
            rng.sample::<f64, _>(StandardNormal) * 0.5f64.sqrt(),
        )
    };
    match model {
        FadingModel::Rayleigh => Ok(scattered()),
        FadingModel::Rician { k } => {
            if !(k >= 0.0 && k.is_finite()) {
                return Err(CoreError::BadRicianK { value: k });
            }
            let los = (k / (k + 1.0)).sqrt();
            let diffuse = (1.0 / (k + 1.0)).sqrt();
            let g = scattered();
            Ok(Complex64::new(los + diffuse * g.re, diffuse * g.im))
        }
    }
}

/// Apply block-flat fading. Returns the faded samples and the gain that was
/// applied, so the draw can be audited.
pub fn apply_fading(
    samples: &[Complex64],
    model: FadingModel,
    rng: &mut impl Rng,
) -> Result<(Vec<Complex64>, Complex64)> {
    let h = draw_channel_gain(model, rng)?;
    Ok((samples.iter().map(|&x| x * h).collect(), h))
}

/// Multiply by a complex exponential to move the signal in frequency:
/// out[n] = x[n] exp(j 2 pi shift_hz n / sample_rate_hz), phase ramp anchored
/// at n = 0. Magnitudes are untouched, and a zero shift returns the input
/// bit for bit. Shifts at or beyond +-Fs/2 are rejected: they would alias
/// straight back into the band.
pub fn freq_shift(
    samples: &[Complex64],
    shift_hz: f64,
    sample_rate_hz: f64,
) -> Result<Vec<Complex64>> {
    if !(sample_rate_hz > 0.0 && sample_rate_hz.is_finite()) {
        return Err(CoreError::BadSampleRate {
            value: sample_rate_hz,
        });
    }
    let nyquist = sample_rate_hz / 2.0;
    if !(shift_hz.abs() < nyquist) {
        return Err(CoreError::ShiftOutOfBand { shift_hz, nyquist });
    }
    if shift_hz == 0.0 {
        return Ok(samples.to_vec());
    }
    let cycles_per_sample = shift_hz / sample_rate_hz;
    Ok(samples
        .iter()
        .enumerate()
        .map(|(n, &x)| {
            let theta = 2.0 * std::f64::consts::PI * cycles_per_sample * n as f64;
            x * Complex64::new(theta.cos(), theta.sin())
        })
        .collect())
}

/// Superimpose an interferer on a primary signal:
/// out = norm(norm(x1) + alpha * norm(x2)), with each input optionally
/// frequency-shifted after its normalization. An interferer shorter than the
/// primary is tiled cyclically; a longer one is truncated. The result always
/// has unit average power.
#[allow(clippy::too_many_arguments)]
pub fn mix(
    primary: &[Complex64],
    interferer: &[Complex64],
    alpha: f64,
    primary_shift_hz: Option<f64>,
    interferer_shift_hz: Option<f64>,
    sample_rate_hz: f64,
) -> Result<Vec<Complex64>> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(CoreError::BadMixRatio { alpha });
    }
    if interferer.is_empty() {
        return Err(CoreError::EmptyInterferer);
    }

    let mut a = power_normalize(primary);
    if let Some(shift) = primary_shift_hz {
        a = freq_shift(&a, shift, sample_rate_hz)?;
    }

    let combined = if alpha == 0.0 {
        // Skip the superposition entirely so the zero-ratio case follows the
        // exact same arithmetic as normalizing the primary alone.
        a
    } else {
        let tiled: Vec<Complex64> = (0..primary.len())
            .map(|n| interferer[n % interferer.len()])
            .collect();
        let mut b = power_normalize(&tiled);
        if let Some(shift) = interferer_shift_hz {
            b = freq_shift(&b, shift, sample_rate_hz)?;
        }
        a.iter().zip(&b).map(|(&x, &y)| x + alpha * y).collect()
    };

    Ok(power_normalize(&combined))
}

/// Estimate the SNR depicted by a spectrogram from its annotations: mean
/// linear power inside the boxes over the median power outside them, in dB.
/// Box coordinates are normalized image coordinates (row 0 at +Fs/2), the
/// spectrogram is frames by DC-centered bins, so the vertical axis flips
/// between the two.
pub fn estimate_snr(spec: &Spectrogram, boxes: &[YoloBox]) -> Result<f64> {
    if boxes.is_empty() {
        return Err(CoreError::NoBoxes);
    }
    let frames = spec.frames();
    let bins = spec.bins();
    let mut inside_sum = 0.0;
    let mut inside_count = 0usize;
    let mut outside = Vec::new();

    for m in 0..frames {
        let x = (m as f64 + 0.5) / frames as f64;
        for j in 0..bins {
            let y = (bins - 1 - j) as f64 + 0.5;
            let y = y / bins as f64;
            let covered = boxes.iter().any(|b| b.contains_point(x, y));
            let p = spec.power.get(m, j);
            if covered {
                inside_sum += p;
                inside_count += 1;
            } else {
                outside.push(p);
            }
        }
    }

    if inside_count == 0 || outside.is_empty() {
        return Err(CoreError::DegenerateBoxCoverage);
    }
    let signal = inside_sum / inside_count as f64;
    let noise = median(&mut outside);
    Ok(10.0 * (signal / noise).log10())
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Everything needed to reproduce one augmented sample from its source
/// segment. The seed is recorded per sample; each stage derives its own
/// named stream from it, so draws do not depend on evaluation order or on
/// how many workers are running.
#[derive(Debug, Clone, PartialEq)]
pub struct AugmentPlan {
    pub noise_model: NoiseModel,
    pub target_snr_db: Option<f64>,
    pub rician_k: f64,
    pub freq_shift_hz: Option<f64>,
    pub mix_alpha: Option<f64>,
    pub mix_source: Option<PathBuf>,
    pub rng_seed: u64,
}

impl Default for AugmentPlan {
    fn default() -> Self {
        AugmentPlan {
            noise_model: NoiseModel::Awgn,
            target_snr_db: None,
            rician_k: DEFAULT_RICIAN_K,
            freq_shift_hz: None,
            mix_alpha: None,
            mix_source: None,
            rng_seed: 0,
        }
    }
}

/// Result of running a plan: the augmented samples, the matched noise-only
/// track when AWGN ran, and the fading gain when a fading stage ran.
pub struct AugmentOutcome {
    pub samples: Vec<Complex64>,
    pub noise: Option<Vec<Complex64>>,
    pub channel_gain: Option<Complex64>,
}

/// Execute a plan against one segment in the fixed stage order
/// fading -> frequency shift -> mixing -> AWGN.
pub fn apply_plan(
    samples: &[Complex64],
    sample_rate_hz: f64,
    plan: &AugmentPlan,
    interferer: Option<&[Complex64]>,
) -> Result<AugmentOutcome> {
    let mut current: Vec<Complex64>;
    let mut channel_gain = None;

    match plan.noise_model {
        NoiseModel::Awgn => current = samples.to_vec(),
        NoiseModel::Rayleigh => {
            let mut rng = stream_rng(plan.rng_seed, "fading");
            let (faded, h) = apply_fading(samples, FadingModel::Rayleigh, &mut rng)?;
            current = faded;
            channel_gain = Some(h);
        }
        NoiseModel::Rician => {
            let mut rng = stream_rng(plan.rng_seed, "fading");
            let (faded, h) =
                apply_fading(samples, FadingModel::Rician { k: plan.rician_k }, &mut rng)?;
            current = faded;
            channel_gain = Some(h);
        }
    }

    if let Some(shift) = plan.freq_shift_hz {
        current = freq_shift(&current, shift, sample_rate_hz)?;
    }

    if let Some(alpha) = plan.mix_alpha {
        let other = interferer.ok_or(CoreError::EmptyInterferer)?;
        // The primary was already shifted above; only the interferer keeps an
        // independent offset here, and this pipeline leaves it at zero.
        current = mix(&current, other, alpha, None, None, sample_rate_hz)?;
    }

    let mut noise_track = None;
    if let Some(snr) = plan.target_snr_db {
        let mut rng = stream_rng(plan.rng_seed, "awgn");
        let (noisy, noise) = add_awgn(&current, snr, &mut rng)?;
        current = noisy;
        noise_track = Some(noise);
    }

    Ok(AugmentOutcome {
        samples: current,
        noise: noise_track,
        channel_gain,
    })
}
