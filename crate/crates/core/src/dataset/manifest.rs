//! Dataset manifest rows and their CSV serialization.
//!
//! One row records everything needed to regenerate one output image byte
//! for byte: the source slice, the augmentation plan with its derived seed,
//! and the render policy. Floats are written with Rust's shortest
//! round-trip formatting so `read(write(rows)) == rows` holds exactly, and
//! every field is quoted so paths containing commas survive.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::augment::{AugmentPlan, NoiseModel};
use crate::error::{CoreError, Result};
use crate::spectro::{Colormap, NormKind, RenderPolicy, StftParams, WindowKind};

/// Fixed column order. Readers reject files whose header deviates, so a
/// manifest is either the real thing or a clear error.
pub const MANIFEST_COLUMNS: [&str; 27] = [
    "sample_id",
    "source_path",
    "class_label",
    "sampling_rate_hz",
    "fft_size",
    "overlap",
    "window",
    "num_frames",
    "start_sample",
    "start_time_s",
    "end_time_s",
    "center_freq_hz",
    "noise_model",
    "target_snr_db",
    "rician_k",
    "freq_shift_hz",
    "mix_alpha",
    "mix_source",
    "rng_seed",
    "colormap",
    "spec_norm",
    "epsilon_db",
    "render_seed",
    "output_image_path",
    "output_label_path",
    "noise_image_path",
    "label_set_tag",
];

/// Everything needed to reproduce one emitted sample.
///
/// Output paths are stored relative to the dataset root the manifest sits
/// in, so a dataset directory can be moved wholesale.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleManifest {
    pub sample_id: String,
    pub source_path: PathBuf,
    pub class_label: String,
    pub sampling_rate_hz: f64,
    pub fft_size: usize,
    pub overlap: usize,
    pub window: WindowKind,
    pub num_frames: usize,
    pub start_sample: u64,
    pub start_time_s: f64,
    pub end_time_s: f64,
    pub center_freq_hz: Option<f64>,
    pub noise_model: NoiseModel,
    pub target_snr_db: Option<f64>,
    pub rician_k: f64,
    pub freq_shift_hz: Option<f64>,
    pub mix_alpha: Option<f64>,
    pub mix_source: Option<PathBuf>,
    pub rng_seed: u64,
    pub colormap: Colormap,
    pub spec_norm: NormKind,
    pub epsilon_db: f64,
    pub render_seed: u64,
    pub output_image_path: PathBuf,
    pub output_label_path: Option<PathBuf>,
    pub noise_image_path: Option<PathBuf>,
    pub label_set_tag: Option<String>,
}

impl SampleManifest {
    pub fn stft_params(&self) -> StftParams {
        StftParams {
            fft_size: self.fft_size,
            overlap: self.overlap,
            window: self.window,
            num_frames_target: self.num_frames,
        }
    }

    pub fn augment_plan(&self) -> AugmentPlan {
        AugmentPlan {
            noise_model: self.noise_model,
            target_snr_db: self.target_snr_db,
            rician_k: self.rician_k,
            freq_shift_hz: self.freq_shift_hz,
            mix_alpha: self.mix_alpha,
            mix_source: self.mix_source.clone(),
            rng_seed: self.rng_seed,
        }
    }

    pub fn render_policy(&self) -> RenderPolicy {
        RenderPolicy {
            colormap: self.colormap,
            spec_norm: self.spec_norm,
            epsilon_db: self.epsilon_db,
            seed: self.render_seed,
        }
    }

    fn to_record(&self) -> Vec<String> {
        let opt_f64 = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
        let opt_path =
            |v: &Option<PathBuf>| v.as_ref().map(|p| path_str(p)).unwrap_or_default();
        vec![
            self.sample_id.clone(),
            path_str(&self.source_path),
            self.class_label.clone(),
            fmt_f64(self.sampling_rate_hz),
            self.fft_size.to_string(),
            self.overlap.to_string(),
            self.window.name().to_string(),
            self.num_frames.to_string(),
            self.start_sample.to_string(),
            fmt_f64(self.start_time_s),
            fmt_f64(self.end_time_s),
            opt_f64(self.center_freq_hz),
            self.noise_model.name().to_string(),
            opt_f64(self.target_snr_db),
            fmt_f64(self.rician_k),
            opt_f64(self.freq_shift_hz),
            opt_f64(self.mix_alpha),
            opt_path(&self.mix_source),
            self.rng_seed.to_string(),
            self.colormap.name().to_string(),
            self.spec_norm.name().to_string(),
            fmt_f64(self.epsilon_db),
            self.render_seed.to_string(),
            path_str(&self.output_image_path),
            opt_path(&self.output_label_path),
            opt_path(&self.noise_image_path),
            self.label_set_tag.clone().unwrap_or_default(),
        ]
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

fn path_str(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

/// Write `rows` to `path`, sorted by sample id so the byte output is
/// independent of the order samples finished in.
pub fn write_manifest(rows: &[SampleManifest], path: &Path) -> Result<()> {
    let mut sorted: Vec<&SampleManifest> = rows.iter().collect();
    sorted.sort_by(|a, b| a.sample_id.cmp(&b.sample_id));

    let mut writer = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Always)
        .from_path(path)
        .map_err(|e| csv_io(e, path))?;
    writer
        .write_record(MANIFEST_COLUMNS)
        .map_err(|e| csv_io(e, path))?;
    for row in sorted {
        writer
            .write_record(row.to_record())
            .map_err(|e| csv_io(e, path))?;
    }
    writer.flush().map_err(|source| CoreError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(())
}

/// Read a manifest back. Errors carry the 1-based data row number and the
/// offending column so a hand-edited file points at its own mistake.
pub fn read_manifest(path: &Path) -> Result<Vec<SampleManifest>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .map_err(|e| csv_io(e, path))?;

    let headers = reader.headers().map_err(|e| csv_io(e, path))?.clone();
    for expected in MANIFEST_COLUMNS {
        if !headers.iter().any(|h| h == expected) {
            return Err(CoreError::ManifestColumnMissing { column: expected });
        }
    }
    let index: Vec<usize> = MANIFEST_COLUMNS
        .iter()
        .map(|name| headers.iter().position(|h| h == *name).unwrap())
        .collect();

    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row_num = i + 1;
        let record = record.map_err(|e| csv_io(e, path))?;
        let field = |col: usize| -> &str { record.get(index[col]).unwrap_or("") };

        macro_rules! parse {
            ($col:expr, $ty:ty) => {{
                let raw = field($col);
                raw.parse::<$ty>().map_err(|_| CoreError::ManifestBadValue {
                    row: row_num,
                    column: MANIFEST_COLUMNS[$col],
                    value: raw.to_string(),
                })?
            }};
        }
        macro_rules! parse_opt {
            ($col:expr, $ty:ty) => {{
                let raw = field($col);
                if raw.is_empty() {
                    None
                } else {
                    Some(raw.parse::<$ty>().map_err(|_| {
                        CoreError::ManifestBadValue {
                            row: row_num,
                            column: MANIFEST_COLUMNS[$col],
                            value: raw.to_string(),
                        }
                    })?)
                }
            }};
        }
        let opt_string = |col: usize| -> Option<String> {
            let raw = field(col);
            (!raw.is_empty()).then(|| raw.to_string())
        };

        rows.push(SampleManifest {
            sample_id: field(0).to_string(),
            source_path: PathBuf::from(field(1)),
            class_label: field(2).to_string(),
            sampling_rate_hz: parse!(3, f64),
            fft_size: parse!(4, usize),
            overlap: parse!(5, usize),
            window: WindowKind::from_str(field(6)).map_err(|_| bad(row_num, 6, field(6)))?,
            num_frames: parse!(7, usize),
            start_sample: parse!(8, u64),
            start_time_s: parse!(9, f64),
            end_time_s: parse!(10, f64),
            center_freq_hz: parse_opt!(11, f64),
            noise_model: NoiseModel::from_str(field(12))
                .map_err(|_| bad(row_num, 12, field(12)))?,
            target_snr_db: parse_opt!(13, f64),
            rician_k: parse!(14, f64),
            freq_shift_hz: parse_opt!(15, f64),
            mix_alpha: parse_opt!(16, f64),
            mix_source: opt_string(17).map(PathBuf::from),
            rng_seed: parse!(18, u64),
            colormap: Colormap::from_str(field(19))
                .map_err(|_| bad(row_num, 19, field(19)))?,
            spec_norm: NormKind::from_str(field(20))
                .map_err(|_| bad(row_num, 20, field(20)))?,
            epsilon_db: parse!(21, f64),
            render_seed: parse!(22, u64),
            output_image_path: PathBuf::from(field(23)),
            output_label_path: opt_string(24).map(PathBuf::from),
            noise_image_path: opt_string(25).map(PathBuf::from),
            label_set_tag: opt_string(26),
        });
    }
    Ok(rows)
}

fn bad(row: usize, col: usize, value: &str) -> CoreError {
    CoreError::ManifestBadValue {
        row,
        column: MANIFEST_COLUMNS[col],
        value: value.to_string(),
    }
}

fn csv_io(err: csv::Error, path: &Path) -> CoreError {
    match err.into_kind() {
        csv::ErrorKind::Io(source) => CoreError::Io {
            path: path.to_path_buf(),
            source,
        },
        other => CoreError::Csv {
            path: path.to_path_buf(),
            message: format!("{other:?}"),
        },
    }
}
