//! Dataset assembly: SNR sweeps, background extraction, regeneration.
//!
//! The central idea is that a manifest row is not a description of what
//! happened but an executable plan. Building a dataset means planning rows,
//! executing each one, and writing the manifest; regenerating a sample later
//! executes the same row through the same code path, which is what makes
//! byte-identical regeneration a structural property instead of a hope.

pub mod clean;
pub mod manifest;
pub mod naming;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::annotate::{read_labels, shift_boxes, write_labels, DEFAULT_MIN_BOX_HEIGHT};
use crate::augment::{apply_plan, AugmentPlan, NoiseModel, DEFAULT_RICIAN_K};
use crate::error::{CoreError, Result};
use crate::iq_io::{open_recording, slice_plan};
use crate::seed::derive_seed;
use crate::spectro::{render_png, spectrogram_image, stft, RenderPolicy, Spectrogram, StftParams};

pub use manifest::{read_manifest, write_manifest, SampleManifest, MANIFEST_COLUMNS};
pub use naming::{parse_naming, NameForm, NamingMeta, ParsedName};

/// Class label applied to no-drone segments and to images whose labels hold
/// zero boxes.
pub const BACKGROUND_CLASS: &str = "background";

/// Manifest file name at the dataset root.
pub const MANIFEST_FILE: &str = "manifest.csv";

/// One input recording with the metadata the planner needs.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceSpec {
    pub path: PathBuf,
    pub class_label: String,
    pub sampling_rate_hz: f64,
    pub center_freq_hz: Option<f64>,
}

impl SourceSpec {
    /// Build a spec from a path, filling class and center frequency from the
    /// file's naming convention when it parses. Names outside the known
    /// conventions fall back to the bare file stem as the class label; this
    /// is a convenience for ad-hoc captures, not part of name parsing, which
    /// stays strict.
    pub fn from_path(path: impl Into<PathBuf>, default_rate_hz: f64) -> SourceSpec {
        let path = path.into();
        match parse_naming(&path) {
            Ok(parsed) => {
                let rate = match &parsed.meta {
                    NamingMeta::Outdoor(m) => m.sampling_rate_mhz * 1e6,
                    NamingMeta::Indoor(_) => default_rate_hz,
                };
                SourceSpec {
                    class_label: parsed.meta.class_label(),
                    sampling_rate_hz: rate,
                    center_freq_hz: Some(parsed.meta.center_freq_hz()),
                    path,
                }
            }
            Err(_) => {
                let stem = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "unknown".to_string());
                SourceSpec {
                    class_label: stem,
                    sampling_rate_hz: default_rate_hz,
                    center_freq_hz: None,
                    path,
                }
            }
        }
    }

    fn label_sibling(&self) -> Option<PathBuf> {
        let p = self.path.with_extension("txt");
        p.is_file().then_some(p)
    }
}

#[derive(Debug, Clone)]
pub struct BuildOptions {
    /// Segment stride in samples; defaults to the segment window, i.e.
    /// non-overlapping back-to-back segments.
    pub stride: Option<usize>,
    /// Cap on segments taken from each source. None takes everything.
    pub max_segments_per_source: Option<usize>,
    /// Also render the generated noise track of each sample under
    /// noise_only/.
    pub emit_noise_only: bool,
    /// Draw colormap and normalization per sample from the seed stream
    /// instead of using the fixed policy.
    pub randomize_render: bool,
    /// Tag recorded in each manifest row's label_set_tag column.
    pub label_set_tag: Option<String>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            stride: None,
            max_segments_per_source: None,
            emit_noise_only: false,
            randomize_render: false,
            label_set_tag: None,
        }
    }
}

/// Directory name for one SNR stratum. Round-trips exactly through
/// [`parse_snr_dir`] because both sides use the same shortest round-trip
/// float formatting.
pub fn snr_dir_name(snr_db: f64) -> String {
    format!("snr_{snr_db}dB")
}

/// Inverse of [`snr_dir_name`].
pub fn parse_snr_dir(name: &str) -> Option<f64> {
    name.strip_prefix("snr_")?
        .strip_suffix("dB")?
        .parse::<f64>()
        .ok()
}

fn fmt_opt(v: Option<f64>) -> String {
    match v {
        Some(v) => format!("{v}"),
        None => "-".to_string(),
    }
}

/// Stable sample identifier: a truncated content hash of the source slice
/// coordinates, the full augmentation plan (seed included), and the render
/// policy. Any change to any of those produces a different id.
pub fn compute_sample_id(
    source_path: &Path,
    start_sample: u64,
    plan: &AugmentPlan,
    policy: &RenderPolicy,
) -> String {
    let canon = format!(
        "src={}|start={}|noise={}|snr={}|k={}|shift={}|alpha={}|mix={}|rng={}|cmap={}|norm={}|eps={}|rseed={}",
        source_path.display(),
        start_sample,
        plan.noise_model.name(),
        fmt_opt(plan.target_snr_db),
        plan.rician_k,
        fmt_opt(plan.freq_shift_hz),
        fmt_opt(plan.mix_alpha),
        plan.mix_source
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "-".to_string()),
        plan.rng_seed,
        policy.colormap.name(),
        policy.spec_norm.name(),
        policy.epsilon_db,
        policy.seed,
    );
    let digest = Sha256::digest(canon.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Seeds must exist before the sample id can (the id hashes the plan, and
/// the plan contains its seed), so per-sample seeds key off the sample's
/// coordinates: master seed, source path, start offset, and the stratum
/// label.
fn sample_seeds(
    master_seed: u64,
    source_path: &Path,
    start_sample: u64,
    stratum: &str,
) -> (u64, u64) {
    let coord = format!("{}|{}|{}", source_path.display(), start_sample, stratum);
    (
        derive_seed(master_seed, &format!("plan|{coord}")),
        derive_seed(master_seed, &format!("render|{coord}")),
    )
}

/// What each planned sample is for: one stratum of the SNR sweep, a clean
/// untouched render, a background extraction, or a caller-supplied transform
/// chain (the template's rng seed is replaced per segment).
#[derive(Debug, Clone)]
enum PlanKind {
    SnrStratum(f64),
    Clean,
    Background,
    Custom(AugmentPlan),
}

fn plan_rows_for_source(
    src: &SourceSpec,
    kinds: &[PlanKind],
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
) -> Result<Vec<SampleManifest>> {
    let window = params.segment_window();
    let opened = open_recording(&src.path)?;
    let stride = opts.stride.unwrap_or(window);
    let mut starts = slice_plan(opened.recording.sample_count(), window, stride)?;
    if let Some(cap) = opts.max_segments_per_source {
        starts.truncate(cap);
    }
    let num_frames = params.frames_for(window)?;
    let has_labels = src.label_sibling().is_some();

    let passthrough = |snr: Option<f64>| AugmentPlan {
        noise_model: NoiseModel::Awgn,
        target_snr_db: snr,
        rician_k: DEFAULT_RICIAN_K,
        freq_shift_hz: None,
        mix_alpha: None,
        mix_source: None,
        rng_seed: 0,
    };

    let mut rows = Vec::with_capacity(starts.len() * kinds.len());
    for &start in &starts {
        for kind in kinds {
            let (stratum, class_label, dir, label_always, mut plan) = match kind {
                PlanKind::SnrStratum(v) => (
                    format!("snr{v}"),
                    src.class_label.clone(),
                    PathBuf::from(snr_dir_name(*v)).join(&src.class_label),
                    false,
                    passthrough(Some(*v)),
                ),
                PlanKind::Clean => (
                    "clean".to_string(),
                    src.class_label.clone(),
                    PathBuf::from(&src.class_label),
                    false,
                    passthrough(None),
                ),
                PlanKind::Background => (
                    "clean".to_string(),
                    BACKGROUND_CLASS.to_string(),
                    PathBuf::from(BACKGROUND_CLASS),
                    true,
                    passthrough(None),
                ),
                PlanKind::Custom(template) => (
                    "augment".to_string(),
                    src.class_label.clone(),
                    PathBuf::from(&src.class_label),
                    false,
                    template.clone(),
                ),
            };
            let (rng_seed, render_seed) =
                sample_seeds(master_seed, &src.path, start, &stratum);
            plan.rng_seed = rng_seed;
            let plan = plan;
            let snr = plan.target_snr_db;
            let pol = if opts.randomize_render {
                let mut p = RenderPolicy::randomized(render_seed);
                p.epsilon_db = policy.epsilon_db;
                p
            } else {
                *policy
            };
            let sample_id = compute_sample_id(&src.path, start, &plan, &pol);

            let output_label_path = if label_always || has_labels {
                Some(dir.join(format!("{sample_id}.txt")))
            } else {
                None
            };
            let noise_image_path = (opts.emit_noise_only && snr.is_some())
                .then(|| Path::new("noise_only").join(&class_label).join(format!("{sample_id}.png")));

            let fs = src.sampling_rate_hz;
            rows.push(SampleManifest {
                sample_id: sample_id.clone(),
                source_path: src.path.clone(),
                class_label,
                sampling_rate_hz: fs,
                fft_size: params.fft_size,
                overlap: params.overlap,
                window: params.window,
                num_frames,
                start_sample: start,
                start_time_s: start as f64 / fs,
                end_time_s: (start + window as u64) as f64 / fs,
                center_freq_hz: src.center_freq_hz,
                noise_model: plan.noise_model,
                target_snr_db: plan.target_snr_db,
                rician_k: plan.rician_k,
                freq_shift_hz: plan.freq_shift_hz,
                mix_alpha: plan.mix_alpha,
                mix_source: plan.mix_source.clone(),
                rng_seed: plan.rng_seed,
                colormap: pol.colormap,
                spec_norm: pol.spec_norm,
                epsilon_db: pol.epsilon_db,
                render_seed: pol.seed,
                output_image_path: dir.join(format!("{sample_id}.png")),
                output_label_path,
                noise_image_path,
                label_set_tag: opts.label_set_tag.clone(),
            });
        }
    }
    Ok(rows)
}

/// Plan every (segment, SNR) sample of an SNR-stratified build without
/// touching the output tree. Rows come back sorted by sample id.
pub fn plan_snr_sweep(
    sources: &[SourceSpec],
    snr_list: &[f64],
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
) -> Result<Vec<SampleManifest>> {
    params.validate()?;
    policy.validate()?;
    if sources.is_empty() {
        return Err(CoreError::NoSources);
    }
    if snr_list.is_empty() {
        return Err(CoreError::EmptySnrList);
    }
    for &snr in snr_list {
        if !snr.is_finite() {
            return Err(CoreError::BadSnrTarget { value: snr });
        }
    }
    let kinds: Vec<PlanKind> = snr_list.iter().map(|&s| PlanKind::SnrStratum(s)).collect();
    let mut rows = Vec::new();
    for src in sources {
        rows.extend(plan_rows_for_source(
            src, &kinds, params, policy, opts, master_seed,
        )?);
    }
    rows.sort_by(|a, b| a.sample_id.cmp(&b.sample_id));
    Ok(rows)
}

/// Plan plain spectrograms of each source: no added noise, class taken from
/// the source, images under `{class}/`. This is the non-stratified sibling of
/// [`plan_snr_sweep`] used for straight capture-to-image conversion.
pub fn plan_spectrograms(
    sources: &[SourceSpec],
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
) -> Result<Vec<SampleManifest>> {
    params.validate()?;
    policy.validate()?;
    if sources.is_empty() {
        return Err(CoreError::NoSources);
    }
    let kinds = [PlanKind::Clean];
    let mut rows = Vec::new();
    for src in sources {
        rows.extend(plan_rows_for_source(
            src, &kinds, params, policy, opts, master_seed,
        )?);
    }
    rows.sort_by(|a, b| a.sample_id.cmp(&b.sample_id));
    Ok(rows)
}

/// Plan one caller-specified transform chain over every segment of each
/// source. The template's rng seed is ignored; each segment gets its own
/// seed derived from `master_seed` so reruns reproduce byte for byte.
pub fn plan_augmented(
    sources: &[SourceSpec],
    template: &AugmentPlan,
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
) -> Result<Vec<SampleManifest>> {
    params.validate()?;
    policy.validate()?;
    if sources.is_empty() {
        return Err(CoreError::NoSources);
    }
    if let Some(snr) = template.target_snr_db {
        if !snr.is_finite() {
            return Err(CoreError::BadSnrTarget { value: snr });
        }
    }
    let kinds = [PlanKind::Custom(template.clone())];
    let mut rows = Vec::new();
    for src in sources {
        rows.extend(plan_rows_for_source(
            src, &kinds, params, policy, opts, master_seed,
        )?);
    }
    rows.sort_by(|a, b| a.sample_id.cmp(&b.sample_id));
    Ok(rows)
}

/// Plan and execute a transform chain over each source segment, folding the
/// rows into the manifest at the output root.
pub fn build_augmented(
    sources: &[SourceSpec],
    template: &AugmentPlan,
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
    out_root: &Path,
) -> Result<Vec<SampleManifest>> {
    let rows = plan_augmented(sources, template, params, policy, opts, master_seed)?;
    for row in &rows {
        regenerate(row, out_root)?;
    }
    merge_manifest(&rows, out_root)?;
    Ok(rows)
}

/// Plan background samples from no-drone recordings: no added noise, class
/// forced to "background", and an output label path that will be written
/// empty.
pub fn plan_backgrounds(
    sources: &[SourceSpec],
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
) -> Result<Vec<SampleManifest>> {
    params.validate()?;
    policy.validate()?;
    if sources.is_empty() {
        return Err(CoreError::NoSources);
    }
    let kinds = [PlanKind::Background];
    let mut rows = Vec::new();
    for src in sources {
        rows.extend(plan_rows_for_source(
            src, &kinds, params, policy, opts, master_seed,
        )?);
    }
    rows.sort_by(|a, b| a.sample_id.cmp(&b.sample_id));
    Ok(rows)
}

fn ensure_parent(path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(|e| CoreError::io(parent, e))?;
    }
    Ok(())
}

fn source_label_path(source: &Path) -> PathBuf {
    source.with_extension("txt")
}

/// Re-run a row's slice and transform chain from the recorded seeds, without
/// touching the filesystem beyond reading the sources.
fn synthesize_row(row: &SampleManifest) -> Result<crate::augment::AugmentOutcome> {
    let params = row.stft_params();
    params.validate()?;
    let window = params.segment_window();
    let opened = open_recording(&row.source_path)?;
    let samples = opened.recording.read_range(row.start_sample, window)?;

    let plan = row.augment_plan();
    let interferer = match &plan.mix_source {
        Some(p) => {
            let inter = open_recording(p)?;
            // Mixing tiles a short interferer and truncates a long one, so
            // samples past the primary's window can never matter.
            let take = (inter.recording.sample_count() as usize).min(window);
            Some(inter.recording.read_range(0, take)?)
        }
        None => None,
    };
    apply_plan(&samples, row.sampling_rate_hz, &plan, interferer.as_deref())
}

/// Recompute the power spectrogram a manifest row describes, for callers
/// that want to inspect it (annotation-policy checks) rather than render it.
pub fn row_spectrogram(row: &SampleManifest) -> Result<Spectrogram> {
    let outcome = synthesize_row(row)?;
    let mut spec = stft(&outcome.samples, row.sampling_rate_hz, &row.stft_params())?;
    spec.source_id = Some(row.sample_id.clone());
    Ok(spec)
}

/// Execute one manifest row: slice, augment with the recorded seeds,
/// transform, render, and write labels. Builds and later regeneration both
/// run through here, so a manifest row reproduces its files byte for byte.
pub fn regenerate(row: &SampleManifest, out_root: &Path) -> Result<()> {
    let params = row.stft_params();
    params.validate()?;
    let policy = row.render_policy();
    policy.validate()?;

    let plan = row.augment_plan();
    let outcome = synthesize_row(row)?;

    let mut spec = stft(&outcome.samples, row.sampling_rate_hz, &params)?;
    spec.source_id = Some(row.sample_id.clone());
    let img = spectrogram_image(&spec, &policy)?;
    let image_abs = out_root.join(&row.output_image_path);
    ensure_parent(&image_abs)?;
    render_png(&img, policy.colormap, &image_abs)?;

    if let Some(rel) = &row.noise_image_path {
        let noise = outcome.noise.as_ref().ok_or(CoreError::InconsistentRow {
            sample_id: row.sample_id.clone(),
            detail: "noise_image_path recorded but the plan adds no noise",
        })?;
        let noise_spec = stft(noise, row.sampling_rate_hz, &params)?;
        let noise_img = spectrogram_image(&noise_spec, &policy)?;
        let noise_abs = out_root.join(rel);
        ensure_parent(&noise_abs)?;
        render_png(&noise_img, policy.colormap, &noise_abs)?;
    }

    if let Some(rel) = &row.output_label_path {
        let label_abs = out_root.join(rel);
        ensure_parent(&label_abs)?;
        if row.class_label == BACKGROUND_CLASS {
            std::fs::write(&label_abs, "").map_err(|e| CoreError::io(&label_abs, e))?;
        } else {
            let labels = read_labels(&source_label_path(&row.source_path))?;
            let boxes = match plan.freq_shift_hz {
                Some(d) if d != 0.0 => {
                    shift_boxes(&labels.boxes, d, row.sampling_rate_hz, DEFAULT_MIN_BOX_HEIGHT)?
                }
                _ => labels.boxes,
            };
            write_labels(&boxes, &label_abs)?;
        }
    }
    Ok(())
}

/// Merge rows into the dataset manifest, replacing any existing rows with
/// the same sample id, and rewrite it sorted. Reruns therefore converge to
/// the same bytes instead of appending duplicates.
pub fn merge_manifest(rows: &[SampleManifest], out_root: &Path) -> Result<()> {
    let path = out_root.join(MANIFEST_FILE);
    let mut by_id: BTreeMap<String, SampleManifest> = BTreeMap::new();
    if path.is_file() {
        for row in read_manifest(&path)? {
            by_id.insert(row.sample_id.clone(), row);
        }
    }
    for row in rows {
        by_id.insert(row.sample_id.clone(), row.clone());
    }
    let merged: Vec<SampleManifest> = by_id.into_values().collect();
    ensure_parent(&path)?;
    write_manifest(&merged, &path)
}

/// Plan and execute a full SNR sweep, then fold the rows into the dataset
/// manifest. Returns this run's rows.
pub fn build_snr_sweep(
    sources: &[SourceSpec],
    snr_list: &[f64],
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
    out_root: &Path,
) -> Result<Vec<SampleManifest>> {
    let rows = plan_snr_sweep(sources, snr_list, params, policy, opts, master_seed)?;
    for row in &rows {
        regenerate(row, out_root)?;
    }
    merge_manifest(&rows, out_root)?;
    Ok(rows)
}

/// Plan and execute plain spectrogram conversion, folding rows into the
/// manifest at the output root.
pub fn build_spectrograms(
    sources: &[SourceSpec],
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
    out_root: &Path,
) -> Result<Vec<SampleManifest>> {
    let rows = plan_spectrograms(sources, params, policy, opts, master_seed)?;
    for row in &rows {
        regenerate(row, out_root)?;
    }
    merge_manifest(&rows, out_root)?;
    Ok(rows)
}

/// Plan and execute background extraction, folding rows into the same
/// manifest so drone and background samples share one table.
pub fn extract_backgrounds(
    sources: &[SourceSpec],
    params: &StftParams,
    policy: &RenderPolicy,
    opts: &BuildOptions,
    master_seed: u64,
    out_root: &Path,
) -> Result<Vec<SampleManifest>> {
    let rows = plan_backgrounds(sources, params, policy, opts, master_seed)?;
    for row in &rows {
        regenerate(row, out_root)?;
    }
    merge_manifest(&rows, out_root)?;
    Ok(rows)
}

/// Consistency check of a built dataset: every manifest row's outputs exist,
/// every stored id matches its recomputed content hash, and every image file
/// in the tree is claimed by exactly one row. Returns human-readable
/// findings; an empty list means the tree and manifest agree.
pub fn verify_dataset(out_root: &Path) -> Result<Vec<String>> {
    let manifest_path = out_root.join(MANIFEST_FILE);
    let rows = read_manifest(&manifest_path)?;
    let mut findings = Vec::new();
    let mut claimed: BTreeMap<PathBuf, &str> = BTreeMap::new();

    for row in &rows {
        let recomputed = compute_sample_id(
            &row.source_path,
            row.start_sample,
            &row.augment_plan(),
            &row.render_policy(),
        );
        if recomputed != row.sample_id {
            return Err(CoreError::SampleIdMismatch {
                sample_id: row.sample_id.clone(),
                recomputed,
            });
        }
        for rel in [Some(&row.output_image_path), row.noise_image_path.as_ref()]
            .into_iter()
            .flatten()
        {
            if !out_root.join(rel).is_file() {
                findings.push(format!(
                    "sample {}: missing image {}",
                    row.sample_id,
                    rel.display()
                ));
            }
            if let Some(other) = claimed.insert(rel.clone(), &row.sample_id) {
                findings.push(format!(
                    "image {} claimed by samples {} and {}",
                    rel.display(),
                    other,
                    row.sample_id
                ));
            }
        }
        if let Some(rel) = &row.output_label_path {
            if !out_root.join(rel).is_file() {
                findings.push(format!(
                    "sample {}: missing label file {}",
                    row.sample_id,
                    rel.display()
                ));
            }
        }
    }

    for entry in walkdir::WalkDir::new(out_root)
        .sort_by_file_name()
        .into_iter()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_file())
    {
        if entry.path().extension().is_some_and(|e| e == "png") {
            let rel = entry
                .path()
                .strip_prefix(out_root)
                .expect("walk stays under root")
                .to_path_buf();
            if !claimed.contains_key(&rel) {
                findings.push(format!("image {} has no manifest row", rel.display()));
            }
        }
    }
    Ok(findings)
}

/// Order-independent digest of a directory tree: relative paths and file
/// bytes, walked in sorted order. Two trees with equal hashes are byte
/// identical in both structure and content.
pub fn hash_tree(root: &Path) -> Result<String> {
    let mut hasher = Sha256::new();
    for entry in walkdir::WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_file())
    {
        let rel = entry
            .path()
            .strip_prefix(root)
            .expect("walk stays under root");
        hasher.update(rel.to_string_lossy().as_bytes());
        hasher.update([0u8]);
        let bytes = std::fs::read(entry.path()).map_err(|e| CoreError::io(entry.path(), e))?;
        hasher.update(&bytes);
        hasher.update([1u8]);
    }
    let digest = hasher.finalize();
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectro::WindowKind;
    use std::f64::consts::TAU;
    use tempfile::tempdir;

    /// Small STFT geometry so dataset tests stay quick.
    fn tiny_params() -> StftParams {
        StftParams {
            fft_size: 64,
            overlap: 16,
            window: WindowKind::Hann,
            num_frames_target: 40,
        }
    }

    fn write_tone_dat(path: &Path, n: usize, freq_cycles_per_sample: f64) {
        let mut bytes = Vec::with_capacity(n * 8);
        for i in 0..n {
            let phase = TAU * freq_cycles_per_sample * i as f64;
            bytes.extend_from_slice(&(phase.cos() as f32).to_le_bytes());
            bytes.extend_from_slice(&(phase.sin() as f32).to_le_bytes());
        }
        std::fs::write(path, bytes).unwrap();
    }

    fn test_source(dir: &Path, name: &str, segments: usize) -> SourceSpec {
        let params = tiny_params();
        let window = params.segment_window();
        let path = dir.join(name);
        write_tone_dat(&path, window * segments, 0.11);
        SourceSpec {
            path,
            class_label: "DJI_Mavic2Pro".into(),
            sampling_rate_hz: 1_000_000.0,
            center_freq_hz: Some(2.442e9),
        }
    }

    #[test]
    fn snr_dir_names_roundtrip_exactly() {
        for v in [-20.0, -10.0, -0.5, 0.0, 0.5, 10.0, 12.25, 30.0] {
            let name = snr_dir_name(v);
            assert_eq!(parse_snr_dir(&name), Some(v), "{name}");
        }
        assert_eq!(snr_dir_name(-10.0), "snr_-10dB");
        assert_eq!(snr_dir_name(0.0), "snr_0dB");
        assert_eq!(parse_snr_dir("snr_x_dB"), None);
        assert_eq!(parse_snr_dir("other"), None);
    }

    #[test]
    fn sample_id_is_sensitive_to_every_plan_field() {
        let plan = AugmentPlan {
            target_snr_db: Some(0.0),
            ..AugmentPlan::default()
        };
        let policy = RenderPolicy::default();
        let base = compute_sample_id(Path::new("/a.dat"), 0, &plan, &policy);
        assert_eq!(base.len(), 16);
        assert!(base.chars().all(|c| c.is_ascii_hexdigit()));

        let mut other = plan.clone();
        other.rng_seed ^= 1;
        assert_ne!(base, compute_sample_id(Path::new("/a.dat"), 0, &other, &policy));
        let mut other = plan.clone();
        other.target_snr_db = Some(0.5);
        assert_ne!(base, compute_sample_id(Path::new("/a.dat"), 0, &other, &policy));
        assert_ne!(base, compute_sample_id(Path::new("/b.dat"), 0, &plan, &policy));
        assert_ne!(base, compute_sample_id(Path::new("/a.dat"), 1, &plan, &policy));
        let mut pol = policy;
        pol.seed = 7;
        assert_ne!(base, compute_sample_id(Path::new("/a.dat"), 0, &plan, &pol));
    }

    #[test]
    fn plan_cardinality_matches_segments_times_strata() {
        let dir = tempdir().unwrap();
        let src = test_source(dir.path(), "DJI_Mavic2Pro_10_2442_flying.dat", 2);
        let rows = plan_snr_sweep(
            &[src],
            &[0.0, 10.0],
            &tiny_params(),
            &RenderPolicy::default(),
            &BuildOptions::default(),
            42,
        )
        .unwrap();
        assert_eq!(rows.len(), 4);
        let dirs: std::collections::BTreeSet<String> = rows
            .iter()
            .map(|r| {
                r.output_image_path
                    .components()
                    .next()
                    .unwrap()
                    .as_os_str()
                    .to_string_lossy()
                    .into_owned()
            })
            .collect();
        assert_eq!(
            dirs.into_iter().collect::<Vec<_>>(),
            vec!["snr_0dB".to_string(), "snr_10dB".to_string()]
        );
        // Sorted by sample id, and ids are unique.
        let ids: Vec<&str> = rows.iter().map(|r| r.sample_id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn empty_inputs_are_rejected() {
        let params = tiny_params();
        let policy = RenderPolicy::default();
        let opts = BuildOptions::default();
        assert!(matches!(
            plan_snr_sweep(&[], &[0.0], &params, &policy, &opts, 1),
            Err(CoreError::NoSources)
        ));
        let dir = tempdir().unwrap();
        let src = test_source(dir.path(), "a.dat", 1);
        assert!(matches!(
            plan_snr_sweep(&[src.clone()], &[], &params, &policy, &opts, 1),
            Err(CoreError::EmptySnrList)
        ));
        assert!(matches!(
            plan_snr_sweep(&[src], &[f64::NAN], &params, &policy, &opts, 1),
            Err(CoreError::BadSnrTarget { .. })
        ));
    }

    #[test]
    fn build_rerun_is_byte_identical_and_verifies() {
        let dir = tempdir().unwrap();
        let src = test_source(dir.path(), "DJI_Mavic2Pro_10_2442_flying.dat", 2);
        // Sibling labels so label propagation runs too.
        std::fs::write(
            src.path.with_extension("txt"),
            "0 0.500000 0.300000 0.400000 0.200000\n",
        )
        .unwrap();
        let params = tiny_params();
        let policy = RenderPolicy::default();
        let opts = BuildOptions {
            emit_noise_only: true,
            ..BuildOptions::default()
        };

        let out_a = dir.path().join("out_a");
        let out_b = dir.path().join("out_b");
        let rows_a =
            build_snr_sweep(&[src.clone()], &[0.0], &params, &policy, &opts, 7, &out_a).unwrap();
        let rows_b = build_snr_sweep(&[src], &[0.0], &params, &policy, &opts, 7, &out_b).unwrap();
        assert_eq!(rows_a, rows_b);
        assert_eq!(hash_tree(&out_a).unwrap(), hash_tree(&out_b).unwrap());
        assert!(verify_dataset(&out_a).unwrap().is_empty());

        // Noise-only images exist for every row.
        for row in &rows_a {
            let noise = row.noise_image_path.as_ref().unwrap();
            assert!(out_a.join(noise).is_file());
        }

        // Regenerating one sample in place leaves the tree unchanged.
        let before = hash_tree(&out_a).unwrap();
        regenerate(&rows_a[0], &out_a).unwrap();
        assert_eq!(before, hash_tree(&out_a).unwrap());
    }

    #[test]
    fn altering_the_seed_changes_the_output_bytes() {
        let dir = tempdir().unwrap();
        let src = test_source(dir.path(), "DJI_Mavic2Pro_10_2442_flying.dat", 1);
        let params = tiny_params();
        let out = dir.path().join("out");
        let rows = build_snr_sweep(
            &[src],
            &[0.0],
            &params,
            &RenderPolicy::default(),
            &BuildOptions::default(),
            7,
            &out,
        )
        .unwrap();
        let row = &rows[0];
        let original = std::fs::read(out.join(&row.output_image_path)).unwrap();

        let mut altered = row.clone();
        altered.rng_seed ^= 0xdead_beef;
        let out2 = dir.path().join("out2");
        regenerate(&altered, &out2).unwrap();
        let regenerated = std::fs::read(out2.join(&altered.output_image_path)).unwrap();
        assert_ne!(original, regenerated);
    }

    #[test]
    fn backgrounds_emit_empty_labels_and_share_the_manifest() {
        let dir = tempdir().unwrap();
        let drone = test_source(dir.path(), "DJI_Mavic2Pro_10_2442_flying.dat", 1);
        let bg = SourceSpec {
            path: dir.path().join("room_noise.dat"),
            class_label: "background".into(),
            sampling_rate_hz: 1_000_000.0,
            center_freq_hz: None,
        };
        write_tone_dat(&bg.path, tiny_params().segment_window() * 3, 0.05);

        let params = tiny_params();
        let policy = RenderPolicy::default();
        let opts = BuildOptions::default();
        let out = dir.path().join("out");
        let drone_rows =
            build_snr_sweep(&[drone], &[0.0], &params, &policy, &opts, 9, &out).unwrap();
        let bg_rows = extract_backgrounds(&[bg], &params, &policy, &opts, 9, &out).unwrap();
        assert_eq!(bg_rows.len(), 3);

        for row in &bg_rows {
            assert_eq!(row.class_label, BACKGROUND_CLASS);
            assert_eq!(row.target_snr_db, None);
            let label = out.join(row.output_label_path.as_ref().unwrap());
            let parsed = read_labels(&label).unwrap();
            assert!(parsed.boxes.is_empty());
        }

        let unified = read_manifest(&out.join(MANIFEST_FILE)).unwrap();
        assert_eq!(unified.len(), drone_rows.len() + bg_rows.len());
        assert!(verify_dataset(&out).unwrap().is_empty());
    }

    #[test]
    fn verify_flags_missing_and_unclaimed_files() {
        let dir = tempdir().unwrap();
        let src = test_source(dir.path(), "DJI_Mavic2Pro_10_2442_flying.dat", 1);
        let out = dir.path().join("out");
        let rows = build_snr_sweep(
            &[src],
            &[0.0],
            &tiny_params(),
            &RenderPolicy::default(),
            &BuildOptions::default(),
            3,
            &out,
        )
        .unwrap();

        std::fs::remove_file(out.join(&rows[0].output_image_path)).unwrap();
        std::fs::write(out.join("stray.png"), b"not really a png").unwrap();
        let findings = verify_dataset(&out).unwrap();
        assert_eq!(findings.len(), 2, "{findings:?}");
        assert!(findings.iter().any(|f| f.contains("missing image")));
        assert!(findings.iter().any(|f| f.contains("no manifest row")));
    }

    #[test]
    fn verify_rejects_a_tampered_sample_id() {
        let dir = tempdir().unwrap();
        let src = test_source(dir.path(), "DJI_Mavic2Pro_10_2442_flying.dat", 1);
        let out = dir.path().join("out");
        build_snr_sweep(
            &[src],
            &[0.0],
            &tiny_params(),
            &RenderPolicy::default(),
            &BuildOptions::default(),
            3,
            &out,
        )
        .unwrap();
        let mut rows = read_manifest(&out.join(MANIFEST_FILE)).unwrap();
        rows[0].rng_seed ^= 1;
        write_manifest(&rows, &out.join(MANIFEST_FILE)).unwrap();
        assert!(matches!(
            verify_dataset(&out),
            Err(CoreError::SampleIdMismatch { .. })
        ));
    }

    #[test]
    fn source_spec_from_path_uses_naming_when_it_parses() {
        let spec = SourceSpec::from_path("/x/DJI_Mavic2Pro_10_2442_flying.dat", 20e6);
        assert_eq!(spec.class_label, "DJI_Mavic2Pro");
        assert_eq!(spec.center_freq_hz, Some(2.442e9));
        assert_eq!(spec.sampling_rate_hz, 20e6);

        // Outdoor names carry their own sampling rate (MHz field).
        let spec = SourceSpec::from_path(
            "/x/EvoII_hover_urban_76_0_60_250_80_2450_2450_20_9_40_rec012.dat",
            20e6,
        );
        assert_eq!(spec.sampling_rate_hz, 40e6);
        assert_eq!(spec.class_label, "EvoII");

        let spec = SourceSpec::from_path("/x/garbage.dat", 20e6);
        assert_eq!(spec.class_label, "garbage");
        assert_eq!(spec.center_freq_hz, None);
    }

    #[test]
    fn hash_tree_distinguishes_content_and_layout() {
        let dir = tempdir().unwrap();
        let a = dir.path().join("a");
        let b = dir.path().join("b");
        std::fs::create_dir_all(a.join("sub")).unwrap();
        std::fs::create_dir_all(b.join("sub")).unwrap();
        std::fs::write(a.join("sub/f.txt"), "hello").unwrap();
        std::fs::write(b.join("sub/f.txt"), "hello").unwrap();
        assert_eq!(hash_tree(&a).unwrap(), hash_tree(&b).unwrap());
        std::fs::write(b.join("sub/f.txt"), "hellp").unwrap();
        assert_ne!(hash_tree(&a).unwrap(), hash_tree(&b).unwrap());
        std::fs::rename(b.join("sub/f.txt"), b.join("sub/g.txt")).unwrap();
        std::fs::write(b.join("sub/g.txt"), "hello").unwrap();
        assert_ne!(hash_tree(&a).unwrap(), hash_tree(&b).unwrap());
    }
}
