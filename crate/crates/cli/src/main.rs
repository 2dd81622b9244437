//! `dronerf`: batch conversion of raw I/Q captures into spectrogram datasets.
//!
//! One binary, five subcommands: `spectrogram` renders captures as-is,
//! `augment` applies a transform chain first, `build` produces a full
//! SNR-stratified dataset, `clean` normalizes third-party labeled datasets,
//! and `validate` checks captures, labels, or a built dataset.
//!
//! Conventions shared by every subcommand:
//! - exit codes: 0 success, 1 usage error, 2 data error, 3 I/O error;
//! - progress goes to stderr, the stdout summary is `key=value` lines;
//! - the resolved configuration is written into the output directory before
//!   any sample is processed;
//! - reruns with identical inputs and seed reproduce the output tree byte
//!   for byte, regardless of `--jobs`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use walkdir::WalkDir;

use dronerf_core::annotate::{read_labels, validate_policy, PolicyParams};
use dronerf_core::augment::{AugmentPlan, NoiseModel, DEFAULT_RICIAN_K};
use dronerf_core::dataset::clean::{clean_third_party, LayoutHint};
use dronerf_core::dataset::{
    merge_manifest, plan_augmented, plan_backgrounds, plan_snr_sweep, plan_spectrograms,
    read_manifest, regenerate, row_spectrogram, verify_dataset, BuildOptions, SampleManifest,
    SourceSpec, MANIFEST_FILE,
};
use dronerf_core::iq_io::{open_recording, QUALITY_SCAN_SAMPLES};
use dronerf_core::spectro::{Colormap, NormKind, RenderPolicy, StftParams, WindowKind};
use dronerf_core::{CoreError, ErrorClass, DEFAULT_SAMPLE_RATE_HZ};

const OUT_ENV: &str = "DRONERF_OUT";
const JOBS_ENV: &str = "DRONERF_JOBS";

#[derive(Parser)]
#[command(
    name = "dronerf",
    version,
    about = "Convert raw I/Q drone RF captures into reproducible spectrogram datasets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render captures to spectrogram images without augmentation
    Spectrogram(SpectrogramArgs),
    /// Apply signal-level transforms (noise, fading, shift, mixing), then render
    Augment(AugmentArgs),
    /// Build an SNR-stratified dataset from many captures
    Build(BuildArgs),
    /// Normalize a third-party labeled dataset into the standard layout
    Clean(CleanArgs),
    /// Check captures, label files, or a built dataset; exit 0 iff consistent
    Validate(ValidateArgs),
}

#[derive(Args)]
struct StftOpts {
    /// FFT length per frame
    #[arg(long = "fft", default_value_t = 1024, value_name = "N")]
    fft_size: usize,
    /// Samples shared by consecutive frames
    #[arg(long, default_value_t = 128, value_name = "N")]
    overlap: usize,
    /// Analysis window: hann or rect
    #[arg(long, default_value = "hann", value_parser = parse_enum::<WindowKind>)]
    window: WindowKind,
    /// Time frames per output image
    #[arg(long, default_value_t = 1500, value_name = "N")]
    frames: usize,
    /// Sampling rate in Hz, used when a capture's name does not state one
    #[arg(long = "sample-rate", default_value_t = DEFAULT_SAMPLE_RATE_HZ, value_name = "HZ")]
    sample_rate: f64,
}

impl StftOpts {
    fn to_params(&self) -> StftParams {
        StftParams {
            fft_size: self.fft_size,
            overlap: self.overlap,
            window: self.window,
            num_frames_target: self.frames,
        }
    }

    fn entries(&self) -> Vec<(&'static str, String)> {
        vec![
            ("sample_rate_hz", num(self.sample_rate)),
            ("fft_size", self.fft_size.to_string()),
            ("overlap", self.overlap.to_string()),
            ("window", self.window.name().to_string()),
            ("frames_per_image", self.frames.to_string()),
        ]
    }
}

#[derive(Args)]
struct RenderOpts {
    /// Colormap for rendered PNGs
    #[arg(long, default_value = "viridis", value_parser = parse_enum::<Colormap>)]
    colormap: Colormap,
    /// Normalization: global_minmax, per_freq_zscore, or per_time_zscore
    #[arg(long, default_value = "global_minmax", value_parser = parse_enum::<NormKind>)]
    norm: NormKind,
    /// Power floor added before the dB conversion
    #[arg(long, default_value_t = 1e-12)]
    epsilon: f64,
}

impl RenderOpts {
    fn to_policy(&self) -> RenderPolicy {
        RenderPolicy {
            colormap: self.colormap,
            spec_norm: self.norm,
            epsilon_db: self.epsilon,
            seed: 0,
        }
    }

    fn entries(&self) -> Vec<(&'static str, String)> {
        vec![
            ("colormap", self.colormap.name().to_string()),
            ("spec_norm", self.norm.name().to_string()),
            ("epsilon", num(self.epsilon)),
        ]
    }
}

#[derive(Args)]
struct SliceOpts {
    /// Segment stride in samples (default: one segment window, no overlap)
    #[arg(long, value_name = "N")]
    stride: Option<usize>,
    /// Cap on segments taken from each capture
    #[arg(long = "max-segments", value_name = "N")]
    max_segments: Option<usize>,
}

impl SliceOpts {
    fn entries(&self) -> Vec<(&'static str, String)> {
        vec![
            ("stride", opt_str(self.stride.as_ref())),
            ("max_segments", opt_str(self.max_segments.as_ref())),
        ]
    }
}

#[derive(Args)]
struct RunOpts {
    /// Output directory (or set DRONERF_OUT)
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Worker threads (or set DRONERF_JOBS; default: one per CPU)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Master seed all per-sample randomness derives from
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SpectrogramArgs {
    /// Capture files, or directories scanned recursively for .dat files
    #[arg(required = true, value_name = "PATH")]
    inputs: Vec<PathBuf>,
    #[command(flatten)]
    stft: StftOpts,
    #[command(flatten)]
    render: RenderOpts,
    #[command(flatten)]
    slice: SliceOpts,
    #[command(flatten)]
    run: RunOpts,
}

#[derive(Args)]
struct AugmentArgs {
    /// Capture files, or directories scanned recursively for .dat files
    #[arg(required = true, value_name = "PATH")]
    inputs: Vec<PathBuf>,
    /// Target SNR in dB for additive noise
    #[arg(long, value_name = "DB", allow_hyphen_values = true)]
    snr: Option<f64>,
    /// Carrier offset in Hz; negative shifts down. Sibling labels are
    /// shifted to match automatically.
    #[arg(long = "shift-hz", value_name = "HZ", allow_hyphen_values = true)]
    shift_hz: Option<f64>,
    /// Second capture mixed in as an interferer (requires --alpha)
    #[arg(long = "mix-with", value_name = "PATH")]
    mix_with: Option<PathBuf>,
    /// Power ratio of the interferer relative to the primary (requires --mix-with)
    #[arg(long, value_name = "RATIO")]
    alpha: Option<f64>,
    /// Channel model applied before everything else: none, rayleigh, or rician
    #[arg(long, default_value = "none", value_parser = parse_fading)]
    fading: NoiseModel,
    /// Rician K factor, the direct-to-scattered power ratio
    #[arg(long = "rician-k", default_value_t = DEFAULT_RICIAN_K, value_name = "K")]
    rician_k: f64,
    #[command(flatten)]
    stft: StftOpts,
    #[command(flatten)]
    render: RenderOpts,
    #[command(flatten)]
    slice: SliceOpts,
    #[command(flatten)]
    run: RunOpts,
}

#[derive(Args)]
struct BuildArgs {
    /// Capture files, or directories scanned recursively for .dat files
    #[arg(required = true, value_name = "PATH")]
    sources: Vec<PathBuf>,
    /// SNR strata in dB, comma separated (e.g. -10,0,10)
    #[arg(long = "snr-list", value_name = "LIST", allow_hyphen_values = true, required = true)]
    snr_list: String,
    /// No-drone captures rendered as background images
    #[arg(long, value_name = "PATH", num_args = 1..)]
    backgrounds: Vec<PathBuf>,
    /// Also render each sample's matched noise-only image
    #[arg(long = "noise-only")]
    noise_only: bool,
    /// Draw each sample's colormap and normalization from the seed
    #[arg(long = "randomize-render")]
    randomize_render: bool,
    /// Annotation-set tag recorded on every manifest row
    #[arg(long = "label-set", value_name = "TAG")]
    label_set: Option<String>,
    #[command(flatten)]
    stft: StftOpts,
    #[command(flatten)]
    render: RenderOpts,
    #[command(flatten)]
    slice: SliceOpts,
    #[command(flatten)]
    run: RunOpts,
}

#[derive(Args)]
struct CleanArgs {
    /// Root of the third-party dataset
    src_root: PathBuf,
    /// Layout hint: auto or roboflow
    #[arg(long, default_value = "auto", value_parser = parse_layout)]
    layout: LayoutHint,
    /// Output directory (or set DRONERF_OUT)
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// A .dat capture, a .txt label file, a dataset root with a manifest,
    /// or a directory of captures
    path: PathBuf,
    /// Also run the advisory annotation-policy checks on dataset labels
    #[arg(long)]
    policy: bool,
}

/// Errors at the CLI boundary, split by which exit code they map to.
enum CliError {
    Usage(String),
    Data(String),
    Core(CoreError),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Core(e) => match e.class() {
                ErrorClass::Usage => 1,
                ErrorClass::Data => 2,
                ErrorClass::Io => 3,
            },
        }
    }
}

fn parse_enum<T>(s: &str) -> Result<T, String>
where
    T: FromStr<Err = CoreError>,
{
    T::from_str(s).map_err(|e| e.to_string())
}

fn parse_fading(s: &str) -> Result<NoiseModel, String> {
    match s.to_ascii_lowercase().as_str() {
        "none" => Ok(NoiseModel::Awgn),
        other => match NoiseModel::from_str(other) {
            Ok(m) => Ok(m),
            Err(_) => Err(format!("unknown fading model {s:?}: expected none, rayleigh, or rician")),
        },
    }
}

fn parse_layout(s: &str) -> Result<LayoutHint, String> {
    match s.to_ascii_lowercase().as_str() {
        "auto" => Ok(LayoutHint::Auto),
        "roboflow" | "roboflow_like" => Ok(LayoutHint::RoboflowLike),
        other => Err(format!("unknown layout {other:?}: expected auto or roboflow")),
    }
}

/// Shortest decimal form that round-trips, same as the manifest uses.
fn num(v: f64) -> String {
    format!("{v}")
}

fn opt_str<T: ToString>(v: Option<&T>) -> String {
    v.map_or_else(|| "none".to_string(), T::to_string)
}

fn opt_num(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), num)
}

fn resolve_out(flag: Option<PathBuf>) -> Result<PathBuf, CliError> {
    flag.or_else(|| std::env::var_os(OUT_ENV).map(PathBuf::from))
        .ok_or_else(|| {
            CliError::Usage(format!("no output directory: pass --out or set {OUT_ENV}"))
        })
}

fn resolve_jobs(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(JOBS_ENV) {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{JOBS_ENV} is not a worker count: {raw:?}"))),
        Err(_) => Ok(None),
    }
}

fn not_found(path: &Path) -> CoreError {
    CoreError::io(
        path,
        std::io::Error::new(std::io::ErrorKind::NotFound, "no such file or directory"),
    )
}

/// Expand files and directories into capture sources. Directories are walked
/// recursively for `.dat` files; the result is sorted and de-duplicated so
/// planning order never depends on shell glob order.
fn collect_sources(paths: &[PathBuf], default_rate_hz: f64) -> Result<Vec<SourceSpec>, CliError> {
    let mut specs = Vec::new();
    for p in paths {
        if p.is_dir() {
            for entry in WalkDir::new(p).sort_by_file_name() {
                let entry = entry.map_err(|e| {
                    let at = e.path().unwrap_or(p).to_path_buf();
                    let io = e
                        .into_io_error()
                        .unwrap_or_else(|| std::io::Error::other("walk failed"));
                    CoreError::io(at, io)
                })?;
                let is_dat = entry.path().extension().is_some_and(|x| x.eq_ignore_ascii_case("dat"));
                if entry.file_type().is_file() && is_dat {
                    specs.push(SourceSpec::from_path(entry.path(), default_rate_hz));
                }
            }
        } else if p.is_file() {
            specs.push(SourceSpec::from_path(p, default_rate_hz));
        } else {
            return Err(not_found(p).into());
        }
    }
    specs.sort_by(|a, b| a.path.cmp(&b.path));
    specs.dedup_by(|a, b| a.path == b.path);
    Ok(specs)
}

fn join_paths(specs: &[SourceSpec]) -> String {
    specs
        .iter()
        .map(|s| s.path.display().to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Write the fully resolved configuration as `{command}.config.txt` in the
/// output directory. Runs before any sample is processed, so a failed run
/// still leaves a record of what was asked. The output path and worker count
/// are deliberately not echoed: neither changes the produced data, and the
/// file itself is part of the reproducible tree.
fn write_run_config(
    out_root: &Path,
    command: &str,
    entries: &[(&'static str, String)],
) -> Result<(), CliError> {
    std::fs::create_dir_all(out_root).map_err(|e| CoreError::io(out_root, e))?;
    let mut text = format!("command={command}\n");
    for (k, v) in entries {
        text.push_str(k);
        text.push('=');
        text.push_str(v);
        text.push('\n');
    }
    let path = out_root.join(format!("{command}.config.txt"));
    std::fs::write(&path, text).map_err(|e| CoreError::io(&path, e))?;
    Ok(())
}

/// Execute planned rows on a worker pool. Each row carries its own seeds, so
/// scheduling order cannot leak into the output bytes.
fn execute_rows(
    rows: &[SampleManifest],
    out_root: &Path,
    jobs: Option<usize>,
) -> Result<(), CliError> {
    let total = rows.len();
    let done = AtomicUsize::new(0);
    let work = || {
        rows.par_iter().try_for_each(|row| {
            regenerate(row, out_root)?;
            let n = done.fetch_add(1, Ordering::Relaxed) + 1;
            if n == total || n % 20 == 0 {
                eprintln!("rendered {n}/{total} samples");
            }
            Ok::<(), CoreError>(())
        })
    };
    let result = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot build a {n}-thread worker pool: {e}")))?
            .install(work),
        None => work(),
    };
    result.map_err(CliError::from)
}

fn cmd_spectrogram(a: SpectrogramArgs) -> Result<(), CliError> {
    let out = resolve_out(a.run.out.clone())?;
    let jobs = resolve_jobs(a.run.jobs)?;
    let sources = collect_sources(&a.inputs, a.stft.sample_rate)?;

    let mut entries = vec![("seed", a.run.seed.to_string())];
    entries.extend(a.stft.entries());
    entries.extend(a.render.entries());
    entries.extend(a.slice.entries());
    entries.push(("sources", join_paths(&sources)));
    write_run_config(&out, "spectrogram", &entries)?;

    let params = a.stft.to_params();
    let policy = a.render.to_policy();
    let opts = BuildOptions {
        stride: a.slice.stride,
        max_segments_per_source: a.slice.max_segments,
        ..Default::default()
    };
    let rows = plan_spectrograms(&sources, &params, &policy, &opts, a.run.seed)?;
    eprintln!("planned {} samples from {} sources", rows.len(), sources.len());
    execute_rows(&rows, &out, jobs)?;
    merge_manifest(&rows, &out)?;

    println!("sources={}", sources.len());
    println!("samples={}", rows.len());
    println!("manifest={}", out.join(MANIFEST_FILE).display());
    Ok(())
}

fn cmd_augment(a: AugmentArgs) -> Result<(), CliError> {
    if a.alpha.is_some() && a.mix_with.is_none() {
        return Err(CliError::Usage(
            "--alpha sets the mix ratio and needs --mix-with to name the interferer".into(),
        ));
    }
    if a.mix_with.is_some() && a.alpha.is_none() {
        return Err(CliError::Usage(
            "--mix-with needs --alpha to set the mix ratio".into(),
        ));
    }

    let out = resolve_out(a.run.out.clone())?;
    let jobs = resolve_jobs(a.run.jobs)?;
    let sources = collect_sources(&a.inputs, a.stft.sample_rate)?;
    if let Some(mix) = &a.mix_with {
        if !mix.is_file() {
            return Err(not_found(mix).into());
        }
    }

    let fading_name = match a.fading {
        NoiseModel::Awgn => "none",
        m => m.name(),
    };
    let mut entries = vec![
        ("seed", a.run.seed.to_string()),
        ("fading", fading_name.to_string()),
        ("rician_k", num(a.rician_k)),
        ("snr_db", opt_num(a.snr)),
        ("shift_hz", opt_num(a.shift_hz)),
        ("mix_with", opt_str(a.mix_with.as_ref().map(|p| p.display().to_string()).as_ref())),
        ("mix_alpha", opt_num(a.alpha)),
    ];
    entries.extend(a.stft.entries());
    entries.extend(a.render.entries());
    entries.extend(a.slice.entries());
    entries.push(("sources", join_paths(&sources)));
    write_run_config(&out, "augment", &entries)?;

    let template = AugmentPlan {
        noise_model: a.fading,
        target_snr_db: a.snr,
        rician_k: a.rician_k,
        freq_shift_hz: a.shift_hz,
        mix_alpha: a.alpha,
        mix_source: a.mix_with.clone(),
        rng_seed: 0,
    };
    let params = a.stft.to_params();
    let policy = a.render.to_policy();
    let opts = BuildOptions {
        stride: a.slice.stride,
        max_segments_per_source: a.slice.max_segments,
        ..Default::default()
    };
    let rows = plan_augmented(&sources, &template, &params, &policy, &opts, a.run.seed)?;
    eprintln!("planned {} samples from {} sources", rows.len(), sources.len());
    execute_rows(&rows, &out, jobs)?;
    merge_manifest(&rows, &out)?;

    let labeled = rows.iter().filter(|r| r.output_label_path.is_some()).count();
    println!("sources={}", sources.len());
    println!("samples={}", rows.len());
    println!("labeled_samples={labeled}");
    println!(
        "labels_shifted={}",
        labeled > 0 && a.shift_hz.is_some_and(|d| d != 0.0)
    );
    println!("manifest={}", out.join(MANIFEST_FILE).display());
    Ok(())
}

fn parse_snr_list(raw: &str) -> Result<Vec<f64>, CliError> {
    let mut out = Vec::new();
    for tok in raw.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: f64 = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("--snr-list: {tok:?} is not a number in dB")))?;
        out.push(v);
    }
    Ok(out)
}

fn cmd_build(a: BuildArgs) -> Result<(), CliError> {
    let out = resolve_out(a.run.out.clone())?;
    let jobs = resolve_jobs(a.run.jobs)?;
    let snrs = parse_snr_list(&a.snr_list)?;
    let sources = collect_sources(&a.sources, a.stft.sample_rate)?;
    let bg_sources = collect_sources(&a.backgrounds, a.stft.sample_rate)?;

    let snr_echo = snrs.iter().map(|&v| num(v)).collect::<Vec<_>>().join(",");
    let mut entries = vec![
        ("seed", a.run.seed.to_string()),
        ("snr_list", snr_echo),
        ("noise_only", a.noise_only.to_string()),
        ("randomize_render", a.randomize_render.to_string()),
        ("label_set", opt_str(a.label_set.as_ref())),
    ];
    entries.extend(a.stft.entries());
    entries.extend(a.render.entries());
    entries.extend(a.slice.entries());
    entries.push(("sources", join_paths(&sources)));
    entries.push(("backgrounds", join_paths(&bg_sources)));
    write_run_config(&out, "build", &entries)?;

    let params = a.stft.to_params();
    let policy = a.render.to_policy();
    let opts = BuildOptions {
        stride: a.slice.stride,
        max_segments_per_source: a.slice.max_segments,
        emit_noise_only: a.noise_only,
        randomize_render: a.randomize_render,
        label_set_tag: a.label_set.clone(),
    };
    let rows = plan_snr_sweep(&sources, &snrs, &params, &policy, &opts, a.run.seed)?;
    let bg_rows = if bg_sources.is_empty() {
        Vec::new()
    } else {
        plan_backgrounds(&bg_sources, &params, &policy, &opts, a.run.seed)?
    };
    let all: Vec<SampleManifest> = rows.iter().chain(bg_rows.iter()).cloned().collect();
    eprintln!(
        "planned {} sweep samples and {} background samples",
        rows.len(),
        bg_rows.len()
    );
    execute_rows(&all, &out, jobs)?;
    merge_manifest(&all, &out)?;

    let noise_images = all.iter().filter(|r| r.noise_image_path.is_some()).count();
    println!("sources={}", sources.len());
    println!("backgrounds={}", bg_sources.len());
    println!("strata={}", snrs.len());
    println!("samples={}", rows.len());
    println!("background_samples={}", bg_rows.len());
    println!("noise_images={noise_images}");
    println!("manifest={}", out.join(MANIFEST_FILE).display());
    Ok(())
}

fn cmd_clean(a: CleanArgs) -> Result<(), CliError> {
    let out = resolve_out(a.out.clone())?;
    if !a.src_root.is_dir() {
        return Err(not_found(&a.src_root).into());
    }
    let layout_name = match a.layout {
        LayoutHint::Auto => "auto",
        LayoutHint::RoboflowLike => "roboflow",
    };
    write_run_config(
        &out,
        "clean",
        &[
            ("layout", layout_name.to_string()),
            ("source_root", a.src_root.display().to_string()),
        ],
    )?;

    let report = clean_third_party(&a.src_root, a.layout, &out)?;
    for s in &report.skipped {
        eprintln!("skipped {}: {}", s.source.display(), s.reason);
    }
    for o in &report.orphan_labels {
        eprintln!("orphan label {}", o.display());
    }

    println!("total_images={}", report.total_images);
    println!("migrated={}", report.migrated.len());
    println!("skipped={}", report.skipped.len());
    println!("orphan_labels={}", report.orphan_labels.len());
    println!("classes={}", report.class_map.len());
    for (split, n) in report.split_counts() {
        println!("migrated_{split}={n}");
    }
    println!("conservation={}", report.conservation_holds());
    Ok(())
}

fn cmd_validate(a: ValidateArgs) -> Result<(), CliError> {
    let p = &a.path;
    if p.is_dir() {
        if p.join(MANIFEST_FILE).is_file() {
            validate_dataset(p, a.policy)
        } else {
            validate_tree(p)
        }
    } else if p.is_file() {
        match p.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("dat") => validate_capture(p).map(|_| ()),
            Some(e) if e.eq_ignore_ascii_case("txt") => validate_label_file(p).map(|_| ()),
            _ => Err(CliError::Usage(format!(
                "{}: expected a .dat capture, a .txt label file, or a directory",
                p.display()
            ))),
        }
    } else {
        Err(not_found(p).into())
    }
}

fn validate_capture(path: &Path) -> Result<u64, CliError> {
    let opened = open_recording(path)?;
    if let Some(w) = &opened.quality_warning {
        eprintln!("warning: {w}");
    }
    let count = opened.recording.sample_count();
    println!("file={}", path.display());
    println!("samples={count}");
    println!(
        "non_finite_fraction={}",
        num(opened.recording.non_finite_fraction(QUALITY_SCAN_SAMPLES))
    );
    println!("ok=true");
    Ok(count)
}

fn validate_label_file(path: &Path) -> Result<usize, CliError> {
    let labels = read_labels(path)?;
    println!("file={}", path.display());
    println!("boxes={}", labels.boxes.len());
    println!("ok=true");
    Ok(labels.boxes.len())
}

/// Walk a directory with no manifest: every capture must open and every
/// label file must parse. Failures are reported per file on stderr.
fn validate_tree(root: &Path) -> Result<(), CliError> {
    let mut captures = 0usize;
    let mut label_files = 0usize;
    let mut errors = 0usize;
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| {
            let at = e.path().unwrap_or(root).to_path_buf();
            let io = e
                .into_io_error()
                .unwrap_or_else(|| std::io::Error::other("walk failed"));
            CoreError::io(at, io)
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let path = entry.path();
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("dat") => {
                captures += 1;
                match open_recording(path) {
                    Ok(opened) => {
                        if let Some(w) = &opened.quality_warning {
                            eprintln!("warning: {w}");
                        }
                    }
                    Err(err) => {
                        errors += 1;
                        eprintln!("invalid: {err}");
                    }
                }
            }
            Some(e) if e.eq_ignore_ascii_case("txt") => {
                label_files += 1;
                if let Err(err) = read_labels(path) {
                    errors += 1;
                    eprintln!("invalid: {err}");
                }
            }
            _ => {}
        }
    }
    println!("captures={captures}");
    println!("label_files={label_files}");
    println!("errors={errors}");
    println!("ok={}", errors == 0);
    if errors > 0 {
        return Err(CliError::Data(format!(
            "{errors} of {} files failed validation",
            captures + label_files
        )));
    }
    Ok(())
}

/// Validate a built dataset: recompute every sample id, check that every
/// recorded file exists and every image is claimed, and parse every label
/// file. `--policy` additionally re-synthesizes each labeled sample's
/// spectrogram and reports annotation-policy findings (advisory only).
fn validate_dataset(root: &Path, policy: bool) -> Result<(), CliError> {
    let findings = verify_dataset(root)?;
    for f in &findings {
        eprintln!("inconsistency: {f}");
    }

    let rows = read_manifest(&root.join(MANIFEST_FILE))?;
    let mut label_errors = 0usize;
    let mut policy_findings = 0usize;
    for row in &rows {
        let Some(rel) = &row.output_label_path else {
            continue;
        };
        let label_path = root.join(rel);
        if !label_path.is_file() {
            continue; // already reported as an inconsistency
        }
        let labels = match read_labels(&label_path) {
            Ok(l) => l,
            Err(err) => {
                label_errors += 1;
                eprintln!("invalid: {err}");
                continue;
            }
        };
        if policy && !labels.boxes.is_empty() {
            let spec = row_spectrogram(row)?;
            for finding in validate_policy(&labels, &spec, &PolicyParams::default())? {
                policy_findings += 1;
                eprintln!("policy {}: {finding}", row.sample_id);
            }
        }
    }

    println!("rows={}", rows.len());
    println!("inconsistencies={}", findings.len());
    println!("label_errors={label_errors}");
    if policy {
        println!("policy_findings={policy_findings}");
    }
    let ok = findings.is_empty() && label_errors == 0;
    println!("ok={ok}");
    if !ok {
        return Err(CliError::Data(format!(
            "{} inconsistencies, {} label errors",
            findings.len(),
            label_errors
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrogram(a) => cmd_spectrogram(a),
        Command::Augment(a) => cmd_augment(a),
        Command::Build(a) => cmd_build(a),
        Command::Clean(a) => cmd_clean(a),
        Command::Validate(a) => cmd_validate(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
