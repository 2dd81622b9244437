//! End-to-end checks of the `dronerf` binary: exit codes, rerun and
//! job-count determinism, the resolved-config contract, and the stdout
//! key=value summaries.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

/// Small transform geometry so tests run on short files: one segment is
/// (40 - 1) * 48 + 64 = 1936 samples.
const SMALL: [&str; 6] = ["--fft", "64", "--overlap", "16", "--frames", "40"];

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_dronerf"));
    // Tests must not inherit these from the developer's shell.
    c.env_remove("DRONERF_OUT").env_remove("DRONERF_JOBS");
    c
}

fn write_tone_dat(path: &Path, n: usize) {
    let mut f = fs::File::create(path).unwrap();
    // Tone plus a deterministic wobble so spectrograms are not degenerate.
    let mut state = 0x2545f4914f6cdd1du64;
    for t in 0..n {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let wobble = ((state >> 33) as f64 / (1u64 << 31) as f64 - 0.5) * 0.1;
        let phase = 2.0 * std::f64::consts::PI * 0.11 * t as f64;
        let i = (0.7 * phase.cos() + wobble) as f32;
        let q = (0.7 * phase.sin() + wobble) as f32;
        f.write_all(&i.to_le_bytes()).unwrap();
        f.write_all(&q.to_le_bytes()).unwrap();
    }
}

fn stdout_map(out: &Output) -> BTreeMap<String, String> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process was signalled")
}

/// Every file under root as (relative path, bytes), sorted. Comparing two of
/// these is a byte-level tree identity check.
fn tree(root: &Path) -> Vec<(PathBuf, Vec<u8>)> {
    fn walk(dir: &Path, root: &Path, out: &mut Vec<(PathBuf, Vec<u8>)>) {
        let mut entries: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
        entries.sort();
        for p in entries {
            if p.is_dir() {
                walk(&p, root, out);
            } else {
                out.push((p.strip_prefix(root).unwrap().to_path_buf(), fs::read(&p).unwrap()));
            }
        }
    }
    let mut out = Vec::new();
    walk(root, root, &mut out);
    out
}

/// A capture named by the indoor convention, with a sibling label file.
fn labeled_capture(dir: &Path) -> PathBuf {
    let dat = dir.join("DJI_Mavic2Pro_10_2442_hovering.dat");
    write_tone_dat(&dat, 3900);
    fs::write(dat.with_extension("txt"), "0 0.500000 0.375000 0.900000 0.100000\n").unwrap();
    dat
}

#[test]
fn missing_input_exits_3() {
    let out = bin()
        .args(["validate", "/no/such/capture.dat"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 3);
    assert!(stderr_text(&out).contains("/no/such/capture.dat"));
}

#[test]
fn alpha_without_mix_with_is_a_usage_error() {
    let tmp = TempDir::new().unwrap();
    let dat = labeled_capture(tmp.path());
    let out = bin()
        .args(["augment", dat.to_str().unwrap(), "--alpha", "0.5", "--out"])
        .arg(tmp.path().join("o"))
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_text(&out).contains("--mix-with"));
}

#[test]
fn mix_with_without_alpha_is_a_usage_error() {
    let tmp = TempDir::new().unwrap();
    let dat = labeled_capture(tmp.path());
    let out = bin()
        .args(["augment", dat.to_str().unwrap(), "--mix-with", dat.to_str().unwrap(), "--out"])
        .arg(tmp.path().join("o"))
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_text(&out).contains("--alpha"));
}

#[test]
fn help_exits_0() {
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(exit_code(&out), 0);
    let out = bin().args(["build", "--help"]).output().unwrap();
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn unknown_flag_exits_1() {
    let out = bin().args(["build", "--definitely-not-a-flag"]).output().unwrap();
    assert_eq!(exit_code(&out), 1);
}

fn run_build(dat: &Path, out_dir: &Path, seed: &str, jobs: &str) -> Output {
    bin()
        .args(["build", dat.to_str().unwrap(), "--snr-list", "-10,0,10"])
        .args(SMALL)
        .args(["--seed", seed, "--jobs", jobs, "--out"])
        .arg(out_dir)
        .output()
        .unwrap()
}

#[test]
fn build_reruns_are_byte_identical_regardless_of_jobs() {
    let tmp = TempDir::new().unwrap();
    let dat = labeled_capture(tmp.path());

    let a = tmp.path().join("a");
    let b = tmp.path().join("b");
    let out = run_build(&dat, &a, "42", "3");
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    let kv = stdout_map(&out);
    assert_eq!(kv["strata"], "3");
    assert_eq!(kv["samples"], "6");

    let out = run_build(&dat, &b, "42", "1");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(tree(&a), tree(&b), "same seed, different jobs: trees must match");

    // Re-running into an existing tree converges instead of appending.
    let out = run_build(&dat, &a, "42", "2");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(tree(&a), tree(&b));

    let c = tmp.path().join("c");
    let out = run_build(&dat, &c, "43", "2");
    assert_eq!(exit_code(&out), 0);
    assert_ne!(tree(&a), tree(&c), "a different seed must change the outputs");
}

#[test]
fn config_is_written_before_processing_and_echoes_defaults() {
    let tmp = TempDir::new().unwrap();
    // Too short for the default segment window, so the run fails after the
    // config is written but before any sample is produced.
    let dat = tmp.path().join("short.dat");
    write_tone_dat(&dat, 1000);
    let out_dir = tmp.path().join("o");
    let out = bin()
        .args(["build", dat.to_str().unwrap(), "--snr-list", "0", "--out"])
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_ne!(exit_code(&out), 0);

    let config = fs::read_to_string(out_dir.join("build.config.txt")).unwrap();
    for expected in [
        "command=build",
        "seed=0",
        "sample_rate_hz=20000000",
        "fft_size=1024",
        "overlap=128",
        "window=hann",
        "frames_per_image=1500",
        "colormap=viridis",
        "spec_norm=global_minmax",
        "snr_list=0",
        "noise_only=false",
        "randomize_render=false",
    ] {
        assert!(
            config.lines().any(|l| l == expected),
            "missing {expected:?} in:\n{config}"
        );
    }
}

#[test]
fn env_vars_stand_in_for_out_and_jobs() {
    let tmp = TempDir::new().unwrap();
    let dat = labeled_capture(tmp.path());
    let out_dir = tmp.path().join("env_out");

    let out = bin()
        .args(["spectrogram", dat.to_str().unwrap()])
        .args(SMALL)
        .env("DRONERF_OUT", &out_dir)
        .env("DRONERF_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    assert!(out_dir.join("manifest.csv").is_file());

    let out = bin()
        .args(["spectrogram", dat.to_str().unwrap()])
        .args(SMALL)
        .env("DRONERF_JOBS", "not-a-number")
        .arg("--out")
        .arg(tmp.path().join("x"))
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_text(&out).contains("DRONERF_JOBS"));

    // No --out anywhere: usage error naming the alternatives.
    let out = bin()
        .args(["spectrogram", dat.to_str().unwrap()])
        .args(SMALL)
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_text(&out).contains("DRONERF_OUT"));
}

#[test]
fn validate_passes_a_fresh_build_and_rejects_a_damaged_one() {
    let tmp = TempDir::new().unwrap();
    let dat = labeled_capture(tmp.path());
    let ds = tmp.path().join("ds");
    assert_eq!(exit_code(&run_build(&dat, &ds, "1", "2")), 0);

    let out = bin().arg("validate").arg(&ds).output().unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    let kv = stdout_map(&out);
    assert_eq!(kv["ok"], "true");
    assert_eq!(kv["inconsistencies"], "0");

    // Breaking a label file is a data error.
    let label = tree(&ds)
        .into_iter()
        .map(|(p, _)| p)
        .find(|p| p.extension().is_some_and(|e| e == "txt") && p.starts_with("snr_0dB"))
        .expect("built dataset has labels");
    fs::write(ds.join(&label), "7 2.5 0.5 0.1 0.1\n").unwrap();
    let out = bin().arg("validate").arg(&ds).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    assert_eq!(stdout_map(&out)["ok"], "false");

    // A deleted image is an inconsistency, also a data error.
    fs::write(ds.join(&label), "").unwrap();
    let png = tree(&ds)
        .into_iter()
        .map(|(p, _)| p)
        .find(|p| p.extension().is_some_and(|e| e == "png"))
        .unwrap();
    fs::remove_file(ds.join(&png)).unwrap();
    let out = bin().arg("validate").arg(&ds).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("inconsistency"));
}

#[test]
fn augment_shifts_sibling_labels_to_match() {
    let tmp = TempDir::new().unwrap();
    let dat = labeled_capture(tmp.path());
    let out_dir = tmp.path().join("aug");
    // +Fs/8 at the 20 MHz default, so cy moves down by exactly 0.125.
    let out = bin()
        .args(["augment", dat.to_str().unwrap(), "--shift-hz", "2500000"])
        .args(SMALL)
        .args(["--seed", "5", "--out"])
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    let kv = stdout_map(&out);
    assert_eq!(kv["labels_shifted"], "true");
    assert_eq!(kv["samples"], "2");

    let labels: Vec<PathBuf> = tree(&out_dir)
        .into_iter()
        .map(|(p, _)| p)
        .filter(|p| p.starts_with("DJI_Mavic2Pro") && p.extension().is_some_and(|e| e == "txt"))
        .collect();
    assert_eq!(labels.len(), 2);
    for rel in labels {
        let text = fs::read_to_string(out_dir.join(rel)).unwrap();
        assert_eq!(text, "0 0.500000 0.250000 0.900000 0.100000\n");
    }
}

#[test]
fn spectrogram_writes_images_manifest_and_config() {
    let tmp = TempDir::new().unwrap();
    let dat = labeled_capture(tmp.path());
    let out_dir = tmp.path().join("spec");
    let out = bin()
        .args(["spectrogram", dat.to_str().unwrap()])
        .args(SMALL)
        .arg("--out")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    let kv = stdout_map(&out);
    assert_eq!(kv["sources"], "1");
    assert_eq!(kv["samples"], "2");

    assert!(out_dir.join("manifest.csv").is_file());
    assert!(out_dir.join("spectrogram.config.txt").is_file());
    let pngs = tree(&out_dir)
        .into_iter()
        .map(|(p, _)| p)
        .filter(|p| p.extension().is_some_and(|e| e == "png"))
        .count();
    assert_eq!(pngs, 2);
    // Class directory comes from the capture's naming convention.
    assert!(out_dir.join("DJI_Mavic2Pro").is_dir());
}

#[test]
fn clean_normalizes_a_roboflow_style_tree() {
    let tmp = TempDir::new().unwrap();
    let src = tmp.path().join("third_party");
    for d in ["train/images", "train/labels", "valid/images", "valid/labels"] {
        fs::create_dir_all(src.join(d)).unwrap();
    }
    fs::write(src.join("classes.txt"), "droneA\ndroneB\n").unwrap();
    fs::write(src.join("train/images/a.png"), b"imgA").unwrap();
    fs::write(src.join("train/labels/a.txt"), "0 0.5 0.5 0.2 0.2\n").unwrap();
    fs::write(src.join("valid/images/b.png"), b"imgB").unwrap();
    fs::write(src.join("valid/labels/b.txt"), "1 0.4 0.4 0.1 0.1\n").unwrap();
    fs::write(src.join("train/images/unlabeled.png"), b"imgC").unwrap();

    let out_dir = tmp.path().join("cleaned");
    let out = bin()
        .args(["clean"])
        .arg(&src)
        .arg("--out")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    let kv = stdout_map(&out);
    assert_eq!(kv["total_images"], "3");
    assert_eq!(kv["migrated"], "2");
    assert_eq!(kv["skipped"], "1");
    assert_eq!(kv["conservation"], "true");
    assert_eq!(kv["migrated_train"], "1");
    assert_eq!(kv["migrated_val"], "1");
    assert!(stderr_text(&out).contains("unlabeled.png"));

    assert!(out_dir.join("train/images/droneA/a.png").is_file());
    assert!(out_dir.join("val/images/droneB/b.png").is_file());
    assert_eq!(
        fs::read_to_string(out_dir.join("class_map.tsv")).unwrap(),
        "0\tdroneA\n1\tdroneB\n"
    );
}

#[test]
fn validate_single_capture_reports_sample_count() {
    let tmp = TempDir::new().unwrap();
    let dat = labeled_capture(tmp.path());
    let out = bin().arg("validate").arg(&dat).output().unwrap();
    assert_eq!(exit_code(&out), 0);
    let kv = stdout_map(&out);
    assert_eq!(kv["samples"], "3900");
    assert_eq!(kv["ok"], "true");
}

#[test]
fn validate_rejects_a_ragged_capture() {
    let tmp = TempDir::new().unwrap();
    let dat = tmp.path().join("ragged.dat");
    fs::write(&dat, [0u8; 7]).unwrap();
    let out = bin().arg("validate").arg(&dat).output().unwrap();
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn validate_rejects_a_bad_label_file() {
    let tmp = TempDir::new().unwrap();
    let txt = tmp.path().join("labels.txt");
    fs::write(&txt, "0 0.5 0.5\n").unwrap();
    let out = bin().arg("validate").arg(&txt).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("labels.txt"));
}

#[test]
fn validate_walks_a_plain_directory() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("captures");
    fs::create_dir(&dir).unwrap();
    write_tone_dat(&dir.join("ok.dat"), 500);
    fs::write(dir.join("bad.txt"), "not a label\n").unwrap();
    let out = bin().arg("validate").arg(&dir).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    let kv = stdout_map(&out);
    assert_eq!(kv["captures"], "1");
    assert_eq!(kv["label_files"], "1");
    assert_eq!(kv["errors"], "1");
    assert_eq!(kv["ok"], "false");
}
