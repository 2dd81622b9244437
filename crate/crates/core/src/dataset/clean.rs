//! Normalization of third-party YOLO dataset releases.
//!
//! Public releases arrive in assorted shapes: split-first trees with
//! `images/` and `labels/` mirrors (the Roboflow export style), class
//! directories above or below the split, labels sitting next to their
//! images. Rather than pattern-matching whole-tree templates, every image is
//! resolved individually: find its label, its split, and its class, then
//! copy both files into one canonical hierarchy
//! `out/{split}/{images,labels}/{class}/`. Files are copied byte for byte;
//! nothing is rewritten.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Component, Path, PathBuf};

use crate::error::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayoutHint {
    /// Resolve each image against all recognized layouts.
    Auto,
    /// Caller knows the tree is a Roboflow-style export. Resolution is the
    /// same as Auto (the per-image resolver covers that layout); the hint is
    /// accepted for CLI symmetry and recorded in the report.
    RoboflowLike,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MigratedFile {
    pub source: PathBuf,
    pub dest: PathBuf,
    pub split: &'static str,
    pub class: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkippedFile {
    pub source: PathBuf,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CleanReport {
    pub total_images: usize,
    pub migrated: Vec<MigratedFile>,
    pub skipped: Vec<SkippedFile>,
    /// Label files with no image anywhere they could belong to one.
    pub orphan_labels: Vec<PathBuf>,
    pub class_map: BTreeMap<u32, String>,
    pub hint: LayoutHint,
}

impl CleanReport {
    /// Every source image is either migrated or skipped, never both, never
    /// neither.
    pub fn conservation_holds(&self) -> bool {
        self.migrated.len() + self.skipped.len() == self.total_images
    }

    pub fn split_counts(&self) -> BTreeMap<&'static str, usize> {
        let mut counts = BTreeMap::new();
        for m in &self.migrated {
            *counts.entry(m.split).or_insert(0) += 1;
        }
        counts
    }
}

const IMAGE_EXTS: [&str; 4] = ["png", "jpg", "jpeg", "bmp"];
const MAP_FILES: [&str; 2] = ["classes.txt", "class_map.tsv"];
pub const CLASS_MAP_FILE: &str = "class_map.tsv";

fn is_image(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| IMAGE_EXTS.contains(&e.to_ascii_lowercase().as_str()))
}

fn normalize_split(comp: &str) -> Option<&'static str> {
    match comp.to_ascii_lowercase().as_str() {
        "train" => Some("train"),
        "val" | "valid" => Some("val"),
        "test" => Some("test"),
        _ => None,
    }
}

fn dir_components(rel: &Path) -> Vec<String> {
    rel.parent()
        .map(|p| {
            p.components()
                .filter_map(|c| match c {
                    Component::Normal(os) => Some(os.to_string_lossy().into_owned()),
                    _ => None,
                })
                .collect()
        })
        .unwrap_or_default()
}

/// Swap one path component for another, innermost occurrence first.
fn swap_component(path: &Path, from: &str, to: &str) -> Option<PathBuf> {
    let comps: Vec<String> = path
        .components()
        .filter_map(|c| match c {
            Component::Normal(os) => Some(os.to_string_lossy().into_owned()),
            _ => None,
        })
        .collect();
    let idx = comps.iter().rposition(|c| c == from)?;
    let mut out = if path.is_absolute() {
        PathBuf::from(Component::RootDir.as_os_str())
    } else {
        PathBuf::new()
    };
    for (i, c) in comps.iter().enumerate() {
        out.push(if i == idx { to } else { c.as_str() });
    }
    Some(out)
}

/// The label for an image: co-located `{stem}.txt`, or the same relative
/// spot under a `labels/` directory mirroring an `images/` directory.
fn find_label(image: &Path) -> Option<PathBuf> {
    let sibling = image.with_extension("txt");
    if sibling.is_file() {
        return Some(sibling);
    }
    let mirrored = swap_component(image, "images", "labels")?.with_extension("txt");
    mirrored.is_file().then_some(mirrored)
}

/// Whether any image exists that `label` could belong to.
fn has_image(label: &Path) -> bool {
    for ext in IMAGE_EXTS {
        if label.with_extension(ext).is_file() {
            return true;
        }
    }
    if let Some(mirrored) = swap_component(label, "labels", "images") {
        for ext in IMAGE_EXTS {
            if mirrored.with_extension(ext).is_file() {
                return true;
            }
        }
    }
    false
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| CoreError::io(path, e))?;
    Ok(text.lines().map(|l| l.trim_end().to_string()).collect())
}

fn parse_classes_txt(path: &Path) -> Result<Vec<(u32, String)>> {
    let mut lines = read_lines(path)?;
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    Ok(lines
        .into_iter()
        .enumerate()
        .map(|(i, name)| (i as u32, name.trim().to_string()))
        .collect())
}

fn parse_class_map_tsv(path: &Path) -> Result<Vec<(u32, String)>> {
    let mut entries = Vec::new();
    for (idx, line) in read_lines(path)?.into_iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (id, name) = line.split_once('\t').ok_or_else(|| CoreError::MalformedLabel {
            path: path.to_path_buf(),
            line: idx + 1,
            reason: "class map entries are id<TAB>name".into(),
        })?;
        let id: u32 = id.trim().parse().map_err(|_| CoreError::MalformedLabel {
            path: path.to_path_buf(),
            line: idx + 1,
            reason: format!("class id {:?} is not an unsigned integer", id.trim()),
        })?;
        entries.push((id, name.trim().to_string()));
    }
    Ok(entries)
}

fn merge_class_entries(
    map: &mut BTreeMap<u32, String>,
    entries: Vec<(u32, String)>,
) -> Result<()> {
    for (id, name) in entries {
        match map.get(&id) {
            Some(existing) if *existing != name => {
                return Err(CoreError::ClassMapConflict {
                    class_id: id,
                    first: existing.clone(),
                    second: name,
                });
            }
            _ => {
                map.insert(id, name);
            }
        }
    }
    Ok(())
}

/// Majority class id in a label file; ties go to the smallest id. Empty
/// labels yield None.
fn majority_class(path: &Path) -> std::result::Result<Option<u32>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let first = line.split_whitespace().next().unwrap_or_default();
        let id: u32 = first
            .parse()
            .map_err(|_| format!("class id {first:?} is not an unsigned integer"))?;
        *counts.entry(id).or_insert(0) += 1;
    }
    // BTreeMap iterates in ascending id order, so on equal counts the
    // smallest id wins.
    Ok(counts
        .into_iter()
        .max_by_key(|&(id, n)| (n, std::cmp::Reverse(id)))
        .map(|(id, _)| id))
}

fn copy_file(from: &Path, to: &Path) -> Result<()> {
    if let Some(parent) = to.parent() {
        std::fs::create_dir_all(parent).map_err(|e| CoreError::io(parent, e))?;
    }
    std::fs::copy(from, to).map_err(|e| CoreError::io(from, e))?;
    Ok(())
}

/// Migrate a third-party YOLO tree into the canonical layout. See the module
/// doc for the per-image resolution rules. The class map is carried over
/// verbatim into a single `class_map.tsv` at the output root; maps found in
/// several places must agree or the whole migration aborts.
pub fn clean_third_party(
    src_root: &Path,
    hint: LayoutHint,
    out_root: &Path,
) -> Result<CleanReport> {
    let mut images = Vec::new();
    let mut labels = Vec::new();
    let mut class_map = BTreeMap::new();

    for entry in walkdir::WalkDir::new(src_root)
        .sort_by_file_name()
        .into_iter()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_file())
    {
        let path = entry.path();
        let name = path
            .file_name()
            .and_then(|n| n.to_str())
            .unwrap_or_default()
            .to_ascii_lowercase();
        if MAP_FILES.contains(&name.as_str()) {
            let entries = if name == "classes.txt" {
                parse_classes_txt(path)?
            } else {
                parse_class_map_tsv(path)?
            };
            merge_class_entries(&mut class_map, entries)?;
        } else if is_image(path) {
            images.push(path.to_path_buf());
        } else if path.extension().is_some_and(|e| e == "txt") {
            labels.push(path.to_path_buf());
        }
    }

    if images.is_empty() {
        return Err(CoreError::UnrecognizedLayout {
            path: src_root.to_path_buf(),
        });
    }

    let mut report = CleanReport {
        total_images: images.len(),
        migrated: Vec::new(),
        skipped: Vec::new(),
        orphan_labels: Vec::new(),
        class_map: class_map.clone(),
        hint,
    };
    let mut taken: BTreeSet<PathBuf> = BTreeSet::new();
    let skip = |report: &mut CleanReport, source: &Path, reason: String| {
        report.skipped.push(SkippedFile {
            source: source.to_path_buf(),
            reason,
        });
    };

    for image in &images {
        let rel = image.strip_prefix(src_root).expect("walk stays under root");
        let dirs = dir_components(rel);

        let Some(split) = dirs.iter().find_map(|d| normalize_split(d)) else {
            skip(
                &mut report,
                image,
                "no train/val/test component in path".into(),
            );
            continue;
        };
        let Some(label) = find_label(image) else {
            skip(&mut report, image, "image without label".into());
            continue;
        };

        let class_from_path = dirs
            .iter()
            .rev()
            .find(|d| normalize_split(d).is_none() && d.as_str() != "images" && d.as_str() != "labels")
            .cloned();
        let class = match class_from_path {
            Some(c) => c,
            None => match majority_class(&label) {
                Err(reason) => {
                    skip(&mut report, image, format!("unparseable label: {reason}"));
                    continue;
                }
                Ok(None) => super::BACKGROUND_CLASS.to_string(),
                Ok(Some(id)) => match class_map.get(&id) {
                    Some(name) => name.clone(),
                    None if class_map.is_empty() => {
                        return Err(CoreError::MissingClassMap {
                            path: src_root.to_path_buf(),
                        });
                    }
                    None => {
                        skip(&mut report, image, format!("class id {id} not in class map"));
                        continue;
                    }
                },
            },
        };

        let file_name = image.file_name().expect("image paths end in a file name");
        let image_dest = out_root
            .join(split)
            .join("images")
            .join(&class)
            .join(file_name);
        if !taken.insert(image_dest.clone()) {
            skip(
                &mut report,
                image,
                format!("duplicate target {}", image_dest.display()),
            );
            continue;
        }
        let label_dest = out_root
            .join(split)
            .join("labels")
            .join(&class)
            .join(Path::new(file_name).with_extension("txt"));

        copy_file(image, &image_dest)?;
        copy_file(&label, &label_dest)?;
        report.migrated.push(MigratedFile {
            source: image.clone(),
            dest: image_dest,
            split,
            class,
        });
    }

    for label in &labels {
        if !has_image(label) {
            report.orphan_labels.push(label.clone());
        }
    }

    if !report.class_map.is_empty() {
        let mut text = String::new();
        for (id, name) in &report.class_map {
            text.push_str(&format!("{id}\t{name}\n"));
        }
        std::fs::create_dir_all(out_root).map_err(|e| CoreError::io(out_root, e))?;
        let map_path = out_root.join(CLASS_MAP_FILE);
        std::fs::write(&map_path, text).map_err(|e| CoreError::io(&map_path, e))?;
    }

    Ok(report)
}
