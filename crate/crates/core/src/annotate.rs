//! YOLO label handling.
//!
//! Boxes live in normalized image coordinates on the rendered spectrogram:
//! x is time running left to right, y is frequency running down from +Fs/2
//! at row 0. Because a frequency shift of the underlying I/Q moves energy
//! up or down the image cyclically, label propagation is a vertical
//! translation modulo 1 that may split a box in two at the band edge.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{CoreError, Result};
use crate::matrix::Matrix;
use crate::spectro::Spectrogram;

/// One normalized YOLO box: `class cx cy w h`, centers and extents in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YoloBox {
    pub class_id: u32,
    pub cx: f64,
    pub cy: f64,
    pub w: f64,
    pub h: f64,
}

impl YoloBox {
    pub fn top(&self) -> f64 {
        self.cy - self.h / 2.0
    }

    pub fn bottom(&self) -> f64 {
        self.cy + self.h / 2.0
    }

    pub fn left(&self) -> f64 {
        self.cx - self.w / 2.0
    }

    pub fn right(&self) -> f64 {
        self.cx + self.w / 2.0
    }

    pub fn contains_point(&self, x: f64, y: f64) -> bool {
        (x - self.cx).abs() <= self.w / 2.0 && (y - self.cy).abs() <= self.h / 2.0
    }

    /// Check the coordinate contract: centers in [0, 1], positive extents,
    /// and the box staying inside the unit square to within `tol`.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let ok = self.w > 0.0
            && self.h > 0.0
            && self.w <= 1.0 + tol
            && self.h <= 1.0 + tol
            && (0.0..=1.0).contains(&self.cx)
            && (0.0..=1.0).contains(&self.cy)
            && self.left() >= -tol
            && self.right() <= 1.0 + tol
            && self.top() >= -tol
            && self.bottom() <= 1.0 + tol;
        if ok {
            Ok(())
        } else {
            Err(CoreError::MalformedLabel {
                path: PathBuf::new(),
                line: 0,
                reason: format!(
                    "box out of range: cx={} cy={} w={} h={}",
                    self.cx, self.cy, self.w, self.h
                ),
            })
        }
    }
}

/// A label file plus the context it needs to be interpreted: which image it
/// annotates and what the class ids mean. Zero boxes is a legal state and
/// marks a background image.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LabelFile {
    pub image_path: Option<PathBuf>,
    pub boxes: Vec<YoloBox>,
    pub class_map: BTreeMap<u32, String>,
}

impl LabelFile {
    pub fn new(boxes: Vec<YoloBox>) -> Self {
        LabelFile {
            image_path: None,
            boxes,
            class_map: BTreeMap::new(),
        }
    }

    /// Attach a class map, verifying that every box's class id is covered.
    pub fn with_class_map(mut self, class_map: BTreeMap<u32, String>) -> Result<Self> {
        for b in &self.boxes {
            if !class_map.contains_key(&b.class_id) {
                return Err(CoreError::UnmappedClass {
                    class_id: b.class_id,
                });
            }
        }
        self.class_map = class_map;
        Ok(self)
    }
}

/// Parse a YOLO label text file: one `class cx cy w h` line per box,
/// whitespace separated. Coordinates outside [0, 1] (with a small slack for
/// 6-decimal rounding of boxes that touch the border) are rejected with the
/// offending line number.
pub fn read_labels(path: &Path) -> Result<LabelFile> {
    let text = std::fs::read_to_string(path).map_err(|e| CoreError::io(path, e))?;
    let mut boxes = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(CoreError::MalformedLabel {
                path: path.into(),
                line: line_no,
                reason: format!("expected 5 fields, found {}", fields.len()),
            });
        }
        let malformed = |reason: String| CoreError::MalformedLabel {
            path: path.into(),
            line: line_no,
            reason,
        };
        let class_id: u32 = fields[0]
            .parse()
            .map_err(|_| malformed(format!("bad class id {:?}", fields[0])))?;
        let mut nums = [0f64; 4];
        for (slot, raw) in nums.iter_mut().zip(&fields[1..]) {
            *slot = raw
                .parse()
                .map_err(|_| malformed(format!("bad coordinate {raw:?}")))?;
            if !slot.is_finite() {
                return Err(malformed(format!("non-finite coordinate {raw:?}")));
            }
        }
        let b = YoloBox {
            class_id,
            cx: nums[0],
            cy: nums[1],
            w: nums[2],
            h: nums[3],
        };
        // 1e-6 slack: a box written at 6 decimal places may protrude by up
        // to half an ulp of the format after rounding.
        b.validate(1e-6)
            .map_err(|_| malformed(format!("coordinates out of range: {line:?}")))?;
        boxes.push(b);
    }
    Ok(LabelFile::new(boxes))
}

/// Fixed on-disk formatting for one box.
pub fn format_box(b: &YoloBox) -> String {
    let mut s = String::new();
    let _ = write!(s, "{} {:.6} {:.6} {:.6} {:.6}", b.class_id, b.cx, b.cy, b.w, b.h);
    s
}

/// Write labels in the fixed 6-decimal format, one newline-terminated line
/// per box. An empty box list produces an empty file (a background image).
pub fn write_labels(boxes: &[YoloBox], path: &Path) -> Result<()> {
    let mut text = String::new();
    for b in boxes {
        text.push_str(&format_box(b));
        text.push('\n');
    }
    std::fs::write(path, text).map_err(|e| CoreError::io(path, e))
}

fn mod1(v: f64) -> f64 {
    v - v.floor()
}

/// Propagate boxes through a frequency shift of the underlying I/Q.
///
/// With row 0 at +Fs/2, a shift of `delta_f_hz` moves image content by
/// d = -delta_f / Fs in normalized y. Each box edge translates by d modulo 1;
/// a box crossing the band edge splits into a bottom piece and a top piece
/// whose heights sum to the original exactly. Boxes thinner than
/// `min_height` after the transform are dropped.
pub fn shift_boxes(
    boxes: &[YoloBox],
    delta_f_hz: f64,
    sample_rate_hz: f64,
    min_height: f64,
) -> Result<Vec<YoloBox>> {
    if !(sample_rate_hz > 0.0 && sample_rate_hz.is_finite()) {
        return Err(CoreError::BadSampleRate {
            value: sample_rate_hz,
        });
    }
    let nyquist = sample_rate_hz / 2.0;
    if !(delta_f_hz.abs() < nyquist) {
        return Err(CoreError::ShiftOutOfBand {
            shift_hz: delta_f_hz,
            nyquist,
        });
    }
    let d = -delta_f_hz / sample_rate_hz;
    if d == 0.0 {
        // Bypass the edge decomposition entirely: reassembling cy and h from
        // top/bottom reintroduces rounding, and a zero shift must return the
        // surviving boxes bit for bit. The height filter still applies so
        // behavior is continuous in the shift.
        return Ok(boxes
            .iter()
            .filter(|b| b.h > 0.0 && b.h >= min_height)
            .copied()
            .collect());
    }

    let mut out = Vec::with_capacity(boxes.len());
    for b in boxes {
        let t = b.top() + d;
        let bot = b.bottom() + d;
        let tp = mod1(t);
        // The bottom edge lives on (0, 1]: landing exactly on the seam means
        // the box ends at the bottom of the image, not at the top.
        let bp = {
            let m = mod1(bot);
            if m == 0.0 {
                1.0
            } else {
                m
            }
        };
        if tp < bp {
            out.push(YoloBox {
                cy: (tp + bp) / 2.0,
                h: bp - tp,
                ..*b
            });
        } else {
            // Wrapped past the band edge: a piece at the bottom of the image
            // [tp, 1] and a piece at the top [0, bp].
            out.push(YoloBox {
                cy: (tp + 1.0) / 2.0,
                h: 1.0 - tp,
                ..*b
            });
            out.push(YoloBox {
                cy: bp / 2.0,
                h: bp,
                ..*b
            });
        }
    }
    Ok(out
        .into_iter()
        .filter(|b| b.h > 0.0 && b.h >= min_height)
        .collect())
}

/// [`shift_boxes`] at the label-file level: boxes transform, the image path
/// and class map ride along unchanged.
pub fn shift_labels(
    labels: &LabelFile,
    delta_f_hz: f64,
    sample_rate_hz: f64,
    min_height: f64,
) -> Result<LabelFile> {
    Ok(LabelFile {
        image_path: labels.image_path.clone(),
        boxes: shift_boxes(&labels.boxes, delta_f_hz, sample_rate_hz, min_height)?,
        class_map: labels.class_map.clone(),
    })
}

pub const DEFAULT_MIN_BOX_HEIGHT: f64 = 0.01;

/// Knobs for the advisory annotation-policy checks. The ON/OFF margin is a
/// heuristic with no authoritative value; it is exposed rather than baked in.
#[derive(Debug, Clone, Copy)]
pub struct PolicyParams {
    /// Boxes narrower than this fraction of the time axis get flagged.
    pub on_fraction_threshold: f64,
    /// A time column counts as ON when its mean power in dB exceeds the
    /// median column level by this margin.
    pub on_off_margin_db: f64,
    /// How far (in columns) a box edge may sit from an ON column before the
    /// edge alignment check flags it.
    pub edge_tolerance_cols: usize,
}

impl Default for PolicyParams {
    fn default() -> Self {
        PolicyParams {
            on_fraction_threshold: 0.10,
            on_off_margin_db: 6.0,
            edge_tolerance_cols: 2,
        }
    }
}

/// One advisory finding from [`validate_policy`]. Findings describe how the
/// labels diverge from the annotation conventions; they never block a build.
#[derive(Debug, Clone, PartialEq)]
pub enum PolicyFinding {
    /// Box `box_index` spans less than the configured fraction of the image
    /// width.
    TimeExtentBelowThreshold { box_index: usize, width: f64 },
    /// The in-box energy forms one contiguous ON interval, yet several boxes
    /// partition it; contiguous bursts are supposed to be one object.
    SingleBurstSplitAcrossBoxes { boxes: usize },
    /// A box edge sits on OFF columns: annotations are supposed to start and
    /// end on an ON state.
    EdgeOnOffColumns { box_index: usize, edge_col: usize },
}

impl std::fmt::Display for PolicyFinding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PolicyFinding::TimeExtentBelowThreshold { box_index, width } => write!(
                f,
                "box {box_index}: time extent {width:.4} below the minimum fraction"
            ),
            PolicyFinding::SingleBurstSplitAcrossBoxes { boxes } => write!(
                f,
                "{boxes} boxes partition a single contiguous burst"
            ),
            PolicyFinding::EdgeOnOffColumns { box_index, edge_col } => write!(
                f,
                "box {box_index}: edge at column {edge_col} sits on OFF columns"
            ),
        }
    }
}

/// Check labels against the annotation conventions: minimum time extent,
/// one box per contiguous burst, and box edges landing on ON columns.
/// Advisory only — findings are returned, nothing is edited. When the label
/// file names an image on disk, its pixel dimensions must match the
/// spectrogram.
pub fn validate_policy(
    labels: &LabelFile,
    spec: &Spectrogram,
    params: &PolicyParams,
) -> Result<Vec<PolicyFinding>> {
    if let Some(image) = &labels.image_path {
        if image.exists() {
            crate::spectro::check_dimensions(spec, image)?;
        }
    }

    let mut findings = Vec::new();
    if labels.boxes.is_empty() {
        return Ok(findings);
    }

    for (i, b) in labels.boxes.iter().enumerate() {
        if b.w < params.on_fraction_threshold {
            findings.push(PolicyFinding::TimeExtentBelowThreshold {
                box_index: i,
                width: b.w,
            });
        }
    }

    let on = on_columns(&spec.power, params.on_off_margin_db);
    let frames = spec.frames();

    // Count contiguous ON runs among columns covered by at least one box.
    let covered: Vec<bool> = (0..frames)
        .map(|m| {
            let x = (m as f64 + 0.5) / frames as f64;
            labels
                .boxes
                .iter()
                .any(|b| (x - b.cx).abs() <= b.w / 2.0)
        })
        .collect();
    let mut runs = 0;
    let mut prev = false;
    for m in 0..frames {
        let now = on[m] && covered[m];
        if now && !prev {
            runs += 1;
        }
        prev = now;
    }
    if runs == 1 && labels.boxes.len() > 1 {
        findings.push(PolicyFinding::SingleBurstSplitAcrossBoxes {
            boxes: labels.boxes.len(),
        });
    }

    for (i, b) in labels.boxes.iter().enumerate() {
        let left_col = ((b.left() * frames as f64).floor() as i64).clamp(0, frames as i64 - 1);
        let right_col = ((b.right() * frames as f64).ceil() as i64 - 1).clamp(0, frames as i64 - 1);
        for edge in [left_col, right_col] {
            let lo = (edge - params.edge_tolerance_cols as i64).max(0) as usize;
            let hi = (edge + params.edge_tolerance_cols as i64).min(frames as i64 - 1) as usize;
            if !on[lo..=hi].iter().any(|&v| v) {
                findings.push(PolicyFinding::EdgeOnOffColumns {
                    box_index: i,
                    edge_col: edge as usize,
                });
            }
        }
    }

    Ok(findings)
}

/// Column ON/OFF decision: mean linear power per column, converted to dB,
/// thresholded at the median column level plus the margin.
fn on_columns(power: &Matrix, margin_db: f64) -> Vec<bool> {
    let frames = power.rows();
    let bins = power.cols().max(1);
    let mut levels: Vec<f64> = (0..frames)
        .map(|m| {
            let mean = power.row(m).iter().sum::<f64>() / bins as f64;
            10.0 * (mean + 1e-30).log10()
        })
        .collect();
    let mut sorted = levels.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let median = if sorted.is_empty() {
        0.0
    } else if sorted.len() % 2 == 1 {
        sorted[sorted.len() / 2]
    } else {
        0.5 * (sorted[sorted.len() / 2 - 1] + sorted[sorted.len() / 2])
    };
    levels.drain(..).map(|l| l > median + margin_db).collect()
}

/// Rasterize the vertical extent of a box set onto `rows` pixel rows: a row
/// is covered when its center lies inside some box. Used by tests to compare
/// label geometry against pixel-level truth.
pub fn raster_rows(boxes: &[YoloBox], rows: usize) -> Vec<bool> {
    let mut mask = vec![false; rows];
    for b in boxes {
        let (t, bot) = (b.top(), b.bottom());
        for (r, slot) in mask.iter_mut().enumerate() {
            let y = (r as f64 + 0.5) / rows as f64;
            if y >= t && y < bot {
                *slot = true;
            }
        }
    }
    mask
}
