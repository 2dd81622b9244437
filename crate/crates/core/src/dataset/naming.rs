//! Capture naming conventions.
//!
//! Two fielded forms are recognized. The short indoor form is
//! `{manufacturer}_{model}_{bandwidth}_{center_freq}_{mode}` where both the
//! model and the operation mode may themselves contain underscores
//! ("not_engaging"), so the two adjacent numeric fields act as the anchor.
//! The long outdoor form has exactly 14 positional underscore-separated
//! fields. Anything else is an error, never a guess.

use std::path::Path;

use crate::error::{CoreError, Result};

/// Whether the parsed name was a `.dat` file name or a bare directory-style
/// name. Both occur in the wild; the suffix is stripped before parsing and
/// the form is recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NameForm {
    DatFile,
    DirectoryStyle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndoorMeta {
    pub manufacturer: String,
    pub model: String,
    pub bandwidth_mhz: f64,
    pub center_freq_mhz: f64,
    pub operation_mode: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutdoorMeta {
    pub device: String,
    pub status: String,
    pub env: String,
    pub sdr_gain_db: f64,
    pub splitter: bool,
    pub duration_s: f64,
    pub distance_m: f64,
    pub altitude_m: f64,
    pub center_freq_mhz: f64,
    pub drone_c_freq_mhz: f64,
    pub bw_mhz: f64,
    pub snr_db: f64,
    pub sampling_rate_mhz: f64,
    pub record_dir: String,
}

/// Exactly one convention matches any accepted name.
#[derive(Debug, Clone, PartialEq)]
pub enum NamingMeta {
    Indoor(IndoorMeta),
    Outdoor(OutdoorMeta),
}

impl NamingMeta {
    /// Class label used for dataset grouping: manufacturer_model for indoor
    /// captures, the device field for outdoor ones.
    pub fn class_label(&self) -> String {
        match self {
            NamingMeta::Indoor(m) => format!("{}_{}", m.manufacturer, m.model),
            NamingMeta::Outdoor(m) => m.device.clone(),
        }
    }

    pub fn center_freq_hz(&self) -> f64 {
        match self {
            NamingMeta::Indoor(m) => m.center_freq_mhz * 1e6,
            NamingMeta::Outdoor(m) => m.center_freq_mhz * 1e6,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedName {
    pub meta: NamingMeta,
    pub form: NameForm,
}

/// Token counts at or above this are treated as attempted outdoor names, so
/// a long name with a missing field reports a field-count error instead of
/// being misread as an indoor name with an absurd mode.
const OUTDOOR_GUESS_MIN_TOKENS: usize = 10;
const OUTDOOR_FIELDS: usize = 14;

/// Parse the final component of `path` against the two conventions.
pub fn parse_naming(path: &Path) -> Result<ParsedName> {
    let name = path
        .file_name()
        .and_then(|n| n.to_str())
        .ok_or_else(|| CoreError::UnrecognizedName {
            name: path.display().to_string(),
        })?;

    let (stem, form) = match name.strip_suffix(".dat") {
        Some(s) => (s, NameForm::DatFile),
        None => (name, NameForm::DirectoryStyle),
    };

    let tokens: Vec<&str> = stem.split('_').collect();
    if tokens.len() >= OUTDOOR_GUESS_MIN_TOKENS {
        if tokens.len() != OUTDOOR_FIELDS {
            return Err(CoreError::FieldCount {
                name: name.into(),
                expected: OUTDOOR_FIELDS,
                found: tokens.len(),
            });
        }
        return Ok(ParsedName {
            meta: NamingMeta::Outdoor(parse_outdoor(name, &tokens)?),
            form,
        });
    }

    if tokens.len() >= 5 {
        if let Some(meta) = parse_indoor(&tokens) {
            return Ok(ParsedName {
                meta: NamingMeta::Indoor(meta),
                form,
            });
        }
    }

    Err(CoreError::UnrecognizedName { name: name.into() })
}

/// Indoor parse: anchor on the rightmost adjacent pair of numeric tokens
/// that leaves a manufacturer plus at least one model token on the left and
/// at least one mode token on the right. Surplus tokens left of the anchor
/// merge into the model; everything right of it merges into the mode. The
/// rightmost anchor keeps numeric model suffixes ("Mavic_3") in the model
/// instead of misreading them as the bandwidth.
fn parse_indoor(tokens: &[&str]) -> Option<IndoorMeta> {
    let n = tokens.len();
    for i in (2..=n.checked_sub(3)?).rev() {
        let (Ok(bw), Ok(cf)) = (parse_finite(tokens[i]), parse_finite(tokens[i + 1])) else {
            continue;
        };
        return Some(IndoorMeta {
            manufacturer: tokens[0].to_string(),
            model: tokens[1..i].join("_"),
            bandwidth_mhz: bw,
            center_freq_mhz: cf,
            operation_mode: tokens[i + 2..].join("_"),
        });
    }
    None
}

fn parse_outdoor(name: &str, tokens: &[&str]) -> Result<OutdoorMeta> {
    let num = |idx: usize, field: &'static str| -> Result<f64> {
        parse_finite(tokens[idx]).map_err(|_| CoreError::BadField {
            name: name.into(),
            field,
            kind: "a finite number",
            value: tokens[idx].into(),
        })
    };
    let splitter = match tokens[4].to_ascii_lowercase().as_str() {
        "0" | "false" | "no" => false,
        "1" | "true" | "yes" => true,
        other => {
            return Err(CoreError::BadField {
                name: name.into(),
                field: "splitter",
                kind: "a boolean flag (0/1/true/false)",
                value: other.into(),
            })
        }
    };
    let meta = OutdoorMeta {
        device: tokens[0].to_string(),
        status: tokens[1].to_string(),
        env: tokens[2].to_string(),
        sdr_gain_db: num(3, "sdr_gain_db")?,
        splitter,
        duration_s: num(5, "duration_s")?,
        distance_m: num(6, "distance_m")?,
        altitude_m: num(7, "altitude_m")?,
        center_freq_mhz: num(8, "center_freq_mhz")?,
        drone_c_freq_mhz: num(9, "drone_c_freq_mhz")?,
        bw_mhz: num(10, "bw_mhz")?,
        snr_db: num(11, "snr_db")?,
        sampling_rate_mhz: num(12, "sampling_rate_mhz")?,
        record_dir: tokens[13].to_string(),
    };
    if !(meta.sampling_rate_mhz > 0.0) {
        return Err(CoreError::BadField {
            name: name.into(),
            field: "sampling_rate_mhz",
            kind: "a positive number",
            value: tokens[12].into(),
        });
    }
    Ok(meta)
}

fn parse_finite(token: &str) -> std::result::Result<f64, ()> {
    match token.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(()),
    }
}
