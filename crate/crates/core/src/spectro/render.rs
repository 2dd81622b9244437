use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use image::codecs::png::{CompressionType, FilterType, PngEncoder};
use image::{ExtendedColorType, ImageEncoder};

use crate::error::{CoreError, Result};
use crate::matrix::Matrix;
use crate::spectro::{Colormap, Spectrogram};

/// Reorient a frames-by-bins spectrogram matrix into image layout: one row
/// per frequency bin with +Fs/2 at row 0, one column per frame with time
/// running left to right.
pub fn to_image_orientation(frames_by_bins: &Matrix) -> Matrix {
    let frames = frames_by_bins.rows();
    let bins = frames_by_bins.cols();
    let mut out = Matrix::zeros(bins, frames);
    for m in 0..frames {
        let row = frames_by_bins.row(m);
        for (j, &v) in row.iter().enumerate() {
            out.set(bins - 1 - j, m, v);
        }
    }
    out
}

/// Convenience for the full path from a normalized frames-by-bins matrix to
/// a PNG on disk in the documented orientation.
pub fn render_spectrogram_png(
    normalized: &Matrix,
    colormap: Colormap,
    out_path: &Path,
) -> Result<()> {
    render_png(&to_image_orientation(normalized), colormap, out_path)
}

/// Write a normalized matrix as an 8-bit RGB PNG, one pixel per entry, entry
/// (r, c) at pixel column c of pixel row r. Values are expected in [0, 1];
/// anything outside is clamped by the palette lookup.
///
/// The encoder configuration is pinned so identical inputs produce
/// byte-identical files on every run.
pub fn render_png(img_matrix: &Matrix, colormap: Colormap, out_path: &Path) -> Result<()> {
    let h = img_matrix.rows();
    let w = img_matrix.cols();
    let mut rgb = Vec::with_capacity(w * h * 3);
    for r in 0..h {
        for &v in img_matrix.row(r) {
            rgb.extend_from_slice(&colormap.lookup(v));
        }
    }
    let file = File::create(out_path).map_err(|e| CoreError::io(out_path, e))?;
    let writer = BufWriter::new(file);
    let encoder = PngEncoder::new_with_quality(writer, CompressionType::Fast, FilterType::Sub);
    encoder
        .write_image(&rgb, w as u32, h as u32, ExtendedColorType::Rgb8)
        .map_err(|e| CoreError::ImageEncode {
            path: out_path.into(),
            message: e.to_string(),
        })
}

/// Read back the pixel dimensions of an already rendered image.
pub fn image_dimensions(path: &Path) -> Result<(u32, u32)> {
    image::image_dimensions(path).map_err(|e| CoreError::ImageEncode {
        path: path.into(),
        message: e.to_string(),
    })
}

/// Check that a rendered image matches the spectrogram it claims to depict:
/// width equals the frame count, height equals the bin count.
pub fn check_dimensions(spec: &Spectrogram, image_path: &Path) -> Result<()> {
    let (w, h) = image_dimensions(image_path)?;
    if w as usize != spec.frames() || h as usize != spec.bins() {
        return Err(CoreError::DimensionMismatch {
            image_w: w,
            image_h: h,
            spec_w: spec.frames() as u32,
            spec_h: spec.bins() as u32,
        });
    }
    Ok(())
}
