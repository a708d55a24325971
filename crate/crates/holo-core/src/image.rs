//! 8-bit grayscale image interchange.
//!
//! [`GrayImage`] is the carrier for amplitude and phase test images and for
//! rendered outputs. PNG (8-bit grayscale written, anything readable
//! converted with BT.601 luma on ingest) and binary PGM (`P5`, maxval up to
//! 255) are accepted on input; PNG is written on output.

use std::f64::consts::TAU;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{HoloError, Result};
use crate::field::{unit_phasor, wrap_arg, wrap_phase, Field, GridSpec};

const PNG_MAGIC: [u8; 8] = [0x89, b'P', b'N', b'G', 0x0D, 0x0A, 0x1A, 0x0A];

/// Row-major 8-bit grayscale image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    samples: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, samples: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(HoloError::EmptyImage { width, height });
        }
        let want = width
            .checked_mul(height)
            .ok_or(HoloError::EmptyImage { width, height })?;
        if samples.len() != want {
            return Err(HoloError::ImageDataLength {
                got: samples.len(),
                want,
            });
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    /// Build an image by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut samples = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                samples.push(f(x, y));
            }
        }
        Self {
            width,
            height,
            samples,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.samples[y * self.width + x]
    }

    /// Decode PNG or binary PGM bytes, sniffing the format from the magic.
    pub fn decode(bytes: &[u8]) -> Result<Self> {
        if bytes.starts_with(&PNG_MAGIC) {
            let dynimg =
                image::load_from_memory_with_format(bytes, image::ImageFormat::Png)?;
            dynamic_to_gray(dynimg)
        } else if bytes.starts_with(b"P5") {
            parse_pgm(bytes)
        } else {
            Err(HoloError::UnsupportedImageFormat)
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let bytes = std::fs::read(path)?;
        Self::decode(&bytes)
    }

    pub fn save_png(&self, path: impl AsRef<Path>) -> Result<()> {
        image::save_buffer_with_format(
            path,
            &self.samples,
            self.width as u32,
            self.height as u32,
            image::ExtendedColorType::L8,
            image::ImageFormat::Png,
        )?;
        Ok(())
    }

    /// Nearest-neighbor resampling. Picks source pixel `floor(x·in/out)` so
    /// no sample value outside the original range is ever introduced.
    pub fn resample_nearest(&self, width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(HoloError::EmptyImage { width, height });
        }
        let mut samples = Vec::with_capacity(width * height);
        for y in 0..height {
            let sy = (y as u64 * self.height as u64 / height as u64) as usize;
            for x in 0..width {
                let sx = (x as u64 * self.width as u64 / width as u64) as usize;
                samples.push(self.samples[sy * self.width + sx]);
            }
        }
        Self::new(width, height, samples)
    }
}

/// BT.601 luma, rounded to nearest (ties away from zero).
fn bt601_luma(r: u8, g: u8, b: u8) -> u8 {
    let y = 0.299 * r as f64 + 0.587 * g as f64 + 0.114 * b as f64;
    y.round().min(255.0) as u8
}

fn scale_u16(v: u16) -> u8 {
    ((v as u32 * 255 + 32767) / 65535) as u8
}

fn dynamic_to_gray(img: image::DynamicImage) -> Result<GrayImage> {
    use image::DynamicImage::*;
    let (w, h) = (img.width() as usize, img.height() as usize);
    let samples = match img {
        ImageLuma8(buf) => buf.into_raw(),
        ImageLumaA8(buf) => buf.pixels().map(|p| p.0[0]).collect(),
        ImageLuma16(buf) => buf.pixels().map(|p| scale_u16(p.0[0])).collect(),
        ImageLumaA16(buf) => buf.pixels().map(|p| scale_u16(p.0[0])).collect(),
        other => {
            let rgb = other.into_rgb8();
            rgb.pixels()
                .map(|p| bt601_luma(p.0[0], p.0[1], p.0[2]))
                .collect()
        }
    };
    GrayImage::new(w, h, samples)
}

/// Parse a binary PGM (`P5`) image with maxval in 1..=255.
///
/// Header tokens may be separated by any whitespace and `#` comments; after
/// the maxval exactly one whitespace byte precedes the raster. Trailing
/// bytes beyond the raster are rejected.
pub fn parse_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let mut pos = 0usize;

    fn skip_separators(bytes: &[u8], pos: &mut usize) {
        loop {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
            if *pos < bytes.len() && bytes[*pos] == b'#' {
                while *pos < bytes.len() && bytes[*pos] != b'\n' {
                    *pos += 1;
                }
            } else {
                return;
            }
        }
    }

    fn parse_number(bytes: &[u8], pos: &mut usize) -> Result<u64> {
        skip_separators(bytes, pos);
        let start = *pos;
        let mut value: u64 = 0;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((bytes[*pos] - b'0') as u64))
                .ok_or_else(|| HoloError::Pgm("header number overflows".into()))?;
            *pos += 1;
        }
        if *pos == start {
            return Err(HoloError::Pgm("expected a decimal header field".into()));
        }
        Ok(value)
    }

    if !bytes.starts_with(b"P5") {
        return Err(HoloError::Pgm("missing P5 magic".into()));
    }
    pos += 2;

    let width = parse_number(bytes, &mut pos)?;
    let height = parse_number(bytes, &mut pos)?;
    let maxval = parse_number(bytes, &mut pos)?;

    if width == 0 || height == 0 || width > u32::MAX as u64 || height > u32::MAX as u64 {
        return Err(HoloError::Pgm(format!("bad dimensions {width}x{height}")));
    }
    if maxval == 0 || maxval > 255 {
        return Err(HoloError::Pgm(format!(
            "maxval {maxval} unsupported (1..=255)"
        )));
    }

    // Exactly one whitespace byte between maxval and the raster.
    if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
        return Err(HoloError::Pgm("missing separator before raster".into()));
    }
    pos += 1;

    let need = width
        .checked_mul(height)
        .ok_or_else(|| HoloError::Pgm("pixel count overflows".into()))?;
    let raster = &bytes[pos..];
    if (raster.len() as u64) < need {
        return Err(HoloError::Pgm(format!(
            "raster truncated: {} of {} bytes",
            raster.len(),
            need
        )));
    }
    if (raster.len() as u64) > need {
        return Err(HoloError::Pgm("trailing bytes after raster".into()));
    }

    let maxval = maxval as u8;
    let mut samples = Vec::with_capacity(need as usize);
    for &b in raster {
        if b > maxval {
            return Err(HoloError::Pgm(format!(
                "sample {b} exceeds maxval {maxval}"
            )));
        }
        samples.push(if maxval == 255 {
            b
        } else {
            ((b as u32 * 255 + maxval as u32 / 2) / maxval as u32) as u8
        });
    }
    GrayImage::new(width as usize, height as usize, samples)
}

/// Amplitude normalization used when rendering a field to images.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AmpNormalization {
    /// Divide by the maximum amplitude of the field.
    Max,
    /// Divide by a fixed positive scale; values above the scale clamp to 255.
    Fixed(f64),
}

/// Build a complex field from an amplitude image and a phase image:
/// `u = (amp/255) · exp(i·2π·phase/255)`.
///
/// The 8-bit phase value 255 maps to 2π, which wraps to phase 0; this
/// endpoint ambiguity is inherent to the byte encoding.
pub fn field_from_images(amp: &GrayImage, phase: &GrayImage, grid: GridSpec) -> Result<Field> {
    for (img, which) in [(amp, "amplitude"), (phase, "phase")] {
        if img.width() != grid.width() || img.height() != grid.height() {
            return Err(HoloError::DimensionMismatch {
                which,
                got_w: img.width(),
                got_h: img.height(),
                want_w: grid.width(),
                want_h: grid.height(),
            });
        }
    }
    let data: Vec<Complex64> = amp
        .samples()
        .iter()
        .zip(phase.samples())
        .map(|(&a, &p)| {
            let amp = a as f64 / 255.0;
            let theta = wrap_phase(TAU * p as f64 / 255.0);
            unit_phasor(theta) * amp
        })
        .collect();
    Field::new(grid, data)
}

/// Render a field as an amplitude image and a phase image.
///
/// Amplitude maps to `[0, 255]` under the chosen normalization; phase maps
/// `[0, 2π) -> [0, 255]` linearly. Rounding is to nearest, ties away from
/// zero.
pub fn field_to_images(f: &Field, amp_norm: AmpNormalization) -> Result<(GrayImage, GrayImage)> {
    let scale = match amp_norm {
        AmpNormalization::Max => {
            let m = f.max_amplitude();
            if m == 0.0 {
                return Err(HoloError::ZeroField);
            }
            if !m.is_finite() {
                return Err(HoloError::NonFiniteSample);
            }
            m
        }
        AmpNormalization::Fixed(s) => {
            if !(s.is_finite() && s > 0.0) {
                return Err(HoloError::InvalidScale(s));
            }
            s
        }
    };
    let w = f.grid().width();
    let h = f.grid().height();
    let mut amp = Vec::with_capacity(f.grid().pixels());
    let mut phase = Vec::with_capacity(f.grid().pixels());
    for z in f.data() {
        let a = (z.norm() / scale).min(1.0);
        amp.push((a * 255.0).round() as u8);
        phase.push(phase_to_byte(wrap_arg(*z)));
    }
    Ok((GrayImage::new(w, h, amp)?, GrayImage::new(w, h, phase)?))
}

/// Map a phase in `[0, 2π)` to an 8-bit value.
pub fn phase_to_byte(theta: f64) -> u8 {
    (theta / TAU * 255.0).round().min(255.0) as u8
}
