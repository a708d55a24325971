//! Phase-only hologram encoders.
//!
//! Three ways to squeeze a complex hologram-plane field onto a
//! phase-modulating device:
//!
//! * `encode_proposed` — binarize the amplitude by error diffusion, keep the
//!   field phase on on-pixels and fill off-pixels with a 0/π canceling wave
//!   whose contributions destructively interfere,
//! * `encode_dph` — double-phase decomposition `a·e^{iθ} =
//!   ½(e^{iθ₁}+e^{iθ₂})` with `θ₁,₂ = θ ± arccos(a)`, checkerboard-
//!   multiplexed onto a single device,
//! * `encode_naive` — keep the phase, discard the amplitude.

use std::f64::consts::PI;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binarize::{binarize, BinaryMask, DitherKernel};
use crate::error::{HoloError, Result};
use crate::field::{unit_phasor, wrap_phase, Field, GridSpec};
use crate::image::{phase_to_byte, GrayImage};

/// Name of the deterministic generator behind the random canceling wave,
/// echoed in reports for reproducibility.
pub const CANCEL_RNG: &str = "chacha8";

/// Canceling-wave generator for off-pixels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CancelSpec {
    /// `θ_c(x, y) = mod(x + y, 2) · π`.
    Checkerboard,
    /// Independent fair draw of {0, π} per off-pixel from a seeded ChaCha8
    /// stream.
    Random { seed: u64 },
    /// Raster-scan the off-pixels only, toggling π and 0 at each one,
    /// starting with 0. The toggle runs across row boundaries.
    Alternate,
}

impl CancelSpec {
    pub fn name(&self) -> &'static str {
        match self {
            CancelSpec::Checkerboard => "checkerboard",
            CancelSpec::Random { .. } => "random",
            CancelSpec::Alternate => "alternate",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            CancelSpec::Random { seed } => Some(*seed),
            _ => None,
        }
    }
}

/// Phase plane for a phase-only device: one phase in `[0, 2π)` per pixel,
/// unit amplitude everywhere by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseHologram {
    grid: GridSpec,
    phase: Vec<f64>,
}

impl PhaseHologram {
    /// Wraps every sample to `[0, 2π)`; rejects non-finite phases.
    pub fn new(grid: GridSpec, phase: Vec<f64>) -> Result<Self> {
        if phase.len() != grid.pixels() {
            return Err(HoloError::DataLength {
                got: phase.len(),
                want: grid.pixels(),
            });
        }
        if phase.iter().any(|p| !p.is_finite()) {
            return Err(HoloError::NonFiniteSample);
        }
        Ok(Self {
            grid,
            phase: phase.into_iter().map(wrap_phase).collect(),
        })
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn phase(&self) -> &[f64] {
        &self.phase
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.phase[y * self.grid.width() + x]
    }

    /// The complex field `exp(i·phase)` the device displays.
    pub fn to_field(&self) -> Field {
        let data = self.phase.iter().map(|&p| unit_phasor(p)).collect();
        Field::new(self.grid, data).expect("phase plane length matches grid")
    }

    /// 8-bit export, `[0, 2π) -> [0, 255]`.
    pub fn to_image(&self) -> GrayImage {
        let samples = self.phase.iter().map(|&p| phase_to_byte(p)).collect();
        GrayImage::new(self.grid.width(), self.grid.height(), samples)
            .expect("phase plane length matches grid")
    }

    /// 16-bit samples for near-lossless interchange, `[0, 2π) -> [0, 65535]`.
    pub fn to_image16(&self) -> Vec<u16> {
        self.phase
            .iter()
            .map(|&p| {
                (p / std::f64::consts::TAU * 65535.0).round().min(65535.0) as u16
            })
            .collect()
    }

    /// Write an 8-bit grayscale PNG.
    pub fn save_png(&self, path: impl AsRef<std::path::Path>) -> Result<()> {
        self.to_image().save_png(path)
    }

    /// Write a 16-bit grayscale PNG.
    pub fn save_png16(&self, path: impl AsRef<std::path::Path>) -> Result<()> {
        let buf: image::ImageBuffer<image::Luma<u16>, Vec<u16>> = image::ImageBuffer::from_raw(
            self.grid.width() as u32,
            self.grid.height() as u32,
            self.to_image16(),
        )
        .expect("phase plane length matches grid");
        buf.save_with_format(path, image::ImageFormat::Png)?;
        Ok(())
    }

    /// Read a hologram phase plane from 8- or 16-bit grayscale PNG or
    /// binary PGM bytes; dimensions must match `grid`.
    pub fn from_bytes(bytes: &[u8], grid: GridSpec) -> Result<Self> {
        use std::f64::consts::TAU;
        let check = |w: usize, h: usize| -> Result<()> {
            if w != grid.width() || h != grid.height() {
                return Err(HoloError::DimensionMismatch {
                    which: "hologram",
                    got_w: w,
                    got_h: h,
                    want_w: grid.width(),
                    want_h: grid.height(),
                });
            }
            Ok(())
        };
        if bytes.starts_with(&[0x89, b'P', b'N', b'G']) {
            let img = image::load_from_memory_with_format(bytes, image::ImageFormat::Png)?;
            if let image::DynamicImage::ImageLuma16(buf) = img {
                check(buf.width() as usize, buf.height() as usize)?;
                let phase = buf
                    .pixels()
                    .map(|p| TAU * p.0[0] as f64 / 65535.0)
                    .collect();
                return Self::new(grid, phase);
            }
            let gray = GrayImage::new(
                img.width() as usize,
                img.height() as usize,
                img.into_luma8().into_raw(),
            )?;
            check(gray.width(), gray.height())?;
            let phase = gray
                .samples()
                .iter()
                .map(|&v| TAU * v as f64 / 255.0)
                .collect();
            Self::new(grid, phase)
        } else {
            let gray = GrayImage::decode(bytes)?;
            check(gray.width(), gray.height())?;
            let phase = gray
                .samples()
                .iter()
                .map(|&v| TAU * v as f64 / 255.0)
                .collect();
            Self::new(grid, phase)
        }
    }

    pub fn load(path: impl AsRef<std::path::Path>, grid: GridSpec) -> Result<Self> {
        let bytes = std::fs::read(path)?;
        Self::from_bytes(&bytes, grid)
    }
}

/// Canceling phase plane: `θ_c` on off-pixels, zero on on-pixels.
///
/// An all-on mask yields an all-zero plane; the random variant draws one
/// bit per off-pixel in raster order, so the pattern depends only on the
/// seed and the mask.
pub fn canceling_phase(mask: &BinaryMask, spec: &CancelSpec) -> Vec<f64> {
    let (w, h) = (mask.width(), mask.height());
    let mut plane = vec![0.0; w * h];
    match spec {
        CancelSpec::Checkerboard => {
            for y in 0..h {
                for x in 0..w {
                    if !mask.get(x, y) {
                        plane[y * w + x] = ((x + y) % 2) as f64 * PI;
                    }
                }
            }
        }
        CancelSpec::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for y in 0..h {
                for x in 0..w {
                    if !mask.get(x, y) {
                        plane[y * w + x] = if rng.next_u32() & 1 == 1 { PI } else { 0.0 };
                    }
                }
            }
        }
        CancelSpec::Alternate => {
            let mut next = 0.0;
            for y in 0..h {
                for x in 0..w {
                    if !mask.get(x, y) {
                        plane[y * w + x] = next;
                        next = PI - next;
                    }
                }
            }
        }
    }
    plane
}

fn checked_amplitude_plane(f: &Field) -> Result<Vec<f64>> {
    if !f.all_finite() {
        return Err(HoloError::NonFiniteSample);
    }
    let max = f.max_amplitude();
    if max == 0.0 {
        return Err(HoloError::ZeroField);
    }
    Ok(f.data().iter().map(|z| z.norm() / max).collect())
}

/// Binarized-amplitude encoding: the phase plane is
/// `θ(x,y)·a_W(x,y) + θ_c(x,y)` — field phase on on-pixels of the dithered
/// amplitude, canceling wave on off-pixels.
pub fn encode_proposed(
    holo_field: &Field,
    kernel: &DitherKernel,
    cancel: &CancelSpec,
) -> Result<(PhaseHologram, BinaryMask)> {
    let grid = holo_field.grid();
    let plane = checked_amplitude_plane(holo_field)?;
    let mask = binarize(&plane, grid.width(), grid.height(), kernel)?;
    let theta = holo_field.phase();
    let cancel_plane = canceling_phase(&mask, cancel);
    let phase: Vec<f64> = mask
        .bits()
        .iter()
        .zip(theta.iter().zip(&cancel_plane))
        .map(|(&on, (&t, &c))| if on { t } else { c })
        .collect();
    Ok((PhaseHologram::new(grid, phase)?, mask))
}

/// Double-phase hologram: `θ₁ = θ + arccos(a)`, `θ₂ = θ − arccos(a)` with
/// the amplitude max-normalized into arccos range, multiplexed so pixels
/// with even `x + y` carry θ₁ and odd ones θ₂.
pub fn encode_dph(holo_field: &Field) -> Result<PhaseHologram> {
    let grid = holo_field.grid();
    let plane = checked_amplitude_plane(holo_field)?;
    let theta = holo_field.phase();
    let w = grid.width();
    let phase: Vec<f64> = plane
        .iter()
        .zip(&theta)
        .enumerate()
        .map(|(i, (&a, &t))| {
            let delta = a.clamp(0.0, 1.0).acos();
            let (x, y) = (i % w, i / w);
            if (x + y) % 2 == 0 {
                wrap_phase(t + delta)
            } else {
                wrap_phase(t - delta)
            }
        })
        .collect();
    PhaseHologram::new(grid, phase)
}

/// Conventional phase-only hologram: keep `arg(u)`, discard the amplitude.
pub fn encode_naive(holo_field: &Field) -> Result<PhaseHologram> {
    if !holo_field.all_finite() {
        return Err(HoloError::NonFiniteSample);
    }
    if holo_field.max_amplitude() == 0.0 {
        return Err(HoloError::ZeroField);
    }
    PhaseHologram::new(holo_field.grid(), holo_field.phase())
}

/// Double-phase split of one complex value: `(θ₁, θ₂)` such that
/// `(e^{iθ₁} + e^{iθ₂})/2 = a·e^{iθ}` for `a` in [0, 1].
pub fn dph_pair(a: f64, theta: f64) -> (f64, f64) {
    let delta = a.clamp(0.0, 1.0).acos();
    (wrap_phase(theta + delta), wrap_phase(theta - delta))
}
