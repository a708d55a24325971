//! Error-diffusion binarization of the hologram-plane amplitude.
//!
//! The scan is plain raster order (left to right, top to bottom) with a
//! fixed 0.5 threshold; quantization error is pushed onto unvisited
//! neighbors according to the selected kernel, and weight falling outside
//! the image is dropped without renormalization.

use serde::Serialize;

use crate::error::{HoloError, Result};
use crate::image::GrayImage;

/// Tolerance for samples marginally outside [0, 1]; anything further out is
/// treated as a missing normalization upstream.
const RANGE_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DitherKernelKind {
    FloydSteinberg,
    JarvisJudiceNinke,
    Stucki,
    Burkes,
}

impl DitherKernelKind {
    pub const ALL: [DitherKernelKind; 4] = [
        DitherKernelKind::FloydSteinberg,
        DitherKernelKind::JarvisJudiceNinke,
        DitherKernelKind::Stucki,
        DitherKernelKind::Burkes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DitherKernelKind::FloydSteinberg => "floyd_steinberg",
            DitherKernelKind::JarvisJudiceNinke => "jarvis_judice_ninke",
            DitherKernelKind::Stucki => "stucki",
            DitherKernelKind::Burkes => "burkes",
        }
    }
}

/// Error-diffusion kernel: `(dx, dy, weight)` offsets strictly ahead in
/// raster order, weights summing to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct DitherKernel {
    kind: DitherKernelKind,
    weights: &'static [(i32, i32, f64)],
}

const FLOYD_STEINBERG: &[(i32, i32, f64)] = &[
    (1, 0, 7.0 / 16.0),
    (-1, 1, 3.0 / 16.0),
    (0, 1, 5.0 / 16.0),
    (1, 1, 1.0 / 16.0),
];

const JARVIS_JUDICE_NINKE: &[(i32, i32, f64)] = &[
    (1, 0, 7.0 / 48.0),
    (2, 0, 5.0 / 48.0),
    (-2, 1, 3.0 / 48.0),
    (-1, 1, 5.0 / 48.0),
    (0, 1, 7.0 / 48.0),
    (1, 1, 5.0 / 48.0),
    (2, 1, 3.0 / 48.0),
    (-2, 2, 1.0 / 48.0),
    (-1, 2, 3.0 / 48.0),
    (0, 2, 5.0 / 48.0),
    (1, 2, 3.0 / 48.0),
    (2, 2, 1.0 / 48.0),
];

const STUCKI: &[(i32, i32, f64)] = &[
    (1, 0, 8.0 / 42.0),
    (2, 0, 4.0 / 42.0),
    (-2, 1, 2.0 / 42.0),
    (-1, 1, 4.0 / 42.0),
    (0, 1, 8.0 / 42.0),
    (1, 1, 4.0 / 42.0),
    (2, 1, 2.0 / 42.0),
    (-2, 2, 1.0 / 42.0),
    (-1, 2, 2.0 / 42.0),
    (0, 2, 4.0 / 42.0),
    (1, 2, 2.0 / 42.0),
    (2, 2, 1.0 / 42.0),
];

const BURKES: &[(i32, i32, f64)] = &[
    (1, 0, 8.0 / 32.0),
    (2, 0, 4.0 / 32.0),
    (-2, 1, 2.0 / 32.0),
    (-1, 1, 4.0 / 32.0),
    (0, 1, 8.0 / 32.0),
    (1, 1, 4.0 / 32.0),
    (2, 1, 2.0 / 32.0),
];

impl DitherKernel {
    pub fn new(kind: DitherKernelKind) -> Self {
        let weights = match kind {
            DitherKernelKind::FloydSteinberg => FLOYD_STEINBERG,
            DitherKernelKind::JarvisJudiceNinke => JARVIS_JUDICE_NINKE,
            DitherKernelKind::Stucki => STUCKI,
            DitherKernelKind::Burkes => BURKES,
        };
        Self { kind, weights }
    }

    pub fn kind(&self) -> DitherKernelKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn weights(&self) -> &[(i32, i32, f64)] {
        self.weights
    }

    /// Check the kernel invariants: weights sum to 1 within 1e-12 and every
    /// offset lies strictly ahead in raster order.
    pub fn validate(&self) -> Result<()> {
        let sum: f64 = self.weights.iter().map(|&(_, _, w)| w).sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(HoloError::KernelWeightSum(sum));
        }
        for &(dx, dy, _) in self.weights {
            if dy < 0 || (dy == 0 && dx <= 0) {
                return Err(HoloError::KernelOffsetBehind { dx, dy });
            }
        }
        Ok(())
    }
}

/// Boolean amplitude plane; `true` marks an on-pixel (a member of the
/// on-pixel set), `false` an off-pixel. On- and off-pixels are complementary
/// by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl BinaryMask {
    pub fn new(width: usize, height: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != width * height {
            return Err(HoloError::ImageDataLength {
                got: bits.len(),
                want: width * height,
            });
        }
        Ok(Self {
            width,
            height,
            bits,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    pub fn count_on(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Fraction of on-pixels in [0, 1].
    pub fn density(&self) -> f64 {
        self.count_on() as f64 / self.bits.len() as f64
    }

    /// Render as an 8-bit image, on-pixels white.
    pub fn to_image(&self) -> GrayImage {
        GrayImage::from_fn(self.width, self.height, |x, y| {
            if self.get(x, y) {
                255
            } else {
                0
            }
        })
    }
}

/// Fraction of on-pixels in a mask.
pub fn mask_density(mask: &BinaryMask) -> f64 {
    mask.density()
}

/// Binarize a real plane in [0, 1] by raster-scan error diffusion.
///
/// A pixel turns on when its accumulated value reaches 0.5. Deterministic:
/// the same plane and kernel always produce the same mask.
pub fn binarize(
    plane: &[f64],
    width: usize,
    height: usize,
    kernel: &DitherKernel,
) -> Result<BinaryMask> {
    if plane.len() != width * height {
        return Err(HoloError::PlaneLengthMismatch(plane.len(), width * height));
    }
    let mut acc = Vec::with_capacity(plane.len());
    for (i, &v) in plane.iter().enumerate() {
        if !v.is_finite() || v < -RANGE_EPS || v > 1.0 + RANGE_EPS {
            return Err(HoloError::AmplitudeOutOfRange { index: i, value: v });
        }
        acc.push(v.clamp(0.0, 1.0));
    }

    let mut bits = vec![false; plane.len()];
    for y in 0..height {
        for x in 0..width {
            let idx = y * width + x;
            let v = acc[idx];
            let on = v >= 0.5;
            bits[idx] = on;
            let err = v - if on { 1.0 } else { 0.0 };
            if err == 0.0 {
                continue;
            }
            for &(dx, dy, wgt) in kernel.weights() {
                let nx = x as i64 + dx as i64;
                let ny = y as i64 + dy as i64;
                if nx >= 0 && (nx as usize) < width && (ny as usize) < height {
                    acc[ny as usize * width + nx as usize] += err * wgt;
                }
            }
        }
    }
    BinaryMask::new(width, height, bits)
}
