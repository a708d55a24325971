//! Sampled complex optical fields and their grid geometry.
//!
//! A [`Field`] stores one complex sample per pixel in row-major order and
//! carries the physical sampling metadata ([`GridSpec`]) that every
//! propagation and encoding step needs. Phases are always reported in the
//! canonical interval `[0, 2π)`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{HoloError, Result};

/// Sampling geometry: pixel counts, pixel pitch and illumination wavelength,
/// both in meters.
///
/// Any even size of at least 2 is accepted; the bundled experiment presets
/// use powers of two.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridSpec {
    width: usize,
    height: usize,
    pitch: f64,
    wavelength: f64,
}

impl GridSpec {
    pub fn new(width: usize, height: usize, pitch: f64, wavelength: f64) -> Result<Self> {
        if width < 2 || height < 2 || width % 2 != 0 || height % 2 != 0 {
            return Err(HoloError::InvalidGridSize { width, height });
        }
        if !(pitch.is_finite() && pitch > 0.0) {
            return Err(HoloError::InvalidPitch(pitch));
        }
        if !(wavelength.is_finite() && wavelength > 0.0) {
            return Err(HoloError::InvalidWavelength(wavelength));
        }
        Ok(Self {
            width,
            height,
            pitch,
            wavelength,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Total sample count (`width * height`).
    pub fn pixels(&self) -> usize {
        self.width * self.height
    }

    /// Pixel pitch in meters.
    pub fn pitch(&self) -> f64 {
        self.pitch
    }

    /// Wavelength in meters.
    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    /// Physical coordinates of pixel `(x, y)` relative to the grid center,
    /// in meters. The center sits on the sample at `(width/2, height/2)`.
    pub fn coords(&self, x: usize, y: usize) -> (f64, f64) {
        let cx = (x as f64 - self.width as f64 / 2.0) * self.pitch;
        let cy = (y as f64 - self.height as f64 / 2.0) * self.pitch;
        (cx, cy)
    }
}

/// Wrap an angle to the canonical interval `[0, 2π)`.
pub fn wrap_phase(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid of a tiny negative angle can round up to exactly 2π.
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Unit-magnitude phasor `exp(i·theta)`.
///
/// The four quadrant angles are snapped to their exact complex values so
/// that binary 0/π phase patterns map to exactly ±1 and cancel pairwise
/// without floating-point residue.
pub fn unit_phasor(theta: f64) -> Complex64 {
    if theta == 0.0 {
        Complex64::new(1.0, 0.0)
    } else if theta == FRAC_PI_2 {
        Complex64::new(0.0, 1.0)
    } else if theta == PI {
        Complex64::new(-1.0, 0.0)
    } else if theta == 3.0 * FRAC_PI_2 {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::new(theta.cos(), theta.sin())
    }
}

/// A complex optical field sampled on a [`GridSpec`], row-major
/// (`index = y * width + x`).
#[derive(Clone, Debug, PartialEq)]
pub struct Field {
    grid: GridSpec,
    data: Vec<Complex64>,
}

impl Field {
    pub fn new(grid: GridSpec, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != grid.pixels() {
            return Err(HoloError::DataLength {
                got: data.len(),
                want: grid.pixels(),
            });
        }
        Ok(Self { grid, data })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self {
            data: vec![Complex64::new(0.0, 0.0); grid.pixels()],
            grid,
        }
    }

    /// Build a field by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(grid: GridSpec, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(grid.pixels());
        for y in 0..grid.height() {
            for x in 0..grid.width() {
                data.push(f(x, y));
            }
        }
        Self { grid, data }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    pub fn get(&self, x: usize, y: usize) -> Complex64 {
        self.data[y * self.grid.width() + x]
    }

    /// Per-pixel magnitude `|u|`.
    pub fn amplitude(&self) -> Vec<f64> {
        self.data.iter().map(|z| z.norm()).collect()
    }

    /// Per-pixel phase wrapped to `[0, 2π)`.
    pub fn phase(&self) -> Vec<f64> {
        self.data.iter().map(|z| wrap_arg(*z)).collect()
    }

    pub fn max_amplitude(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    /// Total energy `Σ|u|²`.
    pub fn energy(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Relative L2 distance `‖a − b‖ / ‖b‖` (or the absolute norm when `b`
    /// is identically zero). Errors when grids differ.
    pub fn rel_l2_distance(&self, other: &Field) -> Result<f64> {
        if self.grid != other.grid {
            return Err(HoloError::PlaneLengthMismatch(
                self.data.len(),
                other.data.len(),
            ));
        }
        let diff: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        let norm = other.energy();
        if norm == 0.0 {
            Ok(diff.sqrt())
        } else {
            Ok((diff / norm).sqrt())
        }
    }
}

/// Argument of `z` wrapped to `[0, 2π)`; zero for `z = 0`.
pub fn wrap_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a < 0.0 {
        let t = a + TAU;
        if t >= TAU {
            0.0
        } else {
            t
        }
    } else {
        a
    }
}
