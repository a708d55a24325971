//! Scalar free-space diffraction between parallel planes.
//!
//! Two transfer-function methods over the same FFT machinery:
//!
//! * angular spectrum — `H = exp(i·2πz·√(1/λ² − fx² − fy²))`, exact for
//!   propagating components; evanescent bins are dropped,
//! * Fresnel — `H = exp(i·2πz/λ)·exp(−iπλz(fx² + fy²))`, the paraxial
//!   approximation.
//!
//! A negative distance back-propagates. With `band_limit` the transfer
//! function is zeroed beyond the aliasing-free band of the sampled chirp;
//! with `padding = Double` the field is embedded in a grid twice as large
//! before the transform and cropped afterwards.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{HoloError, Result};
use crate::fft::{fft2_forward, fft2_inverse, freq_index};
use crate::field::{Field, GridSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PropagationMethod {
    AngularSpectrum,
    Fresnel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Padding {
    None,
    Double,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PropagationSpec {
    /// Signed propagation distance in meters; negative back-propagates.
    pub distance: f64,
    pub method: PropagationMethod,
    pub band_limit: bool,
    pub padding: Padding,
}

impl PropagationSpec {
    /// Angular spectrum, no band limit, no padding — the configuration of
    /// the bundled experiment presets.
    pub fn angular_spectrum(distance: f64) -> Self {
        Self {
            distance,
            method: PropagationMethod::AngularSpectrum,
            band_limit: false,
            padding: Padding::None,
        }
    }

    pub fn fresnel(distance: f64) -> Self {
        Self {
            distance,
            method: PropagationMethod::Fresnel,
            band_limit: false,
            padding: Padding::None,
        }
    }

    pub fn reversed(&self) -> Self {
        Self {
            distance: -self.distance,
            ..*self
        }
    }
}

/// Propagate a field by `spec.distance`.
///
/// Zero distance returns the input unchanged (the transfer function is
/// identically 1 there, including on evanescent bins).
pub fn propagate(f: &Field, spec: &PropagationSpec) -> Result<Field> {
    if !spec.distance.is_finite() {
        return Err(HoloError::InvalidScale(spec.distance));
    }
    if !f.all_finite() {
        return Err(HoloError::NonFiniteSample);
    }
    if spec.distance == 0.0 {
        return Ok(f.clone());
    }
    match spec.padding {
        Padding::None => propagate_core(f, spec),
        Padding::Double => {
            let grid = f.grid();
            let big = GridSpec::new(
                grid.width() * 2,
                grid.height() * 2,
                grid.pitch(),
                grid.wavelength(),
            )?;
            let (ox, oy) = (grid.width() / 2, grid.height() / 2);
            let mut padded = Field::zeros(big);
            {
                let data = f.data();
                let mut out = padded.into_data();
                for y in 0..grid.height() {
                    let src = &data[y * grid.width()..(y + 1) * grid.width()];
                    let row = (y + oy) * big.width() + ox;
                    out[row..row + grid.width()].copy_from_slice(src);
                }
                padded = Field::new(big, out)?;
            }
            let spec_inner = PropagationSpec {
                padding: Padding::None,
                ..*spec
            };
            let propagated = propagate_core(&padded, &spec_inner)?;
            let data = propagated.data();
            let mut out = Vec::with_capacity(grid.pixels());
            for y in 0..grid.height() {
                let row = (y + oy) * big.width() + ox;
                out.extend_from_slice(&data[row..row + grid.width()]);
            }
            Field::new(grid, out)
        }
    }
}

fn propagate_core(f: &Field, spec: &PropagationSpec) -> Result<Field> {
    let grid = f.grid();
    let (w, h) = (grid.width(), grid.height());
    let lambda = grid.wavelength();
    let z = spec.distance;
    let dfx = 1.0 / (w as f64 * grid.pitch());
    let dfy = 1.0 / (h as f64 * grid.pitch());

    // Aliasing-free band of the sampled transfer-function chirp. For the
    // angular spectrum the local frequency of H along fx is
    // z·fx/√(1/λ²−fx²); bounding it by 1/(2Δf) gives
    // f_limit = 1/(λ·√((2zΔf)² + 1)). The Fresnel chirp gives λ·z·f ≤
    // 1/(2Δf), i.e. f_limit = 1/(2λzΔf).
    let (flx, fly) = if spec.band_limit {
        let za = z.abs();
        match spec.method {
            PropagationMethod::AngularSpectrum => (
                1.0 / (lambda * (1.0 + (2.0 * za * dfx).powi(2)).sqrt()),
                1.0 / (lambda * (1.0 + (2.0 * za * dfy).powi(2)).sqrt()),
            ),
            PropagationMethod::Fresnel => (
                1.0 / (2.0 * lambda * za * dfx),
                1.0 / (2.0 * lambda * za * dfy),
            ),
        }
    } else {
        (f64::INFINITY, f64::INFINITY)
    };

    let inv_l2 = 1.0 / (lambda * lambda);
    let mut buf = f.data().to_vec();
    fft2_forward(&mut buf, w, h);

    for iy in 0..h {
        let fy = freq_index(iy, h) as f64 * dfy;
        for ix in 0..w {
            let fx = freq_index(ix, w) as f64 * dfx;
            let bin = &mut buf[iy * w + ix];
            if fx.abs() > flx || fy.abs() > fly {
                *bin = Complex64::new(0.0, 0.0);
                continue;
            }
            match spec.method {
                PropagationMethod::AngularSpectrum => {
                    let kz2 = inv_l2 - fx * fx - fy * fy;
                    if kz2 < 0.0 {
                        // Evanescent component.
                        *bin = Complex64::new(0.0, 0.0);
                    } else {
                        let phase = std::f64::consts::TAU * z * kz2.sqrt();
                        *bin *= Complex64::new(phase.cos(), phase.sin());
                    }
                }
                PropagationMethod::Fresnel => {
                    let phase = std::f64::consts::TAU * z / lambda
                        - std::f64::consts::PI * lambda * z * (fx * fx + fy * fy);
                    *bin *= Complex64::new(phase.cos(), phase.sin());
                }
            }
        }
    }

    fft2_inverse(&mut buf, w, h);
    Field::new(grid, buf)
}

/// Binary aperture in the centered frequency plane, in integer samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "shape", content = "samples")]
pub enum ApertureSpec {
    Circle { diameter: usize },
    Square { side: usize },
}

impl ApertureSpec {
    /// Aperture covering the whole spectrum (identity filter).
    pub fn full(grid: &GridSpec) -> Self {
        ApertureSpec::Square {
            side: grid.width().max(grid.height()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            ApertureSpec::Circle { diameter } => *diameter,
            ApertureSpec::Square { side } => *side,
        }
    }

    fn admits(&self, kx: i64, ky: i64) -> bool {
        match self {
            // 4(kx²+ky²) ≤ d² keeps the radius test in exact integers.
            ApertureSpec::Circle { diameter } => {
                let d = *diameter as i64;
                4 * (kx * kx + ky * ky) <= d * d
            }
            ApertureSpec::Square { side } => {
                let s = *side as i64;
                2 * kx.abs() <= s && 2 * ky.abs() <= s
            }
        }
    }
}

/// Multiply the spectrum by a binary aperture centered at DC and transform
/// back — the 4f low-pass filter.
pub fn spectrum_filter(f: &Field, aperture: &ApertureSpec) -> Result<Field> {
    let grid = f.grid();
    let (w, h) = (grid.width(), grid.height());
    let size = aperture.size();
    if size == 0 {
        return Err(HoloError::EmptyAperture);
    }
    if size > w.min(h) {
        return Err(HoloError::ApertureTooLarge {
            size,
            grid: w.min(h),
        });
    }
    if !f.all_finite() {
        return Err(HoloError::NonFiniteSample);
    }

    let mut buf = f.data().to_vec();
    fft2_forward(&mut buf, w, h);
    for iy in 0..h {
        let ky = freq_index(iy, h);
        for ix in 0..w {
            let kx = freq_index(ix, w);
            if !aperture.admits(kx, ky) {
                buf[iy * w + ix] = Complex64::new(0.0, 0.0);
            }
        }
    }
    fft2_inverse(&mut buf, w, h);
    Field::new(grid, buf)
}
