//! Hermite–Gaussian mode fields, evaluated at the beam waist.
//!
//! `u(x,y) = H_m(√2·x/w)·H_n(√2·y/w)·exp(−(x²+y²)/w²)`, max-normalized to
//! unit amplitude. At the waist the field is real, so the phase is 0 or π.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{HoloError, Result};
use crate::field::{Field, GridSpec};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BeamSpec {
    /// Horizontal mode order (sign changes along x).
    pub m: u32,
    /// Vertical mode order.
    pub n: u32,
    /// Waist radius in meters.
    pub waist: f64,
    /// Beam center in meters relative to the grid center.
    pub center: (f64, f64),
}

impl BeamSpec {
    pub fn centered(m: u32, n: u32, waist: f64) -> Self {
        Self {
            m,
            n,
            waist,
            center: (0.0, 0.0),
        }
    }
}

/// Physicists' Hermite polynomial `H_k(x)` by the three-term recurrence
/// `H_{k+1} = 2x·H_k − 2k·H_{k−1}`.
pub fn hermite(k: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for j in 1..k {
        let next = 2.0 * x * cur - 2.0 * j as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Sample a TEM_mn mode on the grid.
pub fn hermite_gaussian(grid: GridSpec, spec: &BeamSpec) -> Result<Field> {
    let min_waist = 4.0 * grid.pitch();
    if !(spec.waist.is_finite() && spec.waist >= min_waist) {
        return Err(HoloError::WaistTooSmall {
            waist: spec.waist,
            min: min_waist,
        });
    }
    let w = spec.waist;
    let sqrt2 = std::f64::consts::SQRT_2;
    let mut values = Vec::with_capacity(grid.pixels());
    let mut max_abs = 0.0_f64;
    for y in 0..grid.height() {
        for x in 0..grid.width() {
            let (px, py) = grid.coords(x, y);
            let (px, py) = (px - spec.center.0, py - spec.center.1);
            let v = hermite(spec.m, sqrt2 * px / w)
                * hermite(spec.n, sqrt2 * py / w)
                * (-(px * px + py * py) / (w * w)).exp();
            max_abs = max_abs.max(v.abs());
            values.push(v);
        }
    }
    if max_abs == 0.0 || !max_abs.is_finite() {
        return Err(HoloError::ZeroField);
    }
    let data = values
        .into_iter()
        .map(|v| Complex64::new(v / max_abs, 0.0))
        .collect();
    Field::new(grid, data)
}
