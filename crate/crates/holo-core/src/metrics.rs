//! Reconstruction quality and light-efficiency figures.

use serde::{Serialize, Serializer};

use crate::error::{HoloError, Result};
use crate::field::Field;

/// Peak signal-to-noise ratio in dB: `10·log10(peak² / MSE)` over all
/// samples. Identical planes return `f64::INFINITY`.
pub fn psnr(test: &[f64], reference: &[f64], peak: f64) -> Result<f64> {
    if test.len() != reference.len() || test.is_empty() {
        return Err(HoloError::PlaneLengthMismatch(test.len(), reference.len()));
    }
    if !(peak.is_finite() && peak > 0.0) {
        return Err(HoloError::InvalidPeak(peak));
    }
    let mse: f64 = test
        .iter()
        .zip(reference)
        .map(|(t, r)| {
            let d = t - r;
            d * d
        })
        .sum::<f64>()
        / test.len() as f64;
    if mse == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (peak * peak / mse).log10())
}

/// Light-efficiency ratio `η = Σ|a_P|² / Σ|a_D|²` of two object-plane
/// fields, computed on raw (unnormalized) amplitudes.
pub fn light_efficiency(proposed_obj: &Field, dph_obj: &Field) -> Result<f64> {
    if proposed_obj.grid() != dph_obj.grid() {
        return Err(HoloError::PlaneLengthMismatch(
            proposed_obj.data().len(),
            dph_obj.data().len(),
        ));
    }
    let denom = dph_obj.energy();
    if denom == 0.0 {
        return Err(HoloError::ZeroDenominator);
    }
    Ok(proposed_obj.energy() / denom)
}

/// Divide a plane by its maximum; errors when the plane is identically zero.
pub fn max_normalize(plane: &[f64]) -> Result<Vec<f64>> {
    let max = plane.iter().cloned().fold(0.0_f64, f64::max);
    if max == 0.0 {
        return Err(HoloError::ZeroField);
    }
    if !max.is_finite() {
        return Err(HoloError::NonFiniteSample);
    }
    Ok(plane.iter().map(|v| v / max).collect())
}

/// Serialize a PSNR so the infinite sentinel survives JSON (which has no
/// native infinity): finite values stay numbers, infinity becomes `"inf"`.
pub fn serialize_db<S: Serializer>(value: &f64, ser: S) -> std::result::Result<S::Ok, S::Error> {
    if value.is_finite() {
        ser.serialize_f64(*value)
    } else {
        ser.serialize_str("inf")
    }
}

fn serialize_opt_db<S: Serializer>(
    value: &Option<f64>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => serialize_db(v, ser),
        None => ser.serialize_none(),
    }
}

/// Format a PSNR/η value for CSV cells; infinity prints as `inf`.
pub fn format_db(value: f64) -> String {
    if value.is_finite() {
        format!("{value}")
    } else {
        "inf".to_string()
    }
}

/// Everything one scenario run reports for one method: quality figures plus
/// a complete echo of the effective configuration.
#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    /// Encoding method label (`proposed`, `dph`, `naive`, `complex`, or the
    /// canceling-wave name in the comparison scenario).
    pub method: String,
    #[serde(serialize_with = "serialize_db")]
    pub amp_psnr_db: f64,
    #[serde(serialize_with = "serialize_db")]
    pub phase_psnr_db: f64,
    /// Light efficiency of the proposed reconstruction against the
    /// double-phase baseline; present on the proposed row of paired runs.
    #[serde(serialize_with = "serialize_opt_db")]
    pub eta: Option<f64>,
    /// Seed of the random canceling wave when one was used.
    pub seed: Option<u64>,
    /// Deterministic generator behind that seed.
    pub rng: Option<String>,
    pub config: ReportConfig,
}

/// Echo of the full effective configuration — no hidden defaults.
#[derive(Clone, Debug, Serialize)]
pub struct ReportConfig {
    pub width: usize,
    pub height: usize,
    pub pitch_m: f64,
    pub wavelength_m: f64,
    pub distance_m: f64,
    pub propagation: String,
    pub band_limit: bool,
    pub padding: String,
    pub kernel: String,
    pub cancel: String,
    pub aperture_shape: String,
    pub aperture_samples: usize,
    pub amp_source: String,
    pub phase_source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub waist_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beam_mode: Option<(u32, u32)>,
}
