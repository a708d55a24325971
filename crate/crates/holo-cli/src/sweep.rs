//! Parameter sweeps over hologram size or propagation distance.
//!
//! Every sweep point runs the proposed/double-phase pair through the exact
//! pipeline used by the paired presets; inputs are nearest-neighbor
//! resampled to each size so no new sample values appear.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use holo_core::metrics::format_db;
use holo_core::ScenarioReport;

use crate::config::{ImageSource, RunConfig};
use crate::scenario::{image_target, run_pair};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepAxis {
    Size,
    Distance,
}

impl SweepAxis {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "size" => Some(SweepAxis::Size),
            "distance" => Some(SweepAxis::Distance),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SweepAxis::Size => "size",
            SweepAxis::Distance => "distance",
        }
    }

    pub fn default_values(&self) -> Vec<f64> {
        match self {
            SweepAxis::Size => vec![512.0, 1024.0, 2048.0],
            SweepAxis::Distance => vec![0.05, 0.1, 0.2, 0.4],
        }
    }
}

/// One CSV row: one method at one sweep point. `eta` is the ratio of the
/// proposed to the double-phase reconstruction energy at that point, echoed
/// on both rows of the pair.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub axis: &'static str,
    pub value: f64,
    pub report: ScenarioReport,
    pub eta: f64,
}

/// Validate every axis value before any computation starts.
pub fn validate_values(axis: SweepAxis, values: &[f64]) -> Result<()> {
    if values.is_empty() {
        bail!("sweep needs at least one value");
    }
    for &v in values {
        match axis {
            SweepAxis::Size => {
                if !(v.is_finite() && v >= 128.0 && v.fract() == 0.0 && (v as u64) % 2 == 0) {
                    bail!("size sweep values must be even integers >= 128, got {v}");
                }
            }
            SweepAxis::Distance => {
                if !(v.is_finite() && v > 0.0) {
                    bail!("distance sweep values must be positive, got {v}");
                }
            }
        }
    }
    Ok(())
}

pub fn run_sweep(
    axis: SweepAxis,
    values: &[f64],
    base: &RunConfig,
    source: &ImageSource,
    out: Option<&Path>,
) -> Result<Vec<SweepRow>> {
    validate_values(axis, values)?;
    let mut rows = Vec::new();
    for &value in values {
        let cfg = match axis {
            SweepAxis::Size => base.with_size(value as usize),
            SweepAxis::Distance => base.with_distance(value),
        };
        let target = image_target(&cfg, source)?;
        let label = format!("sweep_{}", axis.name());
        let (proposed, dph, _, _) = run_pair(&label, &cfg, &target)?;
        let eta = proposed.eta.expect("pair runner sets eta on the proposed row");
        rows.push(SweepRow {
            axis: axis.name(),
            value,
            report: proposed,
            eta,
        });
        rows.push(SweepRow {
            axis: axis.name(),
            value,
            report: dph,
            eta,
        });
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir)
            .with_context(|| format!("creating output directory {}", dir.display()))?;
        fs::write(dir.join("sweep.csv"), render_csv(&rows))
            .with_context(|| format!("writing {}", dir.join("sweep.csv").display()))?;
    }
    Ok(rows)
}

pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut csv = String::from(
        "axis,value,method,amp_psnr_db,phase_psnr_db,eta,width,height,pitch_m,wavelength_m,\
         distance_m,propagation,band_limit,padding,kernel,cancel,seed,aperture_shape,\
         aperture_samples,amp_source,phase_source\n",
    );
    for row in rows {
        let r = &row.report;
        let c = &r.config;
        let seed = r.seed.map(|s| s.to_string()).unwrap_or_default();
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            row.axis,
            row.value,
            r.method,
            format_db(r.amp_psnr_db),
            format_db(r.phase_psnr_db),
            format_db(row.eta),
            c.width,
            c.height,
            c.pitch_m,
            c.wavelength_m,
            c.distance_m,
            c.propagation,
            c.band_limit,
            c.padding,
            c.kernel,
            c.cancel,
            seed,
            c.aperture_shape,
            c.aperture_samples,
            c.amp_source,
            c.phase_source,
        )
        .expect("writing to a String cannot fail");
    }
    csv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_rejects_bad_values_before_compute() {
        assert!(validate_values(SweepAxis::Size, &[512.0, 127.0]).is_err());
        assert!(validate_values(SweepAxis::Size, &[513.0]).is_err());
        assert!(validate_values(SweepAxis::Size, &[512.5]).is_err());
        assert!(validate_values(SweepAxis::Size, &[]).is_err());
        assert!(validate_values(SweepAxis::Size, &[128.0, 512.0]).is_ok());
        assert!(validate_values(SweepAxis::Distance, &[0.0]).is_err());
        assert!(validate_values(SweepAxis::Distance, &[-0.1]).is_err());
        assert!(validate_values(SweepAxis::Distance, &[0.05, 0.4]).is_ok());
    }

    #[test]
    fn sweep_produces_two_rows_per_value() {
        let base = RunConfig {
            width: 64,
            height: 64,
            distance: 0.01,
            ..RunConfig::default()
        };
        let rows = run_sweep(
            SweepAxis::Distance,
            &[0.005, 0.01],
            &base,
            &ImageSource::Synthetic,
            None,
        )
        .unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].report.method, "proposed");
        assert_eq!(rows[1].report.method, "dph");
        assert_eq!(rows[0].eta, rows[1].eta);
        assert_eq!(rows[1].report.config.distance_m, 0.005);
        assert_eq!(rows[2].report.config.distance_m, 0.01);
    }

    #[test]
    fn size_sweep_resizes_the_grid() {
        let base = RunConfig {
            width: 64,
            height: 64,
            distance: 0.01,
            ..RunConfig::default()
        };
        let rows = run_sweep(
            SweepAxis::Size,
            &[128.0],
            &base,
            &ImageSource::Synthetic,
            None,
        )
        .unwrap();
        assert_eq!(rows[0].report.config.width, 128);
        assert_eq!(rows[0].report.config.aperture_samples, 16);
    }

    #[test]
    fn csv_has_a_header_and_one_line_per_row() {
        let base = RunConfig {
            width: 64,
            height: 64,
            distance: 0.01,
            ..RunConfig::default()
        };
        let rows = run_sweep(
            SweepAxis::Distance,
            &[0.01],
            &base,
            &ImageSource::Synthetic,
            None,
        )
        .unwrap();
        let csv = render_csv(&rows);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("axis,value,method,"));
        assert!(lines[1].starts_with("distance,0.01,proposed,"));
        assert_eq!(
            lines[0].split(',').count(),
            lines[1].split(',').count()
        );
    }
}
