//! Experiment presets and the shared encode → reconstruct → score pipeline.
//!
//! Four bundled presets:
//!
//! * `fig1` — binarized-amplitude encoding with each of the three canceling
//!   waves on the image pair, to rank the canceling patterns,
//! * `fig3` / `fig4` — binarized-amplitude encoding against the
//!   double-phase baseline on an image pair, with the light-efficiency
//!   ratio,
//! * `fig7` — the same comparison on a Hermite–Gaussian TEM₉₇ target at
//!   0.05 m, plus naive phase-only and full-complex reference
//!   reconstructions.

use std::fmt;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use holo_core::{
    encode_dph, encode_naive, encode_proposed, field_from_images, hermite_gaussian,
    light_efficiency, max_normalize, propagate, psnr, reconstruct, reconstruct_field, wrap_phase,
    BeamSpec, BinaryMask, CancelSpec, Field, GrayImage, PhaseHologram, ReportConfig,
    ScenarioReport,
};

use crate::config::{ImageSource, RunConfig};

pub const SCENARIO_NAMES: [&str; 4] = ["fig1", "fig3", "fig4", "fig7"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    Fig1,
    Fig3,
    Fig4,
    Fig7,
}

impl Scenario {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "fig1" => Some(Scenario::Fig1),
            "fig3" => Some(Scenario::Fig3),
            "fig4" => Some(Scenario::Fig4),
            "fig7" => Some(Scenario::Fig7),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Fig1 => "fig1",
            Scenario::Fig3 => "fig3",
            Scenario::Fig4 => "fig4",
            Scenario::Fig7 => "fig7",
        }
    }

    /// Preset asset file names (amplitude, phase) for image-pair scenarios.
    pub fn asset_names(&self) -> Option<(&'static str, &'static str)> {
        match self {
            Scenario::Fig1 | Scenario::Fig3 => Some(("mandrill.png", "pepper.png")),
            Scenario::Fig4 => Some(("cameraman.png", "house.png")),
            Scenario::Fig7 => None,
        }
    }

    /// Scenario-specific configuration adjustments over the shared
    /// defaults: the beam preset runs at 0.05 m.
    pub fn apply_defaults(&self, cfg: &mut RunConfig, distance_overridden: bool) {
        if *self == Scenario::Fig7 && !distance_overridden {
            cfg.distance = 0.05;
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Object field plus the reference planes reconstructions are scored
/// against. Amplitude reference is max-normalized to [0, 1]; phase
/// reference is radians mapped to [0, 1).
pub struct Target {
    pub object: Field,
    pub amp_ref: Vec<f64>,
    pub phase_ref: Vec<f64>,
    pub amp_label: String,
    pub phase_label: String,
    pub waist: Option<f64>,
    pub beam_mode: Option<(u32, u32)>,
}

/// Build the object field from an image pair, resampled to the grid.
pub fn image_target(cfg: &RunConfig, source: &ImageSource) -> Result<Target> {
    let grid = cfg.grid()?;
    let images = source.load(&grid)?;
    let object = field_from_images(&images.amp, &images.phase, grid)?;
    let amp_ref = max_normalize(
        &images
            .amp
            .samples()
            .iter()
            .map(|&v| v as f64 / 255.0)
            .collect::<Vec<_>>(),
    )?;
    let phase_ref = images
        .phase
        .samples()
        .iter()
        .map(|&v| wrap_phase(std::f64::consts::TAU * v as f64 / 255.0) / std::f64::consts::TAU)
        .collect();
    Ok(Target {
        object,
        amp_ref,
        phase_ref,
        amp_label: images.amp_label,
        phase_label: images.phase_label,
        waist: None,
        beam_mode: None,
    })
}

/// Build a TEM₉₇ beam target at the configured waist.
pub fn beam_target(cfg: &RunConfig) -> Result<Target> {
    let grid = cfg.grid()?;
    let waist = cfg.beam_waist();
    let (m, n) = (9, 7);
    let beam = hermite_gaussian(grid, &BeamSpec::centered(m, n, waist))?;
    let amp_ref = max_normalize(&beam.amplitude())?;
    let phase_ref = beam
        .phase()
        .iter()
        .map(|&t| t / std::f64::consts::TAU)
        .collect();
    let label = format!("hermite_gaussian:tem{m}{n}");
    Ok(Target {
        object: beam,
        amp_ref,
        phase_ref,
        amp_label: label.clone(),
        phase_label: label,
        waist: Some(waist),
        beam_mode: Some((m, n)),
    })
}

/// One encoding route through the shared pipeline.
#[derive(Clone, Debug)]
pub enum EncodeMethod {
    Proposed(CancelSpec),
    Dph,
    Naive,
    /// Reconstruction from the unencoded complex hologram-plane field.
    Complex,
}

impl EncodeMethod {
    fn cancel(&self) -> Option<&CancelSpec> {
        match self {
            EncodeMethod::Proposed(c) => Some(c),
            _ => None,
        }
    }
}

/// Everything produced for one method: the hologram rendering, the mask
/// (binarized-amplitude route only), the reconstruction, and its scores.
pub struct MethodRun {
    pub label: String,
    pub hologram: Option<PhaseHologram>,
    pub hologram_image: GrayImage,
    pub mask: Option<BinaryMask>,
    pub recon: Field,
    pub amp_psnr_db: f64,
    pub phase_psnr_db: f64,
    pub cancel: Option<CancelSpec>,
}

/// Propagate the target to the hologram plane, encode it with `method`,
/// reconstruct through the 4f aperture, and score against the references.
pub fn run_method(
    cfg: &RunConfig,
    target: &Target,
    method: &EncodeMethod,
    label: &str,
) -> Result<MethodRun> {
    let holo_plane = propagate(&target.object, &cfg.forward_spec())?;
    let aperture = cfg.aperture()?;
    let back = cfg.backward_spec();

    let (hologram, mask, recon) = match method {
        EncodeMethod::Proposed(cancel) => {
            let (h, m) = encode_proposed(&holo_plane, &cfg.kernel(), cancel)?;
            let r = reconstruct(&h, &back, &aperture)?;
            (Some(h), Some(m), r)
        }
        EncodeMethod::Dph => {
            let h = encode_dph(&holo_plane)?;
            let r = reconstruct(&h, &back, &aperture)?;
            (Some(h), None, r)
        }
        EncodeMethod::Naive => {
            let h = encode_naive(&holo_plane)?;
            let r = reconstruct(&h, &back, &aperture)?;
            (Some(h), None, r)
        }
        EncodeMethod::Complex => {
            let r = reconstruct_field(&holo_plane, &back, &aperture)?;
            (None, None, r)
        }
    };

    // The full-complex route has no phase-only hologram; render the
    // hologram-plane phase for it so every method exports the same panels.
    let hologram_image = match &hologram {
        Some(h) => h.to_image(),
        None => phase_image_of(&holo_plane),
    };

    let amp_psnr_db = psnr(&max_normalize(&recon.amplitude())?, &target.amp_ref, 1.0)?;
    let phase = recon
        .phase()
        .iter()
        .map(|&t| t / std::f64::consts::TAU)
        .collect::<Vec<_>>();
    let phase_psnr_db = psnr(&phase, &target.phase_ref, 1.0)?;

    Ok(MethodRun {
        label: label.to_string(),
        hologram,
        hologram_image,
        mask,
        recon,
        amp_psnr_db,
        phase_psnr_db,
        cancel: method.cancel().cloned(),
    })
}

fn phase_image_of(f: &Field) -> GrayImage {
    GrayImage::new(
        f.grid().width(),
        f.grid().height(),
        f.phase()
            .iter()
            .map(|&t| holo_core::image::phase_to_byte(t))
            .collect(),
    )
    .expect("phase plane matches grid")
}

fn report_for(
    scenario: &str,
    cfg: &RunConfig,
    target: &Target,
    run: &MethodRun,
    eta: Option<f64>,
) -> Result<ScenarioReport> {
    let seed = run.cancel.as_ref().and_then(|c| c.seed());
    Ok(ScenarioReport {
        scenario: scenario.to_string(),
        method: run.label.clone(),
        amp_psnr_db: run.amp_psnr_db,
        phase_psnr_db: run.phase_psnr_db,
        eta,
        seed,
        rng: seed.map(|_| holo_core::encode::CANCEL_RNG.to_string()),
        config: ReportConfig {
            width: cfg.width,
            height: cfg.height,
            pitch_m: cfg.pitch,
            wavelength_m: cfg.wavelength,
            distance_m: cfg.distance,
            propagation: cfg.propagation_name().to_string(),
            band_limit: cfg.band_limit,
            padding: cfg.padding_name().to_string(),
            kernel: cfg.kernel().name().to_string(),
            cancel: run
                .cancel
                .as_ref()
                .map(|c| c.name().to_string())
                .unwrap_or_else(|| "none".to_string()),
            aperture_shape: cfg.aperture_shape.to_string(),
            aperture_samples: cfg.aperture_samples()?,
            amp_source: target.amp_label.clone(),
            phase_source: target.phase_label.clone(),
            waist_m: target.waist,
            beam_mode: target.beam_mode,
        },
    })
}

/// Binarized-amplitude encoding and the double-phase baseline on the same
/// target, with the light-efficiency ratio on the proposed row. Shared by
/// the paired presets and every sweep point, so a one-point sweep
/// reproduces the preset numbers exactly.
pub fn run_pair(
    scenario: &str,
    cfg: &RunConfig,
    target: &Target,
) -> Result<(ScenarioReport, ScenarioReport, MethodRun, MethodRun)> {
    let proposed = run_method(
        cfg,
        target,
        &EncodeMethod::Proposed(cfg.cancel_spec()),
        "proposed",
    )?;
    let dph = run_method(cfg, target, &EncodeMethod::Dph, "dph")?;
    let eta = light_efficiency(&proposed.recon, &dph.recon)?;
    let proposed_report = report_for(scenario, cfg, target, &proposed, Some(eta))?;
    let dph_report = report_for(scenario, cfg, target, &dph, None)?;
    Ok((proposed_report, dph_report, proposed, dph))
}

/// Run a preset end to end, optionally writing the image panels and
/// `report.json` into `out`.
pub fn run_scenario(
    scenario: Scenario,
    cfg: &RunConfig,
    source: &ImageSource,
    out: Option<&Path>,
) -> Result<Vec<ScenarioReport>> {
    let mut reports = Vec::new();
    let mut runs = Vec::new();

    match scenario {
        Scenario::Fig1 => {
            let target = image_target(cfg, source)?;
            for cancel in [
                CancelSpec::Checkerboard,
                CancelSpec::Random { seed: cfg.seed },
                CancelSpec::Alternate,
            ] {
                let label = cancel.name();
                let run = run_method(cfg, &target, &EncodeMethod::Proposed(cancel), label)?;
                reports.push(report_for(scenario.name(), cfg, &target, &run, None)?);
                runs.push(run);
            }
        }
        Scenario::Fig3 | Scenario::Fig4 => {
            let target = image_target(cfg, source)?;
            let (rp, rd, p, d) = run_pair(scenario.name(), cfg, &target)?;
            reports.extend([rp, rd]);
            runs.extend([p, d]);
        }
        Scenario::Fig7 => {
            let target = beam_target(cfg)?;
            for (method, label) in [
                (EncodeMethod::Naive, "naive"),
                (EncodeMethod::Complex, "complex"),
            ] {
                let run = run_method(cfg, &target, &method, label)?;
                reports.push(report_for(scenario.name(), cfg, &target, &run, None)?);
                runs.push(run);
            }
            let (rp, rd, p, d) = run_pair(scenario.name(), cfg, &target)?;
            // Keep the panel order of the published comparison:
            // naive, complex, dph, proposed.
            reports.push(rd);
            reports.push(rp);
            runs.push(d);
            runs.push(p);
        }
    }

    if let Some(dir) = out {
        write_outputs(scenario.name(), &runs, &reports, dir)?;
    }
    Ok(reports)
}

/// Write per-method panels and the JSON report array.
pub fn write_outputs(
    scenario: &str,
    runs: &[MethodRun],
    reports: &[ScenarioReport],
    dir: &Path,
) -> Result<()> {
    fs::create_dir_all(dir)
        .with_context(|| format!("creating output directory {}", dir.display()))?;
    for run in runs {
        let base = format!("{scenario}_{}", run.label);
        let (amp_img, phase_img) = holo_core::field_to_images(
            &run.recon,
            holo_core::AmpNormalization::Max,
        )?;
        amp_img.save_png(dir.join(format!("{base}_amp.png")))?;
        phase_img.save_png(dir.join(format!("{base}_phase.png")))?;
        run.hologram_image
            .save_png(dir.join(format!("{base}_hologram.png")))?;
        if let Some(mask) = &run.mask {
            mask.to_image().save_png(dir.join(format!("{base}_mask.png")))?;
        }
    }
    write_report_json(reports, &dir.join("report.json"))
}

pub fn write_report_json(reports: &[ScenarioReport], path: &Path) -> Result<()> {
    let mut json = serde_json::to_string_pretty(reports)?;
    json.push('\n');
    fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
