//! Effective run configuration and input-image sourcing.

use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use holo_core::{
    ApertureSpec, CancelSpec, DitherKernel, DitherKernelKind, GrayImage, GridSpec, Padding,
    PropagationMethod, PropagationSpec,
};

use crate::synth;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApertureShape {
    Circle,
    Square,
}

impl fmt::Display for ApertureShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ApertureShape::Circle => "circle",
            ApertureShape::Square => "square",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CancelKind {
    Checkerboard,
    Random,
    Alternate,
}

/// Complete effective configuration of one pipeline run. Defaults mirror
/// the bundled experiment presets: 1024² grid, 8 µm pitch, 532 nm, 0.2 m,
/// Floyd–Steinberg dithering, alternate canceling wave, circular aperture
/// of 1/8 the grid.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub width: usize,
    pub height: usize,
    pub pitch: f64,
    pub wavelength: f64,
    pub distance: f64,
    pub propagation: PropagationMethod,
    pub band_limit: bool,
    pub padding: Padding,
    pub kernel: DitherKernelKind,
    pub cancel: CancelKind,
    pub seed: u64,
    pub aperture_fraction: f64,
    pub aperture_shape: ApertureShape,
    /// Beam waist override in meters; `None` derives `width·pitch/8`.
    pub waist: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            width: 1024,
            height: 1024,
            pitch: 8e-6,
            wavelength: 532e-9,
            distance: 0.2,
            propagation: PropagationMethod::AngularSpectrum,
            band_limit: false,
            padding: Padding::None,
            kernel: DitherKernelKind::FloydSteinberg,
            cancel: CancelKind::Alternate,
            seed: 42,
            aperture_fraction: 0.125,
            aperture_shape: ApertureShape::Circle,
            waist: None,
        }
    }
}

impl RunConfig {
    pub fn grid(&self) -> Result<GridSpec> {
        GridSpec::new(self.width, self.height, self.pitch, self.wavelength)
            .context("invalid grid configuration")
    }

    pub fn kernel(&self) -> DitherKernel {
        DitherKernel::new(self.kernel)
    }

    pub fn cancel_spec(&self) -> CancelSpec {
        match self.cancel {
            CancelKind::Checkerboard => CancelSpec::Checkerboard,
            CancelKind::Random => CancelSpec::Random { seed: self.seed },
            CancelKind::Alternate => CancelSpec::Alternate,
        }
    }

    pub fn aperture_samples(&self) -> Result<usize> {
        if !(self.aperture_fraction.is_finite()
            && self.aperture_fraction > 0.0
            && self.aperture_fraction <= 1.0)
        {
            bail!(
                "aperture fraction must be in (0, 1], got {}",
                self.aperture_fraction
            );
        }
        let n = self.width.min(self.height) as f64;
        Ok(((self.aperture_fraction * n).round() as usize).max(1))
    }

    pub fn aperture(&self) -> Result<ApertureSpec> {
        let samples = self.aperture_samples()?;
        Ok(match self.aperture_shape {
            ApertureShape::Circle => ApertureSpec::Circle { diameter: samples },
            ApertureShape::Square => ApertureSpec::Square { side: samples },
        })
    }

    /// Object plane to hologram plane.
    pub fn forward_spec(&self) -> PropagationSpec {
        PropagationSpec {
            distance: self.distance,
            method: self.propagation,
            band_limit: self.band_limit,
            padding: self.padding,
        }
    }

    /// Hologram plane back to object plane (negated distance).
    pub fn backward_spec(&self) -> PropagationSpec {
        self.forward_spec().reversed()
    }

    /// Default beam waist when none is given: an eighth of the grid width.
    pub fn beam_waist(&self) -> f64 {
        self.waist
            .unwrap_or(self.width as f64 * self.pitch / 8.0)
    }

    pub fn with_size(&self, size: usize) -> Self {
        Self {
            width: size,
            height: size,
            ..self.clone()
        }
    }

    pub fn with_distance(&self, distance: f64) -> Self {
        Self {
            distance,
            ..self.clone()
        }
    }

    pub fn propagation_name(&self) -> &'static str {
        match self.propagation {
            PropagationMethod::AngularSpectrum => "angular_spectrum",
            PropagationMethod::Fresnel => "fresnel",
        }
    }

    pub fn padding_name(&self) -> &'static str {
        match self.padding {
            Padding::None => "none",
            Padding::Double => "double",
        }
    }

    pub fn cancel_name(&self) -> &'static str {
        match self.cancel {
            CancelKind::Checkerboard => "checkerboard",
            CancelKind::Random => "random",
            CancelKind::Alternate => "alternate",
        }
    }
}

/// Where the amplitude/phase input images come from.
#[derive(Clone, Debug)]
pub enum ImageSource {
    Files { amp: PathBuf, phase: PathBuf },
    /// Built-in radial-chirp amplitude and linear-ramp phase.
    Synthetic,
    /// In-memory pair, mainly for tests and degenerate cases.
    Memory {
        amp: GrayImage,
        phase: GrayImage,
        amp_label: String,
        phase_label: String,
    },
}

/// An input pair resampled to the target grid, with provenance labels for
/// the report echo.
#[derive(Debug)]
pub struct SourcedImages {
    pub amp: GrayImage,
    pub phase: GrayImage,
    pub amp_label: String,
    pub phase_label: String,
}

impl ImageSource {
    pub fn load(&self, grid: &GridSpec) -> Result<SourcedImages> {
        let (amp, phase, amp_label, phase_label) = match self {
            ImageSource::Files { amp, phase } => {
                let a = load_named(amp, "amplitude")?;
                let p = load_named(phase, "phase")?;
                (
                    a,
                    p,
                    amp.display().to_string(),
                    phase.display().to_string(),
                )
            }
            ImageSource::Synthetic => (
                synth::synthetic_amplitude(synth::BASE_SIZE),
                synth::synthetic_phase(synth::BASE_SIZE),
                "synthetic:radial_chirp".to_string(),
                "synthetic:linear_ramp".to_string(),
            ),
            ImageSource::Memory {
                amp,
                phase,
                amp_label,
                phase_label,
            } => (
                amp.clone(),
                phase.clone(),
                amp_label.clone(),
                phase_label.clone(),
            ),
        };
        let amp = amp
            .resample_nearest(grid.width(), grid.height())
            .context("resampling amplitude image")?;
        let phase = phase
            .resample_nearest(grid.width(), grid.height())
            .context("resampling phase image")?;
        Ok(SourcedImages {
            amp,
            phase,
            amp_label,
            phase_label,
        })
    }
}

fn load_named(path: &Path, which: &str) -> Result<GrayImage> {
    if !path.exists() {
        bail!("{which} image not found: {}", path.display());
    }
    GrayImage::load(path).with_context(|| format!("loading {which} image {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_the_preset_conditions() {
        let cfg = RunConfig::default();
        assert_eq!(cfg.width, 1024);
        assert_eq!(cfg.height, 1024);
        assert_eq!(cfg.pitch, 8e-6);
        assert_eq!(cfg.wavelength, 532e-9);
        assert_eq!(cfg.distance, 0.2);
        assert_eq!(cfg.aperture_samples().unwrap(), 128);
        assert!(matches!(
            cfg.aperture().unwrap(),
            ApertureSpec::Circle { diameter: 128 }
        ));
        assert!((cfg.beam_waist() - 1.024e-3).abs() < 1e-12);
    }

    #[test]
    fn aperture_fraction_is_validated() {
        let mut cfg = RunConfig::default();
        cfg.aperture_fraction = 0.0;
        assert!(cfg.aperture_samples().is_err());
        cfg.aperture_fraction = 1.5;
        assert!(cfg.aperture_samples().is_err());
        cfg.aperture_fraction = 1.0;
        assert_eq!(cfg.aperture_samples().unwrap(), 1024);
    }

    #[test]
    fn missing_file_error_names_the_path() {
        let src = ImageSource::Files {
            amp: PathBuf::from("/nonexistent/mandrill.png"),
            phase: PathBuf::from("/nonexistent/pepper.png"),
        };
        let err = src
            .load(&RunConfig::default().grid().unwrap())
            .unwrap_err();
        assert!(format!("{err:#}").contains("/nonexistent/mandrill.png"));
    }

    #[test]
    fn synthetic_source_resamples_to_grid() {
        let cfg = RunConfig::default().with_size(256);
        let images = ImageSource::Synthetic.load(&cfg.grid().unwrap()).unwrap();
        assert_eq!(images.amp.width(), 256);
        assert_eq!(images.phase.height(), 256);
    }
}
