use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use holo_core::metrics::format_db;
use holo_core::{
    encode_dph, encode_naive, encode_proposed, propagate, reconstruct, DitherKernelKind, Padding,
    PhaseHologram, PropagationMethod, ScenarioReport,
};
use holo_cli::config::{ApertureShape, CancelKind, ImageSource, RunConfig};
use holo_cli::scenario::{self, Scenario};
use holo_cli::sweep::{run_sweep, SweepAxis};

/// Phase-only hologram toolkit: encode complex fields for phase-only
/// devices, simulate 4f reconstruction, and score the results.
#[derive(Parser)]
#[command(name = "holo", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode an object image pair into a phase-only hologram.
    Encode(EncodeArgs),
    /// Reconstruct the object plane from a hologram image.
    Reconstruct(ReconstructArgs),
    /// Run a bundled experiment preset (fig1, fig3, fig4, fig7).
    Scenario(ScenarioArgs),
    /// Sweep hologram size or propagation distance and tabulate the
    /// proposed/double-phase comparison.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelArg {
    Fs,
    Jjn,
    Stucki,
    Burkes,
}

impl From<KernelArg> for DitherKernelKind {
    fn from(k: KernelArg) -> Self {
        match k {
            KernelArg::Fs => DitherKernelKind::FloydSteinberg,
            KernelArg::Jjn => DitherKernelKind::JarvisJudiceNinke,
            KernelArg::Stucki => DitherKernelKind::Stucki,
            KernelArg::Burkes => DitherKernelKind::Burkes,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CancelArg {
    Checkerboard,
    Random,
    Alternate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ApertureShapeArg {
    Circle,
    Square,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropagationArg {
    AngularSpectrum,
    Fresnel,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Proposed,
    Dph,
    Naive,
}

#[derive(Args)]
struct CommonArgs {
    /// Grid width in pixels (even).
    #[arg(long, default_value_t = 1024)]
    width: usize,
    /// Grid height in pixels (even).
    #[arg(long, default_value_t = 1024)]
    height: usize,
    /// Pixel pitch in meters.
    #[arg(long, default_value_t = 8e-6)]
    pitch: f64,
    /// Wavelength in meters.
    #[arg(long, default_value_t = 532e-9)]
    wavelength: f64,
    /// Object-to-hologram propagation distance in meters.
    #[arg(long)]
    distance: Option<f64>,
    /// Diffraction transfer function.
    #[arg(long, value_enum, default_value_t = PropagationArg::AngularSpectrum)]
    propagation: PropagationArg,
    /// Error-diffusion kernel for amplitude binarization.
    #[arg(long, value_enum, default_value_t = KernelArg::Fs)]
    kernel: KernelArg,
    /// Canceling-wave pattern for off-pixels.
    #[arg(long, value_enum, default_value_t = CancelArg::Alternate)]
    cancel: CancelArg,
    /// Seed for the random canceling wave.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Fourier aperture size as a fraction of the grid (1/8 models the
    /// reference 4f bench).
    #[arg(long, default_value_t = 0.125)]
    aperture: f64,
    /// Aperture shape in the Fourier plane.
    #[arg(long, value_enum, default_value_t = ApertureShapeArg::Circle)]
    aperture_shape: ApertureShapeArg,
    /// Zero-pad to a doubled grid during propagation.
    #[arg(long)]
    pad: bool,
    /// Band-limit the propagation transfer function.
    #[arg(long)]
    band_limit: bool,
    /// Beam waist in meters for the TEM beam preset (default: grid width /
    /// 8).
    #[arg(long)]
    waist: Option<f64>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

impl CommonArgs {
    fn config(&self) -> RunConfig {
        RunConfig {
            width: self.width,
            height: self.height,
            pitch: self.pitch,
            wavelength: self.wavelength,
            distance: self.distance.unwrap_or(0.2),
            propagation: match self.propagation {
                PropagationArg::AngularSpectrum => PropagationMethod::AngularSpectrum,
                PropagationArg::Fresnel => PropagationMethod::Fresnel,
            },
            band_limit: self.band_limit,
            padding: if self.pad {
                Padding::Double
            } else {
                Padding::None
            },
            kernel: self.kernel.into(),
            cancel: match self.cancel {
                CancelArg::Checkerboard => CancelKind::Checkerboard,
                CancelArg::Random => CancelKind::Random,
                CancelArg::Alternate => CancelKind::Alternate,
            },
            seed: self.seed,
            aperture_fraction: self.aperture,
            aperture_shape: match self.aperture_shape {
                ApertureShapeArg::Circle => ApertureShape::Circle,
                ApertureShapeArg::Square => ApertureShape::Square,
            },
            waist: self.waist,
        }
    }
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Amplitude image (PNG or binary PGM).
    #[arg(long, required_unless_present = "synthetic")]
    amp: Option<PathBuf>,
    /// Phase image (PNG or binary PGM).
    #[arg(long, required_unless_present = "synthetic")]
    phase: Option<PathBuf>,
    /// Use the built-in synthetic input pair.
    #[arg(long)]
    synthetic: bool,
    /// Encoding method.
    #[arg(long, value_enum, default_value_t = MethodArg::Proposed)]
    method: MethodArg,
    /// Bit depth of the exported hologram PNG.
    #[arg(long, value_parser = ["8", "16"], default_value = "8")]
    hologram_bits: String,
}

#[derive(Args)]
struct ReconstructArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Hologram phase image (8- or 16-bit grayscale PNG, or binary PGM).
    #[arg(long)]
    hologram: PathBuf,
    /// Reference amplitude image for PSNR scoring.
    #[arg(long)]
    ref_amp: Option<PathBuf>,
    /// Reference phase image for PSNR scoring.
    #[arg(long)]
    ref_phase: Option<PathBuf>,
}

#[derive(Args)]
struct ScenarioArgs {
    /// Preset name: fig1, fig3, fig4 or fig7.
    name: String,
    #[command(flatten)]
    common: CommonArgs,
    /// Directory holding the standard test images (mandrill.png,
    /// pepper.png, cameraman.png, house.png).
    #[arg(long, default_value = "assets")]
    assets: PathBuf,
    /// Use the built-in synthetic input pair instead of asset images.
    #[arg(long)]
    synthetic: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Sweep axis.
    #[arg(long, value_parser = ["size", "distance"])]
    axis: String,
    /// Comma-separated axis values; defaults to 512,1024,2048 for size and
    /// 0.05,0.1,0.2,0.4 for distance.
    #[arg(long, value_delimiter = ',')]
    values: Vec<f64>,
    /// Amplitude image for the swept pipeline.
    #[arg(long)]
    amp: Option<PathBuf>,
    /// Phase image for the swept pipeline.
    #[arg(long)]
    phase: Option<PathBuf>,
    /// Use the built-in synthetic input pair.
    #[arg(long)]
    synthetic: bool,
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Encode(args) => cmd_encode(args),
        Command::Reconstruct(args) => cmd_reconstruct(args),
        Command::Scenario(args) => cmd_scenario(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn image_source(
    amp: &Option<PathBuf>,
    phase: &Option<PathBuf>,
    synthetic: bool,
) -> Result<ImageSource> {
    if synthetic {
        return Ok(ImageSource::Synthetic);
    }
    match (amp, phase) {
        (Some(a), Some(p)) => Ok(ImageSource::Files {
            amp: a.clone(),
            phase: p.clone(),
        }),
        _ => bail!("provide both --amp and --phase, or pass --synthetic"),
    }
}

fn print_report(r: &ScenarioReport) {
    let eta = r
        .eta
        .map(|e| format!(", eta {}", format_db(e)))
        .unwrap_or_default();
    println!(
        "{} {}: amp {} dB, phase {} dB{}",
        r.scenario,
        r.method,
        format_db(r.amp_psnr_db),
        format_db(r.phase_psnr_db),
        eta
    );
}

fn cmd_encode(args: EncodeArgs) -> Result<()> {
    let cfg = args.common.config();
    let source = image_source(&args.amp, &args.phase, args.synthetic)?;
    let target = scenario::image_target(&cfg, &source)?;
    let holo_plane = propagate(&target.object, &cfg.forward_spec())?;

    let (hologram, mask, method_name) = match args.method {
        MethodArg::Proposed => {
            let (h, m) = encode_proposed(&holo_plane, &cfg.kernel(), &cfg.cancel_spec())?;
            (h, Some(m), "proposed")
        }
        MethodArg::Dph => (encode_dph(&holo_plane)?, None, "dph"),
        MethodArg::Naive => (encode_naive(&holo_plane)?, None, "naive"),
    };

    std::fs::create_dir_all(&args.common.out)?;
    let holo_path = args
        .common
        .out
        .join(format!("encode_{method_name}_hologram.png"));
    if args.hologram_bits == "16" {
        hologram.save_png16(&holo_path)?;
    } else {
        hologram.save_png(&holo_path)?;
    }
    if let Some(mask) = &mask {
        mask.to_image()
            .save_png(args.common.out.join(format!("encode_{method_name}_mask.png")))?;
    }

    let report = serde_json::json!({
        "verb": "encode",
        "method": method_name,
        "hologram_bits": args.hologram_bits,
        "mask_density": mask.as_ref().map(|m| m.density()),
        "config": {
            "width": cfg.width,
            "height": cfg.height,
            "pitch_m": cfg.pitch,
            "wavelength_m": cfg.wavelength,
            "distance_m": cfg.distance,
            "propagation": cfg.propagation_name(),
            "band_limit": cfg.band_limit,
            "padding": cfg.padding_name(),
            "kernel": cfg.kernel().name(),
            "cancel": cfg.cancel_name(),
            "seed": cfg.seed,
            "amp_source": target.amp_label,
            "phase_source": target.phase_label,
        },
    });
    let mut json = serde_json::to_string_pretty(&report)?;
    json.push('\n');
    std::fs::write(args.common.out.join("report.json"), json)?;
    println!(
        "encoded {method_name} hologram ({}x{}) -> {}",
        cfg.width,
        cfg.height,
        args.common.out.display()
    );
    Ok(())
}

fn cmd_reconstruct(args: ReconstructArgs) -> Result<()> {
    let cfg = args.common.config();
    let hologram = PhaseHologram::load(&args.hologram, cfg.grid()?)
        .with_context(|| format!("loading hologram {}", args.hologram.display()))?;
    let recon = reconstruct(&hologram, &cfg.backward_spec(), &cfg.aperture()?)?;

    std::fs::create_dir_all(&args.common.out)?;
    let (amp_img, phase_img) =
        holo_core::field_to_images(&recon, holo_core::AmpNormalization::Max)?;
    amp_img.save_png(args.common.out.join("reconstruct_amp.png"))?;
    phase_img.save_png(args.common.out.join("reconstruct_phase.png"))?;

    let mut amp_psnr = None;
    let mut phase_psnr = None;
    if let (Some(ra), Some(rp)) = (&args.ref_amp, &args.ref_phase) {
        let source = ImageSource::Files {
            amp: ra.clone(),
            phase: rp.clone(),
        };
        let target = scenario::image_target(&cfg, &source)?;
        amp_psnr = Some(holo_core::psnr(
            &holo_core::max_normalize(&recon.amplitude())?,
            &target.amp_ref,
            1.0,
        )?);
        let phase_plane: Vec<f64> = recon
            .phase()
            .iter()
            .map(|&t| t / std::f64::consts::TAU)
            .collect();
        phase_psnr = Some(holo_core::psnr(&phase_plane, &target.phase_ref, 1.0)?);
    }

    let report = serde_json::json!({
        "verb": "reconstruct",
        "hologram": args.hologram.display().to_string(),
        "amp_psnr_db": amp_psnr.map(format_db),
        "phase_psnr_db": phase_psnr.map(format_db),
        "config": {
            "width": cfg.width,
            "height": cfg.height,
            "pitch_m": cfg.pitch,
            "wavelength_m": cfg.wavelength,
            "distance_m": cfg.distance,
            "propagation": cfg.propagation_name(),
            "band_limit": cfg.band_limit,
            "padding": cfg.padding_name(),
            "aperture_shape": cfg.aperture_shape.to_string(),
            "aperture_samples": cfg.aperture_samples()?,
        },
    });
    let mut json = serde_json::to_string_pretty(&report)?;
    json.push('\n');
    std::fs::write(args.common.out.join("report.json"), json)?;

    match (amp_psnr, phase_psnr) {
        (Some(a), Some(p)) => println!(
            "reconstructed: amp {} dB, phase {} dB -> {}",
            format_db(a),
            format_db(p),
            args.common.out.display()
        ),
        _ => println!("reconstructed -> {}", args.common.out.display()),
    }
    Ok(())
}

fn cmd_scenario(args: ScenarioArgs) -> Result<()> {
    let scenario = Scenario::parse(&args.name)
        .with_context(|| format!("unknown scenario {:?} (expected one of fig1, fig3, fig4, fig7)", args.name))?;
    let mut cfg = args.common.config();
    scenario.apply_defaults(&mut cfg, args.common.distance.is_some());

    let source = if args.synthetic {
        ImageSource::Synthetic
    } else if let Some((amp_name, phase_name)) = scenario.asset_names() {
        ImageSource::Files {
            amp: args.assets.join(amp_name),
            phase: args.assets.join(phase_name),
        }
    } else {
        // The beam preset generates its own target.
        ImageSource::Synthetic
    };

    let reports = scenario::run_scenario(scenario, &cfg, &source, Some(&args.common.out))?;
    for r in &reports {
        print_report(r);
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let axis = SweepAxis::parse(&args.axis).context("invalid sweep axis")?;
    let values = if args.values.is_empty() {
        axis.default_values()
    } else {
        args.values.clone()
    };
    let cfg = args.common.config();
    let source = if args.amp.is_none() && args.phase.is_none() {
        ImageSource::Synthetic
    } else {
        image_source(&args.amp, &args.phase, args.synthetic)?
    };
    let rows = run_sweep(axis, &values, &cfg, &source, Some(&args.common.out))?;
    for row in &rows {
        println!(
            "{}={} {}: amp {} dB, phase {} dB, eta {}",
            row.axis,
            row.value,
            row.report.method,
            format_db(row.report.amp_psnr_db),
            format_db(row.report.phase_psnr_db),
            format_db(row.eta)
        );
    }
    Ok(())
}
