//! Scalar wave optics for phase-only holography.
//!
//! The pipeline this crate implements: build a complex object field from
//! amplitude/phase images (or a Hermite–Gaussian beam), propagate it to the
//! hologram plane with the angular spectrum or Fresnel transfer function,
//! encode it for a phase-only device (binarized-amplitude encoding with a
//! canceling wave, double-phase, or naive phase-only), reconstruct through a
//! simulated 4f low-pass, and score the result with PSNR and the
//! light-efficiency ratio.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so fields and holograms can be shared freely across
//! threads. Computations are kept sequential internally for bit-stable
//! outputs.

pub mod beams;
pub mod binarize;
pub mod encode;
pub mod error;
mod fft;
pub mod field;
pub mod image;
pub mod metrics;
pub mod propagation;
pub mod reconstruct;

pub use num_complex::Complex64;

pub use beams::{hermite_gaussian, BeamSpec};
pub use binarize::{binarize, mask_density, BinaryMask, DitherKernel, DitherKernelKind};
pub use encode::{
    canceling_phase, encode_dph, encode_naive, encode_proposed, CancelSpec, PhaseHologram,
};
pub use error::{HoloError, Result};
pub use field::{unit_phasor, wrap_phase, Field, GridSpec};
pub use image::{field_from_images, field_to_images, parse_pgm, AmpNormalization, GrayImage};
pub use metrics::{light_efficiency, max_normalize, psnr, ReportConfig, ScenarioReport};
pub use propagation::{
    propagate, spectrum_filter, ApertureSpec, Padding, PropagationMethod, PropagationSpec,
};
pub use reconstruct::{reconstruct, reconstruct_field};
