//! Simulated reconstruction from a phase-only hologram.
//!
//! Models the 4f bench: the displayed field passes a low-pass aperture in
//! the Fourier plane, then travels back to the object plane. Filtering and
//! propagation are both Fourier multipliers, so their order commutes; the
//! filter-first order here mirrors the physical relay.

use crate::encode::PhaseHologram;
use crate::error::Result;
use crate::field::Field;
use crate::propagation::{propagate, spectrum_filter, ApertureSpec, PropagationSpec};

/// Reconstruct the object-plane field from a hologram.
///
/// `prop.distance` is applied as given — callers negate the encoding
/// distance to travel back to the object plane.
pub fn reconstruct(
    hologram: &PhaseHologram,
    prop: &PropagationSpec,
    aperture: &ApertureSpec,
) -> Result<Field> {
    reconstruct_field(&hologram.to_field(), prop, aperture)
}

/// Same pipeline for an arbitrary complex hologram-plane field; used for the
/// full-complex reference reconstruction.
pub fn reconstruct_field(
    field: &Field,
    prop: &PropagationSpec,
    aperture: &ApertureSpec,
) -> Result<Field> {
    let filtered = spectrum_filter(field, aperture)?;
    propagate(&filtered, prop)
}
