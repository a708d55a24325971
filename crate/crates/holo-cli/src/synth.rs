//! Built-in synthetic test pattern.
//!
//! A radial-chirp amplitude and a linear-ramp phase stand in for the
//! classic photographic test images when none are supplied, so every
//! pipeline and property check runs without downloads. Both are generated
//! at a fixed base size and resampled exactly like file inputs.

use holo_core::GrayImage;

/// Native size of the synthetic pair; other grid sizes are reached by
/// nearest-neighbor resampling, mirroring how file images are treated.
pub const BASE_SIZE: usize = 1024;

/// Radial chirp: rings that sweep from low to high spatial frequency
/// toward the rim, exercising the whole passband of the 4f aperture.
pub fn synthetic_amplitude(size: usize) -> GrayImage {
    let cycles = 8.0;
    let r0 = size as f64 / 2.0;
    GrayImage::from_fn(size, size, |x, y| {
        let dx = x as f64 - r0;
        let dy = y as f64 - r0;
        let rho2 = (dx * dx + dy * dy) / (r0 * r0);
        let v = 0.5 * (1.0 + (std::f64::consts::TAU * cycles * rho2).cos());
        (v * 255.0).round() as u8
    })
}

/// Linear horizontal ramp covering the full 8-bit range.
pub fn synthetic_phase(size: usize) -> GrayImage {
    GrayImage::from_fn(size, size, |x, _| {
        ((x as f64 / (size - 1) as f64) * 255.0).round() as u8
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn amplitude_spans_the_dynamic_range() {
        let img = synthetic_amplitude(128);
        let max = img.samples().iter().max().unwrap();
        let min = img.samples().iter().min().unwrap();
        assert_eq!(*max, 255);
        assert_eq!(*min, 0);
        // Center of the chirp is bright.
        assert_eq!(img.get(64, 64), 255);
    }

    #[test]
    fn phase_ramp_is_monotone() {
        let img = synthetic_phase(64);
        assert_eq!(img.get(0, 0), 0);
        assert_eq!(img.get(63, 0), 255);
        for x in 1..64 {
            assert!(img.get(x, 5) >= img.get(x - 1, 5));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(synthetic_amplitude(96), synthetic_amplitude(96));
        assert_eq!(synthetic_phase(96), synthetic_phase(96));
    }
}
