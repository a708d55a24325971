//! Error-diffusion checks against an independently written oracle.
//!
//! The oracle below re-implements raster error diffusion with a padded
//! working buffer and per-kernel hardcoded pushes — structurally unlike the
//! crate's offset-table scan — so agreement is meaningful.

use holo_core::{binarize, mask_density, DitherKernel, DitherKernelKind};
use proptest::prelude::*;

/// Reference raster error diffusion: padded 2-row reach buffer, threshold
/// 0.5, boundary weight dropped (the pad rows/cols absorb it).
fn oracle_dither(plane: &[f64], width: usize, height: usize, kind: DitherKernelKind) -> Vec<bool> {
    const PAD: usize = 2;
    let bw = width + 2 * PAD;
    let mut buf = vec![0.0f64; bw * (height + PAD)];
    for y in 0..height {
        for x in 0..width {
            buf[y * bw + x + PAD] = plane[y * width + x];
        }
    }
    let mut bits = vec![false; width * height];
    for y in 0..height {
        for x in 0..width {
            let i = y * bw + x + PAD;
            let v = buf[i];
            let on = v >= 0.5;
            bits[y * width + x] = on;
            let e = v - if on { 1.0 } else { 0.0 };
            match kind {
                DitherKernelKind::FloydSteinberg => {
                    buf[i + 1] += e * 7.0 / 16.0;
                    buf[i + bw - 1] += e * 3.0 / 16.0;
                    buf[i + bw] += e * 5.0 / 16.0;
                    buf[i + bw + 1] += e * 1.0 / 16.0;
                }
                DitherKernelKind::JarvisJudiceNinke => {
                    buf[i + 1] += e * 7.0 / 48.0;
                    buf[i + 2] += e * 5.0 / 48.0;
                    buf[i + bw - 2] += e * 3.0 / 48.0;
                    buf[i + bw - 1] += e * 5.0 / 48.0;
                    buf[i + bw] += e * 7.0 / 48.0;
                    buf[i + bw + 1] += e * 5.0 / 48.0;
                    buf[i + bw + 2] += e * 3.0 / 48.0;
                    buf[i + 2 * bw - 2] += e * 1.0 / 48.0;
                    buf[i + 2 * bw - 1] += e * 3.0 / 48.0;
                    buf[i + 2 * bw] += e * 5.0 / 48.0;
                    buf[i + 2 * bw + 1] += e * 3.0 / 48.0;
                    buf[i + 2 * bw + 2] += e * 1.0 / 48.0;
                }
                DitherKernelKind::Stucki => {
                    buf[i + 1] += e * 8.0 / 42.0;
                    buf[i + 2] += e * 4.0 / 42.0;
                    buf[i + bw - 2] += e * 2.0 / 42.0;
                    buf[i + bw - 1] += e * 4.0 / 42.0;
                    buf[i + bw] += e * 8.0 / 42.0;
                    buf[i + bw + 1] += e * 4.0 / 42.0;
                    buf[i + bw + 2] += e * 2.0 / 42.0;
                    buf[i + 2 * bw - 2] += e * 1.0 / 42.0;
                    buf[i + 2 * bw - 1] += e * 2.0 / 42.0;
                    buf[i + 2 * bw] += e * 4.0 / 42.0;
                    buf[i + 2 * bw + 1] += e * 2.0 / 42.0;
                    buf[i + 2 * bw + 2] += e * 1.0 / 42.0;
                }
                DitherKernelKind::Burkes => {
                    buf[i + 1] += e * 8.0 / 32.0;
                    buf[i + 2] += e * 4.0 / 32.0;
                    buf[i + bw - 2] += e * 2.0 / 32.0;
                    buf[i + bw - 1] += e * 4.0 / 32.0;
                    buf[i + bw] += e * 8.0 / 32.0;
                    buf[i + bw + 1] += e * 4.0 / 32.0;
                    buf[i + bw + 2] += e * 2.0 / 32.0;
                }
            }
        }
    }
    bits
}

/// Oracle dithering drops boundary weight by padding; the crate drops it by
/// bounds checks. The results only agree because neither renormalizes —
/// the padded cells never feed back into real pixels (strictly-ahead
/// offsets), so dropping and absorbing are the same thing. One exception:
/// the oracle's left pad can catch weight at x = 0..1 and later columns
/// never read it, same as dropping.
fn check_against_oracle(plane: &[f64], width: usize, height: usize, kind: DitherKernelKind) {
    let kernel = DitherKernel::new(kind);
    let mask = binarize(plane, width, height, &kernel).unwrap();
    let want = oracle_dither(plane, width, height, kind);
    assert_eq!(mask.bits(), &want[..], "kernel {:?} disagrees with oracle", kind);
}

fn wavy_plane(width: usize, height: usize, k: f64) -> Vec<f64> {
    let mut plane = Vec::with_capacity(width * height);
    for y in 0..height {
        for x in 0..width {
            let v = 0.5
                + 0.35 * (k * x as f64).sin() * (0.7 * k * y as f64).cos()
                + 0.15 * ((x * y) as f64 * 0.01).sin();
            plane.push(v.clamp(0.0, 1.0));
        }
    }
    plane
}

#[test]
fn all_kernels_match_the_oracle_on_structured_planes() {
    for kind in DitherKernelKind::ALL {
        check_against_oracle(&wavy_plane(33, 17, 0.37), 33, 17, kind);
        check_against_oracle(&wavy_plane(16, 16, 0.81), 16, 16, kind);
        check_against_oracle(&vec![0.5; 256], 16, 16, kind);
    }
}

#[test]
fn constant_half_plane_has_frozen_on_count() {
    // Oracle-computed on-pixel count for the constant 0.5 plane on 16x16
    // under Floyd-Steinberg: exactly 128 (mean preserved exactly here).
    let plane = vec![0.5; 256];
    let oracle = oracle_dither(&plane, 16, 16, DitherKernelKind::FloydSteinberg);
    let oracle_count = oracle.iter().filter(|&&b| b).count();
    assert!(
        (oracle_count as i64 - 128).abs() <= 1,
        "oracle count {oracle_count} outside 128 +/- 1"
    );
    assert_eq!(oracle_count, 128);

    let kernel = DitherKernel::new(DitherKernelKind::FloydSteinberg);
    let mask = binarize(&plane, 16, 16, &kernel).unwrap();
    assert_eq!(mask.count_on(), oracle_count);
}

#[test]
fn dithering_is_deterministic() {
    let plane = wavy_plane(64, 48, 0.53);
    let kernel = DitherKernel::new(DitherKernelKind::JarvisJudiceNinke);
    let a = binarize(&plane, 64, 48, &kernel).unwrap();
    let b = binarize(&plane, 64, 48, &kernel).unwrap();
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Error diffusion conserves the plane mean as dot density up to
    /// boundary losses: |density - mean| <= 2/min(W,H).
    #[test]
    fn density_preserves_the_mean(
        seed in any::<u64>(),
        width in 8usize..48,
        height in 8usize..48,
        kind in prop::sample::select(&DitherKernelKind::ALL[..]),
    ) {
        let mut state = seed | 1;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let plane: Vec<f64> = (0..width * height).map(|_| next()).collect();
        let mean = plane.iter().sum::<f64>() / plane.len() as f64;
        let kernel = DitherKernel::new(kind);
        let mask = binarize(&plane, width, height, &kernel).unwrap();
        let bound = 2.0 / width.min(height) as f64;
        prop_assert!(
            (mask_density(&mask) - mean).abs() <= bound,
            "density {} vs mean {} exceeds {}",
            mask_density(&mask), mean, bound
        );
    }

    /// Binarizing an already binary plane returns it bit for bit.
    #[test]
    fn binary_planes_are_fixed_points(
        bits in prop::collection::vec(any::<bool>(), 64..512),
        kind in prop::sample::select(&DitherKernelKind::ALL[..]),
    ) {
        let width = 16;
        let height = bits.len() / width;
        let plane: Vec<f64> = bits[..width * height]
            .iter()
            .map(|&b| if b { 1.0 } else { 0.0 })
            .collect();
        let kernel = DitherKernel::new(kind);
        let mask = binarize(&plane, width, height, &kernel).unwrap();
        for (got, &want) in mask.bits().iter().zip(&bits[..width * height]) {
            prop_assert_eq!(*got, want);
        }
    }

    /// The crate scan agrees with the padded-buffer oracle on random
    /// planes for every kernel.
    #[test]
    fn random_planes_match_the_oracle(
        seed in any::<u64>(),
        kind in prop::sample::select(&DitherKernelKind::ALL[..]),
    ) {
        let (width, height) = (23, 19);
        let mut state = seed | 1;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let plane: Vec<f64> = (0..width * height).map(|_| next()).collect();
        let kernel = DitherKernel::new(kind);
        let mask = binarize(&plane, width, height, &kernel).unwrap();
        let want = oracle_dither(&plane, width, height, kind);
        prop_assert_eq!(mask.bits(), &want[..]);
    }
}
