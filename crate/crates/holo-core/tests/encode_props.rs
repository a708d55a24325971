//! Encoder identities: the double-phase decomposition, the phase-plane
//! composition rule, canceling-wave cancellation, and cross-method
//! consistency.

use std::f64::consts::{PI, TAU};

use holo_core::encode::dph_pair;
use holo_core::{
    canceling_phase, encode_dph, encode_naive, encode_proposed, unit_phasor, wrap_phase,
    BinaryMask, CancelSpec, DitherKernel, DitherKernelKind, Field, GridSpec,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn grid(n: usize) -> GridSpec {
    GridSpec::new(n, n, 8e-6, 532e-9).unwrap()
}

fn random_field(grid: GridSpec, seed: u64) -> Field {
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15) | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    Field::from_fn(grid, |_, _| Complex64::new(next(), next()))
}

#[test]
fn dph_identity_on_1000_random_pairs() {
    // (exp(i·θ1) + exp(i·θ2)) / 2 == a·exp(i·θ) to 1e-12.
    let mut state = 0xDEADBEEFu64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..1000 {
        let a = next();
        let theta = next() * TAU;
        let (t1, t2) = dph_pair(a, theta);
        let got = (unit_phasor(t1) + unit_phasor(t2)) / 2.0;
        let want = unit_phasor(theta) * a;
        assert!(
            (got - want).norm() <= 1e-12,
            "a={a}, theta={theta}: {got} vs {want}"
        );
    }
}

#[test]
fn dph_multiplex_parity_matches_the_pair() {
    let f = random_field(grid(16), 5);
    let holo = encode_dph(&f).unwrap();
    let max = f.max_amplitude();
    for y in 0..16 {
        for x in 0..16 {
            let z = f.get(x, y);
            let (t1, t2) = dph_pair(z.norm() / max, holo_core::field::wrap_arg(z));
            let want = if (x + y) % 2 == 0 { t1 } else { t2 };
            assert_eq!(holo.get(x, y), want);
        }
    }
}

#[test]
fn proposed_phase_is_theta_on_mask_plus_cancel_off_mask() {
    // The encoded plane equals θ·a_W + θ_c pixel by pixel (mod 2π).
    let f = random_field(grid(32), 9);
    let kernel = DitherKernel::new(DitherKernelKind::FloydSteinberg);
    let cancel = CancelSpec::Random { seed: 1234 };
    let (holo, mask) = encode_proposed(&f, &kernel, &cancel).unwrap();
    let theta = f.phase();
    let cancel_plane = canceling_phase(&mask, &cancel);
    for i in 0..theta.len() {
        let aw = if mask.bits()[i] { 1.0 } else { 0.0 };
        let want = wrap_phase(theta[i] * aw + cancel_plane[i]);
        assert_eq!(holo.phase()[i], want, "pixel {i}");
    }
}

#[test]
fn canceling_sums_are_exactly_zero_on_even_all_off_masks() {
    for (w, h) in [(16, 16), (32, 8), (6, 10)] {
        let mask = BinaryMask::new(w, h, vec![false; w * h]).unwrap();
        for spec in [CancelSpec::Alternate, CancelSpec::Checkerboard] {
            let plane = canceling_phase(&mask, &spec);
            let sum: Complex64 = plane.iter().map(|&t| unit_phasor(t)).sum();
            assert_eq!(
                sum,
                Complex64::new(0.0, 0.0),
                "{} on {w}x{h} does not cancel exactly",
                spec.name()
            );
        }
    }
}

#[test]
fn naive_equals_proposed_on_the_on_pixels() {
    let f = random_field(grid(32), 17);
    let kernel = DitherKernel::new(DitherKernelKind::Burkes);
    let (proposed, mask) = encode_proposed(&f, &kernel, &CancelSpec::Alternate).unwrap();
    let naive = encode_naive(&f).unwrap();
    let mut on_seen = 0;
    for (i, &on) in mask.bits().iter().enumerate() {
        if on {
            assert_eq!(proposed.phase()[i], naive.phase()[i]);
            on_seen += 1;
        }
    }
    assert!(on_seen > 0);
}

#[test]
fn random_cancel_uses_only_zero_and_pi_and_respects_the_seed() {
    let mask = BinaryMask::new(64, 64, vec![false; 4096]).unwrap();
    let a = canceling_phase(&mask, &CancelSpec::Random { seed: 7 });
    let b = canceling_phase(&mask, &CancelSpec::Random { seed: 7 });
    assert_eq!(a, b);
    assert!(a.iter().all(|&t| t == 0.0 || t == PI));
    // Fair coin: around half the off-pixels get π.
    let pis = a.iter().filter(|&&t| t == PI).count();
    assert!((1600..=2500).contains(&pis), "suspicious balance: {pis}");
}

#[test]
fn alternate_cancel_pairs_cancel_even_through_masked_gaps() {
    // Any even count of off-pixels sums to zero regardless of where the
    // on-pixels interrupt the raster.
    let mut bits = vec![false; 100];
    for i in [3usize, 17, 41, 58] {
        bits[i] = true;
    }
    let mask = BinaryMask::new(10, 10, bits).unwrap();
    let plane = canceling_phase(&mask, &CancelSpec::Alternate);
    let sum: Complex64 = plane
        .iter()
        .zip(mask.bits())
        .filter(|(_, &on)| !on)
        .map(|(&t, _)| unit_phasor(t))
        .sum();
    assert_eq!(sum, Complex64::new(0.0, 0.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Encoded holograms are unit modulus: exactly representational (the
    /// type stores only phases), and numerically within 4 eps of 1 after
    /// conversion to a complex field.
    #[test]
    fn holograms_are_unit_modulus(seed in any::<u64>()) {
        let f = random_field(grid(16), seed | 1);
        let kernel = DitherKernel::new(DitherKernelKind::FloydSteinberg);
        let (p, _) = encode_proposed(&f, &kernel, &CancelSpec::Alternate).unwrap();
        let d = encode_dph(&f).unwrap();
        for holo in [p, d] {
            for z in holo.to_field().data() {
                prop_assert!((z.norm_sqr() - 1.0).abs() <= 4.0 * f64::EPSILON);
            }
            for &t in holo.phase() {
                prop_assert!((0.0..TAU).contains(&t));
            }
        }
    }

    /// Phase-plane wrap stays canonical under arbitrary offsets.
    #[test]
    fn wrap_phase_lands_in_the_canonical_interval(theta in -1e6f64..1e6) {
        let t = wrap_phase(theta);
        prop_assert!((0.0..TAU).contains(&t));
        // Same angle modulo 2π.
        let d = (theta - t).rem_euclid(TAU);
        prop_assert!(d.min((TAU - d).abs()) < 1e-6);
    }
}
