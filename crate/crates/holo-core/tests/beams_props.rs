//! Hermite–Gaussian mode structure: orthogonality (quadrature oracle),
//! nodal-line counts, and separability.

use holo_core::{hermite_gaussian, BeamSpec, Field, GridSpec};

fn grid(n: usize, pitch: f64) -> GridSpec {
    GridSpec::new(n, n, pitch, 532e-9).unwrap()
}

/// Normalized discrete inner product |<a, b>| / (|a|·|b|) — the quadrature
/// approximation of the continuous overlap integral.
fn overlap(a: &Field, b: &Field) -> f64 {
    let dot: num_complex::Complex64 = a
        .data()
        .iter()
        .zip(b.data())
        .map(|(x, y)| x * y.conj())
        .sum();
    dot.norm() / (a.energy().sqrt() * b.energy().sqrt())
}

#[test]
fn distinct_modes_are_orthogonal_under_quadrature() {
    let g = grid(256, 10e-6);
    let w = 30.0 * g.pitch();
    let tem00 = hermite_gaussian(g, &BeamSpec::centered(0, 0, w)).unwrap();
    let tem20 = hermite_gaussian(g, &BeamSpec::centered(2, 0, w)).unwrap();
    let tem11 = hermite_gaussian(g, &BeamSpec::centered(1, 1, w)).unwrap();
    assert!(overlap(&tem00, &tem20) < 1e-6);
    assert!(overlap(&tem00, &tem11) < 1e-6);
    assert!(overlap(&tem20, &tem11) < 1e-6);
    // Sanity: self-overlap is 1.
    assert!((overlap(&tem00, &tem00) - 1.0).abs() < 1e-12);
}

fn sign_changes(values: impl Iterator<Item = f64>) -> usize {
    let mut count = 0;
    let mut last = 0.0f64;
    for v in values {
        if v != 0.0 {
            if last != 0.0 && v.signum() != last.signum() {
                count += 1;
            }
            last = v;
        }
    }
    count
}

#[test]
fn mode_97_has_nine_and_seven_nodal_crossings() {
    let g = grid(512, 8e-6);
    let w = g.width() as f64 * g.pitch() / 8.0;
    let beam = hermite_gaussian(g, &BeamSpec::centered(9, 7, w)).unwrap();
    // A horizontal cut through the center row (off the nodal rows—row
    // y=center is a node only for odd n... n=7 is odd, so step off-center).
    let row = g.height() / 2 + 3;
    let h_changes = sign_changes((0..g.width()).map(|x| beam.get(x, row).re));
    assert_eq!(h_changes, 9, "horizontal sign changes");
    let col = g.width() / 2 + 5;
    let v_changes = sign_changes((0..g.height()).map(|y| beam.get(col, y).re));
    assert_eq!(v_changes, 7, "vertical sign changes");
}

#[test]
fn low_order_modes_have_expected_crossings() {
    let g = grid(128, 10e-6);
    let w = 14.0 * g.pitch();
    for (m, n) in [(0u32, 0u32), (1, 0), (2, 3), (5, 2)] {
        let beam = hermite_gaussian(g, &BeamSpec::centered(m, n, w)).unwrap();
        let row = g.height() / 2 + 1;
        let col = g.width() / 2 + 1;
        assert_eq!(
            sign_changes((0..g.width()).map(|x| beam.get(x, row).re)),
            m as usize,
            "m={m}"
        );
        assert_eq!(
            sign_changes((0..g.height()).map(|y| beam.get(col, y).re)),
            n as usize,
            "n={n}"
        );
    }
}

#[test]
fn separability_for_mode_22() {
    // field(x,y)·field(0,0) == field(x,0)·field(0,y) for the separable
    // product; (2,2) has a nonzero center so the check is meaningful.
    let g = grid(128, 10e-6);
    let beam = hermite_gaussian(g, &BeamSpec::centered(2, 2, 16.0 * g.pitch())).unwrap();
    let (cx, cy) = (g.width() / 2, g.height() / 2);
    let center = beam.get(cx, cy).re;
    assert!(center.abs() > 0.0);
    let mut max_dev = 0.0f64;
    for y in (0..g.height()).step_by(7) {
        for x in (0..g.width()).step_by(5) {
            let lhs = beam.get(x, y).re * center;
            let rhs = beam.get(x, cy).re * beam.get(cx, y).re;
            max_dev = max_dev.max((lhs - rhs).abs());
        }
    }
    assert!(max_dev < 1e-12, "separability deviation {max_dev}");
}
