//! In-place 2D FFT on row-major complex buffers.
//!
//! Convention: forward transform uses the negative exponent and is
//! unnormalized; the inverse carries the full `1/(width·height)` factor.
//! This must stay fixed — golden outputs depend on it.

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Centered integer frequency index for FFT bin `i` of an `n`-point
/// transform: `0, 1, …, n/2−1, −n/2, …, −1`.
pub(crate) fn freq_index(i: usize, n: usize) -> i64 {
    if i < n.div_ceil(2) {
        i as i64
    } else {
        i as i64 - n as i64
    }
}

fn transpose(src: &[Complex64], width: usize, height: usize, dst: &mut [Complex64]) {
    debug_assert_eq!(src.len(), width * height);
    for y in 0..height {
        for x in 0..width {
            dst[x * height + y] = src[y * width + x];
        }
    }
}

fn pass(data: &mut [Complex64], len: usize, inverse: bool, planner: &mut FftPlanner<f64>) {
    let fft = if inverse {
        planner.plan_fft_inverse(len)
    } else {
        planner.plan_fft_forward(len)
    };
    fft.process(data);
}

fn fft2(data: &mut [Complex64], width: usize, height: usize, inverse: bool) {
    let mut planner = FftPlanner::new();
    pass(data, width, inverse, &mut planner);
    let mut tmp = vec![Complex64::new(0.0, 0.0); data.len()];
    transpose(data, width, height, &mut tmp);
    pass(&mut tmp, height, inverse, &mut planner);
    transpose(&tmp, height, width, data);
}

pub(crate) fn fft2_forward(data: &mut [Complex64], width: usize, height: usize) {
    fft2(data, width, height, false);
}

pub(crate) fn fft2_inverse(data: &mut [Complex64], width: usize, height: usize) {
    fft2(data, width, height, true);
    let scale = 1.0 / (width * height) as f64;
    for z in data.iter_mut() {
        *z *= scale;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn freq_index_layout() {
        assert_eq!(
            (0..8).map(|i| freq_index(i, 8)).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, -4, -3, -2, -1]
        );
    }

    #[test]
    fn forward_inverse_round_trip() {
        let (w, h) = (8, 4);
        let orig: Vec<Complex64> = (0..w * h)
            .map(|i| Complex64::new((i % 7) as f64, (i % 5) as f64 - 2.0))
            .collect();
        let mut buf = orig.clone();
        fft2_forward(&mut buf, w, h);
        fft2_inverse(&mut buf, w, h);
        for (a, b) in buf.iter().zip(&orig) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn forward_dc_bin_is_the_plain_sum() {
        let (w, h) = (4, 4);
        let mut buf = vec![Complex64::new(1.0, 0.0); w * h];
        fft2_forward(&mut buf, w, h);
        assert_eq!(buf[0], Complex64::new(16.0, 0.0));
        for z in &buf[1..] {
            assert_eq!(*z, Complex64::new(0.0, 0.0));
        }
    }
}
