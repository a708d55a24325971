#![no_main]
use libfuzzer_sys::fuzz_target;

use holo_core::{GridSpec, PhaseHologram};

fuzz_target!(|data: &[u8]| {
    // Phase planes load from 8- or 16-bit grayscale PNG or binary PGM and
    // must come out wrapped to [0, 2π) on the expected grid.
    let grid = GridSpec::new(8, 8, 8e-6, 532e-9).unwrap();
    if let Ok(holo) = PhaseHologram::from_bytes(data, grid) {
        assert_eq!(holo.phase().len(), 64);
        assert!(holo
            .phase()
            .iter()
            .all(|&p| (0.0..std::f64::consts::TAU).contains(&p)));
    }
});
