#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(img) = holo_core::parse_pgm(data) {
        // Accepted images must be internally consistent.
        assert!(img.width() > 0 && img.height() > 0);
        assert_eq!(img.samples().len(), img.width() * img.height());
    }
});
