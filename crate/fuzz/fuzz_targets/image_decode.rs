#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // Sniffs PNG vs binary PGM and decodes to 8-bit grayscale.
    if let Ok(img) = holo_core::GrayImage::decode(data) {
        assert_eq!(img.samples().len(), img.width() * img.height());
        let _ = img.resample_nearest(7, 5);
    }
});
