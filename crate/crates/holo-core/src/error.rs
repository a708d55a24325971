//! Error type shared by every module in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, HoloError>;

#[derive(Debug, Error)]
pub enum HoloError {
    #[error("grid must be even-sized and at least 2x2, got {width}x{height}")]
    InvalidGridSize { width: usize, height: usize },

    #[error("pixel pitch must be positive and finite, got {0}")]
    InvalidPitch(f64),

    #[error("wavelength must be positive and finite, got {0}")]
    InvalidWavelength(f64),

    #[error("data length {got} does not match grid ({want} samples)")]
    DataLength { got: usize, want: usize },

    #[error("{which} image is {got_w}x{got_h}, expected {want_w}x{want_h}")]
    DimensionMismatch {
        which: &'static str,
        got_w: usize,
        got_h: usize,
        want_w: usize,
        want_h: usize,
    },

    #[error("image dimensions must be nonzero, got {width}x{height}")]
    EmptyImage { width: usize, height: usize },

    #[error("image buffer holds {got} samples, expected {want}")]
    ImageDataLength { got: usize, want: usize },

    #[error("field is identically zero")]
    ZeroField,

    #[error("field contains a non-finite sample")]
    NonFiniteSample,

    #[error("amplitude sample {value} at index {index} is outside [0, 1]")]
    AmplitudeOutOfRange { index: usize, value: f64 },

    #[error("plane length mismatch: {0} vs {1}")]
    PlaneLengthMismatch(usize, usize),

    #[error("aperture of {size} samples exceeds the {grid}-sample grid")]
    ApertureTooLarge { size: usize, grid: usize },

    #[error("aperture must span at least one sample")]
    EmptyAperture,

    #[error("PSNR peak must be positive and finite, got {0}")]
    InvalidPeak(f64),

    #[error("amplitude normalization scale must be positive and finite, got {0}")]
    InvalidScale(f64),

    #[error("denominator field carries no energy")]
    ZeroDenominator,

    #[error("waist {waist} m is below the resolvable minimum of 4x pitch ({min} m)")]
    WaistTooSmall { waist: f64, min: f64 },

    #[error("dither kernel weights must sum to 1, got {0}")]
    KernelWeightSum(f64),

    #[error("dither kernel offset ({dx},{dy}) is not strictly ahead in raster order")]
    KernelOffsetBehind { dx: i32, dy: i32 },

    #[error("PGM parse error: {0}")]
    Pgm(String),

    #[error("unsupported image format (PNG and binary PGM are accepted)")]
    UnsupportedImageFormat,

    #[error("PNG decode error: {0}")]
    Png(#[from] image::ImageError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
