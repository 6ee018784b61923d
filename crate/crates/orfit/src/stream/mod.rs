//! Data ingestion: IDX files, image rotation, stream construction.
//!
//! A stream is a finite ordered sequence of [`StreamSample`]s; learners
//! consume each sample exactly once, in order. Streams come from two
//! sources: the rotated-digit protocol over MNIST-format IDX files, and
//! synthetic Gaussian regression problems for controlled experiments.

mod fetch;
mod idx;
mod mnist;
mod rotate;
mod synthetic;

pub use fetch::{fetch_mnist, sha256_hex_of_file, verify_archives, MnistArchive, ARCHIVES};
pub use idx::{encode_idx, load_idx, IdxData};
pub use mnist::{build_rotated_mnist_stream, MnistPaths, TARGET_DIGIT};
pub use rotate::rotate_image;
pub use synthetic::{
    gaussian_linear_with_teacher, gaussian_mlp_with_teacher, synthetic_stream,
    teacher_labeled_samples, SyntheticKind,
};

use crate::linalg::DenseVector;

/// One element of a data stream: input, target, and the 0-based position
/// at which it is streamed.
#[derive(Debug, Clone, PartialEq)]
pub struct StreamSample {
    pub x: DenseVector,
    pub y: f64,
    pub index: usize,
}

impl StreamSample {
    pub fn new(x: DenseVector, y: f64, index: usize) -> Self {
        Self { x, y, index }
    }
}

/// Square grayscale image side length for the IDX image format used here.
pub const IMAGE_SIDE: usize = 28;

/// Raw 28x28 grayscale image, row-major, one byte per pixel.
#[derive(Clone, PartialEq)]
pub struct RawImage {
    pixels: [u8; IMAGE_SIDE * IMAGE_SIDE],
}

impl RawImage {
    pub fn new(pixels: [u8; IMAGE_SIDE * IMAGE_SIDE]) -> Self {
        Self { pixels }
    }

    pub fn from_slice(bytes: &[u8]) -> crate::Result<Self> {
        if bytes.len() != IMAGE_SIDE * IMAGE_SIDE {
            return Err(crate::Error::DimensionMismatch {
                context: "raw image pixel count",
                expected: IMAGE_SIDE * IMAGE_SIDE,
                got: bytes.len(),
            });
        }
        let mut pixels = [0u8; IMAGE_SIDE * IMAGE_SIDE];
        pixels.copy_from_slice(bytes);
        Ok(Self { pixels })
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        debug_assert!(row < IMAGE_SIDE && col < IMAGE_SIDE);
        self.pixels[row * IMAGE_SIDE + col]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.pixels
    }

    /// Flattens to a vector of pixel intensities scaled into `[0, 1]`.
    pub fn to_unit_vector(&self) -> DenseVector {
        DenseVector::from_fn(IMAGE_SIDE * IMAGE_SIDE, |i| {
            f64::from(self.pixels[i]) / 255.0
        })
    }
}

impl std::fmt::Debug for RawImage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lit: u32 = self.pixels.iter().map(|p| u32::from(*p > 0)).sum();
        write!(f, "RawImage({IMAGE_SIDE}x{IMAGE_SIDE}, {lit} lit pixels)")
    }
}
