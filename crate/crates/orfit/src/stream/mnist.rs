//! Rotated-digit stream construction over MNIST-format IDX files.
//!
//! The protocol: keep only images of one digit, rotate each kept
//! training image by an angle drawn uniformly from `[0, pi]`, flatten to
//! 784 features in `[0, 1]`, and present training samples in ascending
//! angle order — a stream whose distribution shifts as it progresses.
//! The test split takes every image of that digit, each rotated by its
//! own independent uniform angle.

use std::path::{Path, PathBuf};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::stream::idx::{load_idx, IdxData};
use crate::stream::rotate::rotate_image;
use crate::stream::{RawImage, StreamSample};

/// The single digit class used for the rotation-regression task.
pub const TARGET_DIGIT: u8 = 2;

/// Locations of the four IDX files (gzip-compressed or raw).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnistPaths {
    pub train_images: PathBuf,
    pub train_labels: PathBuf,
    pub test_images: PathBuf,
    pub test_labels: PathBuf,
}

impl MnistPaths {
    /// Standard file names under `dir`, preferring the `.gz` variant of
    /// each file when present.
    pub fn in_dir(dir: &Path) -> Self {
        let pick = |stem: &str| -> PathBuf {
            let gz = dir.join(format!("{stem}.gz"));
            if gz.exists() {
                gz
            } else {
                dir.join(stem)
            }
        };
        Self {
            train_images: pick("train-images-idx3-ubyte"),
            train_labels: pick("train-labels-idx1-ubyte"),
            test_images: pick("t10k-images-idx3-ubyte"),
            test_labels: pick("t10k-labels-idx1-ubyte"),
        }
    }

    /// First of the four paths that does not exist, if any.
    pub fn first_missing(&self) -> Option<&Path> {
        [
            &self.train_images,
            &self.train_labels,
            &self.test_images,
            &self.test_labels,
        ]
        .into_iter()
        .find(|p| !p.exists())
        .map(PathBuf::as_path)
    }
}

fn load_split(images_path: &Path, labels_path: &Path) -> Result<(Vec<RawImage>, Vec<u8>)> {
    let images = match load_idx(images_path)? {
        IdxData::Images(v) => v,
        IdxData::Labels(_) => {
            return Err(Error::Format {
                path: images_path.to_path_buf(),
                message: "expected an image stack, found a label list".into(),
            })
        }
    };
    let labels = match load_idx(labels_path)? {
        IdxData::Labels(v) => v,
        IdxData::Images(_) => {
            return Err(Error::Format {
                path: labels_path.to_path_buf(),
                message: "expected a label list, found an image stack".into(),
            })
        }
    };
    if images.len() != labels.len() {
        return Err(Error::CorruptFile {
            path: labels_path.to_path_buf(),
            message: format!("{} labels for {} images", labels.len(), images.len()),
        });
    }
    Ok((images, labels))
}

fn digit_indices(labels: &[u8]) -> Vec<usize> {
    labels
        .iter()
        .enumerate()
        .filter_map(|(i, l)| (*l == TARGET_DIGIT).then_some(i))
        .collect()
}

/// Builds the train and test streams.
///
/// Training: `k` distinct digit-`TARGET_DIGIT` images drawn without
/// replacement (seeded), each rotated by an independent uniform angle in
/// `[0, pi]`, sorted by ascending angle. Test: every digit image in the
/// test split, rotated by its own independent uniform angle, in file
/// order. Targets are the angles in radians. The generator is consumed
/// in a fixed order — train picks, train angles, test angles — so equal
/// seeds give byte-equal streams.
pub fn build_rotated_mnist_stream(
    paths: &MnistPaths,
    k: usize,
    seed: u64,
) -> Result<(Vec<StreamSample>, Vec<StreamSample>)> {
    let (train_images, train_labels) = load_split(&paths.train_images, &paths.train_labels)?;
    let pool = digit_indices(&train_labels);
    if pool.len() < k {
        return Err(Error::InsufficientData {
            needed: k,
            available: pool.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks = rand::seq::index::sample(&mut rng, pool.len(), k).into_vec();
    let angles: Vec<f64> = (0..k)
        .map(|_| rng.gen_range(0.0..=std::f64::consts::PI))
        .collect();

    let mut train: Vec<(f64, &RawImage)> = picks
        .iter()
        .zip(&angles)
        .map(|(pick, angle)| (*angle, &train_images[pool[*pick]]))
        .collect();
    train.sort_by(|a, b| a.0.total_cmp(&b.0));
    let train: Vec<StreamSample> = train
        .into_iter()
        .enumerate()
        .map(|(index, (angle, image))| {
            StreamSample::new(rotate_image(image, angle).to_unit_vector(), angle, index)
        })
        .collect();

    let (test_images, test_labels) = load_split(&paths.test_images, &paths.test_labels)?;
    let test: Vec<StreamSample> = digit_indices(&test_labels)
        .into_iter()
        .enumerate()
        .map(|(index, image_idx)| {
            let angle = rng.gen_range(0.0..=std::f64::consts::PI);
            StreamSample::new(
                rotate_image(&test_images[image_idx], angle).to_unit_vector(),
                angle,
                index,
            )
        })
        .collect();
    Ok((train, test))
}

/// Writes a synthetic four-file IDX fixture into `dir`: `n_train` train
/// and `n_test` test images with a repeating label cycle 0..=9.
/// Test support for this crate's own suites.
#[cfg(test)]
pub(crate) fn write_fixture(dir: &Path, n_train: usize, n_test: usize) -> MnistPaths {
    use crate::stream::idx::encode_idx;
    use crate::stream::IMAGE_SIDE;
    let make_images = |n: usize, salt: u8| -> IdxData {
        IdxData::Images(
            (0..n)
                .map(|i| {
                    let mut px = [0u8; IMAGE_SIDE * IMAGE_SIDE];
                    for (j, p) in px.iter_mut().enumerate() {
                        *p = ((i * 31 + j * 7) % 256) as u8 ^ salt;
                    }
                    RawImage::new(px)
                })
                .collect(),
        )
    };
    let make_labels =
        |n: usize| -> IdxData { IdxData::Labels((0..n).map(|i| (i % 10) as u8).collect()) };
    let write = |name: &str, data: &IdxData| -> PathBuf {
        let path = dir.join(name);
        std::fs::write(&path, encode_idx(data)).unwrap();
        path
    };
    MnistPaths {
        train_images: write("train-images-idx3-ubyte", &make_images(n_train, 0)),
        train_labels: write("train-labels-idx1-ubyte", &make_labels(n_train)),
        test_images: write("t10k-images-idx3-ubyte", &make_images(n_test, 0x40)),
        test_labels: write("t10k-labels-idx1-ubyte", &make_labels(n_test)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::IMAGE_SIDE;

    #[test]
    fn train_stream_is_angle_sorted_and_unit_scaled() {
        let dir = tempfile::tempdir().unwrap();
        let paths = write_fixture(dir.path(), 120, 40);
        let (train, test) = build_rotated_mnist_stream(&paths, 10, 5).unwrap();
        assert_eq!(train.len(), 10);
        // 40 test labels cycle 0..=9 four times: four digit-2 entries.
        assert_eq!(test.len(), 4);
        for pair in train.windows(2) {
            assert!(pair[0].y <= pair[1].y, "angles out of order");
        }
        for (i, s) in train.iter().enumerate() {
            assert_eq!(s.index, i);
            assert_eq!(s.x.len(), IMAGE_SIDE * IMAGE_SIDE);
            assert!((0.0..=std::f64::consts::PI).contains(&s.y));
            assert!(s.x.iter().all(|v| (0.0..=1.0).contains(v)));
        }
        for s in &test {
            assert!((0.0..=std::f64::consts::PI).contains(&s.y));
            assert!(s.x.iter().all(|v| (0.0..=1.0).contains(v)));
        }
    }

    #[test]
    fn equal_seeds_reproduce_streams_and_different_seeds_differ() {
        let dir = tempfile::tempdir().unwrap();
        let paths = write_fixture(dir.path(), 80, 20);
        let (train_a, test_a) = build_rotated_mnist_stream(&paths, 6, 9).unwrap();
        let (train_b, test_b) = build_rotated_mnist_stream(&paths, 6, 9).unwrap();
        assert_eq!(train_a, train_b);
        assert_eq!(test_a, test_b);
        let (train_c, _) = build_rotated_mnist_stream(&paths, 6, 10).unwrap();
        assert_ne!(train_a, train_c);
    }

    #[test]
    fn too_few_target_digits_is_an_insufficient_data_error() {
        let dir = tempfile::tempdir().unwrap();
        // 20 train labels cycling 0..=9 contain exactly two 2s.
        let paths = write_fixture(dir.path(), 20, 20);
        let err = build_rotated_mnist_stream(&paths, 3, 0).unwrap_err();
        assert!(matches!(
            err,
            Error::InsufficientData {
                needed: 3,
                available: 2
            }
        ));
    }

    #[test]
    fn missing_files_surface_as_ingestion_errors() {
        let dir = tempfile::tempdir().unwrap();
        let paths = MnistPaths::in_dir(dir.path());
        assert!(paths.first_missing().is_some());
        let err = build_rotated_mnist_stream(&paths, 1, 0).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn in_dir_prefers_gzipped_variants() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("train-images-idx3-ubyte.gz"), b"x").unwrap();
        let paths = MnistPaths::in_dir(dir.path());
        assert!(paths.train_images.to_string_lossy().ends_with(".gz"));
        assert!(!paths.train_labels.to_string_lossy().ends_with(".gz"));
    }
}
