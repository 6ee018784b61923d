//! IDX binary format reader: big-endian magic, dimension list, uint8
//! payload. Gzip-compressed files are decompressed transparently.

use std::io::Read;
use std::path::Path;

use flate2::read::GzDecoder;

use crate::error::{Error, Result};
use crate::stream::{RawImage, IMAGE_SIDE};

/// Magic number of a 3-D uint8 tensor (image stack).
const MAGIC_IMAGES: u32 = 0x0000_0803;
/// Magic number of a 1-D uint8 vector (label list).
const MAGIC_LABELS: u32 = 0x0000_0801;
/// First two bytes of a gzip member.
const GZIP_MAGIC: [u8; 2] = [0x1f, 0x8b];

/// Parsed content of an IDX file.
#[derive(Debug, Clone, PartialEq)]
pub enum IdxData {
    Images(Vec<RawImage>),
    Labels(Vec<u8>),
}

impl IdxData {
    pub fn len(&self) -> usize {
        match self {
            IdxData::Images(v) => v.len(),
            IdxData::Labels(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Reads an IDX file (optionally gzip-compressed) from `path`.
///
/// Accepts exactly two layouts: magic `0x00000803` with dimensions
/// `(n, 28, 28)` yielding `n` images, and magic `0x00000801` with
/// dimension `(n)` yielding `n` labels. Every payload byte is accounted
/// for; truncated or padded files are rejected.
pub fn load_idx(path: &Path) -> Result<IdxData> {
    let raw = std::fs::read(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    let bytes = if raw.len() >= 2 && raw[..2] == GZIP_MAGIC {
        let mut out = Vec::new();
        GzDecoder::new(raw.as_slice())
            .read_to_end(&mut out)
            .map_err(|e| Error::CorruptFile {
                path: path.to_path_buf(),
                message: format!("gzip decompression failed: {e}"),
            })?;
        out
    } else {
        raw
    };
    parse_idx(&bytes, path)
}

fn parse_idx(bytes: &[u8], path: &Path) -> Result<IdxData> {
    let corrupt = |message: String| Error::CorruptFile {
        path: path.to_path_buf(),
        message,
    };
    if bytes.len() < 4 {
        return Err(corrupt(format!(
            "file has {} bytes, shorter than the 4-byte magic",
            bytes.len()
        )));
    }
    let magic = u32::from_be_bytes([bytes[0], bytes[1], bytes[2], bytes[3]]);
    let ndims = match magic {
        MAGIC_IMAGES => 3usize,
        MAGIC_LABELS => 1usize,
        other => {
            return Err(Error::Format {
                path: path.to_path_buf(),
                message: format!(
                    "magic 0x{other:08x} is neither an image stack (0x{MAGIC_IMAGES:08x}) \
                     nor a label list (0x{MAGIC_LABELS:08x})"
                ),
            })
        }
    };
    let header_len = 4 + 4 * ndims;
    if bytes.len() < header_len {
        return Err(corrupt(format!(
            "header needs {header_len} bytes for {ndims} dimensions, file has {}",
            bytes.len()
        )));
    }
    let mut dims = [0usize; 3];
    for (d, dim) in dims.iter_mut().take(ndims).enumerate() {
        let o = 4 + 4 * d;
        *dim = u32::from_be_bytes([bytes[o], bytes[o + 1], bytes[o + 2], bytes[o + 3]]) as usize;
    }
    let payload = &bytes[header_len..];
    match magic {
        MAGIC_IMAGES => {
            let (n, rows, cols) = (dims[0], dims[1], dims[2]);
            if rows != IMAGE_SIDE || cols != IMAGE_SIDE {
                return Err(Error::Format {
                    path: path.to_path_buf(),
                    message: format!(
                        "image dimensions {rows}x{cols} are not the required \
                         {IMAGE_SIDE}x{IMAGE_SIDE}"
                    ),
                });
            }
            let expected = n * IMAGE_SIDE * IMAGE_SIDE;
            if payload.len() != expected {
                return Err(corrupt(format!(
                    "image payload has {} bytes, header promises {expected} \
                     ({n} images of {IMAGE_SIDE}x{IMAGE_SIDE})",
                    payload.len()
                )));
            }
            let images = payload
                .chunks_exact(IMAGE_SIDE * IMAGE_SIDE)
                .map(RawImage::from_slice)
                .collect::<Result<Vec<_>>>()?;
            Ok(IdxData::Images(images))
        }
        MAGIC_LABELS => {
            let n = dims[0];
            if payload.len() != n {
                return Err(corrupt(format!(
                    "label payload has {} bytes, header promises {n}",
                    payload.len()
                )));
            }
            Ok(IdxData::Labels(payload.to_vec()))
        }
        _ => unreachable!("magic was validated above"),
    }
}

/// Serializes images or labels back into IDX bytes (uncompressed).
/// Used by tests and fixture generation; inverse of [`load_idx`].
pub fn encode_idx(data: &IdxData) -> Vec<u8> {
    match data {
        IdxData::Images(images) => {
            let mut out = Vec::with_capacity(16 + images.len() * IMAGE_SIDE * IMAGE_SIDE);
            out.extend_from_slice(&MAGIC_IMAGES.to_be_bytes());
            out.extend_from_slice(&(images.len() as u32).to_be_bytes());
            out.extend_from_slice(&(IMAGE_SIDE as u32).to_be_bytes());
            out.extend_from_slice(&(IMAGE_SIDE as u32).to_be_bytes());
            for img in images {
                out.extend_from_slice(img.as_bytes());
            }
            out
        }
        IdxData::Labels(labels) => {
            let mut out = Vec::with_capacity(8 + labels.len());
            out.extend_from_slice(&MAGIC_LABELS.to_be_bytes());
            out.extend_from_slice(&(labels.len() as u32).to_be_bytes());
            out.extend_from_slice(labels);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use flate2::write::GzEncoder;
    use flate2::Compression;
    use std::io::Write;

    fn write_tmp(bytes: &[u8]) -> (tempfile::TempDir, std::path::PathBuf) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fixture.idx");
        std::fs::write(&path, bytes).unwrap();
        (dir, path)
    }

    fn image_bytes(n: usize) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(&0x0000_0803u32.to_be_bytes());
        out.extend_from_slice(&(n as u32).to_be_bytes());
        out.extend_from_slice(&28u32.to_be_bytes());
        out.extend_from_slice(&28u32.to_be_bytes());
        for i in 0..n * 784 {
            out.push((i % 251) as u8);
        }
        out
    }

    #[test]
    fn parses_an_image_stack_and_consumes_every_byte() {
        let bytes = image_bytes(10);
        let (_dir, path) = write_tmp(&bytes);
        let data = load_idx(&path).unwrap();
        match &data {
            IdxData::Images(images) => {
                assert_eq!(images.len(), 10);
                assert_eq!(images[0].get(0, 0), 0);
                assert_eq!(images[0].get(0, 1), 1);
                // Row-major: pixel (1, 0) is byte 28.
                assert_eq!(images[0].get(1, 0), 28);
            }
            _ => panic!("expected images"),
        }
        // Round trip.
        assert_eq!(encode_idx(&data), bytes);
    }

    #[test]
    fn parses_labels() {
        let mut bytes = Vec::new();
        bytes.extend_from_slice(&0x0000_0801u32.to_be_bytes());
        bytes.extend_from_slice(&5u32.to_be_bytes());
        bytes.extend_from_slice(&[7, 2, 1, 0, 2]);
        let (_dir, path) = write_tmp(&bytes);
        match load_idx(&path).unwrap() {
            IdxData::Labels(labels) => assert_eq!(labels, vec![7, 2, 1, 0, 2]),
            _ => panic!("expected labels"),
        }
    }

    #[test]
    fn rejects_bad_magic() {
        let mut bytes = image_bytes(1);
        bytes[2] = 0x09;
        let (_dir, path) = write_tmp(&bytes);
        assert!(matches!(load_idx(&path).unwrap_err(), Error::Format { .. }));
    }

    #[test]
    fn rejects_truncated_and_padded_payloads() {
        let bytes = image_bytes(2);
        let (_dir, path) = write_tmp(&bytes[..bytes.len() - 1]);
        assert!(matches!(
            load_idx(&path).unwrap_err(),
            Error::CorruptFile { .. }
        ));
        let mut padded = image_bytes(2);
        padded.push(0);
        let (_dir2, path2) = write_tmp(&padded);
        assert!(matches!(
            load_idx(&path2).unwrap_err(),
            Error::CorruptFile { .. }
        ));
    }

    #[test]
    fn rejects_non_28x28_images() {
        let mut bytes = Vec::new();
        bytes.extend_from_slice(&0x0000_0803u32.to_be_bytes());
        bytes.extend_from_slice(&1u32.to_be_bytes());
        bytes.extend_from_slice(&27u32.to_be_bytes());
        bytes.extend_from_slice(&28u32.to_be_bytes());
        bytes.extend(std::iter::repeat_n(0u8, 27 * 28));
        let (_dir, path) = write_tmp(&bytes);
        assert!(matches!(load_idx(&path).unwrap_err(), Error::Format { .. }));
    }

    #[test]
    fn decompresses_gzip_transparently() {
        let bytes = image_bytes(3);
        let mut enc = GzEncoder::new(Vec::new(), Compression::fast());
        enc.write_all(&bytes).unwrap();
        let gz = enc.finish().unwrap();
        let (_dir, path) = write_tmp(&gz);
        match load_idx(&path).unwrap() {
            IdxData::Images(images) => assert_eq!(images.len(), 3),
            _ => panic!("expected images"),
        }
    }

    #[test]
    fn missing_file_maps_to_io_error() {
        let err = load_idx(Path::new("/nonexistent/definitely-missing.idx")).unwrap_err();
        assert!(matches!(err, Error::Io(_)));
        assert_eq!(err.exit_code(), 3);
    }
}
