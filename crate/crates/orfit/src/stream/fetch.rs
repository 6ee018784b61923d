//! Download and integrity checking for the four MNIST IDX archives.
//!
//! Mirrors are tried in order; every downloaded (or already present)
//! file must match its published SHA-256 digest before it is accepted.

use std::io::Read;
use std::path::Path;
use std::time::Duration;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::stream::mnist::MnistPaths;

/// One distributable archive: file name and its published digest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MnistArchive {
    pub file_name: &'static str,
    pub sha256: &'static str,
}

/// The four gzip-compressed IDX archives of the standard distribution.
pub const ARCHIVES: [MnistArchive; 4] = [
    MnistArchive {
        file_name: "train-images-idx3-ubyte.gz",
        sha256: "440fcabf73cc546fa21475e81ea370265605f56be210a4024d2ca8f203523609",
    },
    MnistArchive {
        file_name: "train-labels-idx1-ubyte.gz",
        sha256: "3552534a0a558bbed6aed32b30c495cca23d567ec52cac8be1a0730e8010255c",
    },
    MnistArchive {
        file_name: "t10k-images-idx3-ubyte.gz",
        sha256: "8d422c7b0a1c1c79245a5bcf07fe86e33eeafee792b84584aec276f5a2dbc4e6",
    },
    MnistArchive {
        file_name: "t10k-labels-idx1-ubyte.gz",
        sha256: "f7ae60f92e00ec6debd23a6088c31dbd2371eca3ffa0defaefb259924204aec6",
    },
];

/// Hosts serving the archives, tried in order.
const MIRRORS: [&str; 2] = [
    "https://ossci-datasets.s3.amazonaws.com/mnist",
    "https://storage.googleapis.com/cvdf-datasets/mnist",
];

/// Hard cap on a single downloaded archive (the largest real one is
/// under 10 MB compressed).
const MAX_ARCHIVE_BYTES: u64 = 100 * 1024 * 1024;

/// Streaming SHA-256 of a file's contents, lowercase hex.
pub fn sha256_hex_of_file(path: &Path) -> Result<String> {
    let mut file = std::fs::File::open(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    let mut hasher = Sha256::new();
    std::io::copy(&mut file, &mut hasher)?;
    Ok(hex::encode(hasher.finalize()))
}

/// Checks that all four archives exist in `dir` with matching digests.
/// Purely local; no network involved.
pub fn verify_archives(dir: &Path) -> Result<()> {
    for archive in &ARCHIVES {
        let path = dir.join(archive.file_name);
        let got = sha256_hex_of_file(&path)?;
        if got != archive.sha256 {
            return Err(Error::ChecksumMismatch {
                path,
                expected: archive.sha256.to_string(),
                got,
            });
        }
    }
    Ok(())
}

fn download_to(url: &str, dest: &Path) -> Result<()> {
    let agent = ureq::AgentBuilder::new()
        .timeout(Duration::from_secs(120))
        .build();
    let response = agent.get(url).call().map_err(|e| Error::Fetch {
        url: url.to_string(),
        message: e.to_string(),
    })?;
    let mut reader = response.into_reader().take(MAX_ARCHIVE_BYTES);
    let mut file = std::fs::File::create(dest)?;
    std::io::copy(&mut reader, &mut file).map_err(|e| Error::Fetch {
        url: url.to_string(),
        message: format!("transfer interrupted: {e}"),
    })?;
    Ok(())
}

/// Ensures all four archives exist in `dir` with valid digests,
/// downloading any that are missing or corrupt. Returns the IDX paths on
/// success. Files that already verify are never re-downloaded.
pub fn fetch_mnist(dir: &Path) -> Result<MnistPaths> {
    std::fs::create_dir_all(dir)?;
    for archive in &ARCHIVES {
        let path = dir.join(archive.file_name);
        if path.exists() && sha256_hex_of_file(&path)? == archive.sha256 {
            continue;
        }
        let mut last_err: Option<Error> = None;
        let mut done = false;
        for mirror in &MIRRORS {
            let url = format!("{mirror}/{}", archive.file_name);
            let partial = path.with_extension("part");
            match download_to(&url, &partial) {
                Ok(()) => {
                    let got = sha256_hex_of_file(&partial)?;
                    if got == archive.sha256 {
                        std::fs::rename(&partial, &path)?;
                        done = true;
                        break;
                    }
                    let _ = std::fs::remove_file(&partial);
                    last_err = Some(Error::ChecksumMismatch {
                        path: path.clone(),
                        expected: archive.sha256.to_string(),
                        got,
                    });
                }
                Err(e) => {
                    let _ = std::fs::remove_file(&partial);
                    last_err = Some(e);
                }
            }
        }
        if !done {
            return Err(last_err.unwrap_or_else(|| Error::Fetch {
                url: archive.file_name.to_string(),
                message: "no mirror reachable".into(),
            }));
        }
    }
    Ok(MnistPaths::in_dir(dir))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hashes_known_content() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("abc.bin");
        std::fs::write(&path, b"abc").unwrap();
        assert_eq!(
            sha256_hex_of_file(&path).unwrap(),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn verify_flags_wrong_content_and_missing_files() {
        let dir = tempfile::tempdir().unwrap();
        for archive in &ARCHIVES {
            std::fs::write(dir.path().join(archive.file_name), b"not the real bytes").unwrap();
        }
        let err = verify_archives(dir.path()).unwrap_err();
        assert!(matches!(err, Error::ChecksumMismatch { .. }));
        assert_eq!(err.exit_code(), 3);

        let empty = tempfile::tempdir().unwrap();
        let err = verify_archives(empty.path()).unwrap_err();
        assert!(matches!(err, Error::Io(_)));
    }

    #[test]
    fn manifest_digests_are_well_formed() {
        for archive in &ARCHIVES {
            assert_eq!(archive.sha256.len(), 64);
            assert!(archive.sha256.chars().all(|c| c.is_ascii_hexdigit()));
            assert!(archive.file_name.ends_with(".gz"));
        }
    }
}
