//! Manifest-driven verification of the `cymcm-core` calculators.

pub mod app;
pub mod expr;
pub mod manifest;
pub mod query;
pub mod report;
pub mod runner;

use std::path::Path;
use std::{env, fs, io};

pub use manifest::{Manifest, ManifestError};
pub use report::{CheckRecord, Report, Summary, Value};
pub use runner::run_manifest;

/// The manifest reproduced by `cymcm reproduce`.
pub const PAPER_MANIFEST: &str = include_str!("../manifests/paper.toml");

/// Directory override for bundled manifests.
pub const MANIFEST_DIR_VAR: &str = "CYMCM_MANIFEST_DIR";

/// Text of the bundled `paper.toml`, read from `$CYMCM_MANIFEST_DIR` when set.
pub fn bundled_manifest_text() -> io::Result<String> {
    match env::var_os(MANIFEST_DIR_VAR) {
        Some(dir) => fs::read_to_string(Path::new(&dir).join("paper.toml")),
        None => Ok(PAPER_MANIFEST.to_string()),
    }
}
