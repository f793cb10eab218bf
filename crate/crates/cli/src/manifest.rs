use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::LoadedConfig;

/// Provenance embedded in every report: enough to re-run the command and
/// get the same bytes back.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// Config file path, or `builtin:default` / `builtin:control`.
    pub config: String,
    pub config_sha256: String,
    /// Parameter overrides applied after loading, as (field, value).
    pub overrides: Vec<(String, String)>,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str, loaded: &LoadedConfig, outputs: Vec<String>) -> Self {
        RunManifest {
            tool: "paneled".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            config: loaded.source.clone(),
            config_sha256: loaded.hash.clone(),
            overrides: loaded.overrides.clone(),
            outputs,
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
