//! Run manifests: the provenance record embedded in every emitted
//! report, so a run can be reproduced from its own output.

use serde::{Deserialize, Serialize};

use crate::config::OptConfig;
use crate::error::Error;

/// Everything needed to rerun a command: the command name, the full
/// search configuration (when one applies), the seed, the library
/// version, wall time, and any files the run wrote. Re-running with the
/// same manifest reproduces deterministic paths bit-for-bit and
/// iterative paths to their stated tolerances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<OptConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: String,
    pub wall_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>) -> Self {
        RunManifest {
            command: command.into(),
            config: None,
            seed: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
            wall_ms: 0,
            outputs: Vec::new(),
        }
    }

    pub fn with_config(mut self, config: OptConfig) -> Self {
        self.seed = Some(config.seed);
        self.config = Some(config);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn add_output(&mut self, path: impl Into<String>) {
        self.outputs.push(path.into());
    }
}

/// Wraps a report with its manifest as `{"manifest": …, "report": …}`.
pub fn wrap<T: Serialize>(manifest: &RunManifest, report: &T) -> Result<serde_json::Value, Error> {
    Ok(serde_json::json!({
        "manifest": serde_json::to_value(manifest)
            .map_err(|e| Error::Format(format!("manifest serialization: {e}")))?,
        "report": serde_json::to_value(report)
            .map_err(|e| Error::Format(format!("report serialization: {e}")))?,
    }))
}
