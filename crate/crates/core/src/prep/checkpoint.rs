use std::path::Path;

use serde::{Deserialize, Serialize};

use super::ansatz::BrickwallAnsatz;
use crate::error::{Error, Result};
use crate::sim::Circuit;

/// Trained preparation parameters as stored on disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub n: usize,
    pub depth: usize,
    pub seed: u64,
    pub params: Vec<f64>,
    pub infidelity: f64,
}

impl Checkpoint {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("checkpoint serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("bad checkpoint: {e}")))
    }

    pub fn save(&self, path: impl AsRef<Path>) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }

    pub fn load(path: impl AsRef<Path>) -> std::io::Result<Result<Self>> {
        Ok(Self::from_json(&std::fs::read_to_string(path)?))
    }

    /// Ansatz on `n + 1` qubits with the stored depth.
    pub fn ansatz(&self) -> BrickwallAnsatz {
        BrickwallAnsatz::with_depth(self.n + 1, self.depth)
    }

    pub fn circuit(&self) -> Result<Circuit> {
        self.ansatz().to_circuit(&self.params)
    }
}
