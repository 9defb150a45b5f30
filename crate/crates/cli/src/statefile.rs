//! JSON state files: `{"dims": [..], "amps": [[re, im], ..], "label": ".."}`.
//!
//! Amplitudes are listed row-major with the last subsystem fastest. Floats
//! are written in shortest round-trip form, so a write/read cycle is exact.

use std::fs;
use std::path::Path;

use megs_core::{Complex64, MultiState};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub amps: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl StateFile {
    pub fn from_state(state: &MultiState, label: Option<String>) -> Self {
        StateFile {
            dims: state.dims().to_vec(),
            amps: state.amps().iter().map(|a| [a.re, a.im]).collect(),
            label,
        }
    }

    /// Validates into a state; `normalize` rescales instead of rejecting
    /// an unnormalized amplitude vector.
    pub fn to_state(&self, normalize: bool) -> Result<MultiState, CliError> {
        let amps: Vec<Complex64> = self.amps.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        let state = if normalize {
            MultiState::normalized(self.dims.clone(), amps)
        } else {
            MultiState::new(self.dims.clone(), amps)
        };
        state.map_err(CliError::from)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("malformed state file: {e}")))
    }

    pub fn to_json(&self) -> String {
        crate::json::to_string(self)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
