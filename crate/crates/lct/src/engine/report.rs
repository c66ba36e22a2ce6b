//! Serializable summary of one transform.

use super::oracles::CompositionSign;
use serde::{Deserialize, Serialize};

/// Version of the JSON layout of [`TransformReport`].
pub const SCHEMA_VERSION: u32 = 1;

/// What the engine knows about a transform it just applied.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TransformReport {
    pub schema_version: u32,
    /// Full-grid defect `‖U†WU − W‖ / ‖W‖`; absent when not computed.
    pub unitarity_defect: Option<f64>,
    /// Defect restricted to resolvable probe functions.
    pub probe_defect: Option<f64>,
    pub composition_sign: CompositionSign,
    /// Largest deviation from a reference, when one was available.
    pub max_abs_error: Option<f64>,
    pub grid_too_coarse: bool,
    pub notes: Vec<String>,
}

impl Default for TransformReport {
    fn default() -> Self {
        TransformReport {
            schema_version: SCHEMA_VERSION,
            unitarity_defect: None,
            probe_defect: None,
            composition_sign: CompositionSign::Undetermined,
            max_abs_error: None,
            grid_too_coarse: false,
            notes: Vec::new(),
        }
    }
}
