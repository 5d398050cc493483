//! Instance files: one JSON document describing a grading group, a ring and
//! optionally a module.

use std::path::Path;
use std::sync::Arc;

use gradspec_core::{build_module, build_ring, FiniteAbelianGroup, GradedModule, GradedRing, Limits, ModuleConstructor, RingConstructor};
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub cyclic_factors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub name: String,
    pub group: GroupSpec,
    pub ring: RingConstructor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleConstructor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// A validated instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub file: InstanceFile,
    pub ring: Arc<GradedRing>,
    pub module: Option<Arc<GradedModule>>,
}

impl Instance {
    pub fn name(&self) -> &str {
        &self.file.name
    }
}

impl InstanceFile {
    pub fn parse_str(text: &str, source_name: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Parse {
            source_name: source_name.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path)
            .map_err(|error| HarnessError::Io { path: path.display().to_string(), error })?;
        Self::parse_str(&text, &path.display().to_string())
    }

    /// Pretty JSON; parsing it back gives an equal value.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files always serialize")
    }

    pub fn validate(&self, limits: &Limits) -> Result<Instance, HarnessError> {
        let invalid = |location, error| HarnessError::Validation { source_name: self.name.clone(), location, error };
        let group = FiniteAbelianGroup::new(&self.group.cyclic_factors).map_err(|e| invalid("group", e))?;
        let ring = Arc::new(build_ring(&group, &self.ring, limits).map_err(|e| invalid("ring", e))?);
        let module = match &self.module {
            Some(desc) => Some(Arc::new(build_module(&ring, desc, limits).map_err(|e| invalid("module", e))?)),
            None => None,
        };
        Ok(Instance { file: self.clone(), ring, module })
    }
}

/// Parse and validate a file in one step.
pub fn parse_instance(path: &Path, limits: &Limits) -> Result<Instance, HarnessError> {
    InstanceFile::load(path)?.validate(limits)
}
