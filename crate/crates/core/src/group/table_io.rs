//! JSON group table files:
//! `{"order", "identity", "generators", "mul", "names"?, "generator_names"?}`.
//! `mul` is row-major, one array per row. `names` are display words for the
//! elements and are informational only; the reader recomputes them.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupTableFile {
    pub order: usize,
    pub identity: usize,
    pub generators: Vec<usize>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_names: Option<Vec<String>>,
}

impl GroupTableFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupTableFile {
            order: g.order(),
            identity: g.identity(),
            generators: g.generators().to_vec(),
            mul: g
                .elements()
                .map(|a| g.elements().map(|b| g.mul(a, b)).collect())
                .collect(),
            names: Some(g.elements().map(|x| g.name(x).to_string()).collect()),
            generator_names: Some(g.generator_names().to_vec()),
        }
    }

    /// Validates the group axioms and builds the group. Generators without
    /// names are called `g1, g2, ...`.
    pub fn into_group(self) -> Result<FiniteGroup, GroupError> {
        if self.mul.len() != self.order || self.mul.iter().any(|row| row.len() != self.order) {
            return Err(GroupError::NotAGroup(format!(
                "mul must be a {0}x{0} array",
                self.order
            )));
        }
        let names = self.generator_names.unwrap_or_else(|| {
            (1..=self.generators.len()).map(|i| format!("g{i}")).collect()
        });
        let flat: Vec<usize> = self.mul.into_iter().flatten().collect();
        FiniteGroup::from_table(self.order, &flat, self.identity, &self.generators, names)
    }

    pub fn read(path: &Path) -> Result<FiniteGroup, GroupError> {
        let text = std::fs::read_to_string(path)?;
        let file: GroupTableFile = serde_json::from_str(&text)?;
        file.into_group()
    }

    pub fn write(g: &FiniteGroup, path: &Path) -> Result<(), GroupError> {
        let text = serde_json::to_string_pretty(&GroupTableFile::from_group(g))?;
        std::fs::write(path, text)?;
        Ok(())
    }
}
