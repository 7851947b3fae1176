//! Group arguments: `builtin:NAME[params]`, `catalog:NAME`, a `.json`
//! table file, or a presentation file.

use std::path::Path;

use modalg::classifier::catalog_entry;
use modalg::group::{FiniteGroup, GroupTableFile};
use modalg::presentation::{parse_presentation, Builtin};

use crate::CliError;

/// A resolved group and the label used in reports.
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

pub fn resolve(spec: &str) -> Result<NamedGroup, CliError> {
    if let Some(rest) = spec.strip_prefix("builtin:") {
        let b: Builtin = rest.parse()?;
        let group = FiniteGroup::from_presentation(&b.presentation()?)?;
        return Ok(NamedGroup {
            name: b.to_string(),
            group,
        });
    }
    if let Some(rest) = spec.strip_prefix("catalog:") {
        let entry = catalog_entry(rest).ok_or_else(|| CliError::UnknownCatalogEntry(rest.to_string()))?;
        return Ok(NamedGroup {
            name: entry.name.to_string(),
            group: entry.build()?,
        });
    }
    let path = Path::new(spec);
    let name = path
        .file_stem()
        .map_or_else(|| spec.to_string(), |s| s.to_string_lossy().into_owned());
    let group = if path.extension().is_some_and(|e| e == "json") {
        GroupTableFile::read(path)?
    } else {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: spec.to_string(),
            source,
        })?;
        FiniteGroup::from_presentation(&parse_presentation(&text)?)?
    };
    Ok(NamedGroup { name, group })
}
