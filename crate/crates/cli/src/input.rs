use std::fs;
use std::path::Path;

use e2top::catalog::CatalogEntry;
use e2top::error::{Error, Result};
use e2top::group::group_from_generators;
use e2top::FiniteGroup;

/// A group together with the name used for it in reports.
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

pub fn from_descriptor(descriptor: &str) -> Result<NamedGroup> {
    let entry: CatalogEntry = descriptor.trim().parse()?;
    Ok(NamedGroup { name: entry.to_string(), group: entry.build()? })
}

/// Reads a permutation group file: `degree N`, then one generator per line
/// in cycle notation. Blank lines and `#` comments are ignored.
pub fn from_file(path: &Path) -> Result<NamedGroup> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let group = parse_group_text(&text)?;
    Ok(NamedGroup { name: format!("file:{}", path.display()), group })
}

pub fn parse_group_text(text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (n, header) = lines.next().ok_or(Error::Parse { line: 1, reason: "empty group file".into() })?;
    let degree = header
        .strip_prefix("degree")
        .and_then(|d| d.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::Parse { line: n, reason: format!("expected `degree N`, found `{header}`") })?;
    let generators: Vec<&str> = lines.map(|(_, l)| l).collect();
    group_from_generators(&generators, degree)
}
