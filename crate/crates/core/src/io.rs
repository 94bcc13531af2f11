//! JSON group documents.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{FuseError, Result};
use crate::group::FiniteGroup;
use crate::perm::{find_element, group_from_generators, split_generator_list, Perm};

/// A group given either by its Cayley table (identity at index 0) or by
/// permutation generators in 1-based cycle form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum GroupSpec {
    Cayley {
        name: String,
        order: usize,
        table: Vec<Vec<usize>>,
    },
    Perm {
        name: String,
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
}

impl GroupSpec {
    pub fn name(&self) -> &str {
        match self {
            GroupSpec::Cayley { name, .. } | GroupSpec::Perm { name, .. } => name,
        }
    }

    /// Builds a spec from generator strings such as `"(1 2 3)(4 5)"`.
    pub fn perm(name: &str, degree: usize, gens: &[&str]) -> Result<Self> {
        let generators = gens
            .iter()
            .map(|s| Ok(Perm::parse_cycles(s, degree)?.cycles()))
            .collect::<Result<_>>()?;
        Ok(GroupSpec::Perm {
            name: name.to_string(),
            degree,
            generators,
        })
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cayley { name, order, table } => {
                if table.len() != *order {
                    return Err(FuseError::Validation(format!(
                        "declared order {order} but the table has {} rows",
                        table.len()
                    )));
                }
                FiniteGroup::from_table(name.clone(), table)
            }
            GroupSpec::Perm {
                name,
                degree,
                generators,
            } => {
                let gens = generators
                    .iter()
                    .map(|cycles| Perm::from_cycles(cycles, *degree))
                    .collect::<Result<Vec<_>>>()?;
                Ok(group_from_generators(name, *degree, &gens)?.0)
            }
        }
    }

    /// Resolves a list of elements of the built group: cycle strings for
    /// permutation groups, element indices for Cayley tables.
    pub fn parse_elements(&self, g: &FiniteGroup, list: &str) -> Result<Vec<usize>> {
        let items = split_generator_list(list);
        match self {
            GroupSpec::Cayley { .. } => items
                .iter()
                .map(|s| {
                    let x: usize = s
                        .parse()
                        .map_err(|_| FuseError::Parse(format!("{s:?} is not an element index")))?;
                    if x >= g.order() {
                        return Err(FuseError::Validation(format!("element {x} out of range")));
                    }
                    Ok(x)
                })
                .collect(),
            GroupSpec::Perm { degree, .. } => items
                .iter()
                .map(|s| {
                    let perm = Perm::parse_cycles(s, *degree)?;
                    find_element(g, *degree, &perm).ok_or_else(|| {
                        FuseError::Validation(format!("{s} is not an element of the group"))
                    })
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("specs serialize")
    }
}

pub fn parse_group_spec(doc: &str) -> Result<GroupSpec> {
    serde_json::from_str(doc).map_err(|e| FuseError::Parse(e.to_string()))
}

/// Parses and builds a group document.
pub fn load_group(doc: &str) -> Result<FiniteGroup> {
    parse_group_spec(doc)?.build()
}

/// Reads a group document, returning the spec and the raw bytes.
pub fn read_group_file(path: &Path) -> Result<(GroupSpec, Vec<u8>)> {
    let bytes = std::fs::read(path)
        .map_err(|e| FuseError::Io(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| FuseError::Parse(format!("{}: {e}", path.display())))?;
    Ok((parse_group_spec(text)?, bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_c2() {
        let g = load_group(r#"{"format":"cayley","name":"C2","order":2,"table":[[0,1],[1,0]]}"#)
            .unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn perm_d8() {
        let doc = r#"{"format":"perm","name":"D8","degree":4,"generators":[[[1,2,3,4]],[[1,3]]]}"#;
        let spec = parse_group_spec(doc).unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.order(), 8);
        let els = spec.parse_elements(&g, "(1 2 3 4),(1 3)").unwrap();
        assert_eq!(g.element_order(els[0]), 4);
        assert!(spec.parse_elements(&g, "(1 2)").is_err());
        assert_eq!(parse_group_spec(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(load_group("{"), Err(FuseError::Parse(_))));
        let bad = r#"{"format":"cayley","name":"X","order":2,"table":[[1,0],[0,1]]}"#;
        assert!(matches!(load_group(bad), Err(FuseError::Validation(_))));
        let short = r#"{"format":"cayley","name":"X","order":3,"table":[[0,1],[1,0]]}"#;
        assert!(matches!(load_group(short), Err(FuseError::Validation(_))));
    }
}
