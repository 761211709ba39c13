//! JSON group input format.
//!
//! ```json
//! {"name": "z3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}
//! {"name": "s3", "degree": 3, "generators": [[2,1,3],[2,3,1]]}
//! ```
//!
//! Generators are 1-based image lists. Table inputs may add `"names"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::catalog_str;
use crate::error::GroupError;
use crate::group::{from_permutation_generators, validate_cayley_table, Group};
use crate::perm::Permutation;
use crate::Limits;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table {
        name: String,
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Permutations {
        name: String,
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn build(&self, limits: &Limits) -> Result<Group, GroupError> {
        match self {
            GroupSpec::Table { name, order, table, names } => {
                if *order != table.len() {
                    return Err(GroupError::Parse(format!(
                        "declared order {order} but table has {} rows",
                        table.len()
                    )));
                }
                validate_cayley_table(name, table, names.clone(), limits)
            }
            GroupSpec::Permutations { name, degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| Permutation::from_images(g))
                    .collect::<Result<Vec<_>, _>>()?;
                from_permutation_generators(name, &gens, *degree, limits)
            }
        }
    }

    /// Table form of an existing group.
    pub fn from_group(g: &Group) -> GroupSpec {
        GroupSpec::Table {
            name: g.name().to_string(),
            order: g.order(),
            table: g.table_rows(),
            names: Some(g.names().to_vec()),
        }
    }
}

pub fn parse_group_json(text: &str, limits: &Limits) -> Result<Group, GroupError> {
    let spec: GroupSpec = serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
    spec.build(limits)
}

pub fn load_group_file(path: &Path, limits: &Limits) -> Result<Group, GroupError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::Parse(format!("{}: {e}", path.display())))?;
    parse_group_json(&text, limits)
}

/// Either a catalog descriptor or a path to a JSON file.
pub fn load_group(source: &str, limits: &Limits) -> Result<Group, GroupError> {
    match catalog_str(source, limits) {
        Err(GroupError::UnknownDescriptor(_)) if Path::new(source).exists() => {
            load_group_file(Path::new(source), limits)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_input() {
        let g = parse_group_json(r#"{"name":"z3","order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]}"#, &Limits::default())
            .unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.element_name(1), "g1");
    }

    #[test]
    fn generator_input() {
        let g = parse_group_json(r#"{"name":"s3","degree":3,"generators":[[2,1,3],[2,3,1]]}"#, &Limits::default())
            .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element_name(0), "()");
    }

    #[test]
    fn rejects_bad_inputs() {
        let l = Limits::default();
        assert!(matches!(
            parse_group_json(r#"{"name":"x","order":2,"table":[[0]]}"#, &l),
            Err(GroupError::Parse(_))
        ));
        assert!(matches!(
            parse_group_json(r#"{"name":"x","degree":3,"generators":[[1,1,2]]}"#, &l),
            Err(GroupError::InvalidPermutation(_))
        ));
        assert!(matches!(
            parse_group_json(r#"{"name":"x","degree":3,"generators":[[2,1]]}"#, &l),
            Err(GroupError::DegreeMismatch { .. })
        ));
        assert!(matches!(parse_group_json("not json", &l), Err(GroupError::Parse(_))));
    }

    #[test]
    fn spec_round_trip() {
        let g = catalog_str("dihedral:3", &Limits::default()).unwrap();
        let text = serde_json::to_string(&GroupSpec::from_group(&g)).unwrap();
        let back = parse_group_json(&text, &Limits::default()).unwrap();
        assert_eq!(back.table_rows(), g.table_rows());
        assert_eq!(back.names(), g.names());
    }
}
