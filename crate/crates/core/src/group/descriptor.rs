use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{families, FiniteGroup};

/// A serializable recipe for a group.
///
/// JSON forms: `{"family":"cyclic","n":12}`, `{"family":"dihedral","order":8}`,
/// `{"family":"quaternion"}`, `{"family":"symmetric","n":3}`,
/// `{"family":"product","parts":[...]}` or `{"table":[[...],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDescriptor {
    Family(FamilyDescriptor),
    Table { table: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilyDescriptor {
    Cyclic { n: usize },
    Dihedral { order: usize },
    Quaternion,
    Symmetric { n: usize },
    Product { parts: Vec<GroupDescriptor> },
}

impl GroupDescriptor {
    pub fn cyclic(n: usize) -> Self {
        GroupDescriptor::Family(FamilyDescriptor::Cyclic { n })
    }

    pub fn dihedral(order: usize) -> Self {
        GroupDescriptor::Family(FamilyDescriptor::Dihedral { order })
    }

    pub fn quaternion() -> Self {
        GroupDescriptor::Family(FamilyDescriptor::Quaternion)
    }

    pub fn symmetric(n: usize) -> Self {
        GroupDescriptor::Family(FamilyDescriptor::Symmetric { n })
    }

    pub fn product(parts: Vec<GroupDescriptor>) -> Self {
        GroupDescriptor::Family(FamilyDescriptor::Product { parts })
    }

    /// Constructs and validates the group.
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupDescriptor::Table { table } => {
                FiniteGroup::from_table(format!("table{}", table.len()), table)
            }
            GroupDescriptor::Family(f) => match f {
                FamilyDescriptor::Cyclic { n } => families::cyclic(*n),
                FamilyDescriptor::Dihedral { order } => families::dihedral(*order),
                FamilyDescriptor::Quaternion => families::quaternion(),
                FamilyDescriptor::Symmetric { n } => families::symmetric(*n),
                FamilyDescriptor::Product { parts } => {
                    let groups = parts.iter().map(|p| p.build()).collect::<Result<Vec<_>>>()?;
                    families::direct_product(&groups)
                }
            },
        }
    }

    /// Order without building the table (for budget checks and roster filters).
    pub fn order(&self) -> usize {
        match self {
            GroupDescriptor::Table { table } => table.len(),
            GroupDescriptor::Family(f) => match f {
                FamilyDescriptor::Cyclic { n } => *n,
                FamilyDescriptor::Dihedral { order } => *order,
                FamilyDescriptor::Quaternion => 8,
                FamilyDescriptor::Symmetric { n } => (1..=*n).product(),
                FamilyDescriptor::Product { parts } => parts.iter().map(|p| p.order()).product(),
            },
        }
    }

    /// Reads the command-line grammar: `cyclic:7`, `dihedral:8`, `quaternion`,
    /// `symmetric:3`, `product:cyclic:2*cyclic:4`, the short names `Z7`, `D8`,
    /// `Q8`, `S3`, `Z2xZ4`, or `@path.json`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(path) = text.strip_prefix('@') {
            let raw = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("cannot read group file {path}: {e}")))?;
            return serde_json::from_str(&raw)
                .map_err(|e| Error::Invalid(format!("bad group descriptor in {path}: {e}")));
        }
        if text.starts_with('{') {
            return serde_json::from_str(text)
                .map_err(|e| Error::Invalid(format!("bad group descriptor: {e}")));
        }
        let lower = text.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("product:") {
            let parts = rest.split('*').map(Self::parse).collect::<Result<Vec<_>>>()?;
            return Ok(Self::product(parts));
        }
        if let Some((family, param)) = lower.split_once(':') {
            let value = param
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("`{param}` is not a group parameter")))?;
            return match family.trim() {
                "cyclic" | "z" => Ok(Self::cyclic(value)),
                "dihedral" | "d" => Ok(Self::dihedral(value)),
                "symmetric" | "s" => Ok(Self::symmetric(value)),
                other => Err(Error::Invalid(format!("unknown group family `{other}`"))),
            };
        }
        if lower == "quaternion" || lower == "q8" {
            return Ok(Self::quaternion());
        }
        if lower.contains('x') {
            let parts = lower.split('x').map(Self::parse).collect::<Result<Vec<_>>>()?;
            return Ok(Self::product(parts));
        }
        let (head, digits) = lower.split_at(1);
        let value = digits
            .parse::<usize>()
            .map_err(|_| Error::Invalid(format!("cannot parse group `{text}`")))?;
        match head {
            "z" => Ok(Self::cyclic(value)),
            "d" => Ok(Self::dihedral(value)),
            "s" => Ok(Self::symmetric(value)),
            _ => Err(Error::Invalid(format!("cannot parse group `{text}`"))),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Table { table } => write!(f, "table{}", table.len()),
            GroupDescriptor::Family(fam) => match fam {
                FamilyDescriptor::Cyclic { n } => write!(f, "Z{n}"),
                FamilyDescriptor::Dihedral { order } => write!(f, "D{order}"),
                FamilyDescriptor::Quaternion => f.write_str("Q8"),
                FamilyDescriptor::Symmetric { n } => write!(f, "S{n}"),
                FamilyDescriptor::Product { parts } => {
                    for (i, p) in parts.iter().enumerate() {
                        if i > 0 {
                            f.write_str("x")?;
                        }
                        write!(f, "{p}")?;
                    }
                    Ok(())
                }
            },
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        let d: GroupDescriptor = serde_json::from_str(r#"{"family":"cyclic","n":12}"#).unwrap();
        assert_eq!(d, GroupDescriptor::cyclic(12));
        let d: GroupDescriptor = serde_json::from_str(r#"{"family":"dihedral","order":8}"#).unwrap();
        assert_eq!(d.build().unwrap().order(), 8);
        let d: GroupDescriptor = serde_json::from_str(
            r#"{"family":"product","parts":[{"family":"cyclic","n":2},{"family":"cyclic","n":4}]}"#,
        )
        .unwrap();
        assert_eq!(d.to_string(), "Z2xZ4");
        let d: GroupDescriptor = serde_json::from_str(r#"{"table":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(d.build().unwrap().order(), 2);
        let text = serde_json::to_string(&GroupDescriptor::quaternion()).unwrap();
        assert_eq!(text, r#"{"family":"quaternion"}"#);
    }

    #[test]
    fn cli_grammar() {
        assert_eq!(GroupDescriptor::parse("cyclic:7").unwrap(), GroupDescriptor::cyclic(7));
        assert_eq!(GroupDescriptor::parse("D8").unwrap(), GroupDescriptor::dihedral(8));
        assert_eq!(GroupDescriptor::parse("q8").unwrap(), GroupDescriptor::quaternion());
        assert_eq!(
            GroupDescriptor::parse("product:cyclic:2*cyclic:4").unwrap(),
            GroupDescriptor::parse("Z2xZ4").unwrap()
        );
        assert_eq!(GroupDescriptor::parse("S4").unwrap().order(), 24);
        assert!(GroupDescriptor::parse("banana:3").is_err());
        assert!(GroupDescriptor::parse("cyclic:x").is_err());
    }
}
