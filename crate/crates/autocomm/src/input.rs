//! Resolving group and subgroup arguments.

use std::path::Path;

use autocomm_core::catalog::build;
use autocomm_core::subgroup::{enumerate_subgroups, subgroup_closure};
use autocomm_core::{Elem, GroupTable, SubgroupSet};

use crate::error::CliError;
use crate::format::read_group_file;

/// A path to an existing file is read as a table; anything else is a
/// catalog name.
pub fn resolve_group(spec: &str) -> Result<GroupTable, CliError> {
    let path = Path::new(spec);
    if path.is_file() {
        read_group_file(path)
    } else {
        Ok(build(spec)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    All,
    Whole,
    Generated(Vec<Elem>),
}

impl std::str::FromStr for SubgroupSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.trim() {
            "all" => Ok(SubgroupSpec::All),
            "whole" => Ok(SubgroupSpec::Whole),
            other => {
                let list = other.strip_prefix("gens=").ok_or_else(|| {
                    CliError::Usage(format!("bad subgroup {other:?}: expected all, whole or gens=i,j,..."))
                })?;
                let gens = list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|_| CliError::Usage(format!("bad generator {t:?} in {other:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(SubgroupSpec::Generated(gens))
            }
        }
    }
}

pub fn resolve_subgroups(g: &GroupTable, spec: &SubgroupSpec) -> Result<Vec<SubgroupSet>, CliError> {
    Ok(match spec {
        SubgroupSpec::All => enumerate_subgroups(g)?,
        SubgroupSpec::Whole => vec![SubgroupSet::whole(g)],
        SubgroupSpec::Generated(gens) => vec![subgroup_closure(g, gens)?],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_specs() {
        assert_eq!("all".parse::<SubgroupSpec>().unwrap(), SubgroupSpec::All);
        assert_eq!(
            "gens=1, 2".parse::<SubgroupSpec>().unwrap(),
            SubgroupSpec::Generated(vec![1, 2])
        );
        assert!("1,2".parse::<SubgroupSpec>().is_err());
        assert!("gens=a".parse::<SubgroupSpec>().is_err());
    }

    #[test]
    fn generated_subgroup_of_s3() {
        let g = resolve_group("S(3)").unwrap();
        let h = resolve_subgroups(&g, &SubgroupSpec::Generated(vec![3])).unwrap();
        assert_eq!(h[0].members(), &[0, 3, 4]);
    }
}
