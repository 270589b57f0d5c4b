//! Building a family from command line flags.

use std::path::Path;

use ncpqg_core::groups::{
    GeneratingSet, GeneratingSetJson, Group, GroupJson, Subgroup, SubgroupJson,
};
use ncpqg_core::oplusplus::OPlusPlus;
use ncpqg_core::wreath::Wreath;
use serde::de::DeserializeOwned;

use crate::{CliError, FamilyKind, Opts};

#[allow(clippy::large_enum_variant)]
pub enum LoadedFamily {
    OPlusPlus(OPlusPlus),
    Wreath(Wreath),
}

/// Inline JSON (starting with `{`) or the path of a JSON file.
fn json_arg<T: DeserializeOwned>(flag: &str, value: &str) -> Result<T, CliError> {
    let text = if value.trim_start().starts_with('{') {
        value.to_string()
    } else {
        std::fs::read_to_string(value)
            .map_err(|e| CliError::Config(format!("--{flag}: cannot read {value}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("--{flag}: {e}")))
}

fn parse_group(value: &str) -> Result<Group, CliError> {
    let v = value.trim();
    match v.to_ascii_lowercase().as_str() {
        "z" | "z0" => return Ok(Group::integers()),
        "klein" | "v4" | "z2xz2" => return Ok(Group::klein_four()),
        _ => {}
    }
    if let Some(order) = v
        .strip_prefix(['Z', 'z'])
        .and_then(|m| m.parse::<u64>().ok())
    {
        return Ok(Group::cyclic(order));
    }
    if v.starts_with('{') || Path::new(v).is_file() {
        let g: GroupJson = json_arg("group", v)?;
        return g
            .build()
            .map_err(|e| CliError::Config(format!("--group: {e}")));
    }
    Err(CliError::Config(format!(
        "--group: '{value}' is neither Z, Z<m>, klein nor group JSON"
    )))
}

fn parse_lambda(group: &Group, value: Option<&str>) -> Result<Subgroup, CliError> {
    let bad = |e: ncpqg_core::groups::GroupError| CliError::Config(format!("--lambda: {e}"));
    let Some(v) = value.map(str::trim) else {
        return Ok(Subgroup::trivial(group));
    };
    if v.starts_with('{') || Path::new(v).is_file() {
        let s: SubgroupJson = json_arg("lambda", v)?;
        return s.build(group).map_err(bad);
    }
    let gens = v
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| group.parse_element(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(bad)?;
    Subgroup::closure(group, &gens).map_err(bad)
}

pub fn load(opts: &Opts) -> Result<LoadedFamily, CliError> {
    match opts.family {
        FamilyKind::Oplusplus => Ok(LoadedFamily::OPlusPlus(OPlusPlus::new(opts.ell))),
        FamilyKind::Wreath => {
            let group = parse_group(&opts.group)?;
            let lambda = parse_lambda(&group, opts.lambda.as_deref())?;
            let gens = match &opts.gens {
                Some(v) => json_arg::<GeneratingSetJson>("gens", v)?
                    .build(&group)
                    .map_err(|e| CliError::Config(format!("--gens: {e}")))?,
                None => GeneratingSet::standard(&group),
            };
            Ok(LoadedFamily::Wreath(Wreath::new(gens, lambda)?))
        }
    }
}
