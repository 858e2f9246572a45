//! Scenario files: one `key=value` per line, `#` comments.
//!
//! ```text
//! id=s3-over-a3
//! field=7
//! group=perm:3:(0 1 2);(0 1)
//! normal=1
//! module=@w.rep
//! claim=invariant false
//! claim=inertia-order 3
//! ```
//!
//! `group` also accepts `table:@file` (a group file) and `catalog:<name>`.
//! `normal` lists seed elements; the normal subgroup is their closure.
//! `module` names a representation file whose group reference is `N`.
//! Relative paths resolve against the scenario file's directory.

use std::collections::HashSet;
use std::path::Path;

use super::claims::Claim;
use super::{Scenario, ScenarioError};
use crate::exactfield::text::parse_usize;
use crate::exactfield::PrimeField;
use crate::groupcore::text::{parse_cycles, parse_group};
use crate::groupcore::{catalog_entry, subgroup_generated, GroupTable, Subgroup, DEFAULT_ORDER_CAP};
use crate::repmod::text::parse_representation;

fn parse_err(line: usize, message: impl Into<String>) -> ScenarioError {
    ScenarioError::Parse {
        line,
        message: message.into(),
    }
}

/// Reads `path` and resolves `@file` references next to it.
pub fn read_scenario_file(path: &Path) -> Result<Scenario, ScenarioError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ScenarioError::Io(format!("{}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_scenario(&text, |name| {
        let p = dir.join(name);
        std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))
    })
}

/// Parses a scenario; `load` returns the contents of a referenced file.
pub fn parse_scenario(
    text: &str,
    load: impl Fn(&str) -> Result<String, String>,
) -> Result<Scenario, ScenarioError> {
    let mut id = None;
    let mut field = None;
    let mut group: Option<(usize, GroupTable)> = None;
    let mut normal_seeds: Option<(usize, Vec<usize>)> = None;
    let mut module: Option<(usize, String)> = None;
    let mut claims = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or_else(|| parse_err(line, "expected `key=value`"))?;
        let (key, value) = (key.trim(), value.trim());
        let once = |slot: bool| {
            if slot {
                Err(parse_err(line, format!("duplicate key `{key}`")))
            } else {
                Ok(())
            }
        };
        match key {
            "id" => {
                once(id.is_some())?;
                if value.is_empty() || value.contains(char::is_whitespace) {
                    return Err(parse_err(line, "id must be a single nonempty token"));
                }
                id = Some(value.to_string());
            }
            "field" => {
                once(field.is_some())?;
                let p = value
                    .parse::<u64>()
                    .map_err(|_| parse_err(line, format!("bad field `{value}`")))?;
                field = Some(PrimeField::new(p).map_err(|e| parse_err(line, e.to_string()))?);
            }
            "group" => {
                once(group.is_some())?;
                group = Some((line, parse_group_value(line, value, &load)?));
            }
            "normal" => {
                once(normal_seeds.is_some())?;
                let seeds = value
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| parse_usize(line, t, "element index"))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| parse_err(line, e.message))?;
                normal_seeds = Some((line, seeds));
            }
            "module" => {
                once(module.is_some())?;
                let name = value
                    .strip_prefix('@')
                    .ok_or_else(|| parse_err(line, "module must be `@file`"))?;
                module = Some((line, name.to_string()));
            }
            "claim" => {
                let claim = Claim::parse(line, value)?;
                if claim.id.needs_crossed() {
                    return Err(parse_err(
                        line,
                        format!("claim `{}` needs a built crossed product", claim.id.name()),
                    ));
                }
                if !seen.insert(claim.id) {
                    return Err(parse_err(
                        line,
                        format!("claim `{}` listed twice", claim.id.name()),
                    ));
                }
                claims.push(claim);
            }
            _ => return Err(parse_err(line, format!("unknown key `{key}`"))),
        }
    }
    let last = text.lines().count().max(1);
    let missing = |what: &str| parse_err(last, format!("missing `{what}=`"));
    let id = id.ok_or_else(|| missing("id"))?;
    let field = field.ok_or_else(|| missing("field"))?;
    let (_, table) = group.ok_or_else(|| missing("group"))?;
    let (normal_line, seeds) = normal_seeds.ok_or_else(|| missing("normal"))?;
    let (module_line, module_file) = module.ok_or_else(|| missing("module"))?;
    if claims.is_empty() {
        return Err(missing("claim"));
    }
    let table = table.into_arc();
    if let Some(&bad) = seeds.iter().find(|&&s| s >= table.order()) {
        return Err(parse_err(
            normal_line,
            format!("element {bad} outside a group of order {}", table.order()),
        ));
    }
    let group = Subgroup::full(table.clone());
    let normal = subgroup_generated(&table, &seeds);
    if !normal.is_normal_in(&group) {
        return Err(parse_err(normal_line, "subgroup is not normal"));
    }
    let contents = load(&module_file).map_err(|e| parse_err(module_line, e))?;
    let module_w = parse_representation(&contents, |name| (name == "N").then(|| normal.clone()))
        .map_err(|e| parse_err(module_line, format!("{module_file}: {e}")))?;
    if module_w.field() != field {
        return Err(parse_err(
            module_line,
            format!(
                "module is over F_{} but the scenario field is F_{}",
                module_w.field().modulus(),
                field.modulus()
            ),
        ));
    }
    Ok(Scenario {
        id,
        field,
        group,
        normal,
        module_w,
        expected: claims,
        crossed: None,
    })
}

fn parse_group_value(
    line: usize,
    value: &str,
    load: &impl Fn(&str) -> Result<String, String>,
) -> Result<GroupTable, ScenarioError> {
    if let Some(rest) = value.strip_prefix("perm:") {
        let (degree, cycles) = rest
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected `perm:<degree>:<generators>`"))?;
        let degree = parse_usize(line, degree.trim(), "degree").map_err(|e| parse_err(line, e.message))?;
        let gens = cycles
            .split(';')
            .map(|c| parse_cycles(line, c, degree))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| parse_err(line, e.message))?;
        GroupTable::from_permutations_capped(degree, &gens, DEFAULT_ORDER_CAP)
            .map_err(|e| parse_err(line, e.to_string()))
    } else if let Some(rest) = value.strip_prefix("table:") {
        let name = rest
            .strip_prefix('@')
            .ok_or_else(|| parse_err(line, "expected `table:@file`"))?;
        let contents = load(name).map_err(|e| parse_err(line, e))?;
        parse_group(&contents).map_err(|e| parse_err(line, format!("{name}: {e}")))
    } else if let Some(name) = value.strip_prefix("catalog:") {
        catalog_entry(name).ok_or_else(|| parse_err(line, format!("unknown catalog group `{name}`")))
    } else {
        Err(parse_err(
            line,
            "group must be `perm:...`, `table:@file` or `catalog:<name>`",
        ))
    }
}
