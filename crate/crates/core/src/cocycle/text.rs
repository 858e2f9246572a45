//! Factor-set files: a `cocycle <group-ref> mod <p>` header, then one row of
//! nonzero residues per group member, in member order.

use std::fmt::Write as _;

use super::{validate_cocycle, FactorSet};
use crate::exactfield::text::{expect_keywords, parse_u64, Lines, ParseError};
use crate::exactfield::PrimeField;
use crate::groupcore::Subgroup;

pub fn parse_factor_set(
    text: &str,
    resolve: impl Fn(&str) -> Option<Subgroup>,
) -> Result<FactorSet, ParseError> {
    let mut lines = Lines::new(text);
    let alpha = read_factor_set(&mut lines, resolve)?;
    lines.finish()?;
    Ok(alpha)
}

pub fn read_factor_set(
    lines: &mut Lines<'_>,
    resolve: impl Fn(&str) -> Option<Subgroup>,
) -> Result<FactorSet, ParseError> {
    let (n, header) = lines.expect("factor set header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 {
        return Err(ParseError::new(
            n,
            "header must be `cocycle <group-ref> mod <p>`",
        ));
    }
    expect_keywords(n, &toks, &[(0, "cocycle"), (2, "mod")])?;
    let group = resolve(toks[1])
        .ok_or_else(|| ParseError::new(n, format!("unknown group reference `{}`", toks[1])))?;
    let p = parse_u64(n, toks[3], "modulus")?;
    let field = PrimeField::new(p).map_err(|e| ParseError::new(n, e.to_string()))?;
    let k = group.order();
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (l, line) = lines.expect("factor set row")?;
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map(|v| field.from_i64(v))
                    .map_err(|_| ParseError::new(l, format!("bad residue `{t}`")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        if row.len() != k {
            return Err(ParseError::new(
                l,
                format!("expected {k} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    validate_cocycle(&group, field, &rows).map_err(|e| ParseError::new(n, e.to_string()))
}

pub fn write_factor_set(alpha: &FactorSet, group_ref: &str) -> String {
    let mut s = String::new();
    writeln!(s, "cocycle {group_ref} mod {}", alpha.field().modulus()).unwrap();
    for row in alpha.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        writeln!(s, "{}", cells.join(" ")).unwrap();
    }
    s
}
