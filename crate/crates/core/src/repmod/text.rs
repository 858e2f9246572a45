//! Representation files: a `rep <group-ref> dim <d> mod <p>` header, then one
//! matrix block per generator of the referenced group, in generator order.

use std::fmt::Write as _;

use super::Representation;
use crate::exactfield::text::{
    expect_keywords, parse_u64, parse_usize, read_matrix, write_matrix, Lines, ParseError,
};
use crate::exactfield::PrimeField;
use crate::groupcore::Subgroup;

/// Parses a representation; `resolve` maps the group reference to the
/// acting group.
pub fn parse_representation(
    text: &str,
    resolve: impl Fn(&str) -> Option<Subgroup>,
) -> Result<Representation, ParseError> {
    let mut lines = Lines::new(text);
    let rep = read_representation(&mut lines, resolve)?;
    lines.finish()?;
    Ok(rep)
}

pub fn read_representation(
    lines: &mut Lines<'_>,
    resolve: impl Fn(&str) -> Option<Subgroup>,
) -> Result<Representation, ParseError> {
    let (n, header) = lines.expect("representation header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 6 {
        return Err(ParseError::new(
            n,
            "header must be `rep <group-ref> dim <d> mod <p>`",
        ));
    }
    expect_keywords(n, &toks, &[(0, "rep"), (2, "dim"), (4, "mod")])?;
    let group = resolve(toks[1])
        .ok_or_else(|| ParseError::new(n, format!("unknown group reference `{}`", toks[1])))?;
    let dim = parse_usize(n, toks[3], "dimension")?;
    let p = parse_u64(n, toks[5], "modulus")?;
    let field = PrimeField::new(p).map_err(|e| ParseError::new(n, e.to_string()))?;
    let mut images = Vec::new();
    for _ in group.generators() {
        let start = lines.peek().map_or(n, |(l, _)| l);
        let m = read_matrix(lines, Some(field))?;
        if m.rows() != dim || m.cols() != dim {
            return Err(ParseError::new(
                start,
                format!("generator matrix must be {dim}x{dim}"),
            ));
        }
        images.push(m);
    }
    Representation::from_generator_list(&group, field, dim, images)
        .map_err(|e| ParseError::new(n, e.to_string()))
}

pub fn write_representation(rep: &Representation, group_ref: &str) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "rep {group_ref} dim {} mod {}",
        rep.dim(),
        rep.field().modulus()
    )
    .unwrap();
    for m in rep.generator_images() {
        s.push_str(&write_matrix(&m));
    }
    s
}
