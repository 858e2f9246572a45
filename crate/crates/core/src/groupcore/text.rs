//! Group files: `perm <degree>` followed by one generator per line in cycle
//! notation, or `table <n>` followed by `n` rows of `n` indices.

use super::{GroupTable, DEFAULT_ORDER_CAP};
use crate::exactfield::text::{parse_usize, Lines, ParseError};

pub fn parse_group(text: &str) -> Result<GroupTable, ParseError> {
    let mut lines = Lines::new(text);
    let g = read_group(&mut lines)?;
    lines.finish()?;
    Ok(g)
}

/// Reads a group block; generator lines continue until a line that does not
/// start with `(`.
pub fn read_group(lines: &mut Lines<'_>) -> Result<GroupTable, ParseError> {
    let (n, header) = lines.expect("group header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    match toks.as_slice() {
        ["perm", degree] => {
            let degree = parse_usize(n, degree, "degree")?;
            let mut gens = Vec::new();
            while let Some((ln, line)) = lines.peek() {
                if !line.starts_with('(') {
                    break;
                }
                lines.next_line();
                gens.push(parse_cycles(ln, line, degree)?);
            }
            GroupTable::from_permutations_capped(degree, &gens, DEFAULT_ORDER_CAP)
                .map_err(|e| ParseError::new(n, e.to_string()))
        }
        ["table", order] => {
            let order = parse_usize(n, order, "order")?;
            let mut rows = Vec::with_capacity(order);
            for _ in 0..order {
                let (ln, line) = lines.expect("table row")?;
                let row = line
                    .split_whitespace()
                    .map(|t| parse_usize(ln, t, "element index"))
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != order {
                    return Err(ParseError::new(
                        ln,
                        format!("expected {order} entries, found {}", row.len()),
                    ));
                }
                rows.push(row);
            }
            GroupTable::from_table(&rows).map_err(|e| ParseError::new(n, e.to_string()))
        }
        _ => Err(ParseError::new(
            n,
            "group header must be `perm <degree>` or `table <n>`",
        )),
    }
}

/// Parses `(0 1)(2 3)` style cycle notation; `()` is the identity.
pub fn parse_cycles(line: usize, text: &str, degree: usize) -> Result<Vec<usize>, ParseError> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner_end = rest
            .find(')')
            .filter(|_| rest.starts_with('('))
            .ok_or_else(|| ParseError::new(line, format!("malformed cycle notation `{text}`")))?;
        let points = rest[1..inner_end]
            .split_whitespace()
            .map(|t| parse_usize(line, t, "point"))
            .collect::<Result<Vec<_>, _>>()?;
        for (i, &a) in points.iter().enumerate() {
            if a >= degree {
                return Err(ParseError::new(
                    line,
                    format!("point {a} exceeds degree {degree}"),
                ));
            }
            if std::mem::replace(&mut used[a], true) {
                return Err(ParseError::new(
                    line,
                    format!("point {a} repeated in `{text}`"),
                ));
            }
            perm[a] = points[(i + 1) % points.len()];
        }
        rest = rest[inner_end + 1..].trim_start();
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        let s3 = parse_group("perm 3\n(0 1)\n(0 1 2)\n").unwrap();
        assert_eq!(s3.order(), 6);
        let c3 = parse_group("# cyclic\ntable 3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(parse_group("perm 4\n").unwrap().order(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(parse_group("perm 3\n(0 1)\n(0 5)\n").unwrap_err().line, 3);
        assert_eq!(parse_group("table 2\n0 1\n1\n").unwrap_err().line, 3);
        assert_eq!(parse_group("group 2\n").unwrap_err().line, 1);
        assert_eq!(parse_group("table 2\n0 1\n1 1\n").unwrap_err().line, 1);
        assert_eq!(parse_group("perm 3\n(0 1\n").unwrap_err().line, 2);
    }

    #[test]
    fn cycle_parsing() {
        assert_eq!(parse_cycles(1, "(0 1)(2 3)", 4).unwrap(), vec![1, 0, 3, 2]);
        assert_eq!(parse_cycles(1, "()", 2).unwrap(), vec![0, 1]);
        assert_eq!(parse_cycles(1, "(0 1 2)", 3).unwrap(), vec![1, 2, 0]);
    }
}
