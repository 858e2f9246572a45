//! Line-oriented text formats. Every parse error carries a 1-based line number.

use std::fmt::Write as _;

use super::{Matrix, PrimeField};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Cursor over the meaningful lines of a document. Blank lines and lines
/// starting with `#` are skipped.
#[derive(Clone, Debug)]
pub struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    pub fn new(text: &'a str) -> Self {
        let lines: Vec<_> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let last_line = text.lines().count().max(1);
        Lines {
            lines,
            pos: 0,
            last_line,
        }
    }

    pub fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    pub fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let l = self.peek();
        if l.is_some() {
            self.pos += 1;
        }
        l
    }

    /// Next line, or an end-of-input error mentioning `what`.
    pub fn expect(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        self.next_line().ok_or_else(|| {
            ParseError::new(
                self.last_line,
                format!("unexpected end of input, expected {what}"),
            )
        })
    }

    pub fn is_done(&self) -> bool {
        self.pos >= self.lines.len()
    }

    pub fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some((n, l)) => Err(ParseError::new(n, format!("trailing content `{l}`"))),
        }
    }
}

pub fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("expected {what}, found `{token}`")))
}

pub fn parse_u64(line: usize, token: &str, what: &str) -> Result<u64, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("expected {what}, found `{token}`")))
}

/// Checks that `tokens` starts with the literal keywords at the given
/// positions, e.g. `expect_keywords(n, &toks, &[(0, "matrix"), (3, "mod")])`.
pub fn expect_keywords(
    line: usize,
    tokens: &[&str],
    keywords: &[(usize, &str)],
) -> Result<(), ParseError> {
    for &(i, kw) in keywords {
        if tokens.get(i) != Some(&kw) {
            return Err(ParseError::new(
                line,
                format!(
                    "expected `{kw}` at position {}, found `{}`",
                    i + 1,
                    tokens.get(i).unwrap_or(&"")
                ),
            ));
        }
    }
    Ok(())
}

/// Serializes in the canonical format: a `matrix <rows> <cols> mod <p>`
/// header, then one line per row of space-separated residues.
pub fn write_matrix(m: &Matrix) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "matrix {} {} mod {}",
        m.rows(),
        m.cols(),
        m.field().modulus()
    )
    .unwrap();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<Matrix, ParseError> {
    let mut lines = Lines::new(text);
    let m = read_matrix(&mut lines, None)?;
    lines.finish()?;
    Ok(m)
}

/// Reads one matrix block from `lines`. When `field` is given, the header
/// modulus must match it.
pub fn read_matrix(lines: &mut Lines<'_>, field: Option<PrimeField>) -> Result<Matrix, ParseError> {
    let (n, header) = lines.expect("matrix header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 5 {
        return Err(ParseError::new(
            n,
            "matrix header must be `matrix <rows> <cols> mod <p>`",
        ));
    }
    expect_keywords(n, &toks, &[(0, "matrix"), (3, "mod")])?;
    let rows = parse_usize(n, toks[1], "row count")?;
    let cols = parse_usize(n, toks[2], "column count")?;
    let p = parse_u64(n, toks[4], "modulus")?;
    let fld = PrimeField::new(p).map_err(|e| ParseError::new(n, e.to_string()))?;
    if let Some(expected) = field {
        if expected != fld {
            return Err(ParseError::new(
                n,
                format!(
                    "matrix is over F_{p} but F_{} was declared",
                    expected.modulus()
                ),
            ));
        }
    }
    let mut data = Vec::with_capacity(rows * cols);
    // Rows of a zero-column matrix are empty and therefore not written.
    for _ in 0..if cols == 0 { 0 } else { rows } {
        let (ln, row) = lines.expect("matrix row")?;
        let before = data.len();
        for tok in row.split_whitespace() {
            let x = parse_u64(ln, tok, "residue")?;
            if x >= p {
                return Err(ParseError::new(
                    ln,
                    format!("residue {x} not reduced mod {p}"),
                ));
            }
            data.push(x as u32);
        }
        if data.len() - before != cols {
            return Err(ParseError::new(
                ln,
                format!("expected {cols} entries, found {}", data.len() - before),
            ));
        }
    }
    Ok(Matrix::from_vec(fld, rows, cols, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(f, &[[1, 6, 0], [3, 2, 5]]);
        let s = write_matrix(&m);
        assert_eq!(s, "matrix 2 3 mod 7\n1 6 0\n3 2 5\n");
        assert_eq!(parse_matrix(&s).unwrap(), m);
    }

    #[test]
    fn errors_report_line_numbers() {
        let err = parse_matrix("matrix 2 2 mod 5\n1 2\n# note\n7 1\n").unwrap_err();
        assert_eq!(err.line, 4);
        let err = parse_matrix("matrix 2 2 mod 6\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_matrix("matrix 2 2 mod 5\n1 2 3\n0 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_matrix("matrix 2 2 mod 5\n1 2\n").unwrap_err();
        assert!(err.message.contains("end of input"));
    }
}
