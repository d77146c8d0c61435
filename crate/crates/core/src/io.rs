//! The plain-text code file format.
//!
//! ```text
//! # comment
//! alpha 3
//! beta 2
//! rows
//! 1 1 1 | 2 0
//! 0 0 1 | 2 1
//! ```

use std::fmt;
use std::str::FromStr;

use crate::code::{build_code, Z2Z4Code};
use crate::error::{Error, Result};
use crate::zring::MixedVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub alpha: usize,
    pub beta: usize,
    pub rows: Vec<MixedVector>,
}

impl CodeFile {
    pub fn from_code(code: &Z2Z4Code) -> Self {
        CodeFile { alpha: code.alpha(), beta: code.beta(), rows: code.generators() }
    }

    pub fn to_code(&self) -> Result<Z2Z4Code> {
        build_code(self.alpha, self.beta, &self.rows)
    }
}

fn parse_header(line: &str, key: &str, lineno: usize) -> Result<usize> {
    let err = |column: usize, message: String| Error::Parse { line: lineno, column, message };
    let mut tokens = line.split_whitespace();
    match tokens.next() {
        Some(k) if k == key => {}
        _ => return Err(err(1, format!("expected `{key} <int>`"))),
    }
    let value = tokens.next().ok_or_else(|| err(line.len() + 1, format!("missing value for `{key}`")))?;
    let column = line.find(value).map_or(1, |i| i + 1);
    if tokens.next().is_some() {
        return Err(err(column + value.len() + 1, "trailing input".into()));
    }
    value.parse().map_err(|_| err(column, format!("`{value}` is not a nonnegative integer")))
}

impl FromStr for CodeFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty());

        let eof = |what: &str| Error::Parse { line: s.lines().count() + 1, column: 1, message: format!("missing `{what}` line") };
        let (n, l) = lines.next().ok_or_else(|| eof("alpha"))?;
        let alpha = parse_header(l, "alpha", n)?;
        let (n, l) = lines.next().ok_or_else(|| eof("beta"))?;
        let beta = parse_header(l, "beta", n)?;
        let (n, l) = lines.next().ok_or_else(|| eof("rows"))?;
        if l.trim() != "rows" {
            return Err(Error::Parse { line: n, column: 1, message: "expected `rows`".into() });
        }

        let mut rows = Vec::new();
        for (n, l) in lines {
            let v: MixedVector = l.parse().map_err(|e| match e {
                Error::Syntax { column, message } => Error::Parse { line: n, column, message },
                other => Error::Parse { line: n, column: 1, message: other.to_string() },
            })?;
            if v.shape() != (alpha, beta) {
                return Err(Error::Parse {
                    line: n,
                    column: 1,
                    message: format!("row has shape {:?}, expected ({alpha}, {beta})", v.shape()),
                });
            }
            rows.push(v);
        }
        Ok(CodeFile { alpha, beta, rows })
    }
}

impl fmt::Display for CodeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha {}", self.alpha)?;
        writeln!(f, "beta {}", self.beta)?;
        writeln!(f, "rows")?;
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
