//! Matrix text format: first line n, then n lines of n whitespace-separated
//! entries. Entries are decimal literals or rationals "p/q"; rational
//! entries force exact mode and mixing the two in one file is an error.
//! Plain integers are valid in either mode.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};
use std::path::Path;

enum Token {
    Int(BigInt),
    Rat(BigRational),
    Float(f64),
}

fn parse_token(tok: &str, line: usize) -> Result<Token> {
    let err = |msg: String| Error::Parse { line, msg };
    if let Some((p, q)) = tok.split_once('/') {
        let p: BigInt = p
            .parse()
            .map_err(|_| err(format!("bad rational numerator '{p}'")))?;
        let q: BigInt = q
            .parse()
            .map_err(|_| err(format!("bad rational denominator '{q}'")))?;
        if !q.is_positive() {
            return Err(err(format!(
                "rational denominator must be positive in '{tok}'"
            )));
        }
        return Ok(Token::Rat(BigRational::new(p, q)));
    }
    if let Ok(i) = tok.parse::<BigInt>() {
        return Ok(Token::Int(i));
    }
    let x: f64 = tok
        .parse()
        .map_err(|_| err(format!("unrecognized entry '{tok}'")))?;
    if !x.is_finite() {
        return Err(err(format!("non-finite entry '{tok}'")));
    }
    Ok(Token::Float(x))
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty file".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: hline,
        msg: format!("expected the dimension n, got '{header}'"),
    })?;
    if n == 0 {
        return Err(Error::Parse {
            line: hline,
            msg: "n must be at least 1".into(),
        });
    }

    let mut tokens: Vec<Token> = Vec::with_capacity(n * n);
    let mut saw_rat = false;
    let mut saw_float = false;
    let mut last_line = hline;
    for _ in 0..n {
        let (lno, l) = lines.next().ok_or(Error::Parse {
            line: last_line + 1,
            msg: format!("expected {n} matrix rows"),
        })?;
        last_line = lno;
        let row: Vec<&str> = l.split_whitespace().collect();
        if row.len() != n {
            return Err(Error::Parse {
                line: lno,
                msg: format!("expected {n} entries, got {}", row.len()),
            });
        }
        for tok in row {
            let t = parse_token(tok, lno)?;
            match &t {
                Token::Rat(_) => saw_rat = true,
                Token::Float(_) => saw_float = true,
                Token::Int(_) => {}
            }
            if saw_rat && saw_float {
                return Err(Error::Parse {
                    line: lno,
                    msg: "mixed rational and decimal entries in one file".into(),
                });
            }
            tokens.push(t);
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lno,
            msg: "trailing content after the matrix".into(),
        });
    }

    if saw_float {
        let entries = tokens
            .into_iter()
            .map(|t| match t {
                Token::Float(x) => x,
                Token::Int(i) => crate::scalar::rat_to_f64(&BigRational::from_integer(i)),
                Token::Rat(_) => unreachable!("mixed files rejected above"),
            })
            .collect();
        Matrix::new_float(n, entries)
    } else {
        let entries = tokens
            .into_iter()
            .map(|t| match t {
                Token::Rat(r) => r,
                Token::Int(i) => BigRational::from_integer(i),
                Token::Float(_) => unreachable!(),
            })
            .collect();
        Matrix::new_exact(n, entries)
    }
}

pub fn read_matrix(path: &Path) -> Result<Matrix> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

/// Shortest round-trip decimal, with a fractional marker forced so the token
/// re-reads as float mode.
fn float_token(x: f64) -> String {
    let s = format!("{x}");
    if s.contains(['.', 'e', 'E']) {
        s
    } else {
        format!("{s}.0")
    }
}

fn exact_token(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_matrix(a: &Matrix) -> String {
    let n = a.n();
    let mut out = String::new();
    out.push_str(&n.to_string());
    out.push('\n');
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| match a.get(i, j) {
                crate::scalar::Scalar::Exact(r) => exact_token(&r),
                crate::scalar::Scalar::Float(x) => float_token(x),
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_matrix(path: &Path, a: &Matrix) -> Result<()> {
    std::fs::write(path, format_matrix(a))?;
    Ok(())
}
