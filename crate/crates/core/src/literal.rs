//! Text forms for bicomplex values and matrices.
//!
//! Literal grammar (whitespace between tokens is ignored):
//!
//! ```text
//! literal    := sum | '[' complex ';' complex ']'
//! sum        := sign? term (sign term)*
//! term       := real unit? | unit          unit ∈ { i1, i2, j }, j = i1·i2
//! complex    := sign? cterm (sign cterm)*
//! cterm      := real 'i'? | 'i'            'i1' is accepted for 'i'
//! real       := digits ('/' digits | '.' digits)?
//! ```
//!
//! Each unit may appear at most once per sum. Bracketed literals are the
//! idempotent form `[¹ξ ; ²ξ]`.
//!
//! Matrix files start with a header line `m n` followed by `m` rows of `n`
//! literals separated by `|`. Blank lines are ignored.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Zero};
use thiserror::Error;

use crate::bicomplex::BiComplex;
use crate::error::{Error, Result};
use crate::matrix::{BicomplexMatrix, BicomplexVector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

const SUM_UNITS: [&str; 3] = ["i1", "i2", "j"];

impl Parser {
    fn new(src: &str, line: usize, col0: usize) -> Self {
        Parser { chars: src.chars().collect(), pos: 0, line, col0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let found = match self.chars.get(self.pos) {
            Some(c) => format!("'{}'", c),
            None => "end of input".to_string(),
        };
        ParseError {
            line: self.line,
            column: self.col0 + self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &str) -> std::result::Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn real(&mut self) -> std::result::Result<Option<BigRational>, ParseError> {
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Ok(None);
        }
        let int = self.digits().expect("peeked a digit");
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            let Some(frac) = self.digits() else {
                return Err(self.error(&["digit"]));
            };
            let num = BigInt::from_str_radix(&format!("{}{}", int, frac), 10).expect("digits");
            let den = BigInt::from(10u32).pow(frac.len() as u32);
            return Ok(Some(BigRational::new(num, den)));
        }
        let num = BigInt::from_str_radix(&int, 10).expect("digits");
        if self.eat('/') {
            self.skip_ws();
            let at = self.pos;
            let Some(d) = self.digits() else {
                return Err(self.error(&["denominator"]));
            };
            let den = BigInt::from_str_radix(&d, 10).expect("digits");
            if den.is_zero() {
                self.pos = at;
                return Err(self.error(&["nonzero denominator"]));
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    fn starts_with(&mut self, word: &str) -> bool {
        self.skip_ws();
        let w: Vec<char> = word.chars().collect();
        self.chars[self.pos..].starts_with(&w)
    }

    /// Longest matching unit from `units`, consumed.
    fn unit(&mut self, units: &[&str]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, u) in units.iter().enumerate() {
            if self.starts_with(u) && best.is_none_or(|b| units[b].len() < u.len()) {
                best = Some(k);
            }
        }
        if let Some(k) = best {
            self.pos += units[k].chars().count();
        }
        best
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    /// Signed sum of terms over `units`; returns coefficients indexed by
    /// unit position, with slot 0 for the bare real.
    fn sum(&mut self, units: &[&str], term_names: &[&str]) -> std::result::Result<Vec<BigRational>, ParseError> {
        let mut coeffs = vec![BigRational::zero(); units.len() + 1];
        let mut seen = vec![false; units.len() + 1];
        let mut first = true;
        loop {
            let negative = match self.sign() {
                Some(neg) => neg,
                None if first => false,
                None => break,
            };
            first = false;
            let term_start = self.pos;
            let value = self.real()?;
            let unit = self.unit(units);
            let slot = match (&value, unit) {
                (None, None) => return Err(self.error(term_names)),
                (_, Some(k)) => k + 1,
                (Some(_), None) => 0,
            };
            if seen[slot] {
                self.pos = term_start;
                self.skip_ws();
                return Err(self.error(&["each unit at most once"]));
            }
            seen[slot] = true;
            let mut v = value.unwrap_or_else(|| BigRational::from_integer(1.into()));
            if negative {
                v = -v;
            }
            coeffs[slot] = v;
        }
        Ok(coeffs)
    }

    fn complex<S: Scalar>(&mut self) -> std::result::Result<S, ParseError> {
        let c = self.sum(&["i1", "i"], &["number", "i"])?;
        let im = &c[1] + &c[2];
        if !c[1].is_zero() && !c[2].is_zero() {
            return Err(self.error(&["each unit at most once"]));
        }
        Ok(S::from_rational(&c[0], &im))
    }

    fn literal<S: Scalar>(&mut self) -> std::result::Result<BiComplex<S>, ParseError> {
        let out = if self.eat('[') {
            let a = self.complex::<S>()?;
            self.expect(';', "';'")?;
            let b = self.complex::<S>()?;
            self.expect(']', "']'")?;
            BiComplex::from_idempotent(a, b)
        } else {
            let c = self.sum(&SUM_UNITS, &["number", "i1", "i2", "j", "'['"])?;
            let zero = BigRational::zero();
            let real = |r: &BigRational| S::from_rational(r, &zero);
            BiComplex::from_components(real(&c[0]), real(&c[1]), real(&c[2]), real(&c[3]))
        };
        if self.peek().is_some() {
            return Err(self.error(&["'+'", "'-'", "end of literal"]));
        }
        Ok(out)
    }
}

fn parse_literal_at<S: Scalar>(text: &str, line: usize, col0: usize) -> std::result::Result<BiComplex<S>, ParseError> {
    Parser::new(text, line, col0).literal()
}

/// Parses a single bicomplex literal.
pub fn parse_literal<S: Scalar>(text: &str) -> std::result::Result<BiComplex<S>, ParseError> {
    parse_literal_at(text, 1, 1)
}

pub fn parse_matrix<S: Scalar>(text: &str) -> Result<BicomplexMatrix<S>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let last_line = text.lines().count().max(1);

    let Some((hline, header)) = lines.next() else {
        return Err(ParseError {
            line: 1,
            column: 1,
            expected: vec!["header 'm n'".into()],
            found: "end of input".into(),
        }
        .into());
    };
    let (m, n) = parse_header(header, hline)?;

    let mut entries = Vec::with_capacity(m * n);
    for r in 0..m {
        if n == 0 {
            break;
        }
        let Some((lno, line)) = lines.next() else {
            return Err(ParseError {
                line: last_line + 1,
                column: 1,
                expected: vec![format!("row {} of {}", r + 1, m)],
                found: "end of input".into(),
            }
            .into());
        };
        let cells: Vec<&str> = line.split('|').collect();
        if cells.len() != n {
            return Err(Error::dims(
                format!("{} entries on line {}", n, lno),
                format!("{} entries", cells.len()),
            ));
        }
        let mut col = 1;
        for cell in cells {
            entries.push(parse_literal_at(cell, lno, col)?);
            col += cell.chars().count() + 1;
        }
    }
    if let Some((lno, line)) = lines.next() {
        let column = line.chars().take_while(|c| c.is_whitespace()).count() + 1;
        return Err(ParseError {
            line: lno,
            column,
            expected: vec!["end of input".into()],
            found: "extra row".into(),
        }
        .into());
    }
    BicomplexMatrix::new(m, n, entries)
}

fn parse_header(line: &str, lno: usize) -> std::result::Result<(usize, usize), ParseError> {
    let mut p = Parser::new(line, lno, 1);
    let dim = |p: &mut Parser, what: &str| {
        p.skip_ws();
        p.digits()
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| p.error(&[what]))
    };
    let m = dim(&mut p, "row count")?;
    let n = dim(&mut p, "column count")?;
    if p.peek().is_some() {
        return Err(p.error(&["end of header"]));
    }
    Ok((m, n))
}

/// Parses an `m 1` matrix file as a vector.
pub fn parse_vector<S: Scalar>(text: &str) -> Result<BicomplexVector<S>> {
    let a = parse_matrix::<S>(text)?;
    if a.cols() != 1 {
        return Err(Error::dims("1 column", format!("{} columns", a.cols())));
    }
    Ok(BicomplexVector::new(a.entries().to_vec()))
}

/// Writes a matrix in the file format using canonical literals.
pub fn format_matrix<S: Scalar>(a: &BicomplexMatrix<S>) -> String {
    let mut out = format!("{} {}\n", a.rows(), a.cols());
    for i in 0..a.rows() {
        let cells: Vec<String> = a.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" | "));
        out.push('\n');
    }
    out
}

pub fn format_vector<S: Scalar>(v: &BicomplexVector<S>) -> String {
    format_matrix(&v.to_column())
}

/// Displays a vector as `(x₁, …, xₙ)`.
pub struct VectorDisplay<'a, S>(pub &'a BicomplexVector<S>);

impl<S: Scalar> fmt::Display for VectorDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.entries().iter().map(ToString::to_string).collect();
        write!(f, "({})", cells.join(", "))
    }
}
