//! Small recursive-descent reader for polynomial expressions over a fixed
//! list of commuting symbols.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*' factor) | ('/' integer))*
//! factor := atom ['^' integer]
//! atom   := integer | symbol | '(' expr ')'
//! ```
//!
//! Both the parameter polynomials and the plain operator notation are read
//! through this; operator text is taken to be written in normal order, so
//! multiplication and derivative symbols can be treated as commuting letters.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::Rational;
use crate::error::ParseError;

/// Sparse polynomial keyed by exponent vectors over the caller's symbols.
pub type SparseExpr = BTreeMap<Vec<u16>, Rational>;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Int(s.parse().expect("digits")));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(ParseError::new(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Reader<'a> {
    tokens: Vec<Token>,
    pos: usize,
    symbols: &'a [&'a str],
}

fn mul(a: &SparseExpr, b: &SparseExpr) -> SparseExpr {
    let mut out = SparseExpr::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e).or_insert_with(Rational::zero);
            *entry += &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn add_into(acc: &mut SparseExpr, b: SparseExpr, sign: bool) {
    for (e, c) in b {
        let entry = acc.entry(e).or_insert_with(Rational::zero);
        if sign {
            *entry += &c;
        } else {
            *entry -= &c;
        }
    }
    acc.retain(|_, c| !c.is_zero());
}

impl<'a> Reader<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn constant(&self, c: Rational) -> SparseExpr {
        let mut m = SparseExpr::new();
        if !c.is_zero() {
            m.insert(vec![0; self.symbols.len()], c);
        }
        m
    }

    fn integer(&mut self) -> Result<u32, ParseError> {
        match self.next() {
            Some(Token::Int(n)) => {
                u32::try_from(n).map_err(|_| ParseError::new("exponent out of range"))
            }
            _ => Err(ParseError::new("expected integer")),
        }
    }

    fn expr(&mut self) -> Result<SparseExpr, ParseError> {
        let mut sign = true;
        match self.peek() {
            Some(Token::Plus) => {
                self.pos += 1;
            }
            Some(Token::Minus) => {
                self.pos += 1;
                sign = false;
            }
            _ => {}
        }
        let mut acc = SparseExpr::new();
        let t = self.term()?;
        add_into(&mut acc, t, sign);
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    add_into(&mut acc, t, true);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    add_into(&mut acc, t, false);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparseExpr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = match self.next() {
                        Some(Token::Int(n)) if n != BigInt::from(0) => n,
                        _ => return Err(ParseError::new("expected nonzero integer divisor")),
                    };
                    let inv = Rational::from_big(BigInt::from(1), d);
                    for c in acc.values_mut() {
                        *c *= &inv;
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SparseExpr, ParseError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let e = self.integer()?;
            let mut acc = self.constant(Rational::one());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SparseExpr, ParseError> {
        match self.next() {
            Some(Token::Int(n)) => Ok(self.constant(Rational::from(n))),
            Some(Token::Ident(name)) => {
                let idx = self
                    .symbols
                    .iter()
                    .position(|s| *s == name)
                    .ok_or_else(|| ParseError::new(format!("unknown symbol `{name}`")))?;
                let mut e = vec![0u16; self.symbols.len()];
                e[idx] = 1;
                let mut m = SparseExpr::new();
                m.insert(e, Rational::one());
                Ok(m)
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(ParseError::new("expected `)`")),
                }
            }
            Some(t) => Err(ParseError::new(format!("unexpected token {t:?}"))),
            None => Err(ParseError::new("unexpected end of input")),
        }
    }
}

/// Reads `input` as a polynomial in `symbols`.
pub fn parse_sparse(input: &str, symbols: &[&str]) -> Result<SparseExpr, ParseError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(ParseError::new("empty expression"));
    }
    let mut r = Reader {
        tokens,
        pos: 0,
        symbols,
    };
    let out = r.expr()?;
    if r.pos != r.tokens.len() {
        return Err(ParseError::new(format!(
            "trailing input after token {}",
            r.pos
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_products_and_powers() {
        let e = parse_sparse("(a + b)^2 - 2*a*b", &["a", "b"]).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[&vec![2, 0]], Rational::one());
        assert_eq!(e[&vec![0, 2]], Rational::one());
    }

    #[test]
    fn division_by_integer() {
        let e = parse_sparse("-a/4 + 1/2", &["a"]).unwrap();
        assert_eq!(e[&vec![1]], Rational::new(-1, 4));
        assert_eq!(e[&vec![0]], Rational::new(1, 2));
    }

    #[test]
    fn rejects_unknown_symbols() {
        assert!(parse_sparse("a + q", &["a"]).is_err());
        assert!(parse_sparse("(a", &["a"]).is_err());
        assert!(parse_sparse("", &["a"]).is_err());
        assert!(parse_sparse("a/0", &["a"]).is_err());
    }
}
