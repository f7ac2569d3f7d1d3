//! Text renderings of [`DiffOp`].
//!
//! Machine format, one term per line after a frame header:
//!
//! ```text
//! frame final
//! -1/2 | 0 1 0 0 0 0 | 1 0 0 0 0 0
//! ```
//!
//! Each term line is `coeff | polyexp | derivexp`, where `coeff` is a
//! parameter polynomial in `L1`, `L2`, `Lh` with exact rationals `p/q`, and
//! the two exponent groups list six nonnegative integers in the frame's
//! variable order. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use super::op::OpKey;
use super::{DiffOp, Exponents, Frame};
use crate::error::ParseError;
use crate::scalars::expr::parse_sparse;
use crate::scalars::{render_rational, Param, ParamPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Latex,
    Machine,
}

impl std::str::FromStr for Format {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "latex" => Ok(Format::Latex),
            "machine" => Ok(Format::Machine),
            other => Err(ParseError::new(format!("unknown format `{other}`"))),
        }
    }
}

pub fn serialize(op: &DiffOp, format: Format) -> String {
    match format {
        Format::Plain => to_plain(op),
        Format::Latex => to_latex(op),
        Format::Machine => to_machine(op),
    }
}

fn plain_monomial(frame: Frame, key: &OpKey) -> String {
    let mut parts = Vec::new();
    for (names, exps) in [(frame.var_names(), &key.poly), (frame.deriv_names(), &key.deriv)] {
        for (name, &e) in names.iter().zip(exps.iter()) {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
    }
    parts.join("*")
}

fn latex_monomial(frame: Frame, key: &OpKey) -> String {
    let mut parts = Vec::new();
    for (name, &e) in frame.latex_names().iter().zip(key.poly.iter()) {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            e => parts.push(format!("{name}^{{{e}}}")),
        }
    }
    for (name, &e) in frame.latex_names().iter().zip(key.deriv.iter()) {
        match e {
            0 => {}
            1 => parts.push(format!(r"\partial_{{{name}}}")),
            e => parts.push(format!(r"\partial_{{{name}}}^{{{e}}}")),
        }
    }
    parts.join(" ")
}

/// Writes `sign` and `body` for one term; single-term coefficients absorb
/// their sign, longer ones are parenthesized.
fn render_terms(op: &DiffOp, latex: bool) -> String {
    if op.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (key, c)) in op.terms().enumerate() {
        let mono = if latex {
            latex_monomial(op.frame(), key)
        } else {
            plain_monomial(op.frame(), key)
        };
        let (neg, body) = if c.len() == 1 {
            let (m, r) = &c.terms()[0];
            let abs = ParamPoly::from_terms([(*m, r.abs())]);
            let coeff = if latex {
                match abs.as_constant() {
                    Some(q) => render_rational(&q, true),
                    None => abs.to_latex(),
                }
            } else {
                abs.to_string()
            };
            let body = if mono.is_empty() {
                coeff
            } else if abs.is_one() {
                mono
            } else if latex {
                format!("{coeff} {mono}")
            } else {
                format!("{coeff}*{mono}")
            };
            (r.is_negative(), body)
        } else {
            let coeff = if latex {
                format!(r"\left({}\right)", c.to_latex())
            } else {
                format!("({c})")
            };
            let body = if mono.is_empty() {
                coeff
            } else if latex {
                format!("{coeff} {mono}")
            } else {
                format!("{coeff}*{mono}")
            };
            (false, body)
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Plain ASCII rendering, e.g. `xi1*Dxi1 + 1`.
pub fn to_plain(op: &DiffOp) -> String {
    render_terms(op, false)
}

pub fn to_latex(op: &DiffOp) -> String {
    render_terms(op, true)
}

fn exps_text(e: &Exponents) -> String {
    e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn to_machine(op: &DiffOp) -> String {
    let mut out = format!("frame {}\n", op.frame());
    for (key, c) in op.terms() {
        let _ = writeln!(out, "{c} | {} | {}", exps_text(&key.poly), exps_text(&key.deriv));
    }
    out
}

pub(crate) fn parse_exponents(s: &str) -> Result<Exponents, ParseError> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != 6 {
        return Err(ParseError::new(format!(
            "expected 6 exponents, got {} in `{}`",
            parts.len(),
            s.trim()
        )));
    }
    let mut e = [0u8; 6];
    for (slot, p) in e.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|_| ParseError::new(format!("bad exponent `{p}`")))?;
    }
    Ok(e)
}

/// Parses the machine format; the frame comes from the header line.
pub fn parse_machine(text: &str) -> Result<DiffOp, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::new("missing `frame` header"))?;
    let frame: Frame = header
        .strip_prefix("frame")
        .ok_or_else(|| ParseError::new(format!("expected `frame <name>`, got `{header}`")))?
        .parse()?;
    let mut out = std::collections::BTreeMap::new();
    for (no, line) in lines {
        let (key, c) = parse_term_line(line).map_err(|e| ParseError::new(format!("line {no}: {}", e.message)))?;
        if out.insert(key, c).is_some() {
            return Err(ParseError::new(format!("line {no}: duplicate term")));
        }
    }
    Ok(DiffOp::from_terms(frame, out))
}

pub(crate) fn parse_term_line(line: &str) -> Result<(OpKey, ParamPoly), ParseError> {
    let fields: Vec<&str> = line.split('|').collect();
    if fields.len() != 3 {
        return Err(ParseError::new(format!(
            "expected `coeff | polyexp | derivexp`, got `{line}`"
        )));
    }
    let c: ParamPoly = fields[0].parse()?;
    let poly = parse_exponents(fields[1])?;
    let deriv = parse_exponents(fields[2])?;
    Ok((OpKey { poly, deriv }, c))
}

/// Parses plain notation, read as written in normal order.
pub fn parse_plain(text: &str, frame: Frame) -> Result<DiffOp, ParseError> {
    let mut symbols: Vec<&str> = Param::ALL.iter().map(|p| p.name()).collect();
    symbols.extend(frame.var_names().iter());
    symbols.extend(frame.deriv_names().iter());
    let sparse = parse_sparse(text, &symbols)?;
    let mut terms = Vec::with_capacity(sparse.len());
    for (e, c) in sparse {
        let narrow = |r: std::ops::Range<usize>| -> Result<Exponents, ParseError> {
            let mut out = [0u8; 6];
            for (slot, &x) in out.iter_mut().zip(&e[r]) {
                *slot = u8::try_from(x).map_err(|_| ParseError::new("exponent too large"))?;
            }
            Ok(out)
        };
        let key = OpKey {
            poly: narrow(3..9)?,
            deriv: narrow(9..15)?,
        };
        let coeff = ParamPoly::from_terms([(crate::scalars::ParamMonomial([e[0], e[1], e[2]]), c)]);
        terms.push((key, coeff));
    }
    Ok(DiffOp::from_terms(frame, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_contract() {
        let fr = Frame::Final;
        assert_eq!(to_plain(&DiffOp::zero(fr)), "0");
        let op = parse_plain("1 + xi1*Dxi1", fr).unwrap();
        assert_eq!(to_plain(&op), "xi1*Dxi1 + 1");
        let d = parse_plain("-eta2*Dzeta - 1/2*zeta*Deta1 + Domega - 1/2*xi2*Dxi1", fr).unwrap();
        assert_eq!(
            to_plain(&d),
            "Domega - 1/2*xi2*Dxi1 - 1/2*zeta*Deta1 - eta2*Dzeta"
        );
    }

    #[test]
    fn plain_round_trip_with_parameters() {
        let fr = Frame::Original;
        let op = parse_plain("(L1 - L2)*w*Dx1 - 3/4*Lh*x1^2 + 2*L1*Dw^2", fr).unwrap();
        let text = to_plain(&op);
        assert_eq!(parse_plain(&text, fr).unwrap(), op);
    }

    #[test]
    fn latex_rendering() {
        let op = parse_plain("Deta2 - 1/2*Dxi2^2", Frame::Final).unwrap();
        assert_eq!(
            to_latex(&op),
            r"-\frac{1}{2} \partial_{\xi_2}^{2} + \partial_{\eta_2}"
        );
    }

    #[test]
    fn machine_round_trip() {
        let op = parse_plain("-1/2*xi2*Dxi1 + (2*L1 - 3/2)*Dzeta + Lh", Frame::Final).unwrap();
        let text = to_machine(&op);
        assert_eq!(parse_machine(&text).unwrap(), op);
        assert!(text.starts_with("frame final\n"));
    }

    #[test]
    fn machine_rejects_malformed() {
        assert!(parse_machine("1 | 0 0 0 0 0 0 | 0 0 0 0 0 0").is_err());
        assert!(parse_machine("frame final\n1 | 0 0 0 0 0 | 0 0 0 0 0 0").is_err());
        assert!(parse_machine("frame final\n1 | 0 0 0 0 0 0 | 0 0 0 0 0 0\n2 | 0 0 0 0 0 0 | 0 0 0 0 0 0").is_err());
    }
}
