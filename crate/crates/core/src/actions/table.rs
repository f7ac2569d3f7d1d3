//! Action tables stored as text.
//!
//! ```text
//! table side=left frame=final variant=primary
//! gen a2+
//! -1 | 0 0 0 0 0 0 | 0 1 0 0 0 0
//! 1/2 | 0 0 0 0 0 1 | 1 0 0 0 0 0
//! gen b2-
//! 1 | 0 1 0 0 0 0 | @a2-
//! ...
//! ```
//!
//! Term lines use the operator machine format. A line whose last field is
//! `@gen` stands for `coeff * x^polyexp * pi(gen)`, resolved against the same
//! table (or the base table for generators it does not list).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError};
use crate::jacobi::Generator;
use crate::scalars::ParamPoly;
use crate::weyl::format::{parse_exponents, parse_term_line};
use crate::weyl::{DiffOp, Exponents, Frame};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    /// Generators a complete table of this side must cover.
    pub fn domain(self) -> &'static [Generator] {
        match self {
            Side::Left => &Generator::ALL,
            Side::Right => &Generator::RAISING,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Side {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(ParseError::new(format!("unknown side `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Primary,
    Simplified,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Primary => "primary",
            Variant::Simplified => "simplified",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "primary" => Ok(Variant::Primary),
            "simplified" => Ok(Variant::Simplified),
            other => Err(ParseError::new(format!("unknown variant `{other}`"))),
        }
    }
}

/// Generator images of one action in one frame.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionTable {
    pub side: Side,
    pub frame: Frame,
    pub variant: Variant,
    map: BTreeMap<Generator, DiffOp>,
}

impl ActionTable {
    pub fn new(side: Side, frame: Frame, variant: Variant, map: BTreeMap<Generator, DiffOp>) -> Self {
        ActionTable {
            side,
            frame,
            variant,
            map,
        }
    }

    pub fn get(&self, g: Generator) -> Option<&DiffOp> {
        self.map.get(&g)
    }

    /// `pi(g)`; panics outside the table's domain.
    pub fn op(&self, g: Generator) -> &DiffOp {
        self.map
            .get(&g)
            .unwrap_or_else(|| panic!("{} table has no entry for {g}", self.side))
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.map.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Generator, &DiffOp)> {
        self.map.iter().map(|(g, d)| (*g, d))
    }

    /// `pi(sum c_i g_i)`.
    pub fn image(&self, x: &[(Generator, crate::Rational)]) -> Result<DiffOp, Error> {
        let mut out = DiffOp::zero(self.frame);
        for (g, c) in x {
            let op = self.get(*g).ok_or_else(|| {
                Error::TableData(format!("{} table has no entry for {g}", self.side))
            })?;
            out = out.add(&op.scale(&ParamPoly::constant(c.clone())))?;
        }
        Ok(out)
    }

    /// Same table with every coefficient mapped through `f`.
    pub fn map_coefficients(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> ActionTable {
        let map = self
            .map
            .iter()
            .map(|(g, d)| (*g, d.map_coefficients(&f)))
            .collect();
        ActionTable { map, ..*self }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "table side={} frame={} variant={}\n",
            self.side, self.frame, self.variant
        );
        for (g, d) in &self.map {
            out.push_str(&format!("gen {g}\n"));
            let body = crate::weyl::to_machine(d);
            for line in body.lines().skip(1) {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    }
}

enum Line {
    Term(DiffOp),
    Ref(ParamPoly, Exponents, Generator),
}

fn parse_header(line: &str) -> Result<(Side, Frame, Variant), ParseError> {
    let rest = line
        .strip_prefix("table")
        .ok_or_else(|| ParseError::new(format!("expected table header, got `{line}`")))?;
    let (mut side, mut frame, mut variant) = (None, None, Some(Variant::Primary));
    for field in rest.split_whitespace() {
        let (k, v) = field
            .split_once('=')
            .ok_or_else(|| ParseError::new(format!("bad header field `{field}`")))?;
        match k {
            "side" => side = Some(v.parse()?),
            "frame" => frame = Some(v.parse()?),
            "variant" => variant = Some(v.parse()?),
            other => return Err(ParseError::new(format!("unknown header key `{other}`"))),
        }
    }
    match (side, frame, variant) {
        (Some(s), Some(f), Some(v)) => Ok((s, f, v)),
        _ => Err(ParseError::new("header needs side and frame")),
    }
}

/// Reads a table; generators missing from `text` are taken from `base`.
pub fn parse_table(text: &str, base: Option<&ActionTable>) -> Result<ActionTable, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::TableData("empty table".into()))?;
    let (side, frame, variant) = parse_header(header)?;
    let mut raw: BTreeMap<Generator, Vec<Line>> = BTreeMap::new();
    let mut current: Option<Generator> = None;
    for (no, line) in lines {
        let ctx = |e: ParseError| Error::TableData(format!("line {no}: {}", e.message));
        if let Some(name) = line.strip_prefix("gen ") {
            let g: Generator = name.parse().map_err(ctx)?;
            if raw.insert(g, Vec::new()).is_some() {
                return Err(Error::TableData(format!("line {no}: {g} listed twice")));
            }
            current = Some(g);
            continue;
        }
        let g = current.ok_or_else(|| Error::TableData(format!("line {no}: term before any `gen`")))?;
        let fields: Vec<&str> = line.split('|').collect();
        let parsed = if fields.len() == 3 && fields[2].trim().starts_with('@') {
            let c: ParamPoly = fields[0].parse().map_err(ctx)?;
            let e = parse_exponents(fields[1]).map_err(ctx)?;
            let target: Generator = fields[2].trim()[1..].parse().map_err(ctx)?;
            Line::Ref(c, e, target)
        } else {
            let (key, c) = parse_term_line(line).map_err(ctx)?;
            Line::Term(DiffOp::term(frame, key.poly, key.deriv, c))
        };
        raw.get_mut(&g).expect("current section").push(parsed);
    }

    for g in raw.keys() {
        if !side.domain().contains(g) {
            return Err(Error::TableData(format!("{side} table lists {g}, outside its domain")));
        }
    }
    if let Some(b) = base {
        if b.side != side || b.frame != frame {
            return Err(Error::TableData("base table has another side or frame".into()));
        }
    }

    let mut resolved: BTreeMap<Generator, DiffOp> = BTreeMap::new();
    let mut stack = Vec::new();
    for g in side.domain() {
        resolve(*g, &raw, base, frame, &mut resolved, &mut stack)?;
    }
    let table = ActionTable::new(side, frame, variant, resolved);
    validate(&table)?;
    Ok(table)
}

fn resolve(
    g: Generator,
    raw: &BTreeMap<Generator, Vec<Line>>,
    base: Option<&ActionTable>,
    frame: Frame,
    done: &mut BTreeMap<Generator, DiffOp>,
    stack: &mut Vec<Generator>,
) -> Result<DiffOp, Error> {
    if let Some(d) = done.get(&g) {
        return Ok(d.clone());
    }
    let Some(lines) = raw.get(&g) else {
        let d = base
            .and_then(|b| b.get(g))
            .cloned()
            .ok_or_else(|| Error::TableData(format!("missing entry for {g}")))?;
        done.insert(g, d.clone());
        return Ok(d);
    };
    if stack.contains(&g) {
        return Err(Error::TableData(format!("cyclic reference through {g}")));
    }
    stack.push(g);
    let mut out = DiffOp::zero(frame);
    for line in lines {
        let term = match line {
            Line::Term(d) => d.clone(),
            Line::Ref(c, e, target) => {
                let inner = resolve(*target, raw, base, frame, done, stack)?;
                DiffOp::term(frame, *e, [0; 6], c.clone()).compose(&inner)?
            }
        };
        out = out.add(&term)?;
    }
    stack.pop();
    done.insert(g, out.clone());
    Ok(out)
}

/// Load-time checks: the Cartan entries carry `-L_i`, the center is `-Lh`.
fn validate(t: &ActionTable) -> Result<(), Error> {
    if t.side == Side::Right {
        return Ok(());
    }
    let expect = |g: Generator, s: &str| -> Result<(), Error> {
        let want: ParamPoly = s.parse().expect("literal");
        let got = t.op(g).coefficient([0; 6], [0; 6]);
        if got != want {
            return Err(Error::TableData(format!(
                "pi_L({g}) has scalar part {got}, expected {want}"
            )));
        }
        Ok(())
    };
    expect(Generator::H1, "-L1")?;
    expect(Generator::H2, "-L2")?;
    expect(Generator::Z, "-Lh")?;
    if t.op(Generator::Z).len() != 1 {
        return Err(Error::TableData("pi_L(Z) must be the scalar -Lh".into()));
    }
    Ok(())
}
