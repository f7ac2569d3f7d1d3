use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::expr::parse_sparse;
use super::Rational;
use crate::error::{Error, ParseError};

/// The formal parameters carried through every computation: the two
/// components of the lowest weight and the central charge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    L1,
    L2,
    LHat,
}

impl Param {
    pub const ALL: [Param; 3] = [Param::L1, Param::L2, Param::LHat];

    pub fn index(self) -> usize {
        self as usize
    }

    /// ASCII name used by the plain and machine formats.
    pub fn name(self) -> &'static str {
        match self {
            Param::L1 => "L1",
            Param::L2 => "L2",
            Param::LHat => "Lh",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Param::L1 => r"\Lambda_1",
            Param::L2 => r"\Lambda_2",
            Param::LHat => r"\hat{\Lambda}",
        }
    }
}

/// Exponents of `(L1, L2, Lh)`.
///
/// Ordered graded-lexicographically with `L1 < L2 < Lh`: total degree first,
/// then the `Lh` exponent, then `L2`, then `L1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamMonomial(pub [u16; 3]);

impl ParamMonomial {
    pub const ONE: ParamMonomial = ParamMonomial([0; 3]);

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        ParamMonomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }
}

impl Ord for ParamMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0[2].cmp(&other.0[2]))
            .then(self.0[1].cmp(&other.0[1]))
            .then(self.0[0].cmp(&other.0[0]))
    }
}

impl PartialOrd for ParamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `L1, L2, Lh` with exact rational coefficients.
///
/// Terms are stored sorted ascending by [`ParamMonomial`] order with no zero
/// coefficients, so derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: Vec<(ParamMonomial, Rational)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ParamPoly {
                terms: vec![(ParamMonomial::ONE, c)],
            }
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn param(p: Param) -> Self {
        let mut e = [0u16; 3];
        e[p.index()] = 1;
        ParamPoly {
            terms: vec![(ParamMonomial(e), Rational::one())],
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ParamMonomial, Rational)>) -> Self {
        let mut map: BTreeMap<ParamMonomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += &c;
        }
        ParamPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(ParamMonomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ParamMonomial::ONE && self.terms[0].1.is_one()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if *m == ParamMonomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, p: Param) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.0[p.index()] as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn contains(&self, p: Param) -> bool {
        self.degree_in(p) > 0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, c) = &other.terms[j];
                    out.push((*m, if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        ParamPoly { terms: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution of parameters by polynomials.
    ///
    /// A binding whose image (directly or through other bindings) mentions
    /// its own parameter is rejected.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Self, Error> {
        bindings.check_acyclic()?;
        Ok(self.substitute_unchecked(bindings))
    }

    pub(crate) fn substitute_unchecked(&self, bindings: &Bindings) -> Self {
        if bindings.is_empty() || self.terms.iter().all(|(m, _)| m == &ParamMonomial::ONE) {
            return self.clone();
        }
        let images: Vec<ParamPoly> = Param::ALL
            .iter()
            .map(|p| {
                bindings
                    .get(*p)
                    .cloned()
                    .unwrap_or_else(|| ParamPoly::param(*p))
            })
            .collect();
        let mut acc = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut t = ParamPoly::constant(c.clone());
            for (k, img) in images.iter().enumerate() {
                if m.0[k] > 0 {
                    t = &t * &img.pow(m.0[k] as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Evaluates at rational values for every parameter present.
    pub fn evaluate(&self, values: &[(Param, Rational)]) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for p in Param::ALL {
                let e = m.0[p.index()];
                if e > 0 {
                    let v = values.iter().find(|(q, _)| *q == p)?;
                    t *= &v.1.pow(e as u32);
                }
            }
            acc += &t;
        }
        Some(acc)
    }

    /// Splits into coefficients of powers of `p`: result `[c0, c1, ...]` with
    /// `self = sum c_i * p^i` and each `c_i` free of `p`.
    pub fn coefficients_in(&self, p: Param) -> Vec<ParamPoly> {
        let deg = self.degree_in(p) as usize;
        let mut buckets: Vec<Vec<(ParamMonomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest.0[p.index()] as usize;
            rest.0[p.index()] = 0;
            buckets[e].push((rest, c.clone()));
        }
        if self.is_zero() {
            return vec![ParamPoly::zero()];
        }
        buckets.into_iter().map(ParamPoly::from_terms).collect()
    }

    /// Terms in print order (highest monomial first).
    pub fn terms_descending(&self) -> impl Iterator<Item = &(ParamMonomial, Rational)> {
        self.terms.iter().rev()
    }

    pub fn to_latex(&self) -> String {
        render(self, true)
    }

    /// Number of terms; useful when deciding whether to parenthesize.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl From<Param> for ParamPoly {
    fn from(p: Param) -> Self {
        ParamPoly::param(p)
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self.merge(rhs, true)
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: ParamPoly) -> ParamPoly {
        self.merge(&rhs, false)
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        self.merge(&rhs, true)
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        // constant fast paths dominate operator composition
        if let [(m, c)] = self.terms.as_slice() {
            if *m == ParamMonomial::ONE {
                return rhs.scale(c);
            }
        }
        if let [(m, c)] = rhs.terms.as_slice() {
            if *m == ParamMonomial::ONE {
                return self.scale(c);
            }
        }
        ParamPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))),
        )
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

fn render(p: &ParamPoly, latex: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms_descending().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let vars = render_monomial(m, latex);
        if vars.is_empty() {
            out.push_str(&render_rational(&abs, latex));
        } else {
            if !abs.is_one() {
                out.push_str(&render_rational(&abs, latex));
                if !latex {
                    out.push('*');
                }
            }
            out.push_str(&vars);
        }
    }
    out
}

pub(crate) fn render_rational(r: &Rational, latex: bool) -> String {
    if latex && !r.is_integer() {
        let sign = if r.is_negative() { "-" } else { "" };
        format!(r"{sign}\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
    } else {
        r.to_string()
    }
}

fn render_monomial(m: &ParamMonomial, latex: bool) -> String {
    let mut parts = Vec::new();
    for p in Param::ALL {
        let e = m.0[p.index()];
        if e == 0 {
            continue;
        }
        let name = if latex { p.latex() } else { p.name() };
        parts.push(match (e, latex) {
            (1, _) => name.to_string(),
            (e, false) => format!("{name}^{e}"),
            (e, true) => format!("{name}^{{{e}}}"),
        });
    }
    parts.join(if latex { " " } else { "*" })
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false))
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl FromStr for ParamPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let names: Vec<&str> = Param::ALL.iter().map(|p| p.name()).collect();
        let sparse = parse_sparse(s, &names)?;
        Ok(ParamPoly::from_terms(sparse.into_iter().map(|(e, c)| {
            (ParamMonomial([e[0], e[1], e[2]]), c)
        })))
    }
}

/// A partial map from parameters to polynomial images.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Bindings {
    images: [Option<ParamPoly>; 3],
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, p: Param, image: ParamPoly) -> Self {
        self.images[p.index()] = Some(image);
        self
    }

    pub fn set(&mut self, p: Param, image: ParamPoly) {
        self.images[p.index()] = Some(image);
    }

    pub fn get(&self, p: Param) -> Option<&ParamPoly> {
        self.images[p.index()].as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.images.iter().all(Option::is_none)
    }

    pub fn bound(&self) -> impl Iterator<Item = (Param, &ParamPoly)> {
        Param::ALL
            .into_iter()
            .filter_map(|p| self.get(p).map(|img| (p, img)))
    }

    /// Rejects any dependency cycle among the bound parameters.
    pub fn check_acyclic(&self) -> Result<(), Error> {
        // depth-first walk over "p's image mentions q" edges
        fn visit(b: &Bindings, p: Param, stack: &mut Vec<Param>) -> Result<(), Error> {
            if stack.contains(&p) {
                return Err(Error::CyclicBinding(p.name()));
            }
            let Some(img) = b.get(p) else {
                return Ok(());
            };
            stack.push(p);
            for q in Param::ALL {
                if img.contains(q) {
                    visit(b, q, stack)?;
                }
            }
            stack.pop();
            Ok(())
        }
        for p in Param::ALL {
            visit(self, p, &mut Vec::new())?;
        }
        Ok(())
    }

    /// Composes `self` after `first`: the result maps `p` to
    /// `first(p)` with `self` substituted into it, plus any bindings of
    /// `self` for parameters `first` leaves alone.
    pub fn after(&self, first: &Bindings) -> Bindings {
        let mut out = Bindings::new();
        for p in Param::ALL {
            match first.get(p) {
                Some(img) => out.set(p, img.substitute_unchecked(self)),
                None => {
                    if let Some(img) = self.get(p) {
                        out.set(p, img.clone());
                    }
                }
            }
        }
        out
    }
}
