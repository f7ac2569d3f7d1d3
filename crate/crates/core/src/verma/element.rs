use std::collections::BTreeMap;
use std::fmt;

use crate::jacobi::{Generator, PbwMonomial, WeightVector};
use crate::scalars::{Bindings, ParamPoly, Rational};
use crate::Error;

/// Exponents of `(a1+, a2+, b1+, b2+, c+, d+)` in a PBW raising monomial.
pub type RaisingExponents = [u16; 6];

pub(crate) fn to_pbw(e: &RaisingExponents) -> PbwMonomial {
    let mut m = [0u16; 15];
    m[..6].copy_from_slice(e);
    PbwMonomial(m)
}

/// Weight offset of a raising monomial from the lowest weight.
pub fn raising_weight(e: &RaisingExponents) -> WeightVector {
    to_pbw(e).weight()
}

/// Vector of the Verma module, as raising monomials applied to `|0>`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VermaElement {
    terms: BTreeMap<RaisingExponents, ParamPoly>,
}

impl VermaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The lowest-weight vector `|0>`.
    pub fn vacuum() -> Self {
        Self::monomial([0; 6], ParamPoly::one())
    }

    pub fn monomial(e: RaisingExponents, c: ParamPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c);
        out
    }

    pub fn add_term(&mut self, e: RaisingExponents, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                let sum = &*slot + &c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &VermaElement, c: &ParamPoly) {
        for (e, x) in &other.terms {
            self.add_term(*e, x * c);
        }
    }

    pub fn add(&self, other: &VermaElement) -> VermaElement {
        let mut out = self.clone();
        out.add_scaled(other, &ParamPoly::one());
        out
    }

    pub fn sub(&self, other: &VermaElement) -> VermaElement {
        let mut out = self.clone();
        out.add_scaled(other, &ParamPoly::int(-1));
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> VermaElement {
        let mut out = VermaElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RaisingExponents, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &RaisingExponents) -> ParamPoly {
        self.terms.get(e).cloned().unwrap_or_else(ParamPoly::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common weight offset of the terms, `None` if empty or inhomogeneous.
    pub fn weight(&self) -> Option<WeightVector> {
        let mut ws = self.terms.keys().map(raising_weight);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn map_coefficients(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> VermaElement {
        let mut out = VermaElement::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    pub fn substitute(&self, bindings: &Bindings) -> Result<VermaElement, Error> {
        bindings.check_acyclic()?;
        Ok(self.map_coefficients(|c| c.substitute_unchecked(bindings)))
    }

    /// Coefficient vector over `basis`, when all coefficients are constants
    /// supported on it.
    pub fn to_vector(&self, basis: &[RaisingExponents]) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); basis.len()];
        for (e, c) in &self.terms {
            let i = basis.iter().position(|b| b == e)?;
            out[i] = c.as_constant()?;
        }
        Some(out)
    }

    pub fn from_vector(basis: &[RaisingExponents], v: &[Rational]) -> VermaElement {
        let mut out = VermaElement::zero();
        for (e, c) in basis.iter().zip(v) {
            out.add_term(*e, ParamPoly::constant(c.clone()));
        }
        out
    }
}

fn write_raising(f: &mut fmt::Formatter<'_>, e: &RaisingExponents) -> fmt::Result {
    let mut first = true;
    for (g, &k) in Generator::RAISING.iter().zip(e.iter()) {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{g}")?;
        } else {
            write!(f, "{g}^{k}")?;
        }
    }
    f.write_str("|0>")
}

impl fmt::Display for VermaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = match c.as_constant() {
                Some(q) => (q.is_negative(), Some(q.abs())),
                None => (false, None),
            };
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            match abs {
                Some(q) if q.is_one() => {}
                Some(q) => write!(f, "{q}*")?,
                None => write!(f, "({c})*")?,
            }
            write_raising(f, e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for VermaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VermaElement({self})")
    }
}
