use std::collections::BTreeMap;

use super::{Exponents, Frame};
use crate::error::Error;
use crate::scalars::{ParamPoly, Rational};

/// Polynomial test function in the six coordinates of a frame.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyFunction {
    frame: Frame,
    terms: BTreeMap<Exponents, ParamPoly>,
}

pub(crate) fn add_into(map: &mut BTreeMap<Exponents, ParamPoly>, key: Exponents, c: ParamPoly) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(slot) => {
            let sum = &*slot + &c;
            if sum.is_zero() {
                map.remove(&key);
            } else {
                *slot = sum;
            }
        }
        None => {
            map.insert(key, c);
        }
    }
}

fn add_exps(a: &Exponents, b: &Exponents) -> Exponents {
    std::array::from_fn(|i| a[i] + b[i])
}

impl PolyFunction {
    pub fn zero(frame: Frame) -> Self {
        PolyFunction {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(frame: Frame, c: ParamPoly) -> Self {
        Self::monomial(frame, [0; 6], c)
    }

    pub fn one(frame: Frame) -> Self {
        Self::constant(frame, ParamPoly::one())
    }

    pub fn monomial(frame: Frame, exps: Exponents, c: ParamPoly) -> Self {
        let mut out = Self::zero(frame);
        add_into(&mut out.terms, exps, c);
        out
    }

    /// The coordinate function with index `i`.
    pub fn var(frame: Frame, i: usize) -> Self {
        let mut e = [0; 6];
        e[i] = 1;
        Self::monomial(frame, e, ParamPoly::one())
    }

    pub fn from_terms(frame: Frame, terms: impl IntoIterator<Item = (Exponents, ParamPoly)>) -> Self {
        let mut out = Self::zero(frame);
        for (e, c) in terms {
            add_into(&mut out.terms, e, c);
        }
        out
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ParamPoly)> {
        self.terms.iter()
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

    pub fn coefficient(&self, e: &Exponents) -> ParamPoly {
        self.terms.get(e).cloned().unwrap_or_else(ParamPoly::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    fn check(&self, other: &PolyFunction) -> Result<(), Error> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                expected: self.frame,
                found: other.frame,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyFunction) -> Result<PolyFunction, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            add_into(&mut out.terms, *e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyFunction) -> Result<PolyFunction, Error> {
        self.add(&other.scale(&ParamPoly::int(-1)))
    }

    pub fn scale(&self, c: &ParamPoly) -> PolyFunction {
        PolyFunction::from_terms(self.frame, self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    pub fn mul(&self, other: &PolyFunction) -> Result<PolyFunction, Error> {
        self.check(other)?;
        let mut out = PolyFunction::zero(self.frame);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                add_into(&mut out.terms, add_exps(a, b), x * y);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> PolyFunction {
        let mut acc = PolyFunction::one(self.frame);
        for _ in 0..e {
            acc = acc.mul(self).expect("same frame");
        }
        acc
    }

    /// Partial derivative with respect to coordinate `i`.
    pub fn derivative(&self, i: usize) -> PolyFunction {
        let mut out = PolyFunction::zero(self.frame);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = *e;
            f[i] -= 1;
            add_into(&mut out.terms, f, c.scale(&Rational::from_int(e[i] as i64)));
        }
        out
    }

    /// Substitutes coordinate `i` by `images[i]`; the result lives in the
    /// images' frame.
    pub fn compose(&self, images: &[PolyFunction; 6]) -> Result<PolyFunction, Error> {
        let target = images[0].frame;
        for img in images.iter() {
            if img.frame != target {
                return Err(Error::FrameMismatch {
                    expected: target,
                    found: img.frame,
                });
            }
        }
        let mut powers: Vec<Vec<PolyFunction>> = images.iter().map(|p| vec![PolyFunction::one(target), p.clone()]).collect();
        let mut out = PolyFunction::zero(target);
        for (e, c) in &self.terms {
            let mut term = PolyFunction::constant(target, c.clone());
            for i in 0..6 {
                let k = e[i] as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                if k > 0 {
                    term = term.mul(&powers[i][k])?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Coefficients mapped through `f`, zeros dropped.
    pub fn map_coefficients(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> PolyFunction {
        PolyFunction::from_terms(self.frame, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl std::fmt::Debug for PolyFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PolyFunction[{}](", self.frame)?;
        let op = super::DiffOp::multiplication(self);
        write!(f, "{})", super::format::to_plain(&op))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_and_compose() {
        let fr = Frame::Final;
        let x = PolyFunction::var(fr, 0);
        let y = PolyFunction::var(fr, 1);
        let f = x.mul(&x).unwrap().mul(&y).unwrap();
        assert_eq!(
            f.derivative(0),
            x.mul(&y).unwrap().scale(&ParamPoly::int(2))
        );
        assert!(f.derivative(3).is_zero());
        let shift = x.add(&PolyFunction::one(fr)).unwrap();
        let images = [shift.clone(), y.clone(), PolyFunction::var(fr, 2), PolyFunction::var(fr, 3), PolyFunction::var(fr, 4), PolyFunction::var(fr, 5)];
        let g = f.compose(&images).unwrap();
        assert_eq!(g, shift.pow(2).mul(&y).unwrap());
    }

    #[test]
    fn frames_must_agree() {
        let a = PolyFunction::one(Frame::Final);
        let b = PolyFunction::one(Frame::Original);
        assert!(a.add(&b).is_err());
    }
}
