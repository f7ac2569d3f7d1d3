use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::polyfn::{add_into, PolyFunction};
use super::{Exponents, Frame};
use crate::error::Error;
use crate::scalars::{Bindings, ParamPoly, Rational};

/// Normal-ordered monomial `x^poly * D^deriv`.
///
/// Ordered so that iteration gives the canonical print order: higher total
/// derivative order first, then lower polynomial degree, then derivative and
/// polynomial exponents in descending lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OpKey {
    pub poly: Exponents,
    pub deriv: Exponents,
}

fn total(e: &Exponents) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl Ord for OpKey {
    fn cmp(&self, other: &Self) -> Ordering {
        total(&other.deriv)
            .cmp(&total(&self.deriv))
            .then_with(|| total(&self.poly).cmp(&total(&other.poly)))
            .then_with(|| other.deriv.cmp(&self.deriv))
            .then_with(|| other.poly.cmp(&self.poly))
    }
}

impl PartialOrd for OpKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Differential operator with polynomial coefficients over `ParamPoly`.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    frame: Frame,
    terms: BTreeMap<OpKey, ParamPoly>,
}

fn insert(map: &mut BTreeMap<OpKey, ParamPoly>, key: OpKey, c: ParamPoly) {
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

/// `C(m, j) * n!/(n-j)!`, the Leibniz weight for moving `D^m` past `x^n`.
fn leibniz_weight(m: u8, n: u8, j: u8) -> Rational {
    let mut c = Rational::one();
    for t in 0..j {
        c = c * Rational::new((m - t) as i64 * (n - t) as i64, (t + 1) as i64);
    }
    c
}

impl DiffOp {
    pub fn zero(frame: Frame) -> Self {
        DiffOp {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(frame: Frame) -> Self {
        Self::constant(frame, ParamPoly::one())
    }

    pub fn constant(frame: Frame, c: ParamPoly) -> Self {
        Self::term(frame, [0; 6], [0; 6], c)
    }

    pub fn term(frame: Frame, poly: Exponents, deriv: Exponents, c: ParamPoly) -> Self {
        let mut out = Self::zero(frame);
        insert(&mut out.terms, OpKey { poly, deriv }, c);
        out
    }

    /// Multiplication by coordinate `i`.
    pub fn var(frame: Frame, i: usize) -> Self {
        let mut e = [0; 6];
        e[i] = 1;
        Self::term(frame, e, [0; 6], ParamPoly::one())
    }

    /// Partial derivative in coordinate `i`.
    pub fn deriv(frame: Frame, i: usize) -> Self {
        let mut e = [0; 6];
        e[i] = 1;
        Self::term(frame, [0; 6], e, ParamPoly::one())
    }

    pub fn multiplication(f: &PolyFunction) -> Self {
        let mut out = Self::zero(f.frame());
        for (e, c) in f.terms() {
            insert(&mut out.terms, OpKey { poly: *e, deriv: [0; 6] }, c.clone());
        }
        out
    }

    /// The vector field `sum_i f_i D_i`.
    pub fn vector_field(components: &[PolyFunction; 6]) -> Result<Self, Error> {
        let frame = components[0].frame();
        let mut out = Self::zero(frame);
        for (i, f) in components.iter().enumerate() {
            let d = Self::deriv(frame, i);
            out = out.add(&Self::multiplication(f).compose(&d)?)?;
        }
        Ok(out)
    }

    pub fn from_terms(frame: Frame, terms: impl IntoIterator<Item = (OpKey, ParamPoly)>) -> Self {
        let mut out = Self::zero(frame);
        for (k, c) in terms {
            insert(&mut out.terms, k, c);
        }
        out
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&OpKey, &ParamPoly)> {
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

    pub fn coefficient(&self, poly: Exponents, deriv: Exponents) -> ParamPoly {
        self.terms
            .get(&OpKey { poly, deriv })
            .cloned()
            .unwrap_or_else(ParamPoly::zero)
    }

    /// Highest total derivative order among the terms.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|k| total(&k.deriv)).max().unwrap_or(0)
    }

    fn check(&self, other: &DiffOp) -> Result<(), Error> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                expected: self.frame,
                found: other.frame,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &DiffOp) -> Result<DiffOp, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            insert(&mut out.terms, *k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DiffOp) -> Result<DiffOp, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            insert(&mut out.terms, *k, -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ParamPoly) -> DiffOp {
        DiffOp::from_terms(self.frame, self.terms.iter().map(|(k, x)| (*k, x * c)))
    }

    pub fn neg(&self) -> DiffOp {
        self.scale(&ParamPoly::int(-1))
    }

    /// `self ∘ other`, brought to normal order by the Leibniz rule.
    pub fn compose(&self, other: &DiffOp) -> Result<DiffOp, Error> {
        self.check(other)?;
        let left: Vec<(&OpKey, &ParamPoly)> = self.terms.iter().collect();
        let chunk = |pairs: &[(&OpKey, &ParamPoly)]| {
            let mut acc: HashMap<OpKey, ParamPoly> = HashMap::new();
            for (ka, ca) in pairs {
                for (kb, cb) in &other.terms {
                    compose_terms(ka, kb, &(*ca * cb), &mut acc);
                }
            }
            acc
        };
        let parts: Vec<HashMap<OpKey, ParamPoly>> = if left.len() * other.terms.len() > 4096 {
            left.par_chunks(8).map(chunk).collect()
        } else {
            vec![chunk(&left)]
        };
        let mut out = DiffOp::zero(self.frame);
        for part in parts {
            for (k, c) in part {
                insert(&mut out.terms, k, c);
            }
        }
        Ok(out)
    }

    /// `[self, other] = self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &DiffOp) -> Result<DiffOp, Error> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn pow(&self, e: u32) -> DiffOp {
        let mut acc = DiffOp::identity(self.frame);
        for _ in 0..e {
            acc = acc.compose(self).expect("same frame");
        }
        acc
    }

    pub fn apply(&self, f: &PolyFunction) -> Result<PolyFunction, Error> {
        if self.frame != f.frame() {
            return Err(Error::FrameMismatch {
                expected: self.frame,
                found: f.frame(),
            });
        }
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            'terms: for (e, x) in f.terms() {
                let mut weight = Rational::one();
                let mut exps = [0u8; 6];
                for i in 0..6 {
                    if k.deriv[i] > e[i] {
                        continue 'terms;
                    }
                    for t in 0..k.deriv[i] {
                        weight = weight * Rational::from_int((e[i] - t) as i64);
                    }
                    exps[i] = e[i] - k.deriv[i] + k.poly[i];
                }
                add_into(&mut out, exps, (c * x).scale(&weight));
            }
        }
        Ok(PolyFunction::from_terms(self.frame, out))
    }

    /// Coefficients mapped through `f`, zeros dropped.
    pub fn map_coefficients(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> DiffOp {
        DiffOp::from_terms(self.frame, self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    pub fn substitute(&self, bindings: &Bindings) -> Result<DiffOp, Error> {
        bindings.check_acyclic()?;
        Ok(self.map_coefficients(|c| c.substitute_unchecked(bindings)))
    }
}

fn compose_terms(a: &OpKey, b: &OpKey, c: &ParamPoly, acc: &mut HashMap<OpKey, ParamPoly>) {
    // j ranges over the box 0 <= j_i <= min(a.deriv_i, b.poly_i)
    let bounds: [u8; 6] = std::array::from_fn(|i| a.deriv[i].min(b.poly[i]));
    let mut j = [0u8; 6];
    loop {
        let mut w = Rational::one();
        for i in 0..6 {
            if j[i] > 0 {
                w = w * leibniz_weight(a.deriv[i], b.poly[i], j[i]);
            }
        }
        let key = OpKey {
            poly: std::array::from_fn(|i| a.poly[i] + b.poly[i] - j[i]),
            deriv: std::array::from_fn(|i| a.deriv[i] - j[i] + b.deriv[i]),
        };
        let term = c.scale(&w);
        match acc.get_mut(&key) {
            Some(slot) => *slot = &*slot + &term,
            None => {
                acc.insert(key, term);
            }
        }
        let mut i = 0;
        loop {
            if i == 6 {
                return;
            }
            if j[i] < bounds[i] {
                j[i] += 1;
                break;
            }
            j[i] = 0;
            i += 1;
        }
    }
}

impl std::fmt::Display for DiffOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&super::format::to_plain(self))
    }
}

impl std::fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DiffOp[{}]({})", self.frame, super::format::to_plain(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FR: Frame = Frame::Final;

    fn op(s: &str) -> DiffOp {
        super::super::format::parse_plain(s, FR).unwrap()
    }

    #[test]
    fn leibniz_base_case() {
        let d = DiffOp::deriv(FR, 0);
        let x = DiffOp::var(FR, 0);
        assert_eq!(d.compose(&x).unwrap(), op("xi1*Dxi1 + 1"));
    }

    #[test]
    fn second_order_past_linear() {
        let d2 = DiffOp::deriv(FR, 1).pow(2);
        let x = DiffOp::var(FR, 1);
        assert_eq!(d2.compose(&x).unwrap(), op("xi2*Dxi2^2 + 2*Dxi2"));
    }

    #[test]
    fn identity_is_neutral() {
        let a = op("1/2*xi2*omega*Dxi1 - L1*eta1 + Deta2^2");
        assert_eq!(a.compose(&DiffOp::identity(FR)).unwrap(), a);
        assert_eq!(DiffOp::identity(FR).compose(&a).unwrap(), a);
    }

    #[test]
    fn commutator_examples() {
        let a = op("zeta*Dxi2 - 3*Deta1");
        assert!(a.commutator(&a).unwrap().is_zero());
        assert_eq!(
            op("Domega").commutator(&op("omega*Dxi1")).unwrap(),
            op("Dxi1")
        );
        let d = op("Deta2 - 1/2*Dxi2^2");
        let pl = op("-Lh*xi2 - eta2*Dxi2 - 1/2*zeta*Dxi1");
        assert_eq!(d.commutator(&pl).unwrap(), op("(Lh - 1)*Dxi2"));
    }

    #[test]
    fn apply_examples() {
        let d = op("Domega - 1/2*xi2*Dxi1 - 1/2*zeta*Deta1 - eta2*Dzeta");
        assert!(d.apply(&PolyFunction::one(FR)).unwrap().is_zero());
        assert_eq!(
            d.apply(&PolyFunction::var(FR, 5)).unwrap(),
            PolyFunction::one(FR)
        );
        let f = PolyFunction::var(FR, 0).mul(&PolyFunction::var(FR, 1)).unwrap();
        let expected = PolyFunction::var(FR, 1)
            .pow(2)
            .scale(&ParamPoly::constant(Rational::new(-1, 2)));
        assert_eq!(op("-1/2*xi2*Dxi1").apply(&f).unwrap(), expected);
    }

    #[test]
    fn mixed_frames_rejected() {
        let a = DiffOp::identity(Frame::Final);
        let b = DiffOp::identity(Frame::Original);
        assert!(matches!(a.compose(&b), Err(Error::FrameMismatch { .. })));
        assert!(a.apply(&PolyFunction::one(Frame::Original)).is_err());
    }
}
