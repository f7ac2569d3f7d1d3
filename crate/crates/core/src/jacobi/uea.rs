use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::structure::bracket_lie;
use super::{Generator, WeightVector};
use crate::scalars::Rational;

/// PBW exponent vector, one entry per generator in [`Generator::ALL`] order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial(pub [u16; 15]);

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial([0; 15]);

    pub fn generator(g: Generator) -> Self {
        let mut e = [0; 15];
        e[g.index()] = 1;
        PbwMonomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exponent(&self, g: Generator) -> u16 {
        self.0[g.index()]
    }

    /// The monomial as a word, leftmost factor first.
    pub fn word(&self) -> Vec<Generator> {
        Generator::ALL
            .into_iter()
            .flat_map(|g| std::iter::repeat_n(g, self.0[g.index()] as usize))
            .collect()
    }

    pub fn has_lowering(&self) -> bool {
        Generator::LOWERING.iter().any(|g| self.0[g.index()] > 0)
    }

    pub fn weight(&self) -> WeightVector {
        weight_of_monomial(self)
    }
}

/// Sum of generator weights times exponents.
pub fn weight_of_monomial(m: &PbwMonomial) -> WeightVector {
    Generator::ALL
        .into_iter()
        .filter(|g| m.0[g.index()] > 0)
        .fold(WeightVector::zero(), |acc, g| {
            &acc + &g.weight().scale(&Rational::from_int(m.0[g.index()] as i64))
        })
}

/// Element of U(G2) in PBW normal form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::monomial(PbwMonomial::ONE, c)
    }

    pub fn monomial(m: PbwMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        UeaElement { terms }
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(PbwMonomial::generator(g), Rational::one())
    }

    pub fn from_lie(terms: &[(Generator, Rational)]) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(PbwMonomial::generator(*g), c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Rational) {
        for (m, x) in &other.terms {
            self.add_term(*m, &(x * c));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &UeaElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &UeaElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// Maximal PBW degree among the terms.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    /// Normal-form product `self * other`.
    pub fn mul(&self, other: &UeaElement) -> UeaElement {
        uea_multiply(self, other)
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &UeaElement) -> UeaElement {
        self.mul(other).sub(&other.mul(self))
    }
}

thread_local! {
    static LEFT_MUL_CACHE: RefCell<HashMap<(Generator, PbwMonomial), UeaElement>> =
        RefCell::new(HashMap::new());
}

/// `g * m` rewritten into PBW normal form by adjacent swaps
/// `X f = f X + [X, f]`; bracket remainders have strictly lower degree.
pub fn left_multiply_generator(g: Generator, m: &PbwMonomial) -> UeaElement {
    let first = Generator::ALL.into_iter().find(|f| m.0[f.index()] > 0);
    let f = match first {
        Some(f) if f < g => f,
        _ => {
            let mut e = *m;
            e.0[g.index()] += 1;
            return UeaElement::monomial(e, Rational::one());
        }
    };
    if let Some(hit) = LEFT_MUL_CACHE.with(|c| c.borrow().get(&(g, *m)).cloned()) {
        return hit;
    }
    let mut rest = *m;
    rest.0[f.index()] -= 1;
    let mut out = UeaElement::zero();
    // f * (g * rest)
    let inner = left_multiply_generator(g, &rest);
    for (mono, c) in &inner.terms {
        out.add_scaled(&left_multiply_generator(f, mono), c);
    }
    // [g, f] * rest
    for (y, c) in bracket_lie(g, f) {
        out.add_scaled(&left_multiply_generator(*y, &rest), c);
    }
    LEFT_MUL_CACHE.with(|cache| cache.borrow_mut().insert((g, *m), out.clone()));
    out
}

/// Normal form of a word of generators, leftmost factor first.
pub fn pbw_normal_form(word: &[Generator]) -> UeaElement {
    let mut acc = UeaElement::one();
    for g in word.iter().rev() {
        acc = left_multiply_element(*g, &acc);
    }
    acc
}

fn left_multiply_element(g: Generator, u: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, c) in &u.terms {
        out.add_scaled(&left_multiply_generator(g, m), c);
    }
    out
}

/// Normal-form product of two normal-form elements.
pub fn uea_multiply(u: &UeaElement, v: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, c) in &u.terms {
        let mut acc = v.clone();
        for g in m.word().into_iter().rev() {
            acc = left_multiply_element(g, &acc);
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// `[x, y]` as an enveloping-algebra element of degree at most one.
pub fn bracket(x: Generator, y: Generator) -> UeaElement {
    UeaElement::from_lie(bracket_lie(x, y))
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &PbwMonomial) -> fmt::Result {
    let mut first = true;
    for g in Generator::ALL {
        let e = m.0[g.index()];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{g}")?;
        } else {
            write!(f, "{g}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if *m == PbwMonomial::ONE {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UeaElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn mono(gs: &[(Generator, u16)]) -> PbwMonomial {
        let mut e = [0; 15];
        for (g, k) in gs {
            e[g.index()] = *k;
        }
        PbwMonomial(e)
    }

    #[test]
    fn swap_d_minus_d_plus() {
        let nf = pbw_normal_form(&[Dm, Dp]);
        let mut expected = UeaElement::monomial(mono(&[(Dp, 1), (Dm, 1)]), Rational::one());
        expected.add_term(mono(&[(H2, 1)]), &r(1, 2));
        expected.add_term(mono(&[(H1, 1)]), &r(-1, 2));
        assert_eq!(nf, expected);
    }

    #[test]
    fn heisenberg_swap() {
        let nf = pbw_normal_form(&[A1m, A1p]);
        let mut expected = UeaElement::monomial(mono(&[(A1p, 1), (A1m, 1)]), Rational::one());
        expected.add_term(mono(&[(Z, 1)]), &Rational::one());
        assert_eq!(nf, expected);
    }

    #[test]
    fn empty_word_is_unit() {
        assert_eq!(pbw_normal_form(&[]), UeaElement::one());
    }

    #[test]
    fn multiply_examples() {
        let u = UeaElement::generator(A2p).add(&UeaElement::generator(Cm).scale(&r(3, 5)));
        assert_eq!(UeaElement::one().mul(&u), u);
        assert_eq!(
            UeaElement::generator(A2p).mul(&UeaElement::generator(Dp)),
            UeaElement::monomial(mono(&[(A2p, 1), (Dp, 1)]), Rational::one())
        );
        let mut expected = UeaElement::monomial(mono(&[(A2p, 1), (Dp, 1)]), Rational::one());
        expected.add_term(mono(&[(A1p, 1)]), &r(1, 2));
        assert_eq!(
            UeaElement::generator(Dp).mul(&UeaElement::generator(A2p)),
            expected
        );
    }

    #[test]
    fn monomial_weights() {
        assert_eq!(weight_of_monomial(&mono(&[(Dp, 1)])), WeightVector::halves(1, -1));
        assert_eq!(
            weight_of_monomial(&mono(&[(B1p, 1), (Dp, 1)])),
            WeightVector::halves(3, -1)
        );
        assert_eq!(weight_of_monomial(&PbwMonomial::ONE), WeightVector::zero());
    }

    #[test]
    fn ordered_words_are_already_normal() {
        let w = [A1p, A1p, B2p, H1, Z, Cm];
        let nf = pbw_normal_form(&w);
        assert_eq!(nf.len(), 1);
        assert_eq!(nf.terms().next().unwrap().0.word(), w.to_vec());
    }
}
