use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::scalars::Rational;

/// Dense univariate polynomial over the rationals, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            None => UniPoly::zero(),
            Some(lead) => {
                let inv = lead.recip();
                UniPoly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    fn rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let f = r.last().unwrap() / &lead;
            for (i, c) in d.0.iter().enumerate() {
                r[i + shift] -= &(&f * c);
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly(r)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Quotient by `x - r`, assuming `r` is a root.
    fn deflate(&self, r: &Rational) -> UniPoly {
        let n = self.0.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &self.0[i] + &(&carry * r);
            q[i - 1] = carry.clone();
        }
        UniPoly::new(q)
    }

    /// Distinct rational roots in increasing order, and the cofactor left
    /// after removing them.
    pub fn rational_roots(&self) -> (Vec<Rational>, UniPoly) {
        let mut p = self.clone();
        let mut roots = Vec::new();
        if p.is_zero() {
            return (roots, p);
        }
        loop {
            let found = candidates(&p).into_iter().find(|c| p.evaluate(c).is_zero());
            match found {
                Some(r) => {
                    p = p.deflate(&r);
                    if !roots.contains(&r) {
                        roots.push(r);
                    }
                }
                None => break,
            }
        }
        roots.sort();
        (roots, p)
    }
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i.checked_mul(i)? <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    Some(out)
}

/// Rational-root-theorem candidates after clearing denominators.
fn candidates(p: &UniPoly) -> Vec<Rational> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    if p.0[0].is_zero() {
        return vec![Rational::zero()];
    }
    let l = Rational::lcm_denominators(p.0.iter());
    let scale = Rational::from(l);
    let ints: Vec<BigInt> = p.0.iter().map(|c| (c * &scale).numer().clone()).collect();
    let (Some(num), Some(den)) = (divisors(&ints[0]), divisors(&ints[d])) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for a in &num {
        for b in &den {
            let r = Rational::from_big(BigInt::from(*a), BigInt::from(*b));
            if !out.contains(&r) {
                out.push(-r.clone());
                out.push(r);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn gcd_and_roots() {
        // (x - 1)(2x + 3) and (x - 1) x
        let a = up(&[-3, 1, 2]);
        let b = up(&[0, -1, 1]);
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
        let (r, rest) = a.rational_roots();
        assert_eq!(r, vec![Rational::new(-3, 2), Rational::one()]);
        assert_eq!(rest.degree(), Some(0));
        let (r, rest) = up(&[-2, 0, 1]).rational_roots();
        assert!(r.is_empty());
        assert_eq!(rest.degree(), Some(2));
        assert_eq!(UniPoly::zero().gcd(&up(&[0, 3])), up(&[0, 1]));
    }
}
