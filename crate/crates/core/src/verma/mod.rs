//! Lowest-weight Verma modules, the hat basis, weight spaces and the
//! brute-force singular-vector solver.

mod element;
pub mod linalg;
mod module;

pub use element::{raising_weight, RaisingExponents, VermaElement};
pub use module::VermaModule;

use crate::jacobi::{Generator, PbwMonomial, UeaElement, WeightVector};
use crate::scalars::{ParamPoly, Rational};

/// Index `(k, l, n, m)` of `(b1^)^k (b2^)^l (c^)^n (d+)^m |0>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HatKetIndex {
    pub k: u32,
    pub l: u32,
    pub n: u32,
    pub m: u32,
}

impl HatKetIndex {
    pub fn new(k: u32, l: u32, n: u32, m: u32) -> Self {
        HatKetIndex { k, l, n, m }
    }

    /// `k (1,0) + l (0,1) + n (1/2,1/2) + m (1/2,-1/2)`.
    pub fn weight(&self) -> WeightVector {
        let (k, l, n, m) = (self.k as i64, self.l as i64, self.n as i64, self.m as i64);
        WeightVector::halves(2 * k + n + m, 2 * l + n - m)
    }

    /// Total order of `pi_R` factors: two per hat, one per `d+`.
    pub fn derivative_order(&self) -> u32 {
        2 * (self.k + self.l + self.n) + self.m
    }
}

impl std::fmt::Display for HatKetIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "|{},{},{},{}>", self.k, self.l, self.n, self.m)
    }
}

/// The hat elements `b1^ = b1+ - a1+^2/2`, `b2^ = b2+ - a2+^2/2`,
/// `c^ = c+ - a1+ a2+/2` in the enveloping algebra.
pub fn hat_elements() -> [UeaElement; 3] {
    let half = Rational::new(-1, 2);
    let sq = |g: Generator| {
        let mut e = [0u16; 15];
        e[g.index()] = 2;
        UeaElement::monomial(PbwMonomial(e), half.clone())
    };
    let mut a1a2 = [0u16; 15];
    a1a2[Generator::A1p.index()] = 1;
    a1a2[Generator::A2p.index()] = 1;
    [
        UeaElement::generator(Generator::B1p).add(&sq(Generator::A1p)),
        UeaElement::generator(Generator::B2p).add(&sq(Generator::A2p)),
        UeaElement::generator(Generator::Cp).add(&UeaElement::monomial(PbwMonomial(a1a2), half.clone())),
    ]
}

fn uea_pow(u: &UeaElement, e: u32) -> UeaElement {
    (0..e).fold(UeaElement::one(), |acc, _| acc.mul(u))
}

/// The raising element `(b1^)^k (b2^)^l (c^)^n (d+)^m`.
pub fn hat_monomial(idx: HatKetIndex) -> UeaElement {
    let [b1, b2, c] = hat_elements();
    uea_pow(&b1, idx.k)
        .mul(&uea_pow(&b2, idx.l))
        .mul(&uea_pow(&c, idx.n))
        .mul(&uea_pow(&UeaElement::generator(Generator::Dp), idx.m))
}

/// `|k, l, n, m>` expanded in PBW raising monomials.
pub fn hat_ket(k: u32, l: u32, n: u32, m: u32) -> VermaElement {
    let u = hat_monomial(HatKetIndex::new(k, l, n, m));
    let mut out = VermaElement::zero();
    for (mono, c) in u.terms() {
        let mut r = [0u16; 6];
        r.copy_from_slice(&mono.0[..6]);
        out.add_term(r, ParamPoly::constant(c.clone()));
    }
    out
}

/// All raising monomials of weight offset `mu`, in lexicographic order.
///
/// In doubled units the conditions are `r1 + 2k1 + n + m = 2mu1` and
/// `r2 + 2k2 + n - m = 2mu2`.
pub fn weight_space_basis(mu: &WeightVector) -> Vec<RaisingExponents> {
    let Some((a, b)) = mu.doubled() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if a < 0 {
        return out;
    }
    for m in 0..=a {
        for n in 0..=(a - m) {
            let rest1 = a - n - m;
            let rest2 = b - n + m;
            if rest2 < 0 {
                continue;
            }
            for k1 in 0..=rest1 / 2 {
                for k2 in 0..=rest2 / 2 {
                    let r1 = rest1 - 2 * k1;
                    let r2 = rest2 - 2 * k2;
                    out.push([r1 as u16, r2 as u16, k1 as u16, k2 as u16, n as u16, m as u16]);
                }
            }
        }
    }
    out.sort();
    out
}

/// Result of the brute-force singular-vector search in one weight space.
#[derive(Clone, Debug)]
pub struct NullSpace {
    pub basis_monomials: Vec<RaisingExponents>,
    pub vectors: Vec<VermaElement>,
}

impl NullSpace {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// Whether `v` (with constant coefficients) lies in the null space.
    pub fn contains(&self, v: &VermaElement) -> bool {
        let Some(x) = v.to_vector(&self.basis_monomials) else {
            return false;
        };
        let basis: Vec<Vec<Rational>> = self
            .vectors
            .iter()
            .map(|b| b.to_vector(&self.basis_monomials).expect("numeric basis"))
            .collect();
        linalg::in_span(&basis, &x)
    }

    /// Whether the null space is exactly the line through `v`.
    pub fn is_line_of(&self, v: &VermaElement) -> bool {
        if self.dimension() != 1 || v.is_zero() {
            return false;
        }
        match (
            v.to_vector(&self.basis_monomials),
            self.vectors[0].to_vector(&self.basis_monomials),
        ) {
            (Some(a), Some(b)) => linalg::proportional(&a, &b),
            _ => false,
        }
    }
}

/// Vectors of weight offset `mu` annihilated by all of `G-`, at numeric
/// lowest weight `lambda` and central charge `central`.
pub fn brute_force_singular(lambda: (Rational, Rational), mu: &WeightVector, central: Rational) -> NullSpace {
    let module = VermaModule::numeric(lambda.0, lambda.1, central);
    let basis = weight_space_basis(mu);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for x in Generator::LOWERING {
        let images: Vec<VermaElement> = basis.iter().map(|e| module.act_gen(x, e)).collect();
        let mut targets: Vec<RaisingExponents> = images
            .iter()
            .flat_map(|v| v.terms().map(|(e, _)| *e).collect::<Vec<_>>())
            .collect();
        targets.sort();
        targets.dedup();
        for t in targets {
            rows.push(
                images
                    .iter()
                    .map(|v| v.coefficient(&t).as_constant().expect("numeric module"))
                    .collect(),
            );
        }
    }
    let vectors = linalg::nullspace(&rows, basis.len())
        .into_iter()
        .map(|v| VermaElement::from_vector(&basis, &v))
        .collect();
    NullSpace {
        basis_monomials: basis,
        vectors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn hat_expansions() {
        assert_eq!(hat_ket(0, 0, 0, 3), VermaElement::monomial([0, 0, 0, 0, 0, 3], ParamPoly::one()));
        let mut b1 = VermaElement::monomial([0, 0, 1, 0, 0, 0], ParamPoly::one());
        b1.add_term([2, 0, 0, 0, 0, 0], ParamPoly::constant(q(-1, 2)));
        assert_eq!(hat_ket(1, 0, 0, 0), b1);
        let mut c = VermaElement::monomial([0, 0, 0, 0, 1, 0], ParamPoly::one());
        c.add_term([1, 1, 0, 0, 0, 0], ParamPoly::constant(q(-1, 2)));
        assert_eq!(hat_ket(0, 0, 1, 0), c);
    }

    #[test]
    fn weight_spaces() {
        assert_eq!(weight_space_basis(&WeightVector::halves(1, -1)), vec![[0, 0, 0, 0, 0, 1]]);
        assert_eq!(weight_space_basis(&WeightVector::halves(0, 1)), vec![[0, 1, 0, 0, 0, 0]]);
        assert_eq!(weight_space_basis(&WeightVector::zero()), vec![[0; 6]]);
        assert!(weight_space_basis(&WeightVector::halves(-1, 0)).is_empty());
        assert!(weight_space_basis(&WeightVector::halves(0, -1)).is_empty());
    }

    #[test]
    fn weight_space_members_have_that_weight() {
        for (a, b) in [(3, 1), (2, 4), (4, -2), (5, 3)] {
            let mu = WeightVector::halves(a, b);
            let basis = weight_space_basis(&mu);
            assert!(!basis.is_empty());
            for e in &basis {
                assert_eq!(raising_weight(e), mu);
            }
            let mut dedup = basis.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), basis.len());
        }
    }

    #[test]
    fn oracle_examples() {
        let ns = brute_force_singular((q(0, 1), q(0, 1)), &WeightVector::halves(1, -1), q(1, 1));
        assert!(ns.is_line_of(&hat_ket(0, 0, 0, 1)));
        let ns = brute_force_singular((q(1, 3), q(1, 7)), &WeightVector::halves(1, -1), q(1, 1));
        assert_eq!(ns.dimension(), 0);
        let ns = brute_force_singular((q(2, 5), q(1, 4)), &WeightVector::halves(0, 2), q(1, 1));
        assert!(ns.is_line_of(&hat_ket(0, 1, 0, 0)));
    }
}
