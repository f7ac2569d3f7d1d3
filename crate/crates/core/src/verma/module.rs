use std::cell::RefCell;
use std::collections::HashMap;

use super::element::{raising_weight, to_pbw, RaisingExponents, VermaElement};
use crate::jacobi::{bracket_lie, left_multiply_generator, uea_multiply, Generator, UeaElement};
use crate::scalars::{Param, ParamPoly, Rational};

/// Lowest-weight Verma module: `G-` kills `|0>`, `h_i` acts by `L_i` and
/// the center `Z` by the configured charge.
pub struct VermaModule {
    lowest: [ParamPoly; 2],
    central: ParamPoly,
    cache: RefCell<HashMap<(Generator, RaisingExponents), VermaElement>>,
}

impl Clone for VermaModule {
    fn clone(&self) -> Self {
        VermaModule::new(self.lowest.clone(), self.central.clone())
    }
}

impl std::fmt::Debug for VermaModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "VermaModule(L = ({}, {}), Z = {})",
            self.lowest[0], self.lowest[1], self.central
        )
    }
}

impl Default for VermaModule {
    fn default() -> Self {
        Self::symbolic()
    }
}

impl VermaModule {
    pub fn new(lowest: [ParamPoly; 2], central: ParamPoly) -> Self {
        VermaModule {
            lowest,
            central,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Symbolic weight `(L1, L2)`, central charge 1.
    pub fn symbolic() -> Self {
        Self::new(
            [ParamPoly::param(Param::L1), ParamPoly::param(Param::L2)],
            ParamPoly::one(),
        )
    }

    /// Symbolic weight and symbolic central charge `Lh`.
    pub fn symbolic_central() -> Self {
        Self::new(
            [ParamPoly::param(Param::L1), ParamPoly::param(Param::L2)],
            ParamPoly::param(Param::LHat),
        )
    }

    pub fn numeric(l1: Rational, l2: Rational, central: Rational) -> Self {
        Self::new(
            [ParamPoly::constant(l1), ParamPoly::constant(l2)],
            ParamPoly::constant(central),
        )
    }

    pub fn lowest_weight(&self) -> &[ParamPoly; 2] {
        &self.lowest
    }

    pub fn central(&self) -> &ParamPoly {
        &self.central
    }

    /// `X * (raising monomial)|0>`.
    pub fn act_gen(&self, x: Generator, e: &RaisingExponents) -> VermaElement {
        if let Some(hit) = self.cache.borrow().get(&(x, *e)) {
            return hit.clone();
        }
        let out = self.compute_gen(x, e);
        self.cache.borrow_mut().insert((x, *e), out.clone());
        out
    }

    fn compute_gen(&self, x: Generator, e: &RaisingExponents) -> VermaElement {
        match x {
            _ if x.is_raising() => {
                let prod = left_multiply_generator(x, &to_pbw(e));
                let mut out = VermaElement::zero();
                for (m, c) in prod.terms() {
                    let mut r = [0u16; 6];
                    r.copy_from_slice(&m.0[..6]);
                    debug_assert!(m.0[6..].iter().all(|&k| k == 0));
                    out.add_term(r, ParamPoly::constant(c.clone()));
                }
                out
            }
            Generator::H1 | Generator::H2 => {
                let w = raising_weight(e);
                let (base, shift) = if x == Generator::H1 {
                    (&self.lowest[0], w.0)
                } else {
                    (&self.lowest[1], w.1)
                };
                VermaElement::monomial(*e, base + &ParamPoly::constant(shift))
            }
            Generator::Z => VermaElement::monomial(*e, self.central.clone()),
            _ => {
                // X f rest|0> = f (X rest|0>) + [X, f] rest|0>
                let Some(fi) = e.iter().position(|&k| k > 0) else {
                    return VermaElement::zero();
                };
                let f = Generator::RAISING[fi];
                let mut rest = *e;
                rest[fi] -= 1;
                let mut out = VermaElement::zero();
                for (m, c) in self.act_gen(x, &rest).terms() {
                    out.add_scaled(&self.act_gen(f, m), c);
                }
                for (y, c) in bracket_lie(x, f) {
                    out.add_scaled(&self.act_gen(*y, &rest), &ParamPoly::constant(c.clone()));
                }
                out
            }
        }
    }

    pub fn act_generator(&self, x: Generator, v: &VermaElement) -> VermaElement {
        let mut out = VermaElement::zero();
        for (e, c) in v.terms() {
            out.add_scaled(&self.act_gen(x, e), c);
        }
        out
    }

    /// `u . v`, one generator at a time from the right.
    pub fn act(&self, u: &UeaElement, v: &VermaElement) -> VermaElement {
        let mut out = VermaElement::zero();
        for (m, c) in u.terms() {
            let mut acc = v.clone();
            for g in m.word().into_iter().rev() {
                acc = self.act_generator(g, &acc);
            }
            out.add_scaled(&acc, &ParamPoly::constant(c.clone()));
        }
        out
    }

    /// `u . v` by normal-ordering `u * (raising monomial)` in the enveloping
    /// algebra and applying the lowest-weight rules to each monomial.
    pub fn act_via_uea(&self, u: &UeaElement, v: &VermaElement) -> VermaElement {
        let mut out = VermaElement::zero();
        for (e, c) in v.terms() {
            let prod = uea_multiply(u, &UeaElement::monomial(to_pbw(e), Rational::one()));
            for (m, x) in prod.terms() {
                if m.has_lowering() {
                    continue;
                }
                let mut coeff = ParamPoly::constant(x.clone());
                coeff = &coeff * &self.lowest[0].pow(m.exponent(Generator::H1) as u32);
                coeff = &coeff * &self.lowest[1].pow(m.exponent(Generator::H2) as u32);
                coeff = &coeff * &self.central.pow(m.exponent(Generator::Z) as u32);
                let mut r = [0u16; 6];
                r.copy_from_slice(&m.0[..6]);
                out.add_term(r, &coeff * c);
            }
        }
        out
    }

    /// Whether all six lowering generators kill `v`.
    pub fn is_singular(&self, v: &VermaElement) -> bool {
        Generator::LOWERING
            .iter()
            .all(|&x| self.act_generator(x, v).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verma::hat_ket;
    use Generator::*;

    fn pp(s: &str) -> ParamPoly {
        s.parse().unwrap()
    }

    #[test]
    fn lowest_weight_rules() {
        let m = VermaModule::symbolic();
        let vac = VermaElement::vacuum();
        assert!(m.act_generator(A1m, &vac).is_zero());
        assert_eq!(m.act_generator(H2, &vac), vac.scale(&pp("L2")));
    }

    #[test]
    fn d_minus_on_d_plus() {
        let m = VermaModule::symbolic();
        let v = hat_ket(0, 0, 0, 1);
        assert_eq!(
            m.act_generator(Dm, &v),
            VermaElement::vacuum().scale(&pp("1/2*L2 - 1/2*L1"))
        );
    }

    #[test]
    fn b2_minus_on_hat_b2() {
        let m = VermaModule::symbolic();
        let v = hat_ket(0, 1, 0, 0);
        assert_eq!(
            m.act_generator(B2m, &v),
            VermaElement::vacuum().scale(&pp("2*L2 - 1/2"))
        );
        // a2- only vanishes when the center acts by 1
        assert!(m.act_generator(A2m, &v).is_zero());
        let mc = VermaModule::symbolic_central();
        assert_eq!(
            mc.act_generator(A2m, &v),
            VermaElement::monomial([0, 1, 0, 0, 0, 0], pp("1 - Lh"))
        );
    }

    #[test]
    fn two_routes_agree() {
        let m = VermaModule::symbolic_central();
        let u = crate::jacobi::pbw_normal_form(&[Cm, B1p, Dm, A2m]);
        let v = hat_ket(1, 1, 0, 2).add(&hat_ket(0, 1, 1, 1));
        assert_eq!(m.act(&u, &v), m.act_via_uea(&u, &v));
    }
}
