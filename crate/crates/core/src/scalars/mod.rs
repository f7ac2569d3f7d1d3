//! Exact coefficient arithmetic: rationals and polynomials in the formal
//! parameters `L1`, `L2` (lowest weight) and `Lh` (central charge).

pub mod expr;
mod poly;
mod rational;

pub use poly::{Bindings, Param, ParamMonomial, ParamPoly};
pub(crate) use poly::render_rational;
pub use rational::Rational;

/// `Γ(x) / Γ(x - m)` as the finite product `(x-1)(x-2)...(x-m)`.
pub fn gamma_ratio_falling(x: &ParamPoly, m: u32) -> ParamPoly {
    (1..=m).fold(ParamPoly::one(), |acc, j| {
        &acc * &(x - &ParamPoly::int(j as i64))
    })
}

/// `Γ(y + m) / Γ(y)` as the finite product `y(y+1)...(y+m-1)`.
pub fn gamma_ratio_rising(y: &ParamPoly, m: u32) -> ParamPoly {
    (0..m).fold(ParamPoly::one(), |acc, j| {
        &acc * &(y + &ParamPoly::int(j as i64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(s: &str) -> ParamPoly {
        s.parse().unwrap()
    }

    #[test]
    fn falling_examples() {
        let x = pp("L1");
        assert_eq!(gamma_ratio_falling(&x, 0), ParamPoly::one());
        assert_eq!(gamma_ratio_falling(&x, 1), pp("L1 - 1"));
        assert_eq!(
            gamma_ratio_falling(&pp("2*L1 - 1/2"), 1),
            pp("2*L1 - 3/2")
        );
    }

    #[test]
    fn rising_examples() {
        let y = pp("L2");
        assert_eq!(gamma_ratio_rising(&y, 0), ParamPoly::one());
        assert_eq!(gamma_ratio_rising(&y, 1), y);
        assert_eq!(gamma_ratio_rising(&y, 2), pp("L2^2 + L2"));
    }

    #[test]
    fn falling_splits_over_offsets() {
        let x = pp("2*L1 + L2 - 1/3");
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                let shifted = &x - &ParamPoly::int(a as i64);
                assert_eq!(
                    gamma_ratio_falling(&x, a + b),
                    &gamma_ratio_falling(&x, a) * &gamma_ratio_falling(&shifted, b)
                );
            }
        }
    }
}
