//! The Jacobi algebra G2: generators, weights, structure constants and the
//! PBW normal-ordering engine for its universal enveloping algebra.

mod generator;
pub mod structure;
mod uea;

pub use generator::{root_coordinates, Generator, WeightVector};
pub use structure::{bracket_lie, bracket_lin, LieElement};
pub use uea::{
    bracket, left_multiply_generator, pbw_normal_form, uea_multiply, weight_of_monomial,
    PbwMonomial, UeaElement,
};

/// One failing structural check.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureViolation {
    pub generators: Vec<Generator>,
    pub residual: LieElement,
}

/// Pairs `(x, y)` with `[x, y] != -[y, x]`.
pub fn antisymmetry_violations() -> Vec<StructureViolation> {
    let mut out = Vec::new();
    for x in Generator::ALL {
        for y in Generator::ALL {
            let mut acc = vec![crate::Rational::zero(); 15];
            for (g, c) in bracket_lie(x, y).iter().chain(bracket_lie(y, x)) {
                acc[g.index()] += c;
            }
            let residual: LieElement = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (Generator::from_index(k), c))
                .collect();
            if !residual.is_empty() {
                out.push(StructureViolation {
                    generators: vec![x, y],
                    residual,
                });
            }
        }
    }
    out
}

/// Triples `x < y < z` for which the Jacobi identity fails.
pub fn jacobi_violations() -> Vec<StructureViolation> {
    let one = crate::Rational::one;
    let mut out = Vec::new();
    for (i, x) in Generator::ALL.into_iter().enumerate() {
        for (j, y) in Generator::ALL.into_iter().enumerate().skip(i + 1) {
            for z in Generator::ALL.into_iter().skip(j + 1) {
                let mut acc = vec![crate::Rational::zero(); 15];
                for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                    let inner = bracket_lie(b, c);
                    for (g, v) in bracket_lin(&[(a, one())], inner) {
                        acc[g.index()] += &v;
                    }
                }
                let residual: LieElement = acc
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (Generator::from_index(k), c))
                    .collect();
                if !residual.is_empty() {
                    out.push(StructureViolation {
                        generators: vec![x, y, z],
                        residual,
                    });
                }
            }
        }
    }
    out
}

/// Number of unordered generator triples checked by [`jacobi_violations`].
pub const JACOBI_TRIPLES: usize = 455;

/// Non-vanishing brackets among the raising generators, as `(x, y, [x, y])`
/// with `x < y`.
pub fn raising_relations() -> Vec<(Generator, Generator, LieElement)> {
    let mut out = Vec::new();
    for (i, x) in Generator::RAISING.into_iter().enumerate() {
        for y in Generator::RAISING.into_iter().skip(i + 1) {
            let b = bracket_lie(x, y);
            if !b.is_empty() {
                out.push((x, y, b.clone()));
            }
        }
    }
    out
}
