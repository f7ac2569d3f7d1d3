//! The polynomial change of coordinates between the two frames.
//!
//! ORIGINAL `(x1, x2, y1, y2, z, w)` and FINAL `(xi1, xi2, eta1, eta2, zeta,
//! omega)` are related by
//!
//! ```text
//! xi1  = x1 - w x2 / 2             x1 = xi1 + omega xi2 / 2
//! eta1 = y1 + w^2 y2 / 12 - w z/4  y1 = eta1 + zeta omega / 4 + eta2 omega^2 / 24
//! zeta = z - w y2 / 2              z  = zeta + eta2 omega / 2
//! ```
//!
//! with `x2, y2, w` unchanged. An operator is carried across by sending
//! multiplication operators to the substituted polynomials and each
//! derivative to its chain-rule expansion.

use std::sync::OnceLock;

use super::format::parse_plain;
use super::{DiffOp, Frame, PolyFunction};
use crate::error::Error;

fn poly(text: &str, frame: Frame) -> PolyFunction {
    let op = parse_plain(text, frame).expect("built-in polynomial");
    PolyFunction::from_terms(
        frame,
        op.terms().map(|(k, c)| {
            debug_assert!(k.deriv == [0; 6]);
            (k.poly, c.clone())
        }),
    )
}

/// Original coordinates written in FINAL variables.
pub fn inverse_substitution() -> [PolyFunction; 6] {
    let f = Frame::Final;
    [
        poly("xi1 + 1/2*omega*xi2", f),
        poly("xi2", f),
        poly("eta1 + 1/4*zeta*omega + 1/24*eta2*omega^2", f),
        poly("eta2", f),
        poly("zeta + 1/2*eta2*omega", f),
        poly("omega", f),
    ]
}

/// Final coordinates written in ORIGINAL variables.
pub fn forward_substitution() -> [PolyFunction; 6] {
    let o = Frame::Original;
    [
        poly("x1 - 1/2*w*x2", o),
        poly("x2", o),
        poly("y1 + 1/12*w^2*y2 - 1/4*w*z", o),
        poly("y2", o),
        poly("z - 1/2*w*y2", o),
        poly("w", o),
    ]
}

/// The ORIGINAL derivatives expressed in the FINAL frame, as tabulated.
pub fn tabulated_chain_rule() -> [DiffOp; 6] {
    let f = Frame::Final;
    let op = |s: &str| parse_plain(s, f).expect("built-in operator");
    [
        op("Dxi1"),
        op("Dxi2 - 1/2*omega*Dxi1"),
        op("Deta1"),
        op("Deta2 + 1/12*omega^2*Deta1 - 1/2*omega*Dzeta"),
        op("Dzeta - 1/4*omega*Deta1"),
        op("Domega - 1/4*zeta*Deta1 + 1/24*eta2*omega*Deta1 - 1/2*eta2*Dzeta - 1/2*xi2*Dxi1"),
    ]
}

/// Chain rule from a pair of mutually inverse substitutions.
///
/// `new_in_old[i]` gives new coordinate `i` in old variables and
/// `old_in_new[j]` old coordinate `j` in new variables. The derivative along
/// old coordinate `j`, in the new frame, is `sum_i d(new_i)/d(old_j) D_new_i`
/// with the Jacobian entries pulled back to new variables.
pub fn derived_chain_rule(
    new_in_old: &[PolyFunction; 6],
    old_in_new: &[PolyFunction; 6],
) -> Result<[DiffOp; 6], Error> {
    let mut out = Vec::with_capacity(6);
    for j in 0..6 {
        let mut comps = Vec::with_capacity(6);
        for new_i in new_in_old.iter() {
            comps.push(new_i.derivative(j).compose(old_in_new)?);
        }
        let comps: [PolyFunction; 6] = comps.try_into().expect("six components");
        out.push(DiffOp::vector_field(&comps)?);
    }
    Ok(out.try_into().expect("six derivatives"))
}

/// An algebra map between the two frames, given on generators.
#[derive(Clone, Debug)]
pub struct FrameMap {
    pub source: Frame,
    pub target: Frame,
    var_images: [DiffOp; 6],
    deriv_images: [DiffOp; 6],
}

impl FrameMap {
    pub fn new(source: Frame, var_images: [PolyFunction; 6], deriv_images: [DiffOp; 6]) -> Self {
        let target = deriv_images[0].frame();
        FrameMap {
            source,
            target,
            var_images: var_images.map(|p| DiffOp::multiplication(&p)),
            deriv_images,
        }
    }

    /// ORIGINAL to FINAL with the tabulated chain rule.
    pub fn to_final() -> &'static FrameMap {
        static MAP: OnceLock<FrameMap> = OnceLock::new();
        MAP.get_or_init(|| FrameMap::new(Frame::Original, inverse_substitution(), tabulated_chain_rule()))
    }

    /// FINAL to ORIGINAL, built from the forward substitutions.
    pub fn to_original() -> &'static FrameMap {
        static MAP: OnceLock<FrameMap> = OnceLock::new();
        MAP.get_or_init(|| {
            let derivs = derived_chain_rule(&inverse_substitution(), &forward_substitution())
                .expect("substitutions are polynomial");
            FrameMap::new(Frame::Final, forward_substitution(), derivs)
        })
    }

    pub fn var_image(&self, i: usize) -> &DiffOp {
        &self.var_images[i]
    }

    pub fn deriv_image(&self, i: usize) -> &DiffOp {
        &self.deriv_images[i]
    }

    /// Image of `op`: each term `c x^a D^b` goes to `c * X^a ∘ ∂^b` with
    /// factors taken in source order.
    pub fn apply(&self, op: &DiffOp) -> Result<DiffOp, Error> {
        if op.frame() != self.source {
            return Err(Error::FrameMismatch {
                expected: self.source,
                found: op.frame(),
            });
        }
        let mut var_pows: Vec<Vec<DiffOp>> = self
            .var_images
            .iter()
            .map(|d| vec![DiffOp::identity(self.target), d.clone()])
            .collect();
        let mut der_pows: Vec<Vec<DiffOp>> = self
            .deriv_images
            .iter()
            .map(|d| vec![DiffOp::identity(self.target), d.clone()])
            .collect();
        let mut out = DiffOp::zero(self.target);
        for (key, c) in op.terms() {
            let mut acc = DiffOp::constant(self.target, c.clone());
            for (pows, exps) in [(&mut var_pows, &key.poly), (&mut der_pows, &key.deriv)] {
                for i in 0..6 {
                    let k = exps[i] as usize;
                    if k == 0 {
                        continue;
                    }
                    while pows[i].len() <= k {
                        let next = pows[i].last().unwrap().compose(&pows[i][1])?;
                        pows[i].push(next);
                    }
                    acc = acc.compose(&pows[i][k])?;
                }
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }
}

/// ORIGINAL-frame operator carried to the FINAL frame.
pub fn transform_to_final(op: &DiffOp) -> Result<DiffOp, Error> {
    FrameMap::to_final().apply(op)
}

/// FINAL-frame operator carried back to the ORIGINAL frame.
pub fn transform_to_original(op: &DiffOp) -> Result<DiffOp, Error> {
    FrameMap::to_original().apply(op)
}

/// Carries `op` to `frame`, a no-op when it is already there.
pub fn to_frame(op: &DiffOp, frame: Frame) -> Result<DiffOp, Error> {
    match (op.frame(), frame) {
        (a, b) if a == b => Ok(op.clone()),
        (Frame::Original, Frame::Final) => transform_to_final(op),
        _ => transform_to_original(op),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitutions_are_mutually_inverse() {
        let fwd = forward_substitution();
        let inv = inverse_substitution();
        for i in 0..6 {
            assert_eq!(fwd[i].compose(&inv).unwrap(), PolyFunction::var(Frame::Final, i));
            assert_eq!(inv[i].compose(&fwd).unwrap(), PolyFunction::var(Frame::Original, i));
        }
    }

    #[test]
    fn derived_chain_rule_matches_table() {
        let derived = derived_chain_rule(&forward_substitution(), &inverse_substitution()).unwrap();
        let table = tabulated_chain_rule();
        for i in 0..6 {
            assert_eq!(derived[i], table[i], "derivative {i}");
        }
    }

    #[test]
    fn generator_images() {
        let o = Frame::Original;
        let f = Frame::Final;
        assert_eq!(
            transform_to_final(&parse_plain("Dx1", o).unwrap()).unwrap(),
            parse_plain("Dxi1", f).unwrap()
        );
        assert_eq!(
            transform_to_final(&parse_plain("x1", o).unwrap()).unwrap(),
            parse_plain("xi1 + 1/2*omega*xi2", f).unwrap()
        );
        let rd = parse_plain("Dw - 1/4*z*Dy1 - 1/24*y2*w*Dy1 - 1/2*y2*Dz", o).unwrap();
        assert_eq!(
            transform_to_final(&rd).unwrap(),
            parse_plain("Domega - 1/2*zeta*Deta1 - eta2*Dzeta - 1/2*xi2*Dxi1", f).unwrap()
        );
    }

    #[test]
    fn round_trip_on_examples() {
        let o = Frame::Original;
        let a = parse_plain("L1*x1*w*Dy2 - Lh*z^2 + Dw^2 - 1/3*y1*Dx2*Dz", o).unwrap();
        let fin = transform_to_final(&a).unwrap();
        assert_eq!(transform_to_original(&fin).unwrap(), a);
        assert!(transform_to_final(&fin).is_err());
    }
}
