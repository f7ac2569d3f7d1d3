//! Left and right actions of G2 by differential operators, in both frames,
//! and the checks that tie them together.

mod table;

use std::sync::OnceLock;

use rayon::prelude::*;

pub use table::{parse_table, ActionTable, Side, Variant};

use crate::error::Error;
use crate::jacobi::{bracket_lie, Generator};
use crate::scalars::{ParamPoly, Rational};
use crate::weyl::{parse_plain, transform_to_final, DiffOp, Frame};

const LEFT_ORIGINAL: &str = include_str!("../../data/tables/left_original.txt");
const LEFT_FINAL_PRIMARY: &str = include_str!("../../data/tables/left_final_primary.txt");
const LEFT_FINAL_SIMPLIFIED: &str = include_str!("../../data/tables/left_final_simplified.txt");
const RIGHT_ORIGINAL: &str = include_str!("../../data/tables/right_original.txt");
const RIGHT_FINAL: &str = include_str!("../../data/tables/right_final.txt");

fn load(text: &str, base: Option<&ActionTable>) -> ActionTable {
    parse_table(text, base).unwrap_or_else(|e| panic!("built-in table: {e}"))
}

fn left_original() -> &'static ActionTable {
    static T: OnceLock<ActionTable> = OnceLock::new();
    T.get_or_init(|| load(LEFT_ORIGINAL, None))
}

fn left_final_primary() -> &'static ActionTable {
    static T: OnceLock<ActionTable> = OnceLock::new();
    T.get_or_init(|| load(LEFT_FINAL_PRIMARY, None))
}

fn left_final_simplified() -> &'static ActionTable {
    static T: OnceLock<ActionTable> = OnceLock::new();
    T.get_or_init(|| load(LEFT_FINAL_SIMPLIFIED, Some(left_final_primary())))
}

fn right_original() -> &'static ActionTable {
    static T: OnceLock<ActionTable> = OnceLock::new();
    T.get_or_init(|| load(RIGHT_ORIGINAL, None))
}

fn right_final() -> &'static ActionTable {
    static T: OnceLock<ActionTable> = OnceLock::new();
    T.get_or_init(|| load(RIGHT_FINAL, None))
}

/// Built-in table for a side, frame and variant.
pub fn action_table(side: Side, frame: Frame, variant: Variant) -> Result<&'static ActionTable, Error> {
    Ok(match (side, frame, variant) {
        (Side::Left, Frame::Original, Variant::Primary) => left_original(),
        (Side::Left, Frame::Final, Variant::Primary) => left_final_primary(),
        (Side::Left, Frame::Final, Variant::Simplified) => left_final_simplified(),
        (Side::Right, Frame::Original, Variant::Primary) => right_original(),
        (Side::Right, Frame::Final, Variant::Primary) => right_final(),
        _ => {
            return Err(Error::UnsupportedTable(format!(
                "side={side} frame={frame} variant={variant}"
            )))
        }
    })
}

/// Text of a built-in table, as checked in.
pub fn table_source(side: Side, frame: Frame, variant: Variant) -> Option<&'static str> {
    Some(match (side, frame, variant) {
        (Side::Left, Frame::Original, Variant::Primary) => LEFT_ORIGINAL,
        (Side::Left, Frame::Final, Variant::Primary) => LEFT_FINAL_PRIMARY,
        (Side::Left, Frame::Final, Variant::Simplified) => LEFT_FINAL_SIMPLIFIED,
        (Side::Right, Frame::Original, Variant::Primary) => RIGHT_ORIGINAL,
        (Side::Right, Frame::Final, Variant::Primary) => RIGHT_FINAL,
        _ => return None,
    })
}

/// The left table used downstream: in the FINAL frame, the first variant
/// (primary, then simplified) that passes the homomorphism check.
pub fn left_table(frame: Frame) -> &'static ActionTable {
    static FINAL: OnceLock<&'static ActionTable> = OnceLock::new();
    match frame {
        Frame::Original => left_original(),
        Frame::Final => FINAL.get_or_init(|| {
            [left_final_primary(), left_final_simplified()]
                .into_iter()
                .find(|t| verify_homomorphism(t).pass())
                .unwrap_or_else(left_final_simplified)
        }),
    }
}

pub fn right_table(frame: Frame) -> &'static ActionTable {
    match frame {
        Frame::Original => right_original(),
        Frame::Final => right_final(),
    }
}

/// Shifted raising elements of the hat basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HatGenerator {
    B1,
    B2,
    C,
}

impl HatGenerator {
    pub const ALL: [HatGenerator; 3] = [HatGenerator::B1, HatGenerator::B2, HatGenerator::C];

    pub fn name(self) -> &'static str {
        match self {
            HatGenerator::B1 => "b1^",
            HatGenerator::B2 => "b2^",
            HatGenerator::C => "c^",
        }
    }
}

/// `pi_R` of a hat element from the right table:
/// `pi(b_k) - pi(a_k)^2/2` and `pi(c) - pi(a1) pi(a2)/2`.
pub fn hat_right_action(h: HatGenerator, frame: Frame) -> DiffOp {
    let t = right_table(frame);
    let half = ParamPoly::constant(Rational::new(1, 2));
    let (base, x, y) = match h {
        HatGenerator::B1 => (Generator::B1p, Generator::A1p, Generator::A1p),
        HatGenerator::B2 => (Generator::B2p, Generator::A2p, Generator::A2p),
        HatGenerator::C => (Generator::Cp, Generator::A1p, Generator::A2p),
    };
    let prod = t.op(x).compose(t.op(y)).expect("same frame");
    t.op(base).sub(&prod.scale(&half)).expect("same frame")
}

/// The hat operators as displayed, independent of the right table.
pub fn displayed_hat_operator(h: HatGenerator, frame: Frame) -> DiffOp {
    let text = match (frame, h) {
        (Frame::Original, HatGenerator::B1) => "Dy1 - 1/2*Dx1^2",
        (Frame::Original, HatGenerator::B2) => {
            "Dy2 + 1/24*w^2*Dy1 + 1/2*w*Dz - 1/2*Dx2^2 - 1/2*w*Dx1*Dx2 - 1/8*w^2*Dx1^2"
        }
        (Frame::Original, HatGenerator::C) => "Dz + 1/4*w*Dy1 - 1/2*Dx1*Dx2 - 1/4*w*Dx1^2",
        (Frame::Final, HatGenerator::B1) => "Deta1 - 1/2*Dxi1^2",
        (Frame::Final, HatGenerator::B2) => "Deta2 - 1/2*Dxi2^2",
        (Frame::Final, HatGenerator::C) => "Dzeta - 1/2*Dxi1*Dxi2",
    };
    parse_plain(text, frame).expect("built-in operator")
}

/// One nonzero residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub label: String,
    pub residual: DiffOp,
}

/// Outcome of a family of operator identities.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<Residual>,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passed(&self) -> usize {
        self.checked - self.failures.len()
    }

    fn from_results(results: Vec<(String, DiffOp)>) -> Self {
        let checked = results.len();
        let failures = results
            .into_iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(label, residual)| Residual { label, residual })
            .collect();
        CheckReport { checked, failures }
    }
}

/// Unordered generator pairs of the table's domain.
fn pairs(t: &ActionTable) -> Vec<(Generator, Generator)> {
    let gens: Vec<Generator> = t.side.domain().to_vec();
    let mut out = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            out.push((*x, *y));
        }
    }
    out
}

/// `[pi(X), pi(Y)] - pi([X, Y])` over all unordered pairs of the domain.
pub fn verify_homomorphism(t: &ActionTable) -> CheckReport {
    let results = pairs(t)
        .into_par_iter()
        .map(|(x, y)| {
            let lhs = t.op(x).commutator(t.op(y)).expect("same frame");
            let rhs = t.image(bracket_lie(x, y)).expect("bracket stays in the domain");
            (format!("({x}, {y})"), lhs.sub(&rhs).expect("same frame"))
        })
        .collect();
    CheckReport::from_results(results)
}

/// `[pi_L(X), pi_R(Y)]` for all fifteen `X` and six raising `Y`.
pub fn verify_left_right_commute(frame: Frame) -> CheckReport {
    let l = left_table(frame);
    let r = right_table(frame);
    let mut work = Vec::new();
    for x in Generator::ALL {
        for y in Generator::RAISING {
            work.push((x, y));
        }
    }
    let results = work
        .into_par_iter()
        .map(|(x, y)| {
            let c = l.op(x).commutator(r.op(y)).expect("same frame");
            (format!("[L({x}), R({y})]"), c)
        })
        .collect();
    CheckReport::from_results(results)
}

/// Transform of every ORIGINAL entry minus the FINAL entry, both sides; the
/// left side uses the authoritative FINAL table.
pub fn verify_frame_consistency() -> CheckReport {
    let mut work: Vec<(Side, Generator)> = Vec::new();
    for side in [Side::Left, Side::Right] {
        for g in side.domain() {
            work.push((side, *g));
        }
    }
    let results = work
        .into_par_iter()
        .map(|(side, g)| {
            let (orig, fin) = match side {
                Side::Left => (left_table(Frame::Original), left_table(Frame::Final)),
                Side::Right => (right_table(Frame::Original), right_table(Frame::Final)),
            };
            let image = transform_to_final(orig.op(g)).expect("original frame");
            (format!("{side} {g}"), image.sub(fin.op(g)).expect("same frame"))
        })
        .collect();
    CheckReport::from_results(results)
}

/// Comparison of the primary and simplified FINAL left entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplifiedReport {
    /// `primary - simplified` per generator with a simplified form.
    pub differences: Vec<(Generator, DiffOp)>,
    pub primary: CheckReport,
    pub simplified: CheckReport,
}

impl SimplifiedReport {
    pub fn authoritative(&self) -> Option<Variant> {
        if self.primary.pass() {
            Some(Variant::Primary)
        } else if self.simplified.pass() {
            Some(Variant::Simplified)
        } else {
            None
        }
    }
}

pub const SIMPLIFIED_GENERATORS: [Generator; 4] =
    [Generator::B1m, Generator::B2m, Generator::Cm, Generator::Dm];

pub fn verify_simplified_forms() -> SimplifiedReport {
    let p = left_final_primary();
    let s = left_final_simplified();
    let differences = SIMPLIFIED_GENERATORS
        .iter()
        .map(|&g| (g, p.op(g).sub(s.op(g)).expect("same frame")))
        .collect();
    SimplifiedReport {
        differences,
        primary: verify_homomorphism(p),
        simplified: verify_homomorphism(s),
    }
}

/// `pi_L` with the weight shifted, `L_i -> L_i + shift_i` (simultaneously).
pub fn shifted_left(t: &ActionTable, shift: &crate::jacobi::WeightVector) -> ActionTable {
    use crate::scalars::{Bindings, Param};
    let b = Bindings::new()
        .with(Param::L1, &ParamPoly::param(Param::L1) + &ParamPoly::constant(shift.0.clone()))
        .with(Param::L2, &ParamPoly::param(Param::L2) + &ParamPoly::constant(shift.1.clone()));
    t.map_coefficients(|c| c.substitute_unchecked(&b))
}
