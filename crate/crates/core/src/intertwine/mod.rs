//! Intertwining differential operators built from singular vectors, and the
//! check `pi_L^{L'}(X) D = D pi_L^{L}(X)`.

mod univariate;

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

pub use univariate::UniPoly;

use crate::actions::{hat_right_action, left_table, right_table, shifted_left, HatGenerator};
use crate::jacobi::Generator;
use crate::scalars::{Bindings, Param, ParamPoly, Rational};
use crate::singvec::SingularVectorSpec;
use crate::verma::HatKetIndex;
use crate::weyl::{DiffOp, Frame};

/// How the central parameter `Lh` is treated in the residuals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralMode {
    Fixed(Rational),
    Symbolic,
}

impl Default for CentralMode {
    fn default() -> Self {
        CentralMode::Fixed(Rational::one())
    }
}

impl fmt::Display for CentralMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralMode::Fixed(c) => write!(f, "fixed:{c}"),
            CentralMode::Symbolic => f.write_str("symbolic"),
        }
    }
}

impl std::str::FromStr for CentralMode {
    type Err = crate::ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "symbolic" {
            return Ok(CentralMode::Symbolic);
        }
        let v = s
            .strip_prefix("fixed:")
            .ok_or_else(|| crate::ParseError::new(format!("central mode must be fixed:<q> or symbolic, got `{s}`")))?;
        Ok(CentralMode::Fixed(v.parse()?))
    }
}

/// Values of `Lh` at which every residual vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralConstraint {
    All,
    Empty,
    /// The rational zeros; `irrational_degree` counts the remaining degree
    /// of the common factor that has no rational roots.
    Finite { values: Vec<Rational>, irrational_degree: usize },
}

impl fmt::Display for CentralConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralConstraint::All => f.write_str("all Lh"),
            CentralConstraint::Empty => f.write_str("no Lh"),
            CentralConstraint::Finite { values, irrational_degree } => {
                let vs: Vec<String> = values.iter().map(|v| format!("Lh = {v}")).collect();
                write!(f, "{{{}}}", vs.join(", "))?;
                if *irrational_degree > 0 {
                    write!(f, " plus irrational factor of degree {irrational_degree}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct IntertwinerReport {
    pub spec: SingularVectorSpec,
    pub frame: Frame,
    pub central: CentralMode,
    /// `R_X` for all fifteen generators, in generator order.
    pub residuals: Vec<(Generator, DiffOp)>,
    pub constraint: CentralConstraint,
}

impl IntertwinerReport {
    pub fn pass(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    pub fn failing(&self) -> impl Iterator<Item = &(Generator, DiffOp)> {
        self.residuals.iter().filter(|(_, r)| !r.is_zero())
    }
}

/// Memoized powers of one operator.
struct Powers {
    base: DiffOp,
    cache: Vec<DiffOp>,
}

impl Powers {
    fn new(base: DiffOp) -> Self {
        let one = DiffOp::identity(base.frame());
        Powers { base, cache: vec![one] }
    }

    fn get(&mut self, e: u32) -> &DiffOp {
        while self.cache.len() <= e as usize {
            let next = self.cache.last().unwrap().compose(&self.base).expect("same frame");
            self.cache.push(next);
        }
        &self.cache[e as usize]
    }
}

/// `pi_R` image of one hat ket, factors in the order b1^, b2^, c^, d+.
fn ket_operator(idx: HatKetIndex, pw: &mut [Powers; 4]) -> DiffOp {
    let exps = [idx.k, idx.l, idx.n, idx.m];
    let mut out: Option<DiffOp> = None;
    for (p, e) in pw.iter_mut().zip(exps) {
        if e == 0 {
            continue;
        }
        let f = p.get(e).clone();
        out = Some(match out {
            None => f,
            Some(acc) => acc.compose(&f).expect("same frame"),
        });
    }
    out.unwrap_or_else(|| DiffOp::identity(pw[0].base.frame()))
}

/// The operator of a singular vector: its closed form with every hat ket
/// replaced by the right action.
pub fn build_operator(spec: &SingularVectorSpec, frame: Frame) -> DiffOp {
    let mut pw = [
        Powers::new(hat_right_action(HatGenerator::B1, frame)),
        Powers::new(hat_right_action(HatGenerator::B2, frame)),
        Powers::new(hat_right_action(HatGenerator::C, frame)),
        Powers::new(right_table(frame).op(Generator::Dp).clone()),
    ];
    let mut out = DiffOp::zero(frame);
    for (idx, c) in spec.closed_form() {
        let term = ket_operator(idx, &mut pw).scale(&c);
        out = out.add(&term).expect("same frame");
    }
    out
}

/// Residuals `pi_L^{L+shift}(X) D - D pi_L^{L}(X)` with the constraints
/// imposed, for all fifteen generators.
pub fn intertwining_residuals(spec: &SingularVectorSpec, frame: Frame, central: &CentralMode) -> Vec<(Generator, DiffOp)> {
    let mut b: Bindings = spec.bindings();
    if let CentralMode::Fixed(c) = central {
        b.set(Param::LHat, ParamPoly::constant(c.clone()));
    }
    let sub = |d: &DiffOp| d.substitute(&b).expect("acyclic bindings");
    let source = left_table(frame);
    let target = shifted_left(source, &spec.shift);
    let d = sub(&build_operator(spec, frame));
    Generator::ALL
        .par_iter()
        .map(|&x| {
            let lhs = sub(target.op(x)).compose(&d).expect("same frame");
            let rhs = d.compose(&sub(source.op(x))).expect("same frame");
            (x, lhs.sub(&rhs).expect("same frame"))
        })
        .collect()
}

pub fn verify_intertwining(spec: &SingularVectorSpec, frame: Frame, central: CentralMode) -> IntertwinerReport {
    let residuals = intertwining_residuals(spec, frame, &central);
    let constraint = match &central {
        CentralMode::Symbolic => central_constraint(&residuals),
        CentralMode::Fixed(c) => {
            if residuals.iter().all(|(_, r)| r.is_zero()) {
                CentralConstraint::Finite {
                    values: vec![c.clone()],
                    irrational_degree: 0,
                }
            } else {
                CentralConstraint::Empty
            }
        }
    };
    IntertwinerReport {
        spec: spec.clone(),
        frame,
        central,
        residuals,
        constraint,
    }
}

/// Common zero set in `Lh` of all residual coefficients, each read as a
/// polynomial in `Lh` whose coefficients must vanish identically in the
/// remaining parameters.
pub fn solve_central_charge(spec: &SingularVectorSpec, frame: Frame) -> CentralConstraint {
    central_constraint(&intertwining_residuals(spec, frame, &CentralMode::Symbolic))
}

fn central_constraint(residuals: &[(Generator, DiffOp)]) -> CentralConstraint {
    let mut g = UniPoly::zero();
    for (_, r) in residuals {
        for (_, c) in r.terms() {
            for u in split_by_other_params(c) {
                g = g.gcd(&u);
            }
        }
    }
    if g.is_zero() {
        return CentralConstraint::All;
    }
    if g.degree() == Some(0) {
        return CentralConstraint::Empty;
    }
    let (values, rest) = g.rational_roots();
    CentralConstraint::Finite {
        values,
        irrational_degree: rest.degree().unwrap_or(0),
    }
}

/// Splits a parameter polynomial into univariate polynomials in `Lh`, one
/// per monomial in `L1, L2`.
fn split_by_other_params(c: &ParamPoly) -> Vec<UniPoly> {
    let mut groups: HashMap<[u16; 2], Vec<Rational>> = HashMap::new();
    let h = Param::LHat.index();
    for (m, coeff) in c.terms() {
        let key = [m.0[Param::L1.index()], m.0[Param::L2.index()]];
        let e = m.0[h] as usize;
        let v = groups.entry(key).or_default();
        if v.len() <= e {
            v.resize(e + 1, Rational::zero());
        }
        v[e] = coeff.clone();
    }
    let mut keys: Vec<_> = groups.keys().copied().collect();
    keys.sort();
    keys.into_iter().map(|k| UniPoly::new(groups.remove(&k).unwrap())).collect()
}
