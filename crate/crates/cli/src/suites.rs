//! Verification suites behind `g2ido verify`.

use std::fmt;

use anyhow::{Context, Result};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use g2_core::actions::{
    action_table, left_table, parse_table, right_table, verify_frame_consistency, verify_homomorphism,
    verify_left_right_commute, verify_simplified_forms, ActionTable, CheckReport, Side, Variant,
};
use g2_core::intertwine::{solve_central_charge, verify_intertwining, CentralConstraint, CentralMode};
use g2_core::singvec::{grid, oracle_check, validate_spec, FamilyKind};
use g2_core::weyl::transform::{derived_chain_rule, forward_substitution, inverse_substitution, tabulated_chain_rule};
use g2_core::weyl::{transform_to_final, transform_to_original, DiffOp, Frame, OpKey};
use g2_core::{ParamPoly, Rational};

use crate::VerifyArgs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    LrCommute,
    Frames,
    Simplified,
    Singular,
    Intertwine,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::LrCommute => "lr-commute",
            Suite::Frames => "frames",
            Suite::Simplified => "simplified",
            Suite::Singular => "singular",
            Suite::Intertwine => "intertwine",
            Suite::All => "all",
        }
    }
}

/// `Info` lines record findings that are not pass/fail gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(id: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status,
            detail: detail.into(),
        }
    }

    fn gate(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check::new(id, if ok { Status::Pass } else { Status::Fail }, detail)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.id, self.status, self.detail)
    }
}

pub fn render(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        out.push_str(&c.to_string());
        out.push('\n');
    }
    let count = |s| checks.iter().filter(|c| c.status == s).count();
    out.push_str(&format!(
        "summary {} {} passed, {} failed, {} info\n",
        if count(Status::Fail) == 0 { Status::Pass } else { Status::Fail },
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Info)
    ));
    out
}

pub fn run_suite(a: &VerifyArgs) -> Result<Vec<Check>> {
    let frames = a.frame.frames();
    let suites = match a.suite {
        Suite::All => vec![
            Suite::Relations,
            Suite::LrCommute,
            Suite::Frames,
            Suite::Simplified,
            Suite::Singular,
            Suite::Intertwine,
        ],
        s => vec![s],
    };
    let mut out = Vec::new();
    for s in suites {
        match s {
            Suite::Relations => match &a.table_file {
                Some(path) => out.push(table_file_check(path)?),
                None => out.extend(relations(&frames)),
            },
            Suite::LrCommute => out.extend(frames.iter().map(|&f| lr_commute(f))),
            Suite::Frames => out.extend(frame_checks(a.seed)),
            Suite::Simplified => out.extend(simplified()),
            Suite::Singular => out.extend(singular(a.max_p, a.max_q, a.seed)),
            Suite::Intertwine => out.extend(intertwine(a.max_p, a.max_q, &frames, &a.central)),
            Suite::All => unreachable!(),
        }
    }
    Ok(out)
}

fn failing_list(r: &CheckReport, limit: usize) -> String {
    let mut names: Vec<&str> = r.failures.iter().take(limit).map(|f| f.label.as_str()).collect();
    if r.failures.len() > limit {
        names.push("...");
    }
    names.join(" ")
}

fn homomorphism_check(id: String, t: &ActionTable, status_if_fail: Status) -> Check {
    let r = verify_homomorphism(t);
    if r.pass() {
        Check::new(id, Status::Pass, format!("{}/{} pairs OK", r.passed(), r.checked))
    } else {
        Check::new(
            id,
            status_if_fail,
            format!("{}/{} pairs OK; failing {}", r.passed(), r.checked, failing_list(&r, usize::MAX)),
        )
    }
}

fn relations(frames: &[Frame]) -> Vec<Check> {
    let mut out = Vec::new();
    for &f in frames {
        let left = left_table(f);
        let mut c = homomorphism_check(format!("relations.left.{f}"), left, Status::Fail);
        if f == Frame::Final {
            c.detail.push_str(&format!(" (variant {})", left.variant));
        }
        out.push(c);
        if f == Frame::Final && left.variant != Variant::Primary {
            let primary = action_table(Side::Left, f, Variant::Primary).expect("built in");
            out.push(homomorphism_check(format!("relations.left.{f}.primary"), primary, Status::Info));
        }
    }
    for &f in frames {
        out.push(homomorphism_check(format!("relations.right.{f}"), right_table(f), Status::Fail));
    }
    out
}

fn table_file_check(path: &std::path::Path) -> Result<Check> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    let side = if header.contains("side=right") { Side::Right } else { Side::Left };
    let frame = if header.contains("frame=original") { Frame::Original } else { Frame::Final };
    let base = action_table(side, frame, Variant::Primary).expect("built in");
    let table = parse_table(&text, Some(base))?;
    Ok(homomorphism_check(
        format!("relations.file.{side}.{frame}"),
        &table,
        Status::Fail,
    ))
}

fn lr_commute(f: Frame) -> Check {
    let r = verify_left_right_commute(f);
    let detail = if r.pass() {
        format!("{}/{} pairs commute", r.passed(), r.checked)
    } else {
        format!("{}/{} pairs commute; failing {}", r.passed(), r.checked, failing_list(&r, 6))
    };
    Check::gate(format!("lr-commute.{f}"), r.pass(), detail)
}

fn random_op<R: Rng>(rng: &mut R, frame: Frame) -> DiffOp {
    let exps = |rng: &mut R| {
        let mut e = [0u8; 6];
        for _ in 0..rng.gen_range(0..=3) {
            e[rng.gen_range(0..6)] += 1;
        }
        e
    };
    let n = rng.gen_range(1..=4);
    let terms: Vec<(OpKey, ParamPoly)> = (0..n)
        .map(|_| {
            let key = OpKey {
                poly: exps(rng),
                deriv: exps(rng),
            };
            let c = Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=6));
            (key, ParamPoly::constant(c))
        })
        .collect();
    DiffOp::from_terms(frame, terms)
}

fn frame_checks(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let chain = derived_chain_rule(&forward_substitution(), &inverse_substitution()).expect("same frame");
    out.push(Check::gate(
        "frames.chain-rule",
        chain == tabulated_chain_rule(),
        "derived chain rule equals the tabulated one",
    ));
    let r = verify_frame_consistency();
    for side in [Side::Left, Side::Right] {
        let prefix = format!("{side} ");
        let failing: Vec<&str> = r
            .failures
            .iter()
            .filter(|f| f.label.starts_with(&prefix))
            .map(|f| f.label.as_str())
            .collect();
        let total = side.domain().len();
        let detail = if failing.is_empty() {
            format!("{total}/{total} entries transform exactly")
        } else {
            format!("{}/{total} entries transform exactly; failing {}", total - failing.len(), failing.join(" "))
        };
        out.push(Check::gate(format!("frames.{side}"), failing.is_empty(), detail));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases = 32;
    let mut bad = 0;
    for _ in 0..cases {
        let a = random_op(&mut rng, Frame::Original);
        let b = random_op(&mut rng, Frame::Final);
        let ok = transform_to_original(&transform_to_final(&a).unwrap()).unwrap() == a
            && transform_to_final(&transform_to_original(&b).unwrap()).unwrap() == b;
        bad += usize::from(!ok);
    }
    out.push(Check::gate(
        "frames.round-trip",
        bad == 0,
        format!("{}/{cases} random operator pairs round-trip (seed {seed})", cases - bad),
    ));
    out
}

fn simplified() -> Vec<Check> {
    let rep = verify_simplified_forms();
    let mut out: Vec<Check> = rep
        .differences
        .iter()
        .map(|(g, d)| {
            let detail = if d.is_zero() {
                "primary and simplified agree".to_string()
            } else {
                format!("primary - simplified = {d}")
            };
            Check::new(format!("simplified.{g}"), Status::Info, detail)
        })
        .collect();
    let detail = format!(
        "primary {}/{} pairs, simplified {}/{} pairs; authoritative {}",
        rep.primary.passed(),
        rep.primary.checked,
        rep.simplified.passed(),
        rep.simplified.checked,
        rep.authoritative().map_or("none", |v| v.name())
    );
    out.push(Check::gate("simplified.authoritative", rep.authoritative().is_some(), detail));
    out
}

fn singular(max_p: u32, max_q: u32, seed: u64) -> Vec<Check> {
    let specs = grid(max_p, max_q);
    specs
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let label = s.label();
            let sym = s.is_singular_symbolically();
            let oracle = oracle_check(s, seed.wrapping_add(i as u64));
            let dims: Vec<String> = oracle.dimensions().iter().map(|d| d.to_string()).collect();
            vec![
                Check::gate(
                    format!("singular.{label}.symbolic"),
                    sym,
                    if sym { "annihilated by all lowering generators" } else { "not annihilated" },
                ),
                Check::gate(
                    format!("singular.{label}.oracle"),
                    oracle.pass(),
                    format!("null space dimensions {}", dims.join(",")),
                ),
            ]
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn admits_unit(c: &CentralConstraint) -> bool {
    match c {
        CentralConstraint::All => true,
        CentralConstraint::Empty => false,
        CentralConstraint::Finite { values, .. } => values.contains(&Rational::one()),
    }
}

fn intertwine(max_p: u32, max_q: u32, frames: &[Frame], central: &CentralMode) -> Vec<Check> {
    let work: Vec<_> = grid(max_p, max_q)
        .into_iter()
        .flat_map(|s| frames.iter().map(move |&f| (s.clone(), f)))
        .collect();
    let mut out: Vec<Check> = work
        .par_iter()
        .map(|(s, f)| {
            let rep = verify_intertwining(s, *f, central.clone());
            let id = format!("intertwine.{}.{f}", s.label());
            let zero = rep.residuals.iter().filter(|(_, r)| r.is_zero()).count();
            let failing: Vec<String> = rep.failing().map(|(g, _)| g.to_string()).collect();
            let mut detail = format!("{zero}/{} generators intertwine at {central}", rep.residuals.len());
            if !failing.is_empty() {
                detail.push_str(&format!("; failing {}", failing.join(" ")));
            }
            match central {
                CentralMode::Fixed(_) => Check::gate(id, rep.pass(), detail),
                CentralMode::Symbolic => {
                    detail.push_str(&format!("; Lh constraint {}", rep.constraint));
                    Check::gate(id, admits_unit(&rep.constraint), detail)
                }
            }
        })
        .collect();
    let s = validate_spec(FamilyKind::II, 1, None).expect("valid");
    for &f in frames {
        let c = solve_central_charge(&s, f);
        let want = CentralConstraint::Finite {
            values: vec![Rational::one()],
            irrational_degree: 0,
        };
        out.push(Check::gate(format!("intertwine.central.{}.{f}", s.label()), c == want, format!("{c}")));
    }
    out
}
