//! Structure constants of G2.
//!
//! The table is generated from the index form of the relations for the
//! Heisenberg part `a_i^±`, the symplectic part `K^±_ij` (symmetric in
//! `i, j`) and `K^0_ij`, and then read off in the named basis
//! `b_i^± = K^±_ii`, `c^± = K^±_12`, `d^+ = K^0_12`, `d^- = K^0_21`,
//! `h_i = K^0_ii`.

use std::sync::OnceLock;

use super::Generator;
use crate::scalars::Rational;

/// Linear combination of generators, sorted by generator, no zero entries.
pub type LieElement = Vec<(Generator, Rational)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Idx {
    APlus(u8),
    AMinus(u8),
    KPlus(u8, u8),
    KMinus(u8, u8),
    KZero(u8, u8),
    One,
}

use Idx::*;

fn to_index(g: Generator) -> Idx {
    match g {
        Generator::A1p => APlus(1),
        Generator::A2p => APlus(2),
        Generator::B1p => KPlus(1, 1),
        Generator::B2p => KPlus(2, 2),
        Generator::Cp => KPlus(1, 2),
        Generator::Dp => KZero(1, 2),
        Generator::H1 => KZero(1, 1),
        Generator::H2 => KZero(2, 2),
        Generator::Z => One,
        Generator::A1m => AMinus(1),
        Generator::A2m => AMinus(2),
        Generator::B1m => KMinus(1, 1),
        Generator::B2m => KMinus(2, 2),
        Generator::Cm => KMinus(1, 2),
        Generator::Dm => KZero(2, 1),
    }
}

fn from_index(x: Idx) -> Generator {
    match x {
        APlus(1) => Generator::A1p,
        APlus(_) => Generator::A2p,
        AMinus(1) => Generator::A1m,
        AMinus(_) => Generator::A2m,
        KPlus(i, j) => match (i.min(j), i.max(j)) {
            (1, 1) => Generator::B1p,
            (2, 2) => Generator::B2p,
            _ => Generator::Cp,
        },
        KMinus(i, j) => match (i.min(j), i.max(j)) {
            (1, 1) => Generator::B1m,
            (2, 2) => Generator::B2m,
            _ => Generator::Cm,
        },
        KZero(1, 1) => Generator::H1,
        KZero(2, 2) => Generator::H2,
        KZero(1, _) => Generator::Dp,
        KZero(_, _) => Generator::Dm,
        One => Generator::Z,
    }
}

fn delta(i: u8, j: u8) -> i64 {
    (i == j) as i64
}

struct Acc(Vec<(Idx, Rational)>);

impl Acc {
    fn new() -> Self {
        Acc(Vec::new())
    }

    /// Adds `num/den * delta * x`.
    fn push(&mut self, num: i64, den: i64, delta: i64, x: Idx) {
        if delta != 0 {
            self.0.push((x, Rational::new(num * delta, den)));
        }
    }
}

/// The relations as given in index form; `None` when `(x, y)` is not in the
/// listed orientation.
fn listed(x: Idx, y: Idx) -> Option<Acc> {
    let mut r = Acc::new();
    match (x, y) {
        (One, _) | (_, One) => {}
        (AMinus(i), APlus(j)) => r.push(1, 1, delta(i, j), One),
        (AMinus(_), AMinus(_)) | (APlus(_), APlus(_)) => {}
        (APlus(_), KPlus(_, _)) | (AMinus(_), KMinus(_, _)) => {}
        (AMinus(i), KPlus(k, j)) => {
            r.push(1, 2, delta(i, k), APlus(j));
            r.push(1, 2, delta(i, j), APlus(k));
        }
        (KMinus(k, j), APlus(i)) => {
            r.push(1, 2, delta(i, k), AMinus(j));
            r.push(1, 2, delta(i, j), AMinus(k));
        }
        (KZero(i, j), APlus(k)) => r.push(1, 2, delta(j, k), APlus(i)),
        (AMinus(k), KZero(i, j)) => r.push(1, 2, delta(i, k), AMinus(j)),
        (KMinus(_, _), KMinus(_, _)) | (KPlus(_, _), KPlus(_, _)) => {}
        (KMinus(i, j), KZero(k, l)) => {
            r.push(1, 2, delta(k, j), KMinus(i, l));
            r.push(1, 2, delta(k, i), KMinus(j, l));
        }
        (KMinus(i, j), KPlus(k, l)) => {
            r.push(1, 2, delta(l, i), KZero(k, j));
            r.push(1, 2, delta(k, i), KZero(l, j));
            r.push(1, 2, delta(l, j), KZero(k, i));
            r.push(1, 2, delta(k, j), KZero(l, i));
        }
        (KPlus(i, j), KZero(k, l)) => {
            r.push(-1, 2, delta(j, l), KPlus(i, k));
            r.push(-1, 2, delta(l, i), KPlus(j, k));
        }
        (KZero(j, i), KZero(k, l)) => {
            r.push(1, 2, delta(k, i), KZero(j, l));
            r.push(-1, 2, delta(l, j), KZero(k, i));
        }
        _ => return None,
    }
    Some(r)
}

fn normalize(acc: Acc, sign: i64) -> LieElement {
    let mut out = [(); 15].map(|_| Rational::zero());
    for (x, c) in acc.0 {
        out[from_index(x).index()] += &(c * Rational::from_int(sign));
    }
    out.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (Generator::from_index(i), c))
        .collect()
}

fn generate(x: Generator, y: Generator) -> LieElement {
    let (ix, iy) = (to_index(x), to_index(y));
    if let Some(acc) = listed(ix, iy) {
        return normalize(acc, 1);
    }
    let acc = listed(iy, ix).expect("every ordered pair is covered in one orientation");
    normalize(acc, -1)
}

fn table() -> &'static Vec<LieElement> {
    static TABLE: OnceLock<Vec<LieElement>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(225);
        for x in Generator::ALL {
            for y in Generator::ALL {
                t.push(generate(x, y));
            }
        }
        t
    })
}

/// `[x, y]` as a linear combination of generators.
pub fn bracket_lie(x: Generator, y: Generator) -> &'static LieElement {
    &table()[x.index() * 15 + y.index()]
}

/// `[u, v]` for linear combinations.
pub fn bracket_lin(u: &[(Generator, Rational)], v: &[(Generator, Rational)]) -> LieElement {
    let mut out = [(); 15].map(|_| Rational::zero());
    for (x, a) in u {
        for (y, b) in v {
            let ab = a * b;
            for (g, c) in bracket_lie(*x, *y) {
                out[g.index()] += &(&ab * c);
            }
        }
    }
    out.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (Generator::from_index(i), c))
        .collect()
}
