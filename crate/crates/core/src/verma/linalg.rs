//! Exact linear algebra over Q by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalars::Rational;

/// Row-echelon data: the integer matrix after elimination and its pivots.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = Rational::lcm_denominators(row.iter());
            row.iter()
                .map(|x| {
                    let scaled = x * &Rational::from_big(l.clone(), BigInt::one());
                    scaled.numer().clone()
                })
                .collect()
        })
        .collect()
}

fn bareiss(rows: &[Vec<Rational>], ncols: usize) -> Echelon {
    let mut a = integer_rows(rows);
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (quo, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division is exact");
                a[i][j] = quo;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    // rows are left with a common-factor scale only; reduce each for tidiness
    for row in &mut a {
        let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() && !g.is_one() {
            for x in row.iter_mut() {
                *x = &*x / &g;
            }
        }
    }
    Echelon { rows: a, pivots }
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    bareiss(rows, ncols).pivots.len()
}

/// Basis of `{v : rows * v = 0}`, one vector per free column, each with a 1
/// in its free column.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let ech = bareiss(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); ncols];
        v[f] = Rational::one();
        for (r, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[r];
            let mut s = Rational::zero();
            for j in pc + 1..ncols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    s += &(&Rational::from_big(row[j].clone(), BigInt::one()) * &v[j]);
                }
            }
            v[pc] = -(s / Rational::from_big(row[pc].clone(), BigInt::one()));
        }
        out.push(v);
    }
    out
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let n = v.len();
    let r0 = rank(basis, n);
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank(&ext, n) == r0
}

/// Whether `a` and `b` are nonzero multiples of each other.
pub fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[i].is_zero() {
        return false;
    }
    let ratio = &b[i] / &a[i];
    a.iter().zip(b).all(|(x, y)| &(x * &ratio) == y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![
            vec![q(1, 2), q(1, 1), q(0, 1)],
            vec![q(1, 1), q(2, 1), q(0, 1)],
        ];
        assert_eq!(rank(&rows, 3), 1);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let rows = vec![vec![q(1, 3), q(2, 1)], vec![q(-1, 1), q(5, 7)]];
        assert!(nullspace(&rows, 2).is_empty());
    }

    #[test]
    fn span_and_proportionality() {
        let basis = vec![vec![q(1, 1), q(2, 1), q(0, 1)]];
        assert!(in_span(&basis, &[q(-1, 2), q(-1, 1), q(0, 1)]));
        assert!(!in_span(&basis, &[q(0, 1), q(0, 1), q(1, 1)]));
        assert!(proportional(&basis[0], &[q(3, 1), q(6, 1), q(0, 1)]));
        assert!(!proportional(&basis[0], &[q(3, 1), q(5, 1), q(0, 1)]));
    }
}
