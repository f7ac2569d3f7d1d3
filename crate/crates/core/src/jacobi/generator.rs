use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::scalars::Rational;

/// Basis element of G2, declared in PBW order: raising, then Cartan and
/// center, then lowering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A1p,
    A2p,
    B1p,
    B2p,
    Cp,
    Dp,
    H1,
    H2,
    Z,
    A1m,
    A2m,
    B1m,
    B2m,
    Cm,
    Dm,
}

use Generator::*;

impl Generator {
    pub const ALL: [Generator; 15] = [
        A1p, A2p, B1p, B2p, Cp, Dp, H1, H2, Z, A1m, A2m, B1m, B2m, Cm, Dm,
    ];
    pub const RAISING: [Generator; 6] = [A1p, A2p, B1p, B2p, Cp, Dp];
    pub const LOWERING: [Generator; 6] = [A1m, A2m, B1m, B2m, Cm, Dm];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Generator {
        Self::ALL[i]
    }

    pub fn is_raising(self) -> bool {
        self.index() < 6
    }

    pub fn is_lowering(self) -> bool {
        self.index() > 8
    }

    pub fn is_cartan_or_center(self) -> bool {
        matches!(self, H1 | H2 | Z)
    }

    pub fn name(self) -> &'static str {
        match self {
            A1p => "a1+",
            A2p => "a2+",
            B1p => "b1+",
            B2p => "b2+",
            Cp => "c+",
            Dp => "d+",
            H1 => "h1",
            H2 => "h2",
            Z => "Z",
            A1m => "a1-",
            A2m => "a2-",
            B1m => "b1-",
            B2m => "b2-",
            Cm => "c-",
            Dm => "d-",
        }
    }

    /// Eigenvalues under `(h1, h2)`.
    pub fn weight(self) -> WeightVector {
        let (a, b) = match self {
            A1p => (1, 0),
            A2p => (0, 1),
            B1p => (2, 0),
            B2p => (0, 2),
            Cp => (1, 1),
            Dp => (1, -1),
            H1 | H2 | Z => (0, 0),
            A1m => (-1, 0),
            A2m => (0, -1),
            B1m => (-2, 0),
            B2m => (0, -2),
            Cm => (-1, -1),
            Dm => (-1, 1),
        };
        WeightVector::halves(a, b)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Z);
        }
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| ParseError::new(format!("unknown generator `{s}`")))
    }
}

/// A pair `(mu1, mu2)` of eigenvalues under `(h1, h2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Rational, pub Rational);

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector(Rational::zero(), Rational::zero())
    }

    /// `(a/2, b/2)`.
    pub fn halves(a: i64, b: i64) -> Self {
        WeightVector(Rational::new(a, 2), Rational::new(b, 2))
    }

    /// `delta1 = (1/2, 0)`.
    pub fn delta1() -> Self {
        Self::halves(1, 0)
    }

    /// `delta2 = (0, 1/2)`.
    pub fn delta2() -> Self {
        Self::halves(0, 1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        WeightVector(&self.0 * c, &self.1 * c)
    }

    /// `(2 mu1, 2 mu2)` when both are integers.
    pub fn doubled(&self) -> Option<(i64, i64)> {
        let two = Rational::from_int(2);
        Some(((&self.0 * &two).to_i64()?, (&self.1 * &two).to_i64()?))
    }
}

impl std::ops::Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(&self.0 + &rhs.0, &self.1 + &rhs.1)
    }
}

impl std::ops::Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(&self.0 - &rhs.0, &self.1 - &rhs.1)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl FromStr for WeightVector {
    type Err = ParseError;

    /// `a,b` with each component a rational.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| ParseError::new(format!("expected `mu1,mu2`, got `{s}`")))?;
        Ok(WeightVector(a.parse()?, b.parse()?))
    }
}

/// Root labels of the raising generators in terms of the simple-root
/// analogs `alpha1 <-> d+`, `alpha2 <-> a2+`, as coefficient pairs.
pub fn root_coordinates(g: Generator) -> Option<(u32, u32)> {
    Some(match g {
        B1p => (2, 2),
        B2p => (0, 2),
        Cp => (1, 2),
        Dp => (1, 0),
        A1p => (1, 1),
        A2p => (0, 1),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in Generator::ALL {
            assert_eq!(g.name().parse::<Generator>().unwrap(), g);
        }
        assert_eq!("1".parse::<Generator>().unwrap(), Z);
    }

    #[test]
    fn weight_list() {
        assert_eq!(Dp.weight(), WeightVector::halves(1, -1));
        assert_eq!(Cm.weight(), WeightVector::halves(-1, -1));
        assert_eq!(B2p.weight(), WeightVector::halves(0, 2));
    }

    #[test]
    fn roots_agree_with_weights() {
        // alpha1 = weight(d+), alpha2 = weight(a2+)
        for g in Generator::RAISING {
            let (i, j) = root_coordinates(g).unwrap();
            let w = &Dp.weight().scale(&Rational::from_int(i as i64))
                + &A2p.weight().scale(&Rational::from_int(j as i64));
            assert_eq!(w, g.weight(), "{g}");
        }
        assert_eq!(&WeightVector::delta1(), &(&Dp.weight() + &A2p.weight()));
        assert_eq!(WeightVector::delta2(), A2p.weight());
    }

    #[test]
    fn parse_weight() {
        let w: WeightVector = "1/2,-1/2".parse().unwrap();
        assert_eq!(w, WeightVector::halves(1, -1));
        assert!("1/2".parse::<WeightVector>().is_err());
    }
}
