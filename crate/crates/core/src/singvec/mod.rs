//! Closed-form singular vectors of the five families, their weight
//! conditions and shifts, and the checks against the Verma module.

mod oracle;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use oracle::{oracle_check, sample_rational, OracleReport, OracleSample};

use crate::error::{Error, ParseError};
use crate::jacobi::{Generator, WeightVector};
use crate::scalars::{gamma_ratio_falling, gamma_ratio_rising, Bindings, Param, ParamPoly, Rational};
use crate::verma::{hat_ket, HatKetIndex, VermaElement, VermaModule};

/// Family label as given on the command line, before subfamily resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    I,
    II,
    III,
    IV,
    V,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::I,
        FamilyKind::II,
        FamilyKind::III,
        FamilyKind::IV,
        FamilyKind::V,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::I => "i",
            FamilyKind::II => "ii",
            FamilyKind::III => "iii",
            FamilyKind::IV => "iv",
            FamilyKind::V => "v",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(FamilyKind::I),
            "ii" | "2" => Ok(FamilyKind::II),
            "iii" | "3" => Ok(FamilyKind::III),
            "iv" | "4" => Ok(FamilyKind::IV),
            "v" | "5" => Ok(FamilyKind::V),
            other => Err(ParseError::new(format!("unknown family `{other}`"))),
        }
    }
}

/// Family with the third one split by the ordering of `p` and `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    I,
    II,
    IIIa,
    IIIb,
    IIIc,
    IV,
    V,
}

impl Family {
    pub fn kind(self) -> FamilyKind {
        match self {
            Family::I => FamilyKind::I,
            Family::II => FamilyKind::II,
            Family::IIIa | Family::IIIb | Family::IIIc => FamilyKind::III,
            Family::IV => FamilyKind::IV,
            Family::V => FamilyKind::V,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::I => "i",
            Family::II => "ii",
            Family::IIIa => "iiia",
            Family::IIIb => "iiib",
            Family::IIIc => "iiic",
            Family::IV => "iv",
            Family::V => "v",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `a1 L1 + a2 L2 = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineConstraint {
    pub a1: Rational,
    pub a2: Rational,
    pub rhs: Rational,
}

impl AffineConstraint {
    fn new(a1: i64, a2: i64, rhs: Rational) -> Self {
        AffineConstraint {
            a1: Rational::from_int(a1),
            a2: Rational::from_int(a2),
            rhs,
        }
    }

    /// Whether `(l1, l2)` satisfies the relation.
    pub fn holds(&self, l1: &ParamPoly, l2: &ParamPoly) -> bool {
        let lhs = &l1.scale(&self.a1) + &l2.scale(&self.a2);
        lhs == ParamPoly::constant(self.rhs.clone())
    }
}

impl fmt::Display for AffineConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs = &ParamPoly::param(Param::L1).scale(&self.a1) + &ParamPoly::param(Param::L2).scale(&self.a2);
        write!(f, "{lhs} = {}", self.rhs)
    }
}

/// A validated family member with its weight conditions and shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularVectorSpec {
    pub family: Family,
    pub p: u32,
    pub q: Option<u32>,
    pub weight_constraints: Vec<AffineConstraint>,
    pub shift: WeightVector,
}

fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

/// Checks the parameters of a family and fills in constraints and shift.
pub fn validate_spec(kind: FamilyKind, p: u32, q: Option<u32>) -> Result<SingularVectorSpec, Error> {
    if p == 0 {
        return Err(Error::InvalidSpec("p must be a positive integer".into()));
    }
    let pi = p as i64;
    let (family, constraints, shift) = match kind {
        FamilyKind::III => {
            let q = q.ok_or_else(|| Error::InvalidSpec("family iii needs q".into()))?;
            if q == 0 {
                return Err(Error::InvalidSpec("q must be a positive integer".into()));
            }
            if p == q {
                return Err(Error::InvalidSpec("excluded: p = q".into()));
            }
            if p == 2 * q {
                return Err(Error::InvalidSpec("excluded: p = 2q".into()));
            }
            let qi = q as i64;
            let family = if p < q {
                Family::IIIa
            } else if p < 2 * q {
                Family::IIIb
            } else {
                Family::IIIc
            };
            // L1 = 5/4 - (p - q)/2, L2 = 3/4 - q/2
            let c1 = Rational::new(5, 4) - half(pi - qi);
            let c2 = Rational::new(3, 4) - half(qi);
            (
                family,
                vec![AffineConstraint::new(1, 0, c1), AffineConstraint::new(0, 1, c2)],
                WeightVector::halves(pi, 2 * qi - pi),
            )
        }
        _ if q.is_some() => {
            return Err(Error::InvalidSpec(format!("family {kind} takes no q")));
        }
        FamilyKind::I => (
            Family::I,
            vec![AffineConstraint::new(1, -1, half(1 - pi))],
            WeightVector::halves(pi, -pi),
        ),
        FamilyKind::II => (
            Family::II,
            vec![AffineConstraint::new(0, 1, Rational::new(3, 4) - half(pi))],
            WeightVector::halves(0, 2 * pi),
        ),
        FamilyKind::IV => (
            Family::IV,
            vec![AffineConstraint::new(1, 1, Rational::from_int(2) - half(pi))],
            WeightVector::halves(pi, pi),
        ),
        FamilyKind::V => (
            Family::V,
            vec![AffineConstraint::new(1, 0, Rational::new(5, 4) - half(pi))],
            WeightVector::halves(2 * pi, 0),
        ),
    };
    Ok(SingularVectorSpec {
        family,
        p,
        q: if kind == FamilyKind::III { q } else { None },
        weight_constraints: constraints,
        shift,
    })
}

impl SingularVectorSpec {
    fn qv(&self) -> u32 {
        self.q.unwrap_or(0)
    }

    /// Short label such as `iii(p=1,q=2)`.
    pub fn label(&self) -> String {
        match self.q {
            Some(q) => format!("{}(p={},q={})", self.family.kind(), self.p, q),
            None => format!("{}(p={})", self.family.kind(), self.p),
        }
    }

    /// The weight component left free by the constraints, if any.
    pub fn free_component(&self) -> Option<Param> {
        match self.family {
            Family::I => Some(Param::L2),
            Family::II => Some(Param::L1),
            Family::IV => Some(Param::L1),
            Family::V => Some(Param::L2),
            _ => None,
        }
    }

    /// Substitution that imposes the weight constraints, eliminating the
    /// non-free components.
    pub fn bindings(&self) -> Bindings {
        let p = self.p as i64;
        let l1 = ParamPoly::param(Param::L1);
        let l2 = ParamPoly::param(Param::L2);
        let c = |r: Rational| ParamPoly::constant(r);
        match self.family {
            Family::I => Bindings::new().with(Param::L1, &l2 + &c(half(1 - p))),
            Family::II => Bindings::new().with(Param::L2, c(Rational::new(3, 4) - half(p))),
            Family::IV => Bindings::new().with(Param::L2, &c(Rational::from_int(2) - half(p)) - &l1),
            Family::V => Bindings::new().with(Param::L1, c(Rational::new(5, 4) - half(p))),
            Family::IIIa | Family::IIIb | Family::IIIc => {
                let w = &self.weight_constraints;
                Bindings::new()
                    .with(Param::L1, c(w[0].rhs.clone()))
                    .with(Param::L2, c(w[1].rhs.clone()))
            }
        }
    }

    /// Lowest weight `(L1, L2)` after imposing the constraints.
    pub fn constrained_weight(&self) -> [ParamPoly; 2] {
        let b = self.bindings();
        [Param::L1, Param::L2].map(|p| ParamPoly::param(p).substitute_unchecked(&b))
    }

    /// Summation range `(k, n)` exactly as printed for the family.
    pub fn summation_range(&self) -> Vec<(u32, u32)> {
        let p = self.p;
        let q = self.qv();
        let mut out = Vec::new();
        let mut block = |ks: std::ops::RangeInclusive<u32>, nmax: &dyn Fn(u32) -> u32| {
            for k in ks {
                for n in 0..=nmax(k) {
                    out.push((k, n));
                }
            }
        };
        match self.family {
            Family::I | Family::II => block(0..=0, &|_| 0),
            Family::IIIa | Family::IV => block(0..=p / 2, &|k| p - 2 * k),
            Family::IIIb => {
                block(0..=p - q, &|k| q - k);
                if p - q < p / 2 {
                    block(p - q + 1..=p / 2, &|k| p - 2 * k);
                }
            }
            Family::IIIc => block(0..=q, &|k| q - k),
            Family::V => block(0..=p, &|k| p - k),
        }
        out
    }

    /// Hat-ket index of the `(k, n)` summand.
    pub fn ket_index(&self, k: u32, n: u32) -> HatKetIndex {
        let p = self.p;
        let q = self.qv();
        match self.family {
            Family::I => HatKetIndex::new(0, 0, 0, p),
            Family::II => HatKetIndex::new(0, p, 0, 0),
            Family::IIIa | Family::IIIb | Family::IIIc => HatKetIndex::new(k, q - k - n, n, p - 2 * k - n),
            Family::IV => HatKetIndex::new(k, p - k - n, n, p - 2 * k - n),
            Family::V => HatKetIndex::new(k, p - k - n, n, 2 * p - 2 * k - n),
        }
    }

    /// `c(k, n)` of the family.
    pub fn coefficient(&self, k: u32, n: u32) -> Result<ParamPoly, Error> {
        if !self.summation_range().contains(&(k, n)) {
            return Err(Error::OutOfRange { k, n });
        }
        let p = self.p;
        let q = self.qv();
        let f = Rational::factorial;
        let four_k = Rational::from_int(4).pow(k);
        Ok(match self.family {
            Family::I | Family::II => ParamPoly::one(),
            Family::IIIa | Family::IIIb | Family::IIIc => {
                let num = f(p) * f(q);
                let den = four_k * f(k) * f(n) * f(p - 2 * k - n) * f(q - k - n);
                ParamPoly::constant(num / den)
            }
            Family::IV => {
                let pre = f(p) / (four_k * f(k) * f(n) * f(p - 2 * k - n));
                // 2 L1 + p - 3/2
                let x = &ParamPoly::param(Param::L1).scale(&Rational::from_int(2))
                    + &ParamPoly::constant(Rational::from_int(p as i64) - Rational::new(3, 2));
                gamma_ratio_falling(&x, k + n).scale(&pre)
            }
            Family::V => {
                let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
                let pre = sign * f(p) / (four_k * f(k) * f(n) * f(p - k - n));
                // 2 L2 - p - 3/2
                let y = &ParamPoly::param(Param::L2).scale(&Rational::from_int(2))
                    - &ParamPoly::constant(Rational::from_int(p as i64) + Rational::new(3, 2));
                gamma_ratio_rising(&y, 2 * k + n).scale(&pre)
            }
        })
    }

    /// Hat-ket coefficient table of the closed form.
    pub fn closed_form(&self) -> BTreeMap<HatKetIndex, ParamPoly> {
        let mut out = BTreeMap::new();
        for (k, n) in self.summation_range() {
            let c = self.coefficient(k, n).expect("index from the range");
            if !c.is_zero() {
                out.insert(self.ket_index(k, n), c);
            }
        }
        out
    }

    pub fn weight_shift(&self) -> WeightVector {
        self.shift.clone()
    }

    /// The closed form expanded in PBW raising monomials.
    pub fn expand(&self) -> VermaElement {
        let mut out = VermaElement::zero();
        for (idx, c) in self.closed_form() {
            out.add_scaled(&hat_ket(idx.k, idx.l, idx.n, idx.m), &c);
        }
        out
    }

    /// `X . v` for each lowering generator, in the symbolic module with
    /// central charge 1 and the constraints substituted.
    pub fn lowering_residuals(&self) -> Vec<(Generator, VermaElement)> {
        let module = VermaModule::symbolic();
        let v = self.expand();
        let b = self.bindings();
        Generator::LOWERING
            .iter()
            .map(|&x| {
                let r = module.act_generator(x, &v).substitute(&b).expect("acyclic");
                (x, r)
            })
            .collect()
    }

    pub fn is_singular_symbolically(&self) -> bool {
        self.lowering_residuals().iter().all(|(_, r)| r.is_zero())
    }
}

/// All `(k, n)` for which every factorial argument and ket entry of the
/// family is nonnegative.
pub fn nonnegative_range(spec: &SingularVectorSpec) -> Vec<(u32, u32)> {
    let p = spec.p as i64;
    let q = spec.q.unwrap_or(0) as i64;
    let bound = 2 * p + 2;
    let mut out = Vec::new();
    for k in 0..=bound {
        for n in 0..=bound {
            let ok = match spec.family {
                Family::I | Family::II => k == 0 && n == 0,
                Family::IIIa | Family::IIIb | Family::IIIc => p - 2 * k - n >= 0 && q - k - n >= 0,
                Family::IV => p - 2 * k - n >= 0 && p - k - n >= 0,
                Family::V => p - k - n >= 0 && 2 * p - 2 * k - n >= 0,
            };
            if ok {
                out.push((k as u32, n as u32));
            }
        }
    }
    out
}

/// Every valid `(family, p, q)` with `p <= max_p` and `q <= max_q`.
pub fn grid(max_p: u32, max_q: u32) -> Vec<SingularVectorSpec> {
    let mut out = Vec::new();
    for kind in FamilyKind::ALL {
        for p in 1..=max_p {
            if kind == FamilyKind::III {
                for q in 1..=max_q {
                    if let Ok(s) = validate_spec(kind, p, Some(q)) {
                        out.push(s);
                    }
                }
            } else {
                out.push(validate_spec(kind, p, None).expect("valid"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(s: &str) -> ParamPoly {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        let s = validate_spec(FamilyKind::III, 1, Some(2)).unwrap();
        assert_eq!(s.family, Family::IIIa);
        assert_eq!(s.shift, WeightVector::halves(1, 3));
        let e = validate_spec(FamilyKind::III, 2, Some(1)).unwrap_err();
        assert!(e.to_string().contains("excluded: p = 2q"));
        let e = validate_spec(FamilyKind::III, 2, Some(2)).unwrap_err();
        assert!(e.to_string().contains("excluded: p = q"));
        let s = validate_spec(FamilyKind::I, 1, None).unwrap();
        assert_eq!(s.weight_constraints, vec![AffineConstraint::new(1, -1, Rational::zero())]);
        assert_eq!(s.shift, WeightVector::halves(1, -1));
        assert!(validate_spec(FamilyKind::II, 0, None).is_err());
        assert!(validate_spec(FamilyKind::II, 1, Some(1)).is_err());
        assert!(validate_spec(FamilyKind::III, 1, None).is_err());
    }

    #[test]
    fn subfamilies() {
        let fam = |p, q| validate_spec(FamilyKind::III, p, Some(q)).unwrap().family;
        assert_eq!(fam(1, 3), Family::IIIa);
        assert_eq!(fam(3, 2), Family::IIIb);
        assert_eq!(fam(3, 1), Family::IIIc);
    }

    #[test]
    fn coefficient_examples() {
        let s = validate_spec(FamilyKind::III, 1, Some(2)).unwrap();
        assert_eq!(s.coefficient(0, 0).unwrap(), ParamPoly::one());
        assert_eq!(s.coefficient(0, 1).unwrap(), ParamPoly::int(2));
        assert!(matches!(s.coefficient(1, 0), Err(Error::OutOfRange { k: 1, n: 0 })));
        let s = validate_spec(FamilyKind::IV, 1, None).unwrap();
        assert_eq!(s.coefficient(0, 1).unwrap(), pp("2*L1 - 3/2"));
    }

    #[test]
    fn closed_form_examples() {
        let one = |idx: HatKetIndex| BTreeMap::from([(idx, ParamPoly::one())]);
        let s = validate_spec(FamilyKind::I, 2, None).unwrap();
        assert_eq!(s.closed_form(), one(HatKetIndex::new(0, 0, 0, 2)));
        let s = validate_spec(FamilyKind::II, 1, None).unwrap();
        assert_eq!(s.closed_form(), one(HatKetIndex::new(0, 1, 0, 0)));
        let s = validate_spec(FamilyKind::IV, 1, None).unwrap();
        assert_eq!(
            s.closed_form(),
            BTreeMap::from([
                (HatKetIndex::new(0, 1, 0, 1), ParamPoly::one()),
                (HatKetIndex::new(0, 0, 1, 0), pp("2*L1 - 3/2")),
            ])
        );
    }

    #[test]
    fn shifts() {
        let shift = |k, p| validate_spec(k, p, None).unwrap().weight_shift();
        assert_eq!(shift(FamilyKind::II, 2), WeightVector::halves(0, 4));
        assert_eq!(shift(FamilyKind::V, 1), WeightVector::halves(2, 0));
        assert_eq!(shift(FamilyKind::I, 1), WeightVector::halves(1, -1));
    }

    #[test]
    fn small_members_are_singular() {
        for (kind, p, q) in [
            (FamilyKind::I, 1, None),
            (FamilyKind::II, 1, None),
            (FamilyKind::III, 1, Some(2)),
            (FamilyKind::IV, 1, None),
            (FamilyKind::V, 1, None),
        ] {
            let s = validate_spec(kind, p, q).unwrap();
            for (x, r) in s.lowering_residuals() {
                assert!(r.is_zero(), "{} {x}: {r}", s.label());
            }
        }
    }
}
