//! Weyl groups of the classical families: orders, characteristic degrees,
//! conjugacy classes, and the graded determinants `det(1+qw)` and
//! `det(1-q^2 w)` on the rational first homology of the maximal torus.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::arith::TruncatedSeries;
use crate::error::{Error, Result};
use crate::partitions::{
    class_size, enumerate_bipartitions, enumerate_partitions, group_order, is_even_class,
    Bipartition,
};

/// The five classical sequences `G_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylFamily {
    /// `U(r)`, Weyl group `S_r` permuting an `r`-dimensional torus.
    AU,
    /// `SU(r)`, Weyl group `S_r` on the rank `r-1` torus.
    ASU,
    /// `SO(2r+1)`, Weyl group `B_r`.
    B,
    /// `Sp(r)`, Weyl group `B_r`.
    C,
    /// `SO(2r)`, Weyl group `D_r`.
    D,
}

impl WeylFamily {
    pub const ALL: [WeylFamily; 5] = [
        WeylFamily::AU,
        WeylFamily::ASU,
        WeylFamily::B,
        WeylFamily::C,
        WeylFamily::D,
    ];

    pub fn is_type_a(self) -> bool {
        matches!(self, WeylFamily::AU | WeylFamily::ASU)
    }

    /// Rank of the maximal torus at Weyl rank `r`.
    pub fn torus_rank(self, r: usize) -> usize {
        match self {
            WeylFamily::ASU => r.saturating_sub(1),
            _ => r,
        }
    }

    pub fn group_name(self, r: usize) -> String {
        match self {
            WeylFamily::AU => format!("U({r})"),
            WeylFamily::ASU => format!("SU({r})"),
            WeylFamily::B => format!("SO({})", 2 * r + 1),
            WeylFamily::C => format!("Sp({r})"),
            WeylFamily::D => format!("SO({})", 2 * r),
        }
    }
}

impl fmt::Display for WeylFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WeylFamily::AU => "A_U",
            WeylFamily::ASU => "A_SU",
            WeylFamily::B => "B",
            WeylFamily::C => "C",
            WeylFamily::D => "D",
        };
        f.write_str(s)
    }
}

/// Every group name accepted as input. Complexifications and spin covers
/// have the same rational answers as the compact group they resolve to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyAlias {
    U,
    Su,
    SoOdd,
    Sp,
    SoEven,
    SpinOdd,
    SpinEven,
    Glc,
    Slc,
    SocOdd,
    SocEven,
    Spc,
}

impl FamilyAlias {
    pub const ALL: [FamilyAlias; 12] = [
        FamilyAlias::U,
        FamilyAlias::Su,
        FamilyAlias::SoOdd,
        FamilyAlias::Sp,
        FamilyAlias::SoEven,
        FamilyAlias::SpinOdd,
        FamilyAlias::SpinEven,
        FamilyAlias::Glc,
        FamilyAlias::Slc,
        FamilyAlias::SocOdd,
        FamilyAlias::SocEven,
        FamilyAlias::Spc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyAlias::U => "u",
            FamilyAlias::Su => "su",
            FamilyAlias::SoOdd => "so-odd",
            FamilyAlias::Sp => "sp",
            FamilyAlias::SoEven => "so-even",
            FamilyAlias::SpinOdd => "spin-odd",
            FamilyAlias::SpinEven => "spin-even",
            FamilyAlias::Glc => "glc",
            FamilyAlias::Slc => "slc",
            FamilyAlias::SocOdd => "soc-odd",
            FamilyAlias::SocEven => "soc-even",
            FamilyAlias::Spc => "spc",
        }
    }

    pub fn resolve(self) -> WeylFamily {
        match self {
            FamilyAlias::U | FamilyAlias::Glc => WeylFamily::AU,
            FamilyAlias::Su | FamilyAlias::Slc => WeylFamily::ASU,
            FamilyAlias::SoOdd | FamilyAlias::SpinOdd | FamilyAlias::SocOdd => WeylFamily::B,
            FamilyAlias::Sp | FamilyAlias::Spc => WeylFamily::C,
            FamilyAlias::SoEven | FamilyAlias::SpinEven | FamilyAlias::SocEven => WeylFamily::D,
        }
    }

    /// How the alias reduces to the compact family, if it is not one already.
    pub fn resolution_note(self) -> Option<&'static str> {
        match self {
            FamilyAlias::Glc | FamilyAlias::Slc | FamilyAlias::SocOdd | FamilyAlias::SocEven
            | FamilyAlias::Spc => Some("complexification: deformation retracts onto the maximal compact subgroup"),
            FamilyAlias::SpinOdd | FamilyAlias::SpinEven => {
                Some("finite cover: rational homology agrees with the covered group")
            }
            _ => None,
        }
    }

    pub fn vocabulary() -> String {
        Self::ALL
            .iter()
            .map(|a| a.name())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl FromStr for FamilyAlias {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "unknown family '{s}'; expected one of: {}",
                    Self::vocabulary()
                ))
            })
    }
}

impl fmt::Display for FamilyAlias {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A resolved family at a fixed rank, with the alias it was requested under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylFamilyDescriptor {
    pub requested: Option<FamilyAlias>,
    pub family: WeylFamily,
    pub rank: usize,
    /// Nilpotency class of a free nilpotent source group, recorded only; the
    /// identity component is made of abelian representations, so the answer
    /// is the abelian one.
    pub nilpotent_class: Option<usize>,
    pub torus_rank: usize,
    pub group_order: BigUint,
    pub degrees: Vec<usize>,
    pub warnings: Vec<String>,
}

impl WeylFamilyDescriptor {
    pub fn new(family: WeylFamily, rank: usize) -> Result<Self> {
        let degrees = characteristic_degrees(family, rank)?;
        let mut warnings = Vec::new();
        if family == WeylFamily::D && rank == 1 {
            warnings.push(
                "SO(2) is a torus; the improved r - floor(sqrt r) + 1 bound does not apply at r = 1"
                    .to_string(),
            );
        }
        Ok(WeylFamilyDescriptor {
            requested: None,
            family,
            rank,
            nilpotent_class: None,
            torus_rank: family.torus_rank(rank),
            group_order: group_order(family, rank),
            degrees,
            warnings,
        })
    }

    pub fn from_alias(alias: FamilyAlias, rank: usize, nilpotent_class: Option<usize>) -> Result<Self> {
        if let Some(q) = nilpotent_class {
            if q < 2 {
                return Err(Error::InvalidInput(format!(
                    "nilpotency class must be at least 2, got {q}"
                )));
            }
        }
        let mut d = Self::new(alias.resolve(), rank)?;
        d.requested = Some(alias);
        d.nilpotent_class = nilpotent_class;
        Ok(d)
    }

    /// `dim(G/T) = Σ (2 d_i - 2)`.
    pub fn flag_dimension(&self) -> usize {
        self.degrees.iter().map(|d| 2 * d - 2).sum()
    }

    pub fn classes(&self) -> Vec<WeightedClass> {
        conjugacy_classes(self.family, self.rank).expect("descriptor rank already validated")
    }
}

/// A conjugacy class with its number of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedClass {
    pub cycle_type: Bipartition,
    pub size: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetVariant {
    /// `det(1 + q w)`: graded trace on `H_*(T)`.
    OnePlusQw,
    /// `det(1 - q^2 w)`: reciprocal graded trace on `H_*(BT)`.
    OneMinusQ2w,
}

fn check_rank(family: WeylFamily, r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidRank {
            family: family.to_string(),
            rank: r,
        });
    }
    Ok(())
}

/// Degrees of the basic polynomial invariants of the Weyl group acting on
/// the torus; for `A_U` the extra degree 1 accounts for the central circle.
pub fn characteristic_degrees(family: WeylFamily, r: usize) -> Result<Vec<usize>> {
    check_rank(family, r)?;
    Ok(match family {
        WeylFamily::AU => (1..=r).collect(),
        WeylFamily::ASU => (2..=r).collect(),
        WeylFamily::B | WeylFamily::C => (1..=r).map(|i| 2 * i).collect(),
        WeylFamily::D => {
            let mut d: Vec<usize> = (1..r).map(|i| 2 * i).collect();
            d.push(r);
            d
        }
    })
}

pub fn weyl_order(family: WeylFamily, r: usize) -> Result<BigUint> {
    check_rank(family, r)?;
    Ok(group_order(family, r))
}

/// All conjugacy classes in the fixed enumeration order. Type D lists the
/// `B_r` classes with an even number of negative cycles, weighted by their
/// full `B_r` size.
pub fn conjugacy_classes(family: WeylFamily, r: usize) -> Result<Vec<WeightedClass>> {
    check_rank(family, r)?;
    let labels: Vec<Bipartition> = if family.is_type_a() {
        enumerate_partitions(r)
            .into_iter()
            .map(Bipartition::unsigned)
            .collect()
    } else {
        enumerate_bipartitions(r)
            .into_iter()
            .filter(|c| family != WeylFamily::D || is_even_class(c))
            .collect()
    };
    labels
        .into_iter()
        .map(|cycle_type| {
            let size = class_size(family, r, &cycle_type)?;
            Ok(WeightedClass { cycle_type, size })
        })
        .collect()
}

/// Graded determinant of a class on `H_1(T; Q)`, truncated at `cap`.
///
/// A positive `k`-cycle contributes `1 - (-q)^k` (resp. `1 - q^{2k}`), a
/// negative one `1 + (-q)^k` (resp. `1 + q^{2k}`). For `A_SU` the trivial
/// summand of the permutation representation is divided out.
pub fn char_det_series(
    family: WeylFamily,
    r: usize,
    class: &Bipartition,
    variant: DetVariant,
    cap: usize,
) -> Result<TruncatedSeries> {
    check_rank(family, r)?;
    let invalid = || Error::InvalidClass {
        family: family.to_string(),
        rank: r,
        class: class.to_string(),
    };
    if class.size() != r
        || (family.is_type_a() && !class.negative.is_empty())
        || (family == WeylFamily::D && !is_even_class(class))
    {
        return Err(invalid());
    }
    let factor = |k: usize, negative: bool| -> TruncatedSeries {
        match variant {
            DetVariant::OnePlusQw => {
                // 1 ∓ (-q)^k
                let odd = k % 2 == 1;
                let c = match (negative, odd) {
                    (false, false) => -1,
                    (false, true) => 1,
                    (true, false) => 1,
                    (true, true) => -1,
                };
                TruncatedSeries::from_terms(&[(0, 1), (k, c)], cap)
            }
            DetVariant::OneMinusQ2w => {
                TruncatedSeries::from_terms(&[(0, 1), (2 * k, if negative { 1 } else { -1 })], cap)
            }
        }
    };
    let mut acc = TruncatedSeries::one(cap);
    for &k in class.positive.parts() {
        acc = acc.multiply(&factor(k, false))?;
    }
    for &k in class.negative.parts() {
        acc = acc.multiply(&factor(k, true))?;
    }
    if family == WeylFamily::ASU {
        let trivial = match variant {
            DetVariant::OnePlusQw => TruncatedSeries::from_terms(&[(0, 1), (1, 1)], cap),
            DetVariant::OneMinusQ2w => TruncatedSeries::from_terms(&[(0, 1), (2, -1)], cap),
        };
        acc = acc.divide(&trivial)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ExactRational;
    use num_traits::{One, Zero};

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(characteristic_degrees(WeylFamily::C, 2).unwrap(), vec![2, 4]);
        assert_eq!(characteristic_degrees(WeylFamily::AU, 3).unwrap(), vec![1, 2, 3]);
        assert_eq!(characteristic_degrees(WeylFamily::D, 3).unwrap(), vec![2, 4, 3]);
        assert!(characteristic_degrees(WeylFamily::B, 0).is_err());
    }

    #[test]
    fn degree_products_equal_group_orders() {
        for family in WeylFamily::ALL {
            for r in 1..=8 {
                let prod: usize = characteristic_degrees(family, r).unwrap().iter().product();
                assert_eq!(BigUint::from(prod), weyl_order(family, r).unwrap(), "{family} {r}");
                assert_eq!(
                    characteristic_degrees(family, r).unwrap().len(),
                    family.torus_rank(r)
                );
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(weyl_order(WeylFamily::B, 3).unwrap(), BigUint::from(48u32));
        assert_eq!(weyl_order(WeylFamily::D, 3).unwrap(), BigUint::from(24u32));
        assert_eq!(weyl_order(WeylFamily::ASU, 4).unwrap(), BigUint::from(24u32));
    }

    #[test]
    fn classes() {
        let a2 = conjugacy_classes(WeylFamily::AU, 2).unwrap();
        assert_eq!(a2.len(), 2);
        assert_eq!(a2[0].cycle_type, bp("((2),∅)"));
        assert_eq!(a2[1].cycle_type, bp("((1,1),∅)"));
        assert!(a2.iter().all(|c| c.size == BigUint::one()));

        let b2 = conjugacy_classes(WeylFamily::B, 2).unwrap();
        let mut sizes: Vec<u32> = b2.iter().map(|c| c.size.to_u32_digits()[0]).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);

        let d2 = conjugacy_classes(WeylFamily::D, 2).unwrap();
        assert_eq!(d2.len(), 3);
        assert_eq!(d2.iter().map(|c| c.size.clone()).sum::<BigUint>(), BigUint::from(4u32));
    }

    #[test]
    fn determinant_examples() {
        let s = |c: &[i64], cap| TruncatedSeries::from_ints(c, cap);
        assert_eq!(
            char_det_series(WeylFamily::AU, 2, &bp("((1,1),∅)"), DetVariant::OnePlusQw, 4).unwrap(),
            s(&[1, 2, 1], 4)
        );
        assert_eq!(
            char_det_series(WeylFamily::B, 1, &bp("(∅,(1))"), DetVariant::OnePlusQw, 4).unwrap(),
            s(&[1, -1], 4)
        );
        assert_eq!(
            char_det_series(WeylFamily::ASU, 2, &bp("((2),∅)"), DetVariant::OnePlusQw, 4).unwrap(),
            s(&[1, -1], 4)
        );
        assert_eq!(
            char_det_series(WeylFamily::C, 2, &bp("((2),∅)"), DetVariant::OneMinusQ2w, 6).unwrap(),
            s(&[1, 0, 0, 0, -1], 6)
        );
        assert!(char_det_series(WeylFamily::D, 2, &bp("((1),(1))"), DetVariant::OnePlusQw, 4).is_err());
        assert!(char_det_series(WeylFamily::AU, 2, &bp("(∅,(2))"), DetVariant::OnePlusQw, 4).is_err());
    }

    #[test]
    fn constant_term_is_one() {
        for family in WeylFamily::ALL {
            for r in 1..=5 {
                for c in conjugacy_classes(family, r).unwrap() {
                    for v in [DetVariant::OnePlusQw, DetVariant::OneMinusQ2w] {
                        let d = char_det_series(family, r, &c.cycle_type, v, 6).unwrap();
                        assert_eq!(d.coeff(0), ExactRational::one());
                    }
                }
            }
        }
    }

    /// `Π(1-q^{2d_i}) / det(1-q^2 w)` is the graded character of `H^*(G/T)`.
    /// At the identity it is the Poincaré polynomial of G/T, with coefficients
    /// summing to |W|; since `H^*(G/T)` is the regular representation, its
    /// class average is the constant 1.
    #[test]
    fn flag_variety_character() {
        for family in WeylFamily::ALL {
            for r in 1..=5 {
                let desc = WeylFamilyDescriptor::new(family, r).unwrap();
                let cap = desc.flag_dimension() + 4;
                let mut prod = TruncatedSeries::one(cap);
                for d in &desc.degrees {
                    prod = prod
                        .multiply(&TruncatedSeries::from_terms(&[(0, 1), (2 * d, -1)], cap))
                        .unwrap();
                }
                let order = ExactRational::from_integer(desc.group_order.clone().into());
                let mut total = TruncatedSeries::zero(cap);
                for c in desc.classes() {
                    let dq = char_det_series(family, r, &c.cycle_type, DetVariant::OneMinusQ2w, cap)
                        .unwrap();
                    let chi = prod.divide(&dq).unwrap();
                    if c.cycle_type.positive.parts().iter().all(|&p| p == 1)
                        && c.cycle_type.negative.is_empty()
                    {
                        let poly = chi.to_polynomial(desc.flag_dimension()).unwrap();
                        assert!(poly.has_nonnegative_integer_coefficients());
                        assert_eq!(poly.coefficient_sum(), order, "{family} r={r}");
                        assert!((1..=desc.flag_dimension()).step_by(2).all(|d| poly.coeff(d).is_zero()));
                    }
                    let w = ExactRational::from_integer(c.size.clone().into());
                    total = total.add(&chi.scale(&w)).unwrap();
                }
                assert_eq!(total.scale(&order.recip()), TruncatedSeries::one(cap), "{family} r={r}");
            }
        }
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!("spin-even".parse::<FamilyAlias>().unwrap().resolve(), WeylFamily::D);
        assert_eq!("glc".parse::<FamilyAlias>().unwrap().resolve(), WeylFamily::AU);
        assert_eq!("spc".parse::<FamilyAlias>().unwrap().resolve(), WeylFamily::C);
        let err = "g2".parse::<FamilyAlias>().unwrap_err().to_string();
        assert!(err.contains("so-odd") && err.contains("spc"));
        let d = WeylFamilyDescriptor::from_alias(FamilyAlias::SoEven, 1, None).unwrap();
        assert_eq!(d.warnings.len(), 1);
        assert!(WeylFamilyDescriptor::from_alias(FamilyAlias::U, 2, Some(1)).is_err());
        let n = WeylFamilyDescriptor::from_alias(FamilyAlias::Su, 3, Some(3)).unwrap();
        assert_eq!(n.family, WeylFamily::ASU);
        assert_eq!(n.nilpotent_class, Some(3));
    }
}
