use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::arith::ExactRational;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::molien::{observed_onset, Guarantee};
use crate::partitions::Bipartition;
use crate::weyl::{char_det_series, conjugacy_classes, weyl_order, DetVariant, WeylFamily};

use super::characters::{character_hyperoctahedral, character_symmetric};
use super::labels::{seed_of, Label};

/// Trace of a class representative on `H_k(T_r^n)`.
pub fn graded_character(
    family: WeylFamily,
    r: usize,
    n: usize,
    k: usize,
    class: &Bipartition,
) -> Result<ExactRational> {
    let det = char_det_series(family, r, class, DetVariant::OnePlusQw, k)?;
    Ok(det.pow(n).coeff(k))
}

fn to_natural(value: ExactRational, what: &str) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Invariant(format!(
            "{what} is not a non-negative integer: {value}"
        )));
    }
    Ok(value.to_integer().to_biguint().expect("non-negative"))
}

/// Multiplicity of the trivial representation in `H_k(T_r^n)`.
pub fn invariant_dimension(family: WeylFamily, r: usize, n: usize, k: usize) -> Result<BigUint> {
    let classes = conjugacy_classes(family, r)?;
    let terms = Execution::default().try_map(&classes, |c| {
        Ok::<_, Error>(graded_character(family, r, n, k, &c.cycle_type)? * BigInt::from(c.size.clone()))
    })?;
    let total: ExactRational = terms.into_iter().sum();
    to_natural(
        total / BigInt::from(weyl_order(family, r)?),
        "invariant dimension",
    )
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultiplicityKey {
    /// The irreducible `seed[r]`.
    Seed(Label),
    /// An irreducible of `W_r` that is not a padding of any seed at this rank.
    Residual(Label),
}

impl fmt::Display for MultiplicityKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplicityKey::Seed(l) => write!(f, "{l}"),
            MultiplicityKey::Residual(l) => write!(f, "residual:{l}"),
        }
    }
}

impl fmt::Debug for MultiplicityKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Nonzero multiplicities of the irreducibles in `H_k(T_r^n)`, in the
/// enumeration order of the irreducible labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub family: WeylFamily,
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub entries: Vec<(MultiplicityKey, BigUint)>,
}

impl MultiplicityTable {
    pub fn get(&self, key: &MultiplicityKey) -> BigUint {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn seed(&self, seed: &Label) -> BigUint {
        self.get(&MultiplicityKey::Seed(seed.clone()))
    }

    pub fn residuals(&self) -> impl Iterator<Item = &(MultiplicityKey, BigUint)> {
        self.entries
            .iter()
            .filter(|(k, _)| matches!(k, MultiplicityKey::Residual(_)))
    }

    fn as_map(&self) -> BTreeMap<MultiplicityKey, BigUint> {
        self.entries.iter().cloned().collect()
    }
}

fn character(label: &Label, class: &Bipartition) -> Result<i64> {
    match label {
        Label::A(p) => character_symmetric(p, &class.positive),
        Label::BC(b) => character_hyperoctahedral(b, class),
    }
}

/// Decomposes `H_k(T_r^n)` into irreducibles of `W_r` (types A and B/C).
///
/// Fails with an invariant error if a multiplicity is not a non-negative
/// integer or the dimensions do not add up to the Betti number.
pub fn multiplicity_table(family: WeylFamily, r: usize, n: usize, k: usize) -> Result<MultiplicityTable> {
    multiplicity_table_with(family, r, n, k, Execution::default())
}

pub fn multiplicity_table_with(
    family: WeylFamily,
    r: usize,
    n: usize,
    k: usize,
    exec: Execution,
) -> Result<MultiplicityTable> {
    let labels = Label::irreducibles(family, r)?;
    let classes = conjugacy_classes(family, r)?;
    let order = BigInt::from(weyl_order(family, r)?);
    let traces: Vec<ExactRational> = exec.try_map(&classes, |c| {
        Ok::<_, Error>(graded_character(family, r, n, k, &c.cycle_type)? * BigInt::from(c.size.clone()))
    })?;
    let multiplicities = exec.try_map(&labels, |label| {
        let mut total = ExactRational::zero();
        for (class, trace) in classes.iter().zip(&traces) {
            let chi = character(label, &class.cycle_type)?;
            if chi != 0 {
                total += trace * BigInt::from(chi);
            }
        }
        to_natural(total / &order, "multiplicity")
    })?;

    let identity = Bipartition::unsigned(crate::partitions::Partition::from_unsorted(vec![1; r]));
    let betti = graded_character(family, r, n, k, &identity)?;
    let mut weighted = BigInt::zero();
    let mut entries = Vec::new();
    for (label, c) in labels.into_iter().zip(multiplicities) {
        if c.is_zero() {
            continue;
        }
        weighted += BigInt::from(c.clone()) * BigInt::from(label.dimension());
        let key = match seed_of(&label) {
            Some(seed) => MultiplicityKey::Seed(seed),
            None => MultiplicityKey::Residual(label),
        };
        entries.push((key, c));
    }
    if ExactRational::from_integer(weighted.clone()) != betti {
        return Err(Error::Invariant(format!(
            "multiplicities give dimension {weighted}, Betti number is {betti}"
        )));
    }
    Ok(MultiplicityTable {
        family,
        r,
        n,
        k,
        entries,
    })
}

/// Multiplicity tables across ranks against the uniform onset `2k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformStabilityReport {
    pub family: WeylFamily,
    pub n: usize,
    pub k: usize,
    pub tables: Vec<MultiplicityTable>,
    pub predicted_onset: usize,
    pub guarantee: Guarantee,
    /// First scanned rank from which every table is the same.
    pub observed_onset: Option<usize>,
}

impl UniformStabilityReport {
    /// True iff all tables at ranks `>= 2k` agree.
    pub fn consistent(&self) -> bool {
        let mut tail = self
            .tables
            .iter()
            .filter(|t| t.r >= self.predicted_onset)
            .map(MultiplicityTable::as_map);
        match tail.next() {
            None => true,
            Some(first) => tail.all(|m| m == first),
        }
    }
}

pub fn uniform_stability_check(
    family: WeylFamily,
    n: usize,
    k: usize,
    ranks: &[usize],
) -> Result<UniformStabilityReport> {
    if ranks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput("rank range must be strictly ascending".into()));
    }
    let tables = ranks
        .iter()
        .map(|&r| multiplicity_table(family, r, n, k))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<(usize, BTreeMap<MultiplicityKey, BigUint>)> =
        tables.iter().map(|t| (t.r, t.as_map())).collect();
    Ok(UniformStabilityReport {
        family,
        n,
        k,
        observed_onset: observed_onset(&rows),
        tables,
        predicted_onset: 2 * k,
        guarantee: if family == WeylFamily::ASU {
            Guarantee::Empirical
        } else {
            Guarantee::Proven
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::molien::{poincare_series, SpaceRecipe};
    use crate::partitions::Partition;
    use crate::weyl::WeylFamilyDescriptor;

    fn a(s: &str) -> Label {
        Label::A(s.parse().unwrap())
    }

    fn bc(s: &str) -> Label {
        Label::BC(s.parse().unwrap())
    }

    fn nat(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn graded_character_examples() {
        let id = Bipartition::unsigned(Partition::from_unsorted(vec![1; 3]));
        assert_eq!(
            graded_character(WeylFamily::AU, 3, 2, 1, &id).unwrap(),
            ExactRational::from_integer(6.into())
        );
        let swap: Bipartition = "((2),∅)".parse().unwrap();
        assert!(graded_character(WeylFamily::AU, 2, 1, 1, &swap).unwrap().is_zero());
        let flip: Bipartition = "(∅,(1))".parse().unwrap();
        assert_eq!(
            graded_character(WeylFamily::B, 1, 2, 2, &flip).unwrap(),
            ExactRational::from_integer(1.into())
        );
    }

    #[test]
    fn permutation_representation() {
        let t = multiplicity_table(WeylFamily::AU, 2, 1, 1).unwrap();
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.seed(&a("∅")), nat(1));
        assert_eq!(t.seed(&a("1")), nat(1));
    }

    #[test]
    fn degree_zero_is_trivial() {
        for family in [WeylFamily::AU, WeylFamily::ASU, WeylFamily::B, WeylFamily::C] {
            for r in 1..=4 {
                let t = multiplicity_table(family, r, 2, 0).unwrap();
                let trivial = match family {
                    WeylFamily::B | WeylFamily::C => bc("(∅,∅)"),
                    _ => a("∅"),
                };
                assert_eq!(t.entries, vec![(MultiplicityKey::Seed(trivial), nat(1))]);
            }
        }
    }

    #[test]
    fn sign_flip_at_rank_one() {
        let t = multiplicity_table(WeylFamily::B, 1, 1, 1).unwrap();
        assert_eq!(
            t.entries,
            vec![(MultiplicityKey::Residual(bc("(∅,(1))")), nat(1))]
        );
        let t = multiplicity_table(WeylFamily::B, 3, 1, 1).unwrap();
        assert_eq!(t.entries, vec![(MultiplicityKey::Seed(bc("(∅,(1))")), nat(1))]);
    }

    #[test]
    fn type_d_has_no_tables() {
        assert!(multiplicity_table(WeylFamily::D, 3, 1, 1).is_err());
    }

    #[test]
    fn stability_examples() {
        let ranks: Vec<usize> = (1..=6).collect();
        let rep = uniform_stability_check(WeylFamily::B, 1, 1, &ranks).unwrap();
        assert_eq!(rep.observed_onset, Some(2));
        assert_eq!(rep.predicted_onset, 2);
        assert!(rep.consistent());

        for family in [WeylFamily::AU, WeylFamily::ASU, WeylFamily::B, WeylFamily::C] {
            let rep = uniform_stability_check(family, 2, 0, &ranks).unwrap();
            assert_eq!(rep.observed_onset, Some(1));
        }

        let ranks: Vec<usize> = (1..=8).collect();
        let rep = uniform_stability_check(WeylFamily::AU, 2, 2, &ranks).unwrap();
        assert!(rep.observed_onset.unwrap() <= 4);
        assert!(rep.consistent());
        assert_eq!(rep.guarantee, Guarantee::Proven);
        assert!(uniform_stability_check(WeylFamily::AU, 1, 1, &[3, 2]).is_err());
    }

    #[test]
    fn invariant_examples() {
        for r in 1..=4 {
            for n in 0..=3 {
                assert_eq!(invariant_dimension(WeylFamily::AU, r, n, 1).unwrap(), nat(n as u64));
                assert_eq!(invariant_dimension(WeylFamily::B, r, n, 1).unwrap(), nat(0));
                assert_eq!(invariant_dimension(WeylFamily::C, r, n, 1).unwrap(), nat(0));
                assert_eq!(invariant_dimension(WeylFamily::D, r, n, 0).unwrap(), nat(1));
            }
        }
    }

    #[test]
    fn invariants_match_rep_series() {
        for family in WeylFamily::ALL {
            for r in 1..=4 {
                let desc = WeylFamilyDescriptor::new(family, r).unwrap();
                for n in 0..=3 {
                    let s = poincare_series(SpaceRecipe::rep(n), &desc, 6).unwrap();
                    for k in 0..=6 {
                        let d = invariant_dimension(family, r, n, k).unwrap();
                        assert_eq!(s.coeff(k), ExactRational::from_integer(d.into()));
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_multiplicity_is_invariant_dimension() {
        for family in [WeylFamily::AU, WeylFamily::B] {
            for r in 1..=4 {
                for k in 0..=3 {
                    let t = multiplicity_table(family, r, 2, k).unwrap();
                    let trivial = match family {
                        WeylFamily::B => bc("(∅,∅)"),
                        _ => a("∅"),
                    };
                    assert_eq!(t.seed(&trivial), invariant_dimension(family, r, 2, k).unwrap());
                }
            }
        }
    }
}
