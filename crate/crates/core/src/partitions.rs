//! Integer partitions, bipartitions, centralizer orders and class sizes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weyl::WeylFamily;

/// A partition: positive parts in weakly decreasing order. The empty
/// partition is the partition of zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` are positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be positive and weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let cols = self.first_part();
        Partition {
            parts: (0..cols)
                .map(|c| self.parts.iter().filter(|&&p| p > c).count())
                .collect(),
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// Removes the first row, leaving the remaining parts.
    pub fn without_first_row(&self) -> Self {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Prepends `part` as a new first row; it must be at least the current first part.
    pub fn with_first_row(&self, part: usize) -> Option<Self> {
        if part < self.first_part() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        if part > 0 {
            parts.push(part);
        }
        parts.extend_from_slice(&self.parts);
        Some(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `∅`, `()`, the empty string, `(3,1,1)` or `3,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() || t == "∅" || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad partition: {s}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A pair of partitions. As a conjugacy-class label of a signed permutation
/// the slots hold the lengths of positive and negative cycles; as an
/// irreducible label of `B_n` they are `(λ⁺, λ⁻)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub positive: Partition,
    pub negative: Partition,
}

impl Bipartition {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        Bipartition { positive, negative }
    }

    /// A class label with no negative cycles.
    pub fn unsigned(positive: Partition) -> Self {
        Bipartition {
            positive,
            negative: Partition::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.positive.size() + self.negative.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.positive, self.negative)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Accepts `((2,1),(1))`, `((1),∅)` or `2,1|1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((a, b)) = t.split_once('|') {
            return Ok(Bipartition::new(a.parse()?, b.parse()?));
        }
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidInput(format!("bad bipartition: {s}")))?;
        let mut depth = 0i32;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    return Ok(Bipartition::new(
                        inner[..i].parse()?,
                        inner[i + 1..].parse()?,
                    ));
                }
                _ => {}
            }
        }
        Err(Error::InvalidInput(format!("bad bipartition: {s}")))
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n`: by decreasing size of the positive slot, then
/// reverse-lexicographically within each slot.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        let negs = enumerate_partitions(n - a);
        for pos in enumerate_partitions(a) {
            for neg in &negs {
                out.push(Bipartition::new(pos.clone(), neg.clone()));
            }
        }
    }
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `z_α = Π i^{m_i} m_i!`, the order of the centralizer of a permutation of cycle type `α`.
pub fn centralizer_order(alpha: &Partition) -> BigUint {
    alpha
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (i, m)| {
            acc * BigUint::from(i).pow(m as u32) * factorial(m)
        })
}

/// Order of the Weyl group of the given family at rank `r`.
pub fn group_order(family: WeylFamily, r: usize) -> BigUint {
    match family {
        WeylFamily::AU | WeylFamily::ASU => factorial(r),
        WeylFamily::B | WeylFamily::C => (BigUint::one() << r) * factorial(r),
        WeylFamily::D => {
            if r == 0 {
                BigUint::one()
            } else {
                (BigUint::one() << (r - 1)) * factorial(r)
            }
        }
    }
}

/// True iff the class has an even number of negative cycles, i.e. lies in `D_r`.
pub fn is_even_class(class: &Bipartition) -> bool {
    class.negative.len().is_multiple_of(2)
}

/// Number of elements of the given cycle type in the Weyl group of `family` at rank `r`.
///
/// Types B/C: `2^r r! / (z_α 2^{ℓ(α)} z_β 2^{ℓ(β)})`. Type D counts the same
/// elements when `ℓ(β)` is even and none otherwise. Type A requires an empty
/// negative slot.
pub fn class_size(family: WeylFamily, r: usize, class: &Bipartition) -> Result<BigUint> {
    let invalid = || Error::InvalidClass {
        family: family.to_string(),
        rank: r,
        class: class.to_string(),
    };
    if class.size() != r {
        return Err(invalid());
    }
    match family {
        WeylFamily::AU | WeylFamily::ASU => {
            if !class.negative.is_empty() {
                return Err(invalid());
            }
            Ok(factorial(r) / centralizer_order(&class.positive))
        }
        WeylFamily::B | WeylFamily::C | WeylFamily::D => {
            if family == WeylFamily::D && !is_even_class(class) {
                return Ok(BigUint::zero());
            }
            let z = centralizer_order(&class.positive)
                * centralizer_order(&class.negative)
                * (BigUint::one() << (class.positive.len() + class.negative.len()));
            Ok((BigUint::one() << r) * factorial(r) / z)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    /// Partition numbers by the recurrence p(n, k) = p(n, k-1) + p(n-k, k).
    fn partition_count_oracle(n: usize) -> u64 {
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for row in table.iter_mut() {
            row[0] = 1;
        }
        for k in 1..=n {
            for m in 1..=n {
                table[k][m] = table[k - 1][m] + if m >= k { table[k][m - k] } else { 0 };
            }
        }
        if n == 0 {
            1
        } else {
            table[n][n]
        }
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(2), vec![p("(2)"), p("(1,1)")]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(
            enumerate_partitions(4),
            vec![p("4"), p("3,1"), p("2,2"), p("2,1,1"), p("1,1,1,1")]
        );
    }

    #[test]
    fn partition_counts_match_recurrence() {
        for n in 0..=30 {
            assert_eq!(enumerate_partitions(n).len() as u64, partition_count_oracle(n), "n={n}");
        }
    }

    #[test]
    fn bipartition_enumeration() {
        assert_eq!(
            enumerate_bipartitions(1),
            vec![bp("((1),∅)"), bp("(∅,(1))")]
        );
        assert_eq!(enumerate_bipartitions(0), vec![Bipartition::default()]);
        assert_eq!(enumerate_bipartitions(2).len(), 5);
        for n in 0..=8 {
            let expected: u64 = (0..=n)
                .map(|k| partition_count_oracle(k) * partition_count_oracle(n - k))
                .sum();
            assert_eq!(enumerate_bipartitions(n).len() as u64, expected);
        }
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&p("1,1")), BigUint::from(2u32));
        assert_eq!(centralizer_order(&p("2")), BigUint::from(2u32));
        assert_eq!(centralizer_order(&p("2,1,1")), BigUint::from(4u32));
        assert_eq!(centralizer_order(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn centralizer_of_transposition_pair_by_brute_force() {
        // count permutations of S_4 commuting with (0 1)
        let g = [1usize, 0, 2, 3];
        let mut count = 0;
        let mut perm = [0usize, 1, 2, 3];
        permute_all(&mut perm, 0, &mut |h| {
            let gh: Vec<usize> = (0..4).map(|i| g[h[i]]).collect();
            let hg: Vec<usize> = (0..4).map(|i| h[g[i]]).collect();
            if gh == hg {
                count += 1;
            }
        });
        assert_eq!(BigUint::from(count as u32), centralizer_order(&p("2,1,1")));
    }

    fn permute_all(a: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize; 4])) {
        if k == a.len() {
            f(a);
            return;
        }
        for i in k..a.len() {
            a.swap(k, i);
            permute_all(a, k + 1, f);
            a.swap(k, i);
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(WeylFamily::B, 2, &bp("((1),(1))")).unwrap(), BigUint::from(2u32));
        assert_eq!(class_size(WeylFamily::AU, 3, &bp("((3),∅)")).unwrap(), BigUint::from(2u32));
        assert_eq!(class_size(WeylFamily::D, 2, &bp("((1,1),∅)")).unwrap(), BigUint::one());
        assert_eq!(class_size(WeylFamily::D, 2, &bp("((1),(1))")).unwrap(), BigUint::zero());
        assert!(class_size(WeylFamily::AU, 2, &bp("((1),(1))")).is_err());
        assert!(class_size(WeylFamily::B, 3, &bp("((1),(1))")).is_err());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for family in WeylFamily::ALL {
            for r in 1..=6 {
                let total: BigUint = if family.is_type_a() {
                    enumerate_partitions(r)
                        .into_iter()
                        .map(|a| class_size(family, r, &Bipartition::unsigned(a)).unwrap())
                        .sum()
                } else {
                    enumerate_bipartitions(r)
                        .iter()
                        .map(|c| class_size(family, r, c).unwrap())
                        .sum()
                };
                assert_eq!(total, group_order(family, r), "{family} r={r}");
            }
        }
    }

    #[test]
    fn even_classes() {
        assert!(is_even_class(&bp("(∅,(1,1))")));
        assert!(!is_even_class(&bp("(∅,(2))")));
        assert!(!is_even_class(&bp("((2,1),(1,1,1))")));
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("∅"), Partition::empty());
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p("(3,1,1)").to_string(), "(3,1,1)");
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(bp("2,1|1"), Bipartition::new(p("2,1"), p("1")));
        assert_eq!(bp("((2,1),∅)").to_string(), "((2,1),∅)");
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }
}
