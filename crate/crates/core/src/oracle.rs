//! Slow ground truth at small rank: explicit signed-permutation matrices,
//! determinants by Leibniz expansion, and invariant subspaces computed as the
//! rank of the averaged action on an exterior power.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{ExactRational, TruncatedSeries};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partitions::{Bipartition, Partition};
use crate::weyl::{char_det_series, conjugacy_classes, DetVariant, WeylFamily};

pub const MAX_GROUP_RANK: usize = 5;
pub const MAX_VERIFY_RANK: usize = 4;
pub const MAX_DIRECT_RANK: usize = 3;
pub const MAX_DIRECT_N: usize = 3;
pub const MAX_DIRECT_K: usize = 4;

/// Environment variable that raises every rank guard to its value.
pub const MAX_RANK_VAR: &str = "WEYLSTAB_MAX_RANK";

/// Size guards for the element-by-element computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub group_rank: usize,
    pub verify_rank: usize,
    pub direct_rank: usize,
    pub direct_n: usize,
    pub direct_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            group_rank: MAX_GROUP_RANK,
            verify_rank: MAX_VERIFY_RANK,
            direct_rank: MAX_DIRECT_RANK,
            direct_n: MAX_DIRECT_N,
            direct_k: MAX_DIRECT_K,
        }
    }
}

impl OracleLimits {
    /// No guards; the caller accepts the cost.
    pub fn unbounded() -> Self {
        OracleLimits {
            group_rank: usize::MAX,
            verify_rank: usize::MAX,
            direct_rank: usize::MAX,
            direct_n: usize::MAX,
            direct_k: usize::MAX,
        }
    }

    /// Sets every rank guard to `rank`.
    pub fn with_max_rank(self, rank: usize) -> Self {
        OracleLimits {
            group_rank: rank,
            verify_rank: rank,
            direct_rank: rank,
            ..self
        }
    }

    /// Defaults, with the rank guards replaced by `WEYLSTAB_MAX_RANK` if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_RANK_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|r| Self::default().with_max_rank(r))
                .map_err(|_| Error::InvalidInput(format!("{MAX_RANK_VAR}={v:?} is not a rank"))),
            Err(_) => Ok(Self::default()),
        }
    }
}

fn check(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(Error::TooLarge { what, value, limit });
    }
    Ok(())
}

/// `e_i ↦ signs[i] · e_{permutation[i]}` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub permutation: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn rank(&self) -> usize {
        self.permutation.len()
    }

    /// Cycle lengths of the underlying permutation, split by the product of
    /// the signs around each cycle.
    pub fn cycle_type(&self) -> Bipartition {
        let r = self.rank();
        let mut seen = vec![false; r];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 0..r {
            if seen[start] {
                continue;
            }
            let (mut len, mut sign, mut i) = (0, 1i8, start);
            while !seen[i] {
                seen[i] = true;
                sign *= self.signs[i];
                i = self.permutation[i];
                len += 1;
            }
            if sign > 0 { pos.push(len) } else { neg.push(len) }
        }
        Bipartition::new(Partition::from_unsorted(pos), Partition::from_unsorted(neg))
    }

    /// Matrix on `H_1(T)`: the signed permutation matrix, or for `A_SU` the
    /// reflection representation in the basis `e_i - e_r`, `i < r`.
    pub fn matrix(&self, family: WeylFamily) -> Vec<Vec<i64>> {
        let r = self.rank();
        if family == WeylFamily::ASU {
            let m = r - 1;
            let mut a = vec![vec![0i64; m]; m];
            let last = self.permutation[r - 1];
            for (i, col) in (0..m).map(|i| (i, i)) {
                let image = self.permutation[col];
                if image != r - 1 {
                    a[image][i] += 1;
                }
                if last != r - 1 {
                    a[last][i] -= 1;
                }
            }
            return a;
        }
        let mut a = vec![vec![0i64; r]; r];
        for i in 0..r {
            a[self.permutation[i]][i] = self.signs[i] as i64;
        }
        a
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (p, s)) in self.permutation.iter().zip(&self.signs).enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", if *s < 0 { "-" } else { "" }, p + 1)?;
        }
        write!(f, "]")
    }
}

/// Permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                go(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

fn permutation_sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 { 1 } else { -1 }
}

/// Every element of the Weyl group, permutations in lexicographic order and
/// sign patterns in binary order within each.
pub fn enumerate_group(family: WeylFamily, r: usize, limits: OracleLimits) -> Result<Vec<SignedPermutation>> {
    if r == 0 {
        return Err(Error::InvalidRank { family: family.to_string(), rank: r });
    }
    check("rank", r, limits.group_rank)?;
    let patterns: Vec<Vec<i8>> = if family.is_type_a() {
        vec![vec![1; r]]
    } else {
        (0u32..1 << r)
            .map(|bits| (0..r).map(|i| if bits >> (r - 1 - i) & 1 == 1 { -1 } else { 1 }).collect::<Vec<i8>>())
            .filter(|s| family != WeylFamily::D || s.iter().filter(|&&x| x < 0).count() % 2 == 0)
            .collect()
    };
    Ok(permutations(r)
        .into_iter()
        .flat_map(|p| {
            patterns.iter().map(move |s| SignedPermutation {
                permutation: p.clone(),
                signs: s.clone(),
            })
        })
        .collect())
}

type IntPoly = Vec<i64>;

fn poly_mul(a: &[i64], b: &[i64]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `det(I + q M)` or `det(I - q^2 M)` by the Leibniz formula over integer
/// polynomials in `q`.
pub fn matrix_char_series(
    element: &SignedPermutation,
    family: WeylFamily,
    variant: DetVariant,
    cap: usize,
) -> TruncatedSeries {
    let m = element.matrix(family);
    let (scale, power) = match variant {
        DetVariant::OnePlusQw => (1, 1),
        DetVariant::OneMinusQ2w => (-1, 2),
    };
    let entry = |i: usize, j: usize| -> IntPoly {
        let mut p = vec![0; power + 1];
        if i == j {
            p[0] = 1;
        }
        p[power] = scale * m[i][j];
        p
    };
    let mut det: IntPoly = Vec::new();
    for perm in permutations(m.len()) {
        let mut term = vec![permutation_sign(&perm)];
        for (i, &j) in perm.iter().enumerate() {
            term = poly_mul(&term, &entry(i, j));
        }
        if det.len() < term.len() {
            det.resize(term.len(), 0);
        }
        for (d, c) in term.into_iter().enumerate() {
            det[d] += c;
        }
    }
    let terms: Vec<(usize, i64)> = det.into_iter().enumerate().collect();
    TruncatedSeries::from_terms(&terms, cap)
}

/// Outcome of [`verify_class_formulas`]; failures are listed, not raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub family: WeylFamily,
    pub r: usize,
    pub cap: usize,
    pub elements: usize,
    pub classes: usize,
    pub mismatches: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every element's determinants (both variants) with the cycle-type
/// formulas, and the element counts per cycle type with the class sizes.
pub fn verify_class_formulas(family: WeylFamily, r: usize, cap: usize, limits: OracleLimits) -> Result<OracleReport> {
    verify_class_formulas_with(family, r, cap, limits, Execution::default())
}

pub fn verify_class_formulas_with(
    family: WeylFamily,
    r: usize,
    cap: usize,
    limits: OracleLimits,
    exec: Execution,
) -> Result<OracleReport> {
    check("rank", r, limits.verify_rank)?;
    let elements = enumerate_group(family, r, limits)?;
    let per_element = exec.map(&elements, |g| {
        let class = g.cycle_type();
        let mut problems = Vec::new();
        for variant in [DetVariant::OnePlusQw, DetVariant::OneMinusQ2w] {
            let direct = matrix_char_series(g, family, variant, cap);
            match char_det_series(family, r, &class, variant, cap) {
                Ok(formula) if formula == direct => {}
                Ok(formula) => problems.push(format!(
                    "{g} of type {class} ({variant:?}): matrix gives {direct}, formula gives {formula}"
                )),
                Err(e) => problems.push(format!("{g} of type {class}: {e}")),
            }
        }
        (class, problems)
    });
    let mut mismatches = Vec::new();
    let mut counts: BTreeMap<String, (Bipartition, BigUint)> = BTreeMap::new();
    for (class, problems) in per_element {
        mismatches.extend(problems);
        counts
            .entry(class.to_string())
            .or_insert_with(|| (class, BigUint::zero()))
            .1 += 1u32;
    }
    let classes = conjugacy_classes(family, r)?;
    for c in &classes {
        let seen = counts
            .remove(&c.cycle_type.to_string())
            .map(|(_, n)| n)
            .unwrap_or_default();
        if seen != c.size {
            mismatches.push(format!(
                "class {}: {seen} elements enumerated, class size {}",
                c.cycle_type, c.size
            ));
        }
    }
    for (name, (_, n)) in counts {
        mismatches.push(format!("cycle type {name} ({n} elements) is not a listed class"));
    }
    Ok(OracleReport {
        family,
        r,
        cap,
        elements: elements.len(),
        classes: classes.len(),
        mismatches,
    })
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// Determinant of a small integer matrix by cofactor expansion along the first row.
fn int_det(a: &[Vec<i64>]) -> i64 {
    match a.len() {
        0 => 1,
        1 => a[0][0],
        n => (0..n)
            .filter(|&j| a[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] * int_det(&minor)
            })
            .sum(),
    }
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][c].recip();
        let pivot_row: Vec<BigRational> = rows[rank].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &f * p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Dimension of the invariants of `H_k(T_r^n) = Λ^k(H_1(T_r)^{⊕n})`: the
/// rank of the averaged action of the group on the wedge basis, where each
/// element acts by the `k × k` minors of its block-diagonal matrix.
pub fn invariant_dimension_direct(family: WeylFamily, r: usize, n: usize, k: usize, limits: OracleLimits) -> Result<u64> {
    check("rank", r, limits.direct_rank)?;
    check("n", n, limits.direct_n)?;
    check("k", k, limits.direct_k)?;
    let elements = enumerate_group(family, r, limits)?;
    let basis = {
        let m = elements[0].matrix(family).len();
        k_subsets(m * n, k)
    };
    if basis.is_empty() {
        return Ok(0);
    }
    let dim = basis.len();
    let actions = Execution::default().map(&elements, |g| {
        let block = g.matrix(family);
        let m = block.len();
        let big = |i: usize, j: usize| -> i64 {
            if i / m == j / m { block[i % m][j % m] } else { 0 }
        };
        let mut action = vec![vec![0i64; dim]; dim];
        for (a, rows) in basis.iter().enumerate() {
            for (b, cols) in basis.iter().enumerate() {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| big(i, j)).collect())
                    .collect();
                action[a][b] = int_det(&minor);
            }
        }
        action
    });
    let mut sum = vec![vec![0i64; dim]; dim];
    for action in actions {
        for (s, a) in sum.iter_mut().zip(action) {
            for (x, y) in s.iter_mut().zip(a) {
                *x += y;
            }
        }
    }
    let order = BigInt::from(elements.len());
    let averaged = sum
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| ExactRational::new(BigInt::from(x), order.clone()))
                .collect()
        })
        .collect();
    Ok(rank(averaged) as u64)
}
