//! Irreducible characters of the symmetric and hyperoctahedral groups.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

thread_local! {
    static MN_MEMO: RefCell<Memo> = RefCell::new(HashMap::new());
}

/// `χ^λ(α)` by the Murnaghan–Nakayama rule.
///
/// Parts of `α` are stripped largest first; rim hooks of each length are
/// enumerated on the beta-set of `λ` from the highest bead down. Values are
/// memoised per thread on `(λ, remaining α)`.
pub fn character_symmetric(lambda: &Partition, alpha: &Partition) -> Result<i64> {
    if lambda.size() != alpha.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: alpha.size(),
        });
    }
    Ok(mn(lambda.parts(), alpha.parts()))
}

fn mn(lambda: &[usize], alpha: &[usize]) -> i64 {
    if alpha.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), alpha.to_vec());
    if let Some(v) = MN_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let k = alpha[0];
    let rest = &alpha[1..];
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&shape, rest);
    }
    MN_MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `χ^{(λ⁺,λ⁻)}(α,β)` for the hyperoctahedral group `B_n`.
///
/// The irreducible `(λ⁺,λ⁻)` is induced from `B_a × B_b` of
/// `V_{λ⁺} ⊠ (V_{λ⁻} ⊗ ε)`, where `ε` multiplies by the product of all signs.
/// Its value sums, over every way of routing whole cycles to the two slots
/// with `a` coordinates in the first, `χ^{λ⁺}` of the first slot's cycle
/// lengths times `χ^{λ⁻}` of the second's, negated once per negative cycle
/// routed to the second slot.
pub fn character_hyperoctahedral(label: &Bipartition, class: &Bipartition) -> Result<i64> {
    if label.size() != class.size() {
        return Err(Error::SizeMismatch {
            left: label.size(),
            right: class.size(),
        });
    }
    // (cycle length, multiplicity, negative?)
    let mut groups: Vec<(usize, usize, bool)> = class
        .positive
        .multiplicities()
        .into_iter()
        .map(|(l, m)| (l, m, false))
        .collect();
    groups.extend(
        class
            .negative
            .multiplicities()
            .into_iter()
            .map(|(l, m)| (l, m, true)),
    );
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    Ok(route(label, &groups, label.positive.size(), &mut plus, &mut minus))
}

/// Sums over the ways of sending `taken` of each group of equal cycles to the
/// `λ⁺` slot and the rest to the `λ⁻` slot.
fn route(
    label: &Bipartition,
    groups: &[(usize, usize, bool)],
    remaining: usize,
    plus: &mut Vec<usize>,
    minus: &mut Vec<usize>,
) -> i64 {
    let Some((&(len, mult, negative), rest)) = groups.split_first() else {
        if remaining != 0 {
            return 0;
        }
        let a = Partition::from_unsorted(plus.clone());
        let b = Partition::from_unsorted(minus.clone());
        return mn(label.positive.parts(), a.parts()) * mn(label.negative.parts(), b.parts());
    };
    let mut total = 0;
    for taken in 0..=mult.min(remaining / len) {
        let (p0, m0) = (plus.len(), minus.len());
        plus.extend(std::iter::repeat_n(len, taken));
        minus.extend(std::iter::repeat_n(len, mult - taken));
        let sign = if negative && (mult - taken) % 2 == 1 { -1 } else { 1 };
        total += sign
            * binomial(mult, taken)
            * route(label, rest, remaining - taken * len, plus, minus);
        plus.truncate(p0);
        minus.truncate(m0);
    }
    total
}

/// Number of standard Young tableaux of shape `λ`, by the hook length formula.
pub fn hook_length_dimension(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j + conj.parts()[j] - i - 1) as u128;
        }
    }
    num /= hooks;
    num
}

/// `C(n, |λ⁺|) f^{λ⁺} f^{λ⁻}`.
pub fn hyperoctahedral_dimension(label: &Bipartition) -> u128 {
    let n = label.size();
    let a = label.positive.size();
    let binom = (0..a).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
    binom * hook_length_dimension(&label.positive) * hook_length_dimension(&label.negative)
}
