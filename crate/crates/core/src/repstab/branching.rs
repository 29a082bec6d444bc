use crate::partitions::{Bipartition, Partition};

use super::labels::Label;

/// Irreducibles of `W_{|λ|+k}` in the module induced from `V_λ ⊠ trivial`:
/// one box added to each of `k` distinct columns (to `λ⁺` only for
/// bipartitions). Sorted in reverse lexicographic order.
pub fn induced_branching(label: &Label, k: usize) -> Vec<Label> {
    match label {
        Label::A(p) => horizontal_strips(p, k).into_iter().map(Label::A).collect(),
        Label::BC(b) => horizontal_strips(&b.positive, k)
            .into_iter()
            .map(|mu| Label::BC(Bipartition::new(mu, b.negative.clone())))
            .collect(),
    }
}

fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    let mut rows = lambda.parts().to_vec();
    rows.push(0);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows.len());
    extend(&rows, 0, k, &mut current, &mut out);
    out
}

// Row i may grow up to the original length of row i-1.
fn extend(rows: &[usize], i: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == rows.len() {
        if left == 0 {
            out.push(Partition::from_unsorted(current.clone()));
        }
        return;
    }
    let room = if i == 0 { left } else { (rows[i - 1] - rows[i]).min(left) };
    for add in (0..=room).rev() {
        current.push(rows[i] + add);
        extend(rows, i + 1, left - add, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{class_size, enumerate_bipartitions, enumerate_partitions, group_order};
    use crate::repstab::{character_hyperoctahedral, character_symmetric};
    use crate::weyl::WeylFamily;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn a(s: &str) -> Label {
        Label::A(s.parse().unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(induced_branching(&a("1"), 1), vec![a("2"), a("1,1")]);
        assert_eq!(induced_branching(&a("∅"), 0), vec![a("∅")]);
        assert_eq!(
            induced_branching(&a("2,1"), 2),
            vec![a("4,1"), a("3,2"), a("3,1,1"), a("2,2,1")]
        );
    }

    fn weight(family: WeylFamily, class: &Bipartition) -> BigRational {
        let n = class.size();
        BigRational::new(
            BigInt::from(class_size(family, n, class).unwrap()),
            BigInt::from(group_order(family, n)),
        )
    }

    // <Ind(χ ⊠ 1), χ^μ> via Frobenius reciprocity, as a sum over class pairs.
    fn frobenius(family: WeylFamily, label: &Label, k: usize, mu: &Label) -> BigRational {
        let m = label.size();
        let classes = |n: usize| -> Vec<Bipartition> {
            if family.is_type_a() {
                enumerate_partitions(n).into_iter().map(Bipartition::unsigned).collect()
            } else {
                enumerate_bipartitions(n)
            }
        };
        let chi = |l: &Label, c: &Bipartition| -> i64 {
            match l {
                Label::A(p) => character_symmetric(p, &c.positive).unwrap(),
                Label::BC(b) => character_hyperoctahedral(b, c).unwrap(),
            }
        };
        let mut total = BigRational::from_integer(0.into());
        for c1 in classes(m) {
            for c2 in classes(k) {
                let joined = Bipartition::new(
                    c1.positive.union(&c2.positive),
                    c1.negative.union(&c2.negative),
                );
                let v = chi(label, &c1) * chi(mu, &joined);
                total += weight(family, &c1) * weight(family, &c2) * BigInt::from(v);
            }
        }
        total
    }

    #[test]
    fn agrees_with_frobenius_reciprocity() {
        for total in 0..=6 {
            for m in 0..=total {
                let k = total - m;
                for lambda in enumerate_partitions(m) {
                    let label = Label::A(lambda);
                    let got = induced_branching(&label, k);
                    for mu in enumerate_partitions(total) {
                        let mu = Label::A(mu);
                        let expected = frobenius(WeylFamily::AU, &label, k, &mu);
                        let present = got.contains(&mu) as i64;
                        assert_eq!(expected, BigRational::from_integer(present.into()), "{label} +{k} -> {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn bipartitions_agree_with_frobenius_reciprocity() {
        for total in 0..=4 {
            for m in 0..=total {
                let k = total - m;
                for lambda in enumerate_bipartitions(m) {
                    let label = Label::BC(lambda);
                    let got = induced_branching(&label, k);
                    for mu in enumerate_bipartitions(total) {
                        let mu = Label::BC(mu);
                        let expected = frobenius(WeylFamily::B, &label, k, &mu);
                        let present = got.contains(&mu) as i64;
                        assert_eq!(expected, BigRational::from_integer(present.into()), "{label} +{k} -> {mu}");
                    }
                }
            }
        }
    }
}
