use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_bipartitions, enumerate_partitions, Bipartition, Partition};
use crate::weyl::WeylFamily;

use super::characters::{hook_length_dimension, hyperoctahedral_dimension};

/// An irreducible label, or a seed `λ` of the padded sequence `λ[n]`:
/// a partition in type A, a bipartition in types B/C.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A(Partition),
    BC(Bipartition),
}

impl Label {
    pub fn size(&self) -> usize {
        match self {
            Label::A(p) => p.size(),
            Label::BC(b) => b.size(),
        }
    }

    /// Dimension of the irreducible with this label.
    pub fn dimension(&self) -> u128 {
        match self {
            Label::A(p) => hook_length_dimension(p),
            Label::BC(b) => hyperoctahedral_dimension(b),
        }
    }

    /// All irreducible labels of the Weyl group of `family` at rank `r`
    /// (type D is not supported).
    pub fn irreducibles(family: WeylFamily, r: usize) -> Result<Vec<Label>> {
        match family {
            WeylFamily::AU | WeylFamily::ASU => {
                Ok(enumerate_partitions(r).into_iter().map(Label::A).collect())
            }
            WeylFamily::B | WeylFamily::C => {
                Ok(enumerate_bipartitions(r).into_iter().map(Label::BC).collect())
            }
            WeylFamily::D => Err(Error::InvalidInput(
                "type D restrictions are not always irreducible; only invariant dimensions are supported"
                    .into(),
            )),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(p) => write!(f, "{p}"),
            Label::BC(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `λ[n]`: prepends `n - |λ|` as a new first row (of `λ⁺` for bipartitions).
///
/// Requires `n >= |λ| + λ₁` and a nonempty new row, so `(∅, λ⁻)` at
/// `n = |λ⁻|` is not treated as a padding.
pub fn padded_partition(seed: &Label, n: usize) -> Result<Label> {
    let k = seed.size();
    let first = match seed {
        Label::A(p) => p.first_part(),
        Label::BC(b) => b.positive.first_part(),
    };
    let invalid = || Error::PaddingInvalid {
        seed: seed.to_string(),
        n,
    };
    if n < k + first.max(1) {
        return Err(invalid());
    }
    let row = n - k;
    Ok(match seed {
        Label::A(p) => Label::A(p.with_first_row(row).ok_or_else(invalid)?),
        Label::BC(b) => Label::BC(Bipartition::new(
            b.positive.with_first_row(row).ok_or_else(invalid)?,
            b.negative.clone(),
        )),
    })
}

/// The seed `λ` with `λ[|label|] = label`, if the label is a padding.
pub fn seed_of(label: &Label) -> Option<Label> {
    let seed = match label {
        Label::A(p) => Label::A(p.without_first_row()),
        Label::BC(b) => Label::BC(Bipartition::new(
            b.positive.without_first_row(),
            b.negative.clone(),
        )),
    };
    (padded_partition(&seed, label.size()).ok().as_ref() == Some(label)).then_some(seed)
}
