//! Poincaré series of spaces built from commuting tuples, evaluated as
//! weighted sums over Weyl-group conjugacy classes of graded traces, and
//! stability scans of their coefficients across ranks.
//!
//! Per class `w`, with `N = det(1+qw)`, `D = det(1-q^2 w)` and
//! `Π = Π_i (1 - q^{2 d_i})`, the graded traces are
//!
//! | space        | trace              |
//! |--------------|--------------------|
//! | `hom(n)`     | `Π N^n / D`        |
//! | `rep(n)`     | `N^n`              |
//! | `comm`       | `Π / (D (2 - N))`  |
//! | `bcom`       | `Π / D^2`          |
//! | `comm_quot`  | `1 / (2 - N)`      |
//! | `bcom_quot`  | `1 / D`            |
//! | `hom_equiv(n)` | `N^n / D`        |
//! | `comm_equiv` | `1 / (D (2 - N))`  |
//! | `bcom_equiv` | `1 / D^2`          |
//!
//! and the series is `|W|^{-1} Σ_w |class(w)| · trace(w)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{ExactPolynomial, ExactRational, TruncatedSeries};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::weyl::{char_det_series, DetVariant, WeightedClass, WeylFamily, WeylFamilyDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    Hom,
    Rep,
    Comm,
    Bcom,
    CommQuot,
    BcomQuot,
    HomEquiv,
    CommEquiv,
    BcomEquiv,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 9] = [
        SpaceKind::Hom,
        SpaceKind::Rep,
        SpaceKind::Comm,
        SpaceKind::Bcom,
        SpaceKind::CommQuot,
        SpaceKind::BcomQuot,
        SpaceKind::HomEquiv,
        SpaceKind::CommEquiv,
        SpaceKind::BcomEquiv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Hom => "hom",
            SpaceKind::Rep => "rep",
            SpaceKind::Comm => "comm",
            SpaceKind::Bcom => "bcom",
            SpaceKind::CommQuot => "comm_quot",
            SpaceKind::BcomQuot => "bcom_quot",
            SpaceKind::HomEquiv => "hom_equiv",
            SpaceKind::CommEquiv => "comm_equiv",
            SpaceKind::BcomEquiv => "bcom_equiv",
        }
    }

    /// Whether the recipe depends on a tuple length `n`.
    pub fn takes_n(self) -> bool {
        matches!(self, SpaceKind::Hom | SpaceKind::Rep | SpaceKind::HomEquiv)
    }

    /// Whether the space is finite-dimensional, so its series is a polynomial.
    pub fn is_polynomial(self) -> bool {
        matches!(self, SpaceKind::Hom | SpaceKind::Rep)
    }

    pub fn onset_rule(self) -> OnsetRule {
        match self {
            SpaceKind::Hom | SpaceKind::Comm | SpaceKind::Bcom => OnsetRule::SqrtBound,
            _ => OnsetRule::RankAtLeastK,
        }
    }
}

impl FromStr for SpaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        SpaceKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = SpaceKind::ALL.iter().map(|k| k.name()).collect();
                Error::InvalidInput(format!(
                    "unknown space '{s}'; expected one of: {}",
                    names.join(", ")
                ))
            })
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which space to compute, with the tuple length where applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceRecipe {
    pub kind: SpaceKind,
    pub n: usize,
}

impl SpaceRecipe {
    pub fn new(kind: SpaceKind, n: usize) -> Self {
        SpaceRecipe {
            kind,
            n: if kind.takes_n() { n } else { 0 },
        }
    }

    pub fn hom(n: usize) -> Self {
        Self::new(SpaceKind::Hom, n)
    }

    pub fn rep(n: usize) -> Self {
        Self::new(SpaceKind::Rep, n)
    }

    pub fn hom_equiv(n: usize) -> Self {
        Self::new(SpaceKind::HomEquiv, n)
    }

    pub fn fixed(kind: SpaceKind) -> Self {
        Self::new(kind, 0)
    }

    /// Top possible degree for the finite-dimensional spaces.
    pub fn degree_bound(&self, desc: &WeylFamilyDescriptor) -> Option<usize> {
        match self.kind {
            SpaceKind::Hom => Some(desc.flag_dimension() + self.n * desc.torus_rank),
            SpaceKind::Rep => Some(self.n * desc.torus_rank),
            _ => None,
        }
    }
}

impl fmt::Display for SpaceRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.takes_n() {
            write!(f, "{}({})", self.kind, self.n)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

struct ClassTerm {
    weight: ExactRational,
    torus: TruncatedSeries,
    inv_bt: TruncatedSeries,
}

/// Per-class graded traces for one family, rank and cap, shared by every
/// recipe evaluated against them.
pub struct ClassTraces {
    descriptor: WeylFamilyDescriptor,
    cap: usize,
    degree_product: TruncatedSeries,
    terms: Vec<ClassTerm>,
    execution: Execution,
}

impl ClassTraces {
    pub fn new(descriptor: &WeylFamilyDescriptor, cap: usize, execution: Execution) -> Result<Self> {
        let family = descriptor.family;
        let r = descriptor.rank;
        let classes = descriptor.classes();
        let terms = execution.try_map(&classes, |c: &WeightedClass| -> Result<ClassTerm> {
            let torus = char_det_series(family, r, &c.cycle_type, DetVariant::OnePlusQw, cap)?;
            let bt = char_det_series(family, r, &c.cycle_type, DetVariant::OneMinusQ2w, cap)?;
            Ok(ClassTerm {
                weight: ExactRational::from_integer(BigInt::from(c.size.clone())),
                torus,
                inv_bt: bt.invert()?,
            })
        })?;
        let mut degree_product = TruncatedSeries::one(cap);
        for d in &descriptor.degrees {
            degree_product =
                degree_product.multiply(&TruncatedSeries::from_terms(&[(0, 1), (2 * d, -1)], cap))?;
        }
        Ok(ClassTraces {
            descriptor: descriptor.clone(),
            cap,
            degree_product,
            terms,
            execution,
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn descriptor(&self) -> &WeylFamilyDescriptor {
        &self.descriptor
    }

    /// `Π_i (1 - q^{2 d_i})`.
    pub fn degree_product(&self) -> &TruncatedSeries {
        &self.degree_product
    }

    fn trace(&self, term: &ClassTerm, recipe: SpaceRecipe) -> Result<TruncatedSeries> {
        let james = || -> Result<TruncatedSeries> {
            TruncatedSeries::constant(ExactRational::from_integer(2.into()), self.cap)
                .sub(&term.torus)?
                .invert()
        };
        let inv_bt = &term.inv_bt;
        Ok(match recipe.kind {
            SpaceKind::Rep => term.torus.pow(recipe.n),
            SpaceKind::HomEquiv => term.torus.pow(recipe.n).multiply(inv_bt)?,
            SpaceKind::Hom => term.torus.pow(recipe.n).multiply(inv_bt)?,
            SpaceKind::CommQuot => james()?,
            SpaceKind::BcomQuot => inv_bt.clone(),
            SpaceKind::CommEquiv | SpaceKind::Comm => inv_bt.multiply(&james()?)?,
            SpaceKind::BcomEquiv | SpaceKind::Bcom => inv_bt.multiply(inv_bt)?,
        })
    }

    /// `|W|^{-1} Σ |class| · trace`, with the `Π(1-q^{2d_i})` factor applied
    /// once after averaging for the non-equivariant spaces.
    pub fn series(&self, recipe: SpaceRecipe) -> Result<TruncatedSeries> {
        let weighted = self
            .execution
            .try_map(&self.terms, |t| Ok::<_, Error>(self.trace(t, recipe)?.scale(&t.weight)))?;
        let mut total = TruncatedSeries::zero(self.cap);
        for w in &weighted {
            total = total.add(w)?;
        }
        let order = ExactRational::from_integer(BigInt::from(self.descriptor.group_order.clone()));
        total = total.scale(&order.recip());
        if matches!(recipe.kind, SpaceKind::Hom | SpaceKind::Comm | SpaceKind::Bcom) {
            total = total.multiply(&self.degree_product)?;
        }
        Ok(total)
    }
}

/// Poincaré series of the given space, truncated at `cap`.
pub fn poincare_series(
    recipe: SpaceRecipe,
    descriptor: &WeylFamilyDescriptor,
    cap: usize,
) -> Result<TruncatedSeries> {
    ClassTraces::new(descriptor, cap, Execution::default())?.series(recipe)
}

/// Certifies that the series of a finite-dimensional space vanishes above its
/// dimension bound and returns it as a polynomial.
pub fn polynomiality_check(
    recipe: SpaceRecipe,
    descriptor: &WeylFamilyDescriptor,
    cap: usize,
) -> Result<ExactPolynomial> {
    let bound = recipe.degree_bound(descriptor).ok_or_else(|| {
        Error::InvalidInput(format!("{recipe} is not a finite-dimensional space"))
    })?;
    if bound > cap {
        return Err(Error::BoundExceedsCap { bound, cap });
    }
    poincare_series(recipe, descriptor, cap)?.to_polynomial(bound)
}

/// How the guaranteed stable range is determined for a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnsetRule {
    /// Stable for `r >= k`.
    RankAtLeastK,
    /// Stable once `r - floor(sqrt r) >= k` (or `+1` with the strict bound).
    SqrtBound,
}

pub fn isqrt(r: usize) -> usize {
    let mut s = (r as f64).sqrt() as usize;
    while s * s > r {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= r {
        s += 1;
    }
    s
}

/// Smallest rank from which degree-`k` homology is guaranteed to be stable.
pub fn predicted_onset(rule: OnsetRule, family: WeylFamily, k: usize, strict_bound: bool) -> usize {
    match rule {
        OnsetRule::RankAtLeastK => k.max(1),
        OnsetRule::SqrtBound => {
            let slack = usize::from(strict_bound);
            let mut r = 1;
            while r - isqrt(r) + slack < k {
                r += 1;
            }
            // the improved bound excludes SO(2) -> SO(4) in degree 1
            if strict_bound && family == WeylFamily::D && r == 1 && k == 1 {
                r = 2;
            }
            r
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guarantee {
    /// The predicted onset is a proven bound.
    Proven,
    /// No proven bound; the prediction is only a reference value.
    Empirical,
}

/// Coefficient of `q^k` across a range of ranks, against the predicted onset.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub space: SpaceRecipe,
    pub family: WeylFamily,
    pub k: usize,
    pub rows: Vec<(usize, ExactRational)>,
    pub predicted_onset: usize,
    pub guarantee: Guarantee,
    /// Start of the final run of equal coefficients; `None` when the range is
    /// empty or the last value differs from the one before it.
    pub observed_onset: Option<usize>,
}

impl StabilityReport {
    pub fn from_rows(
        space: SpaceRecipe,
        family: WeylFamily,
        k: usize,
        rows: Vec<(usize, ExactRational)>,
        strict_bound: bool,
    ) -> Self {
        let predicted_onset = predicted_onset(space.kind.onset_rule(), family, k, strict_bound);
        let observed_onset = observed_onset(&rows);
        StabilityReport {
            space,
            family,
            k,
            rows,
            predicted_onset,
            guarantee: Guarantee::Proven,
            observed_onset,
        }
    }

    /// True iff every scanned coefficient at or beyond the predicted onset is
    /// the same (vacuously true when none are scanned there).
    pub fn consistent(&self) -> bool {
        let mut tail = self.rows.iter().filter(|(r, _)| *r >= self.predicted_onset);
        match tail.next() {
            None => true,
            Some((_, first)) => tail.all(|(_, c)| c == first),
        }
    }

    /// True iff every coefficient is a non-negative integer.
    pub fn betti_numbers_valid(&self) -> bool {
        self.rows
            .iter()
            .all(|(_, c)| c.is_integer() && !(c < &ExactRational::zero()))
    }
}

pub(crate) fn observed_onset<T: PartialEq>(rows: &[(usize, T)]) -> Option<usize> {
    let (last_r, last) = rows.last()?;
    let mut start = *last_r;
    for (r, v) in rows.iter().rev().skip(1) {
        if v != last {
            break;
        }
        start = *r;
    }
    if rows.len() > 1 && start == *last_r {
        None
    } else {
        Some(start)
    }
}

/// Full truncated series at each rank, for scans that extract several degrees.
pub fn series_across_ranks(
    recipe: SpaceRecipe,
    family: WeylFamily,
    ranks: &[usize],
    cap: usize,
    execution: Execution,
) -> Result<Vec<(usize, TruncatedSeries)>> {
    ranks
        .iter()
        .map(|&r| {
            let desc = WeylFamilyDescriptor::new(family, r)?;
            Ok((r, ClassTraces::new(&desc, cap, execution)?.series(recipe)?))
        })
        .collect()
}

/// Scans the coefficient of `q^k` over `ranks` (ascending).
pub fn stability_scan(
    recipe: SpaceRecipe,
    family: WeylFamily,
    k: usize,
    ranks: &[usize],
    strict_bound: bool,
) -> Result<StabilityReport> {
    if ranks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput("rank range must be strictly ascending".into()));
    }
    let rows = series_across_ranks(recipe, family, ranks, k, Execution::default())?
        .into_iter()
        .map(|(r, s)| (r, s.coeff(k)))
        .collect();
    Ok(StabilityReport::from_rows(recipe, family, k, rows, strict_bound))
}

/// Rank of `π_2(Rep(Z^n, G))` for `G = U(r)` or `SU(r)`: the coefficient of
/// `q^2` in the series of `Rep(Z^n, SU(2))`.
pub fn pi2_rank(family: WeylFamily, n: usize) -> Result<BigInt> {
    if !family.is_type_a() {
        return Err(Error::InvalidInput(format!(
            "pi_2 ranks are only computed for type A, not {family}"
        )));
    }
    let desc = WeylFamilyDescriptor::new(WeylFamily::ASU, 2)?;
    let s = poincare_series(SpaceRecipe::rep(n), &desc, 2)?;
    let c = s.coeff(2);
    if !c.is_integer() {
        return Err(Error::Invariant(format!("non-integral Betti number {c}")));
    }
    Ok(c.to_integer())
}
