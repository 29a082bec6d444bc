use num_traits::Signed;
use weylstab::molien::{polynomiality_check, stability_scan, Guarantee};
use weylstab::oracle::{invariant_dimension_direct, verify_class_formulas, OracleLimits};
use weylstab::repstab::{
    induced_branching, invariant_dimension, multiplicity_table, symmetric_product_series,
    uniform_stability_check, Label, MultiplicityTable,
};
use weylstab::{
    Bipartition, Error, ExactPolynomial, ExactRational, Partition, SpaceRecipe,
    WeylFamily, WeylFamilyDescriptor,
};

use crate::args::{
    BranchArgs, Command, DecomposeArgs, FamilyArgs, InvariantsArgs, OracleArgs, PoincareArgs,
    ScanArgs, SymprodArgs,
};
use crate::report::Report;

pub const DEFAULT_CAP: usize = 24;

#[derive(Debug)]
pub enum Failure {
    /// Bad input; exit code 2.
    Usage(String),
    /// A mathematical invariant failed; exit code 3.
    Invariant(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Invariant(m) => write!(f, "invariant violated: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::NotAPolynomial { .. } | Error::NotInvertible => {
                Failure::Invariant(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

pub fn run(command: &Command) -> Outcome {
    match command {
        Command::Poincare(a) => poincare(a),
        Command::Scan(a) => scan(a),
        Command::Decompose(a) => decompose(a),
        Command::Invariants(a) => invariants(a),
        Command::Branch(a) => branch(a),
        Command::Symprod(a) => symprod(a),
        Command::Oracle(a) => oracle(a),
    }
}

fn with_family(report: &mut Report, family: &FamilyArgs) {
    report.family = Some(family.family.name().to_string());
    report.resolved_family = Some(family.family.resolve().to_string());
    report.nilpotent_class = family.nilpotent_class;
    if let Some(note) = family.family.resolution_note() {
        report.notes.push(format!("{} resolves to {}: {note}", family.family, family.family.resolve()));
    }
    if family.nilpotent_class.is_some() {
        report
            .notes
            .push("free nilpotent source group: the identity component is the abelian one".into());
    }
}

fn descriptor(family: &FamilyArgs, rank: usize) -> Result<WeylFamilyDescriptor, Failure> {
    Ok(WeylFamilyDescriptor::from_alias(family.family, rank, family.nilpotent_class)?)
}

/// A Betti number or multiplicity as a decimal string.
fn natural(value: &ExactRational, what: &str) -> Result<String, Failure> {
    if !value.is_integer() || value.is_negative() {
        return Err(Failure::Invariant(format!("{what} {value} is not a non-negative integer")));
    }
    Ok(value.to_integer().to_string())
}

fn validate_family(family: &FamilyArgs) -> Result<(), Failure> {
    if let Some(q) = family.nilpotent_class {
        if q < 2 {
            return Err(Failure::Usage(format!("nilpotency class must be at least 2, got {q}")));
        }
    }
    Ok(())
}

fn poincare(a: &PoincareArgs) -> Outcome {
    validate_family(&a.family)?;
    let desc = descriptor(&a.family, a.rank)?;
    let recipe = SpaceRecipe::new(a.space, a.n);
    let mut report = Report::new("poincare", &["degree", "coefficient"]);
    with_family(&mut report, &a.family);
    report.notes.extend(desc.warnings.iter().cloned());
    report.rank = Some(a.rank);
    report.n = a.space.takes_n().then_some(a.n);

    let coefficients: Vec<ExactRational> = match (recipe.degree_bound(&desc), a.cap) {
        (Some(bound), None) => {
            report.cap = Some(bound);
            let p = polynomiality_check(recipe, &desc, bound)?;
            report.pass = Some(true);
            p.coefficients().to_vec()
        }
        (bound, cap) => {
            let cap = cap.unwrap_or(DEFAULT_CAP);
            report.cap = Some(cap);
            let series = weylstab::molien::poincare_series(recipe, &desc, cap)?;
            if let Some(bound) = bound.filter(|b| *b <= cap) {
                series.to_polynomial(bound)?;
                report.pass = Some(true);
            }
            series.coefficients().to_vec()
        }
    };
    let strings = coefficients
        .iter()
        .enumerate()
        .map(|(d, c)| natural(c, &format!("coefficient of q^{d}")))
        .collect::<Result<Vec<_>, _>>()?;
    for (d, c) in strings.iter().enumerate() {
        report.push_row(&[d.to_string(), c.clone()]);
    }
    report.notes.push(format!("space {recipe}"));
    report.coefficients = Some(strings);
    Ok(report)
}

fn guarantee_name(g: Guarantee) -> String {
    match g {
        Guarantee::Proven => "proven".into(),
        Guarantee::Empirical => "empirical".into(),
    }
}

fn scan(a: &ScanArgs) -> Outcome {
    validate_family(&a.family)?;
    let family = a.family.family.resolve();
    let ranks = a.ranks.ranks();
    for &r in &ranks {
        descriptor(&a.family, r)?;
    }
    let recipe = SpaceRecipe::new(a.space, a.n);
    let result = stability_scan(recipe, family, a.k, &ranks, a.strict_bound)?;
    let mut report = Report::new("scan", &["r", "coefficient"]);
    with_family(&mut report, &a.family);
    report.ranks = Some(ranks);
    report.n = a.space.takes_n().then_some(a.n);
    report.k = Some(a.k);
    report.cap = Some(a.k);
    report.predicted_onset = Some(result.predicted_onset);
    report.observed_onset = result.observed_onset;
    report.guarantee = Some(guarantee_name(result.guarantee));
    report.pass = Some(result.consistent());
    for (r, c) in &result.rows {
        report.push_row(&[r.to_string(), natural(c, &format!("Betti number at r={r}"))?]);
    }
    report.notes.push(format!("space {recipe}"));
    if a.strict_bound {
        report.notes.push("strict bound: r - floor(sqrt r) + 1 >= k".into());
    }
    Ok(report)
}

fn table_rows(report: &mut Report, table: &MultiplicityTable, with_rank: bool) {
    for (key, c) in &table.entries {
        let mut row = Vec::new();
        if with_rank {
            row.push(table.r.to_string());
        }
        row.push(key.to_string());
        row.push(c.to_string());
        report.push_row(&row);
    }
}

fn decompose(a: &DecomposeArgs) -> Outcome {
    validate_family(&a.family)?;
    let family = a.family.family.resolve();
    match (&a.ranks, a.rank) {
        (Some(range), _) => {
            let ranks = range.ranks();
            let result = uniform_stability_check(family, a.n, a.k, &ranks)?;
            let mut report = Report::new("decompose", &["r", "seed", "multiplicity"]);
            with_family(&mut report, &a.family);
            report.ranks = Some(ranks);
            report.n = Some(a.n);
            report.k = Some(a.k);
            report.predicted_onset = Some(result.predicted_onset);
            report.observed_onset = result.observed_onset;
            report.guarantee = Some(guarantee_name(result.guarantee));
            report.pass = Some(result.consistent());
            for t in &result.tables {
                table_rows(&mut report, t, true);
            }
            Ok(report)
        }
        (None, Some(rank)) => {
            descriptor(&a.family, rank)?;
            let table = multiplicity_table(family, rank, a.n, a.k)?;
            let mut report = Report::new("decompose", &["seed", "multiplicity"]);
            with_family(&mut report, &a.family);
            report.rank = Some(rank);
            report.n = Some(a.n);
            report.k = Some(a.k);
            table_rows(&mut report, &table, false);
            if table.residuals().next().is_some() {
                report
                    .notes
                    .push("residual: irreducibles that are not a padding of any seed at this rank".into());
            }
            Ok(report)
        }
        (None, None) => Err(Failure::Usage("one of --rank or --ranks is required".into())),
    }
}

fn invariants(a: &InvariantsArgs) -> Outcome {
    validate_family(&a.family)?;
    let desc = descriptor(&a.family, a.rank)?;
    let dim = invariant_dimension(desc.family, a.rank, a.n, a.k)?;
    let mut report = Report::new("invariants", &["k", "dimension"]);
    with_family(&mut report, &a.family);
    report.rank = Some(a.rank);
    report.n = Some(a.n);
    report.k = Some(a.k);
    report.coefficients = Some(vec![dim.to_string()]);
    report.push_row(&[a.k.to_string(), dim.to_string()]);
    Ok(report)
}

fn parse_label(family: WeylFamily, s: &str) -> Result<Label, Failure> {
    match family {
        WeylFamily::AU | WeylFamily::ASU => Ok(Label::A(s.parse::<Partition>()?)),
        WeylFamily::B | WeylFamily::C => Ok(Label::BC(s.parse::<Bipartition>()?)),
        WeylFamily::D => Err(Failure::Usage(
            "branching is only available for types A, B and C".into(),
        )),
    }
}

fn branch(a: &BranchArgs) -> Outcome {
    validate_family(&a.family)?;
    let label = parse_label(a.family.family.resolve(), &a.label)?;
    let mut report = Report::new("branch", &["label"]);
    with_family(&mut report, &a.family);
    report.k = Some(a.k);
    report.notes.push(format!("induced from {label} with {} added boxes", a.k));
    for mu in induced_branching(&label, a.k) {
        report.push_row(&[mu.to_string()]);
    }
    Ok(report)
}

fn symprod(a: &SymprodArgs) -> Outcome {
    let betti = a
        .betti
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("bad Betti numbers '{}'", a.betti)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let p = ExactPolynomial::from_ints(&betti);
    let series = symmetric_product_series(&p, a.n, a.cap)?;
    let mut report = Report::new("symprod", &["degree", "coefficient"]);
    report.n = Some(a.n);
    report.cap = Some(a.cap);
    report.notes.push(format!("P_X = {p}"));
    let strings = series
        .coefficients()
        .iter()
        .enumerate()
        .map(|(d, c)| natural(c, &format!("coefficient of q^{d}")))
        .collect::<Result<Vec<_>, _>>()?;
    for (d, c) in strings.iter().enumerate() {
        report.push_row(&[d.to_string(), c.clone()]);
    }
    report.coefficients = Some(strings);
    Ok(report)
}

fn oracle(a: &OracleArgs) -> Outcome {
    validate_family(&a.family)?;
    let desc = descriptor(&a.family, a.rank)?;
    let limits = if a.force { OracleLimits::unbounded() } else { OracleLimits::from_env()? };
    let result = verify_class_formulas(desc.family, a.rank, a.cap, limits)?;
    let mut report = Report::new("oracle", &["check", "value"]);
    with_family(&mut report, &a.family);
    report.rank = Some(a.rank);
    report.cap = Some(a.cap);
    report.push_row(&["elements".into(), result.elements.to_string()]);
    report.push_row(&["classes".into(), result.classes.to_string()]);
    report.push_row(&["mismatches".into(), result.mismatches.len().to_string()]);
    report.notes.extend(result.mismatches.iter().cloned());
    let mut pass = result.passed();
    if let Some(k) = a.k {
        report.n = Some(a.n);
        report.k = Some(k);
        let direct = invariant_dimension_direct(desc.family, a.rank, a.n, k, limits)?;
        let classes = invariant_dimension(desc.family, a.rank, a.n, k)?;
        report.push_row(&["invariants (direct)".into(), direct.to_string()]);
        report.push_row(&["invariants (class sum)".into(), classes.to_string()]);
        pass &= classes == direct.into();
    }
    report.pass = Some(pass);
    if !pass {
        return Err(Failure::Invariant(format!(
            "oracle disagrees with the class formulas for {} rank {}: {}",
            desc.family,
            a.rank,
            report.notes.join("; ")
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use weylstab::SpaceKind;

    #[test]
    fn natural_rejects_fractions() {
        let half = ExactRational::new(1.into(), 2.into());
        assert!(matches!(natural(&half, "x"), Err(Failure::Invariant(_))));
        assert_eq!(natural(&ExactRational::zero(), "x").unwrap(), "0");
    }

    #[test]
    fn error_classes() {
        assert_eq!(Failure::from(Error::InvalidInput("x".into())).exit_code(), 2);
        assert_eq!(Failure::from(Error::Invariant("x".into())).exit_code(), 3);
        assert_eq!(Failure::from(Error::NotAPolynomial { bound: 1, degree: 2 }).exit_code(), 3);
    }

    #[test]
    fn fixed_spaces_have_no_n() {
        assert!(!SpaceKind::Comm.takes_n());
    }
}
