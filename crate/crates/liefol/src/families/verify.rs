//! Replays the catalog: closure of every family, then every subfamily claim.
//!
//! Family checks are purely symbolic.  Claim checks combine a symbolic part
//! (branch substitutions satisfy closure and the class equations, emptiness
//! certificates hold identically) with randomized sampling (class membership
//! at rational points agrees with the claimed locus, and off-locus points
//! really fall outside the class).

use std::collections::BTreeMap;

use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    class_exprs, Branch, Catalog, ClaimOutcome, EmptyCertificate, FamilyError, FamilySpec,
    HermClass, Relation, SolveSpec, SubfamilyClaim,
};
use crate::exec::{self, Mode};
use crate::hermitian::{classify, ClassificationResult};
use crate::liealg::StructureConstants;
use crate::scalar::{Rational, Scalar, ScalarError, Var};

/// Knobs for a verification run.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Seed for the deterministic sample streams.
    pub seed: u64,
    /// Random samples per claim (violating samples for tightness, total
    /// samples for whole/empty checks).
    pub samples: usize,
    pub mode: Mode,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { seed: 0, samples: 1000, mode: Mode::default() }
    }
}

/// Outcome of replaying one family or one claim.
#[derive(Serialize, Clone, Debug)]
pub struct VerificationReport {
    pub family: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<HermClass>,
    /// "family" for closure checks, otherwise the claim outcome kind.
    pub subject: String,
    pub jacobi_ok: bool,
    pub membership_ok: bool,
    pub samples_checked: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub branch_params: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.jacobi_ok && self.membership_ok && self.failures.is_empty()
    }

    fn new(family: u8, class: Option<HermClass>, subject: &str) -> VerificationReport {
        VerificationReport {
            family,
            class,
            subject: subject.to_string(),
            jacobi_ok: true,
            membership_ok: true,
            samples_checked: 0,
            branch_params: Vec::new(),
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }
}

/// Aggregate result of a full catalog verification.
#[derive(Serialize, Clone, Debug)]
pub struct CatalogReport {
    pub ok: bool,
    pub seed: u64,
    pub samples_per_claim: usize,
    pub families: Vec<VerificationReport>,
    pub claims: Vec<VerificationReport>,
}

fn class_flag(result: &ClassificationResult, class: HermClass) -> bool {
    match class {
        HermClass::AlmostKahler => result.almost_kahler,
        HermClass::Integrable => result.integrable,
        HermClass::Kahler => result.kahler,
    }
}

fn fmt_bindings(bindings: &BTreeMap<Var, Rational>) -> String {
    bindings
        .iter()
        .map(|(v, x)| format!("{} = {}", v.name(), x))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Symbolic closure check for one family: the quadratic closure system and
/// the generic Jacobi residuals must both vanish identically.
pub fn verify_family(family: &FamilySpec) -> VerificationReport {
    let mut report = VerificationReport::new(family.id, None, "family");
    report.notes = family.notes.clone();
    for (i, res) in family.sc.jacobi_residuals().iter().enumerate() {
        if !res.is_zero() {
            report.jacobi_ok = false;
            report
                .failures
                .push(format!("closure equation {} is nonzero: {}", i + 1, res));
        }
    }
    let generic = family.sc.to_bracket_table().jacobi_residuals_generic();
    for (t, res) in generic.iter().enumerate() {
        if !res.is_zero() {
            report.jacobi_ok = false;
            report
                .failures
                .push(format!("generic Jacobi residual on triple {t} is nonzero: {res}"));
        }
    }
    report
}

/// The substitution closure of a solved-equation list.
fn solve_lookup(solve: &[(Var, Scalar)]) -> impl Fn(Var) -> Option<Scalar> + '_ {
    move |v: Var| solve.iter().find(|(p, _)| *p == v).map(|(_, e)| e.clone())
}

/// Checks that `v - e` matches one of the class equations up to a nonzero
/// rational factor.
fn matches_class_equation(eqs: &[Scalar], v: Var, e: &Scalar) -> bool {
    if e.vars().contains(&v) {
        return false;
    }
    let diff = Scalar::var_of(v).sub(e);
    eqs.iter().any(|eq| {
        if eq.is_zero() {
            return false;
        }
        match eq.div(&diff) {
            Ok(q) => q.as_rational().map_or(false, |c| !c.is_zero()),
            Err(_) => false,
        }
    })
}

/// Resolves a certificate's solved equations, validating their provenance.
fn resolve_solve(
    catalog: &Catalog,
    family: &FamilySpec,
    eqs: &[Scalar],
    spec: &SolveSpec,
    failures: &mut Vec<String>,
) -> Vec<(Var, Scalar)> {
    match spec {
        SolveSpec::ClassLinear(pairs) => {
            for (v, e) in pairs {
                if !matches_class_equation(eqs, *v, e) {
                    failures.push(format!(
                        "solved equation {} = {} does not match any class equation",
                        v.name(),
                        e
                    ));
                }
            }
            pairs.clone()
        }
        SolveSpec::IntegrabilityBranch => {
            match catalog.claim(family.id, HermClass::Integrable).map(|c| &c.outcome) {
                Some(ClaimOutcome::Parametric { branches, .. }) if branches.len() == 1 => {
                    branches[0].map.clone()
                }
                _ => {
                    failures.push(
                        "certificate borrows the integrable branch, but the integrable claim \
                         is not a single-branch parametrization"
                            .to_string(),
                    );
                    Vec::new()
                }
            }
        }
    }
}

/// Variables that the family domain forces nonzero via a bare-parameter
/// constraint.
fn nonzero_vars(family: &FamilySpec) -> Vec<Var> {
    family.constraints.iter().filter_map(|c| c.nonzero_var()).collect()
}

/// Checks that `obstruction` is positive at every in-domain point: all terms
/// have even exponents and positive coefficients, and some term is a pure
/// power of a parameter the domain keeps nonzero (and the solve step leaves
/// untouched).
fn check_positive_obstruction(
    family: &FamilySpec,
    solve: &[(Var, Scalar)],
    obstruction: &Scalar,
    failures: &mut Vec<String>,
) {
    let fun = obstruction.as_fun();
    if fun.den().as_constant() != Some(Rational::from_integer(1.into())) {
        failures.push(format!("obstruction {obstruction} is not a polynomial"));
        return;
    }
    if fun.num().is_zero() {
        failures.push("obstruction is identically zero".to_string());
        return;
    }
    let protected = nonzero_vars(family);
    let solved: Vec<Var> = solve.iter().map(|(v, _)| *v).collect();
    let mut has_pure_nonzero_power = false;
    for (mono, coeff) in fun.num().terms() {
        if coeff <= &Rational::zero() {
            failures.push(format!(
                "obstruction {obstruction} has a non-positive coefficient {coeff}"
            ));
            return;
        }
        let factors: Vec<(Var, u32)> = mono.factors().collect();
        if factors.iter().any(|(_, e)| e % 2 != 0) {
            failures.push(format!("obstruction {obstruction} has an odd-degree term"));
            return;
        }
        if factors.len() == 1 {
            let (v, _) = factors[0];
            if protected.contains(&v) && !solved.contains(&v) {
                has_pure_nonzero_power = true;
            }
        }
    }
    if !has_pure_nonzero_power {
        failures.push(format!(
            "obstruction {obstruction} has no pure even power of a domain-nonzero parameter"
        ));
    }
}

/// Verifies an emptiness certificate symbolically.
fn check_certificate(
    catalog: &Catalog,
    family: &FamilySpec,
    class: HermClass,
    certificate: &EmptyCertificate,
    obstruction: &Scalar,
) -> Vec<String> {
    let mut failures = Vec::new();
    let eqs = class_exprs(family, class);
    match certificate {
        EmptyCertificate::EqualsNonzeroDomainExpr { class_eq, domain_constraint, scale } => {
            let Some(eq) = eqs.get(*class_eq) else {
                failures.push(format!("class equation index {class_eq} out of range"));
                return failures;
            };
            let Some(dc) = family.constraints.get(*domain_constraint) else {
                failures.push(format!("domain constraint index {domain_constraint} out of range"));
                return failures;
            };
            if dc.relation != Relation::NonZero {
                failures.push("certificate needs a nonzero-relation domain constraint".to_string());
            }
            if scale.is_zero() {
                failures.push("certificate scale is zero".to_string());
            }
            if obstruction != &dc.expr {
                failures.push(format!(
                    "obstruction {obstruction} is not the constrained expression {}",
                    dc.expr
                ));
            }
            let expected = Scalar::Rat(scale.clone()).mul(&dc.expr);
            if eq != &expected {
                failures.push(format!(
                    "class equation {eq} is not {scale} times the domain expression {}",
                    dc.expr
                ));
            }
        }
        EmptyCertificate::SumOfSquares { solve, combine, scale } => {
            let solve = resolve_solve(catalog, family, &eqs, solve, &mut failures);
            let mut combined = Scalar::zero();
            for (coeff, idx) in combine {
                match eqs.get(*idx) {
                    Some(eq) => combined = combined.add(&coeff.mul(eq)),
                    None => {
                        failures.push(format!("class equation index {idx} out of range"));
                        return failures;
                    }
                }
            }
            let lookup = solve_lookup(&solve);
            match combined.subst_symbolic(&lookup) {
                Ok(s) => {
                    let expected = Scalar::Rat(scale.clone()).mul(obstruction);
                    if s != expected {
                        failures.push(format!(
                            "solved combination is {s}, not {scale} times the obstruction \
                             {obstruction}"
                        ));
                    }
                }
                Err(e) => failures.push(format!("substitution into the combination failed: {e}")),
            }
            if scale.is_zero() {
                failures.push("certificate scale is zero".to_string());
            }
            check_positive_obstruction(family, &solve, obstruction, &mut failures);
        }
        EmptyCertificate::ForcesDomainZero { solve, domain_constraint } => {
            let solve = resolve_solve(catalog, family, &eqs, solve, &mut failures);
            let Some(dc) = family.constraints.get(*domain_constraint) else {
                failures.push(format!("domain constraint index {domain_constraint} out of range"));
                return failures;
            };
            if dc.relation != Relation::NonZero {
                failures.push("certificate needs a nonzero-relation domain constraint".to_string());
            }
            if obstruction != &dc.expr {
                failures.push(format!(
                    "obstruction {obstruction} is not the constrained expression {}",
                    dc.expr
                ));
            }
            let lookup = solve_lookup(&solve);
            match dc.expr.subst_symbolic(&lookup) {
                Ok(s) if s.is_zero() => {}
                Ok(s) => failures.push(format!(
                    "solved class equations leave the domain expression at {s}, not zero"
                )),
                Err(e) => failures.push(format!("substitution into the domain expression failed: {e}")),
            }
        }
    }
    failures
}

/// Symbolic checks for one branch of a parametrized claim.
fn check_branch_symbolic(
    family: &FamilySpec,
    claim: &SubfamilyClaim,
    branch: &Branch,
    constraint_exprs: &[Scalar],
    report: &mut VerificationReport,
) {
    let label = &branch.label;
    for p in &branch.params {
        if !family.params.contains(p) {
            report.failures.push(format!(
                "branch `{label}`: parameter {} is not a family parameter",
                p.name()
            ));
        }
    }
    for (v, e) in &branch.map {
        if !family.params.contains(v) {
            report.failures.push(format!(
                "branch `{label}`: substituted {} is not a family parameter",
                v.name()
            ));
        }
        if branch.params.contains(v) {
            report.failures.push(format!(
                "branch `{label}`: {} is both substituted and kept free",
                v.name()
            ));
        }
        if !e.vars().iter().all(|u| branch.params.contains(u)) {
            report.failures.push(format!(
                "branch `{label}`: substitution for {} uses a non-branch parameter",
                v.name()
            ));
        }
    }
    let kept: Vec<&Var> = family
        .params
        .iter()
        .filter(|p| branch.map.iter().all(|(v, _)| v != *p))
        .collect();
    for p in kept {
        if !branch.params.contains(p) {
            report.failures.push(format!(
                "branch `{label}`: family parameter {} is neither kept nor substituted",
                p.name()
            ));
        }
    }

    let sub = branch.substitution();
    let bsc = match family.sc.subst_symbolic(&sub) {
        Ok(bsc) => bsc,
        Err(e) => {
            report
                .failures
                .push(format!("branch `{label}`: substitution failed: {e}"));
            return;
        }
    };

    // The branch must stay inside the family: no nonzero-domain expression
    // may collapse identically.
    for c in &family.constraints {
        if c.relation != Relation::NonZero {
            continue;
        }
        match c.expr.subst_symbolic(&sub) {
            Ok(e) if e.is_zero() => report.failures.push(format!(
                "branch `{label}`: annihilates the domain expression {}",
                c.expr
            )),
            Ok(_) => {}
            Err(e) => report
                .failures
                .push(format!("branch `{label}`: domain substitution failed: {e}")),
        }
    }

    // Substituted points still satisfy closure.
    for (i, res) in bsc.jacobi_residuals().iter().enumerate() {
        if !res.is_zero() {
            report.jacobi_ok = false;
            report.failures.push(format!(
                "branch `{label}`: closure equation {} becomes {}",
                i + 1,
                res
            ));
        }
    }

    // Substituted points lie in the claimed class.
    for (k, eq) in class_exprs(family, claim.class).iter().enumerate() {
        match eq.subst_symbolic(&sub) {
            Ok(e) if e.is_zero() => {}
            Ok(e) => {
                report.membership_ok = false;
                report.failures.push(format!(
                    "branch `{label}`: class equation {k} stays nonzero: {e}"
                ));
            }
            Err(err) => report
                .failures
                .push(format!("branch `{label}`: class substitution failed: {err}")),
        }
    }

    // The branch lies on the claimed locus.
    for expr in constraint_exprs {
        match expr.subst_symbolic(&sub) {
            Ok(e) if e.is_zero() => {}
            Ok(e) => report.failures.push(format!(
                "branch `{label}`: locus expression {expr} becomes {e}, not zero"
            )),
            Err(err) => report
                .failures
                .push(format!("branch `{label}`: locus substitution failed: {err}")),
        }
    }
}

/// Draws one in-domain point of `branch`, returning the family bindings and
/// the instantiated structure constants.
fn sample_branch(
    family: &FamilySpec,
    branch: &Branch,
    rng: &mut ChaCha8Rng,
) -> Result<(BTreeMap<Var, Rational>, StructureConstants), String> {
    let label = &branch.label;
    'outer: for _ in 0..10_000 {
        let bb: BTreeMap<Var, Rational> = branch
            .params
            .iter()
            .map(|p| (*p, super::sample_rational(rng)))
            .collect();
        for c in &branch.constraints {
            match c.holds(&bb) {
                Ok(true) => {}
                Ok(false) => continue 'outer,
                Err(e) => return Err(format!("branch `{label}`: constraint check failed: {e}")),
            }
        }
        let mut fb = BTreeMap::new();
        for p in &family.params {
            let val = match branch.map.iter().find(|(v, _)| v == p) {
                Some((_, e)) => match e.substitute(&bb) {
                    Ok(x) => x,
                    Err(ScalarError::DivisionByZero) => continue 'outer,
                    Err(e) => return Err(format!("branch `{label}`: map evaluation failed: {e}")),
                },
                None => match bb.get(p) {
                    Some(x) => x.clone(),
                    None => {
                        return Err(format!(
                            "branch `{label}` does not bind family parameter {}",
                            p.name()
                        ))
                    }
                },
            };
            fb.insert(*p, val);
        }
        match family.make(&fb) {
            Ok(sc) => return Ok((fb, sc)),
            Err(FamilyError::DomainViolation { .. }) => continue,
            Err(e) => return Err(format!("branch `{label}`: instantiation failed: {e}")),
        }
    }
    Err(format!("branch `{label}`: domain rejected 10000 consecutive samples"))
}

/// Verifies one subfamily claim against its family.
pub fn verify_claim(
    catalog: &Catalog,
    claim: &SubfamilyClaim,
    opts: &VerifyOptions,
) -> VerificationReport {
    let family = catalog
        .family(claim.family)
        .expect("claims always reference catalog families");
    let mut report =
        VerificationReport::new(claim.family, Some(claim.class), claim.outcome.kind());
    report.notes = claim.notes.clone();

    let class_idx = match claim.class {
        HermClass::AlmostKahler => 0,
        HermClass::Integrable => 1,
        HermClass::Kahler => 2,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(100 + u64::from(claim.family) * 3 + class_idx);

    match &claim.outcome {
        ClaimOutcome::Whole => {
            for (k, eq) in class_exprs(family, claim.class).iter().enumerate() {
                if !eq.is_zero() {
                    report.membership_ok = false;
                    report
                        .failures
                        .push(format!("class equation {k} is nonzero on the family: {eq}"));
                }
            }
            for _ in 0..opts.samples {
                let (bindings, sc) = family.sample(&mut rng);
                let res = classify(&sc);
                check_kahler_consistency(&res, &bindings, &mut report);
                if !class_flag(&res, claim.class) {
                    report.membership_ok = false;
                    report.failures.push(format!(
                        "sampled point leaves the class: {}",
                        fmt_bindings(&bindings)
                    ));
                    break;
                }
                report.samples_checked += 1;
            }
        }
        ClaimOutcome::Parametric { branches, constraint_exprs } => {
            for branch in branches {
                report.branch_params.push(branch.params.len());
                check_branch_symbolic(family, claim, branch, constraint_exprs, &mut report);
            }

            // Numeric spot checks on each branch: sampled points must land in
            // the class.
            let per_branch = (opts.samples / 10).max(25);
            for branch in branches {
                for _ in 0..per_branch {
                    match sample_branch(family, branch, &mut rng) {
                        Ok((bindings, sc)) => {
                            let res = classify(&sc);
                            check_kahler_consistency(&res, &bindings, &mut report);
                            if !class_flag(&res, claim.class) {
                                report.membership_ok = false;
                                report.failures.push(format!(
                                    "branch `{}` sample leaves the class: {}",
                                    branch.label,
                                    fmt_bindings(&bindings)
                                ));
                                break;
                            }
                            report.samples_checked += 1;
                        }
                        Err(e) => {
                            report.failures.push(e);
                            break;
                        }
                    }
                }
            }

            // Tightness: random in-domain points must lie in the class
            // exactly when every locus expression vanishes, and we insist on
            // a quota of genuinely off-locus draws.
            let mut off_locus = 0usize;
            let mut attempts = 0usize;
            let cap = opts.samples.saturating_mul(200).max(5000);
            while off_locus < opts.samples && attempts < cap {
                attempts += 1;
                let (bindings, sc) = family.sample(&mut rng);
                let res = classify(&sc);
                check_kahler_consistency(&res, &bindings, &mut report);
                let member = class_flag(&res, claim.class);
                let on_locus = constraint_exprs.iter().all(|e| {
                    e.substitute(&bindings)
                        .map(|x| x.is_zero())
                        .unwrap_or(false)
                });
                if member != on_locus {
                    report.membership_ok = false;
                    report.failures.push(format!(
                        "locus mismatch at {}: in class = {member}, on locus = {on_locus}",
                        fmt_bindings(&bindings)
                    ));
                    break;
                }
                if !on_locus {
                    off_locus += 1;
                    report.samples_checked += 1;
                }
            }
            if off_locus < opts.samples && report.failures.is_empty() {
                report.failures.push(format!(
                    "tightness sampling starved: {off_locus} off-locus draws in {attempts} attempts"
                ));
            }
        }
        ClaimOutcome::Empty { certificate, obstruction } => {
            let cert_failures =
                check_certificate(catalog, family, claim.class, certificate, obstruction);
            if !cert_failures.is_empty() {
                report.membership_ok = false;
                report.failures.extend(cert_failures);
            }
            for _ in 0..opts.samples {
                let (bindings, sc) = family.sample(&mut rng);
                let res = classify(&sc);
                check_kahler_consistency(&res, &bindings, &mut report);
                if class_flag(&res, claim.class) {
                    report.membership_ok = false;
                    report.failures.push(format!(
                        "claimed-empty class contains the sampled point {}",
                        fmt_bindings(&bindings)
                    ));
                    break;
                }
                report.samples_checked += 1;
            }
        }
    }
    report
}

fn check_kahler_consistency(
    res: &ClassificationResult,
    bindings: &BTreeMap<Var, Rational>,
    report: &mut VerificationReport,
) {
    if res.kahler != (res.almost_kahler && res.integrable) {
        report.membership_ok = false;
        report.failures.push(format!(
            "Kähler flag out of step with its factors at {}",
            fmt_bindings(bindings)
        ));
    }
}

/// Verifies the whole catalog: every family symbolically, every claim
/// symbolically and on random samples.
pub fn verify_catalog(catalog: &Catalog, opts: &VerifyOptions) -> CatalogReport {
    let families = exec::map(opts.mode, catalog.families.iter().collect(), verify_family);
    let claims = exec::map(opts.mode, catalog.claims.iter().collect(), |claim| {
        verify_claim(catalog, claim, opts)
    });
    let ok = families.iter().all(VerificationReport::ok) && claims.iter().all(VerificationReport::ok);
    CatalogReport {
        ok,
        seed: opts.seed,
        samples_per_claim: opts.samples,
        families,
        claims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Fault;

    fn quick_opts() -> VerifyOptions {
        VerifyOptions { seed: 0, samples: 60, mode: Mode::Sequential }
    }

    #[test]
    fn standard_catalog_verifies() {
        let catalog = Catalog::standard();
        let report = verify_catalog(&catalog, &quick_opts());
        for f in &report.families {
            assert!(f.ok(), "family {} failed: {:?}", f.family, f.failures);
        }
        for c in &report.claims {
            assert!(
                c.ok(),
                "claim ({}, {:?}) failed: {:?}",
                c.family,
                c.class,
                c.failures
            );
        }
        assert!(report.ok);
        assert_eq!(report.families.len(), 20);
        assert_eq!(report.claims.len(), 60);
    }

    #[test]
    fn verification_is_deterministic_across_modes() {
        let catalog = Catalog::standard();
        let mut opts = quick_opts();
        let seq = verify_catalog(&catalog, &opts);
        opts.mode = Mode::Parallel;
        let par = verify_catalog(&catalog, &opts);
        let render = |r: &CatalogReport| serde_json::to_string(r).unwrap();
        assert_eq!(render(&seq), render(&par));
    }

    #[test]
    fn every_fault_is_detected() {
        for fault in Fault::ALL {
            let catalog = Catalog::with_fault(fault);
            let report = verify_catalog(&catalog, &quick_opts());
            assert!(!report.ok, "fault {fault} slipped through verification");
        }
    }

    #[test]
    fn fault_g6_breaks_family_closure() {
        let catalog = Catalog::with_fault(Fault::G6W2Sign);
        let report = verify_family(catalog.family(6).unwrap());
        assert!(!report.jacobi_ok);
    }

    #[test]
    fn fault_g1_wrong_branch_breaks_membership() {
        let catalog = Catalog::with_fault(Fault::G1AkWrongBranch);
        let claim = catalog.claim(1, HermClass::AlmostKahler).unwrap();
        let report = verify_claim(&catalog, claim, &quick_opts());
        assert!(!report.ok());
        assert!(!report.membership_ok || !report.failures.is_empty());
    }

    #[test]
    fn fault_g4_whole_claim_fails_symbolically() {
        let catalog = Catalog::with_fault(Fault::G4KWhole);
        let claim = catalog.claim(4, HermClass::Kahler).unwrap();
        let report = verify_claim(&catalog, claim, &quick_opts());
        assert!(!report.membership_ok);
    }
}
