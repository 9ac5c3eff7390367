//! The classified families of metric Lie algebras and their almost Hermitian
//! subfamilies.
//!
//! A [`FamilySpec`] is a parametrized slice of the structure-constant space:
//! symbolic structure constants in a list of free parameters, restricted by
//! domain constraints (non-vanishing or positivity of polynomial expressions
//! in the parameters).  Twenty families form the standard [`Catalog`]; each
//! carries up to three [`SubfamilyClaim`]s describing its almost Kähler,
//! integrable, and Kähler loci.  A claim's outcome is the whole family, a
//! parametrized sublocus given by explicit branches, or empty with a
//! machine-checkable certificate.
//!
//! The verification engine lives in [`verify`]; it replays every claim
//! symbolically and stress-tests it on random rational points.

mod catalog;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::liealg::StructureConstants;
use crate::scalar::{rat, Rational, Scalar, ScalarError, Var};

/// Errors from building a point of a family.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family id {0}")]
    UnknownFamily(u8),
    #[error("family {family}: missing binding for parameter `{param}`")]
    MissingBinding { family: u8, param: String },
    #[error("family {family}: domain constraint violated: {constraint}")]
    DomainViolation { family: u8, constraint: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The relation a domain constraint imposes on its expression.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    NonZero,
    Positive,
}

/// A polynomial condition cutting out the parameter domain of a family or
/// branch.
#[derive(Clone, Debug)]
pub struct DomainConstraint {
    pub expr: Scalar,
    pub relation: Relation,
}

impl DomainConstraint {
    pub fn nonzero(expr: Scalar) -> Self {
        DomainConstraint { expr, relation: Relation::NonZero }
    }

    pub fn positive(expr: Scalar) -> Self {
        DomainConstraint { expr, relation: Relation::Positive }
    }

    /// Evaluates the constraint at a rational parameter point.
    pub fn holds(&self, bindings: &BTreeMap<Var, Rational>) -> Result<bool, ScalarError> {
        use num::Zero;
        let value = self.expr.substitute(bindings)?;
        Ok(match self.relation {
            Relation::NonZero => !value.is_zero(),
            Relation::Positive => value > Rational::zero(),
        })
    }

    /// If the constraint demands a single bare parameter be nonzero, returns
    /// that parameter.
    pub fn nonzero_var(&self) -> Option<Var> {
        if self.relation != Relation::NonZero {
            return None;
        }
        let vars = self.expr.vars();
        if vars.len() != 1 {
            return None;
        }
        let v = *vars.iter().next().expect("len checked");
        if self.expr == Scalar::var_of(v) {
            Some(v)
        } else {
            None
        }
    }
}

impl fmt::Display for DomainConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.relation {
            Relation::NonZero => write!(f, "{} != 0", self.expr),
            Relation::Positive => write!(f, "{} > 0", self.expr),
        }
    }
}

/// Which structural case a family falls into, by the shape of the leaf
/// directions `Z`, `W` inside the derived algebra.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Case {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One parametrized family of metric Lie algebras.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    /// Catalog id, 1 through 20.
    pub id: u8,
    pub case: Case,
    /// Free parameters, in presentation order.
    pub params: Vec<Var>,
    /// Conditions the parameters must satisfy.
    pub constraints: Vec<DomainConstraint>,
    /// Structure constants as expressions in the free parameters.
    pub sc: StructureConstants,
    /// Coarse algebraic type: "solvable", "nilpotent", or
    /// "not solvable in general".
    pub tag: &'static str,
    /// Remarks carried into reports.
    pub notes: Vec<String>,
}

impl FamilySpec {
    /// Number of free parameters.
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    /// Instantiates the family at a rational parameter point, enforcing the
    /// domain constraints.
    pub fn make(
        &self,
        bindings: &BTreeMap<Var, Rational>,
    ) -> Result<StructureConstants, FamilyError> {
        for p in &self.params {
            if !bindings.contains_key(p) {
                return Err(FamilyError::MissingBinding {
                    family: self.id,
                    param: p.name().to_string(),
                });
            }
        }
        for c in &self.constraints {
            if !c.holds(bindings)? {
                return Err(FamilyError::DomainViolation {
                    family: self.id,
                    constraint: c.to_string(),
                });
            }
        }
        Ok(self.sc.substitute(bindings)?)
    }

    /// Draws a random in-domain parameter point by rejection sampling.
    ///
    /// Panics if the domain keeps rejecting for an absurd number of draws,
    /// which would indicate an unsatisfiable constraint set.
    pub fn sample<R: Rng>(
        &self,
        rng: &mut R,
    ) -> (BTreeMap<Var, Rational>, StructureConstants) {
        for _ in 0..10_000 {
            let bindings: BTreeMap<Var, Rational> = self
                .params
                .iter()
                .map(|p| (*p, sample_rational(rng)))
                .collect();
            match self.make(&bindings) {
                Ok(sc) => return (bindings, sc),
                Err(FamilyError::DomainViolation { .. }) => continue,
                Err(e) => panic!("family {} sampling failed structurally: {e}", self.id),
            }
        }
        panic!("family {}: domain rejected 10000 consecutive samples", self.id);
    }
}

/// A random rational with numerator in `[-20, 20]` and denominator in
/// `[1, 10]`.
pub fn sample_rational<R: Rng>(rng: &mut R) -> Rational {
    let p = rng.gen_range(-20i64..=20);
    let q = rng.gen_range(1i64..=10);
    rat(p, q)
}

/// The three almost Hermitian classes a subfamily claim can target.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum HermClass {
    AlmostKahler,
    Integrable,
    Kahler,
}

impl HermClass {
    pub const ALL: [HermClass; 3] = [
        HermClass::AlmostKahler,
        HermClass::Integrable,
        HermClass::Kahler,
    ];

    /// Short label used in reports and on the command line.
    pub fn label(self) -> &'static str {
        match self {
            HermClass::AlmostKahler => "AK",
            HermClass::Integrable => "I",
            HermClass::Kahler => "K",
        }
    }
}

impl fmt::Display for HermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for HermClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// One chart of a parametrized subfamily locus: a substitution of the family
/// parameters by expressions in the branch's own free parameters.
#[derive(Clone, Debug)]
pub struct Branch {
    /// Human-readable description of the chart.
    pub label: String,
    /// Free parameters of the branch.
    pub params: Vec<Var>,
    /// Family parameters that get replaced; unlisted parameters are kept.
    pub map: Vec<(Var, Scalar)>,
    /// Extra conditions on the branch parameters beyond the substituted
    /// family domain.
    pub constraints: Vec<DomainConstraint>,
}

impl Branch {
    /// The substitution closure: mapped parameters go to their expressions,
    /// everything else to itself.
    pub fn substitution(&self) -> impl Fn(Var) -> Option<Scalar> + '_ {
        move |v: Var| {
            self.map
                .iter()
                .find(|(p, _)| *p == v)
                .map(|(_, e)| e.clone())
        }
    }
}

/// Where an emptiness certificate takes its solved equations from.
#[derive(Clone, Debug)]
pub enum SolveSpec {
    /// Each `(v, e)` pair must match one of the class equations up to a
    /// nonzero rational factor, as `c * (v - e)`.
    ClassLinear(Vec<(Var, Scalar)>),
    /// Reuse the substitution of the family's (separately verified)
    /// integrable claim, which must be parametrized by a single branch.
    IntegrabilityBranch,
}

/// A machine-checkable reason a subfamily locus is empty.
#[derive(Clone, Debug)]
pub enum EmptyCertificate {
    /// One class equation is a nonzero rational multiple of an expression
    /// the domain forces nonzero.
    EqualsNonzeroDomainExpr {
        /// Index into the class-equation list.
        class_eq: usize,
        /// Index into the family's constraint list; must be a `NonZero`
        /// constraint on the obstruction expression.
        domain_constraint: usize,
        scale: Rational,
    },
    /// After substituting the solved equations, a scalar combination of the
    /// class equations equals `scale` times a positive expression: a sum of
    /// even-power terms with positive coefficients, at least one of them a
    /// pure power of a parameter the domain keeps nonzero.
    SumOfSquares {
        solve: SolveSpec,
        /// Coefficient–index pairs forming `sum coeff * eqs[i]`.
        combine: Vec<(Scalar, usize)>,
        scale: Rational,
    },
    /// The solved class equations force a domain-nonzero expression to
    /// vanish identically.
    ForcesDomainZero {
        solve: SolveSpec,
        domain_constraint: usize,
    },
}

/// How a subfamily claim describes its locus.
#[derive(Clone, Debug)]
pub enum ClaimOutcome {
    /// Every point of the family lies in the class.
    Whole,
    /// The locus is the union of the given branches, cut out inside the
    /// family by the vanishing of `constraint_exprs`.
    Parametric {
        branches: Vec<Branch>,
        constraint_exprs: Vec<Scalar>,
    },
    /// No point of the family lies in the class.
    Empty {
        certificate: EmptyCertificate,
        /// The expression the certificate shows cannot vanish (or cannot
        /// stay nonzero), displayed in reports.
        obstruction: Scalar,
    },
}

impl ClaimOutcome {
    pub fn kind(&self) -> &'static str {
        match self {
            ClaimOutcome::Whole => "whole",
            ClaimOutcome::Parametric { .. } => "parametric",
            ClaimOutcome::Empty { .. } => "empty",
        }
    }
}

/// A claim about one almost Hermitian class inside one family.
#[derive(Clone, Debug)]
pub struct SubfamilyClaim {
    pub family: u8,
    pub class: HermClass,
    pub outcome: ClaimOutcome,
    pub notes: Vec<String>,
}

/// Deliberate catalog corruptions for exercising the verifier.
///
/// Each fault is a small, realistic transcription error; the verifier must
/// reject the corrupted catalog.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Fault {
    /// Flip the sign of `w2` in family 6.
    G6W2Sign,
    /// Drop the derived `theta2` entry of family 1.
    G1Theta2Drop,
    /// Set `r = z2` instead of `r = -z2` in family 4.
    G4RSign,
    /// Drop the derived `z1` entry of family 18.
    G18Z1Drop,
    /// Flip the sign of the derived `z3` entry of family 17.
    G17Z3Sign,
    /// Pin the wrong parameter in the almost Kähler branch of family 1.
    G1AkWrongBranch,
    /// Declare the Kähler subfamily of family 4 to be the whole family.
    G4KWhole,
}

impl Fault {
    pub const ALL: [Fault; 7] = [
        Fault::G6W2Sign,
        Fault::G1Theta2Drop,
        Fault::G4RSign,
        Fault::G18Z1Drop,
        Fault::G17Z3Sign,
        Fault::G1AkWrongBranch,
        Fault::G4KWhole,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Fault::G6W2Sign => "g6-w2-sign",
            Fault::G1Theta2Drop => "g1-theta2-drop",
            Fault::G4RSign => "g4-r-sign",
            Fault::G18Z1Drop => "g18-z1-drop",
            Fault::G17Z3Sign => "g17-z3-sign",
            Fault::G1AkWrongBranch => "g1-ak-wrong-branch",
            Fault::G4KWhole => "g4-k-whole",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Fault::G6W2Sign => "flips the sign of w2 in family 6",
            Fault::G1Theta2Drop => "zeroes the derived theta2 entry of family 1",
            Fault::G4RSign => "sets r = z2 instead of r = -z2 in family 4",
            Fault::G18Z1Drop => "zeroes the derived z1 entry of family 18",
            Fault::G17Z3Sign => "flips the sign of the derived z3 entry of family 17",
            Fault::G1AkWrongBranch => {
                "pins w2 instead of w1 in the almost Kähler branch of family 1"
            }
            Fault::G4KWhole => "claims the Kähler locus of family 4 is the whole family",
        }
    }
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Fault, String> {
        Fault::ALL
            .iter()
            .copied()
            .find(|f| f.id() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Fault::ALL.iter().map(|f| f.id()).collect();
                format!("unknown fault `{s}`; known faults: {}", known.join(", "))
            })
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The twenty families and their sixty subfamily claims.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub families: Vec<FamilySpec>,
    pub claims: Vec<SubfamilyClaim>,
}

impl Catalog {
    /// The standard catalog.
    pub fn standard() -> Catalog {
        catalog::standard()
    }

    /// The standard catalog with one deliberate corruption applied.
    pub fn with_fault(fault: Fault) -> Catalog {
        let mut cat = Catalog::standard();
        cat.apply_fault(fault);
        cat
    }

    fn apply_fault(&mut self, fault: Fault) {
        match fault {
            Fault::G6W2Sign => {
                let sc = &mut self.family_mut(6).sc;
                sc.w2 = sc.w2.neg();
            }
            Fault::G1Theta2Drop => {
                self.family_mut(1).sc.theta2 = Scalar::zero();
            }
            Fault::G4RSign => {
                self.family_mut(4).sc.r = Scalar::var("z2");
            }
            Fault::G18Z1Drop => {
                self.family_mut(18).sc.z1 = Scalar::zero();
            }
            Fault::G17Z3Sign => {
                let sc = &mut self.family_mut(17).sc;
                sc.z3 = sc.z3.neg();
            }
            Fault::G1AkWrongBranch => {
                let claim = self.claim_mut(1, HermClass::AlmostKahler);
                if let ClaimOutcome::Parametric { branches, .. } = &mut claim.outcome {
                    branches[0] = Branch {
                        label: "w2 = 0".to_string(),
                        params: vec![Var::new("lambda"), Var::new("r"), Var::new("w1")],
                        map: vec![(Var::new("w2"), Scalar::zero())],
                        constraints: Vec::new(),
                    };
                }
            }
            Fault::G4KWhole => {
                self.claim_mut(4, HermClass::Kahler).outcome = ClaimOutcome::Whole;
            }
        }
    }

    pub fn family(&self, id: u8) -> Result<&FamilySpec, FamilyError> {
        self.families
            .iter()
            .find(|f| f.id == id)
            .ok_or(FamilyError::UnknownFamily(id))
    }

    fn family_mut(&mut self, id: u8) -> &mut FamilySpec {
        self.families
            .iter_mut()
            .find(|f| f.id == id)
            .expect("catalog family ids are 1..=20")
    }

    pub fn claim(&self, family: u8, class: HermClass) -> Option<&SubfamilyClaim> {
        self.claims
            .iter()
            .find(|c| c.family == family && c.class == class)
    }

    fn claim_mut(&mut self, family: u8, class: HermClass) -> &mut SubfamilyClaim {
        self.claims
            .iter_mut()
            .find(|c| c.family == family && c.class == class)
            .expect("every family carries all three claims")
    }

    /// Instantiates a family at a parameter point.
    pub fn make_family(
        &self,
        id: u8,
        bindings: &BTreeMap<Var, Rational>,
    ) -> Result<StructureConstants, FamilyError> {
        self.family(id)?.make(bindings)
    }
}

/// The class equations of a family, as expressions in the family parameters.
///
/// For the almost Kähler class these are the two fundamental-form witnesses,
/// for the integrable class the two torsion witnesses, and for the Kähler
/// class all four in that order.
pub fn class_exprs(family: &FamilySpec, class: HermClass) -> Vec<Scalar> {
    let w = crate::hermitian::classify(&family.sc).witnesses;
    let ak = vec![w.theta1_minus_2a, w.theta2_plus_2alpha];
    let int = vec![w.two_z1_minus_z4_minus_w2, w.two_z2_plus_z3_plus_w1];
    match class {
        HermClass::AlmostKahler => ak,
        HermClass::Integrable => int,
        HermClass::Kahler => ak.into_iter().chain(int).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_twenty_families_and_sixty_claims() {
        let cat = Catalog::standard();
        assert_eq!(cat.families.len(), 20);
        assert_eq!(cat.claims.len(), 60);
        for (i, f) in cat.families.iter().enumerate() {
            assert_eq!(f.id as usize, i + 1);
            for class in HermClass::ALL {
                assert!(
                    cat.claim(f.id, class).is_some(),
                    "family {} lacks a {} claim",
                    f.id,
                    class
                );
            }
        }
    }

    #[test]
    fn family_cases_and_tags() {
        let cat = Catalog::standard();
        let case = |id: u8| cat.family(id).unwrap().case;
        assert_eq!(case(1), Case::A);
        assert_eq!(case(3), Case::A);
        assert_eq!(case(4), Case::B);
        assert_eq!(case(5), Case::C);
        assert_eq!(case(6), Case::D);
        assert_eq!(case(9), Case::D);
        assert_eq!(case(10), Case::E);
        assert_eq!(case(11), Case::F);
        assert_eq!(case(20), Case::F);
        assert_eq!(cat.family(13).unwrap().tag, "nilpotent");
        assert_eq!(cat.family(16).unwrap().tag, "not solvable in general");
        assert_eq!(cat.family(18).unwrap().tag, "not solvable in general");
        assert_eq!(cat.family(2).unwrap().tag, "solvable");
    }

    #[test]
    fn make_family_4_point() {
        let cat = Catalog::standard();
        let mut b = BTreeMap::new();
        b.insert(Var::new("lambda"), rat(1, 1));
        b.insert(Var::new("z2"), rat(1, 1));
        b.insert(Var::new("w1"), rat(2, 1));
        b.insert(Var::new("w2"), rat(0, 1));
        let sc = cat.make_family(4, &b).unwrap();
        // alpha = lambda, r = -z2, theta2 = -z2*w1/lambda.
        assert_eq!(sc.alpha, Scalar::int(1));
        assert_eq!(sc.r, Scalar::int(-1));
        assert_eq!(sc.theta2, Scalar::int(-2));
        let table = sc.to_bracket_table();
        assert_eq!(
            format!("{}", table.entry(crate::liealg::Z, crate::liealg::X)),
            "X + 2*W"
        );
        assert!(table.jacobi_holds_generic());
    }

    #[test]
    fn make_family_rejects_domain_violation() {
        let cat = Catalog::standard();
        // Family 5 requires alpha*b - a*beta != 0.
        let mut b = BTreeMap::new();
        b.insert(Var::new("alpha"), rat(1, 1));
        b.insert(Var::new("a"), rat(1, 1));
        b.insert(Var::new("beta"), rat(1, 1));
        b.insert(Var::new("b"), rat(1, 1));
        b.insert(Var::new("r"), rat(3, 1));
        match cat.make_family(5, &b) {
            Err(FamilyError::DomainViolation { family: 5, constraint }) => {
                assert!(constraint.contains("!= 0"), "constraint was {constraint}");
            }
            other => panic!("expected domain violation, got {other:?}"),
        }
    }

    #[test]
    fn make_family_reports_missing_binding() {
        let cat = Catalog::standard();
        let b = BTreeMap::new();
        match cat.make_family(13, &b) {
            Err(FamilyError::MissingBinding { family: 13, param }) => {
                assert!(param == "z3" || param == "z4" || param.starts_with("theta"));
            }
            other => panic!("expected missing binding, got {other:?}"),
        }
    }

    #[test]
    fn family_13_is_two_step_nilpotent_shape() {
        let cat = Catalog::standard();
        let mut b = BTreeMap::new();
        b.insert(Var::new("z3"), rat(1, 1));
        b.insert(Var::new("z4"), rat(0, 1));
        b.insert(Var::new("theta1"), rat(0, 1));
        b.insert(Var::new("theta2"), rat(0, 1));
        let sc = cat.make_family(13, &b).unwrap();
        let table = sc.to_bracket_table();
        // Only [W, X] = Z survives.
        assert_eq!(
            format!("{}", table.entry(crate::liealg::W, crate::liealg::X)),
            "Z"
        );
        assert!(table.entry(crate::liealg::Z, crate::liealg::X).is_zero());
        assert!(table.entry(crate::liealg::Y, crate::liealg::X).is_zero());
        assert!(table.jacobi_holds_generic());
    }

    #[test]
    fn sampling_respects_domains() {
        use rand::SeedableRng;
        let cat = Catalog::standard();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for fam in &cat.families {
            for _ in 0..5 {
                let (bindings, sc) = fam.sample(&mut rng);
                assert_eq!(bindings.len(), fam.arity());
                for c in &fam.constraints {
                    assert!(c.holds(&bindings).unwrap());
                }
                assert!(
                    sc.to_bracket_table().jacobi_holds_generic(),
                    "family {} sample is not a Lie algebra",
                    fam.id
                );
            }
        }
    }

    #[test]
    fn fault_round_trip_and_effect() {
        for f in Fault::ALL {
            assert_eq!(f.id().parse::<Fault>().unwrap(), f);
        }
        assert!("nonsense".parse::<Fault>().is_err());

        let good = Catalog::standard();
        let bad = Catalog::with_fault(Fault::G6W2Sign);
        assert_ne!(
            good.family(6).unwrap().sc.w2,
            bad.family(6).unwrap().sc.w2
        );
        let bad = Catalog::with_fault(Fault::G4KWhole);
        assert!(matches!(
            bad.claim(4, HermClass::Kahler).unwrap().outcome,
            ClaimOutcome::Whole
        ));
    }

    #[test]
    fn nonzero_var_detection() {
        let c = DomainConstraint::nonzero(Scalar::var("z3"));
        assert_eq!(c.nonzero_var(), Some(Var::new("z3")));
        let c = DomainConstraint::nonzero(Scalar::var("z3").mul(&Scalar::int(2)));
        assert_eq!(c.nonzero_var(), None);
        let c = DomainConstraint::positive(Scalar::var("z3"));
        assert_eq!(c.nonzero_var(), None);
    }
}
