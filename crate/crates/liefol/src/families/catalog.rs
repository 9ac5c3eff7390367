//! The standard catalog: twenty families and their sixty subfamily claims.
//!
//! Unlisted structure constants are zero.  Derived entries (those determined
//! by the closure conditions) are spelled out as rational expressions in the
//! free parameters, so instantiating a family at any in-domain point always
//! yields a Lie algebra.

use super::{
    Branch, Case, Catalog, ClaimOutcome, DomainConstraint, EmptyCertificate, FamilySpec,
    HermClass, SolveSpec, SubfamilyClaim,
};
use crate::liealg::StructureConstants;
use crate::scalar::{rat, Scalar, Var};

fn v(name: &str) -> Scalar {
    Scalar::var(name)
}

fn pv(names: &[&str]) -> Vec<Var> {
    names.iter().map(|n| Var::new(n)).collect()
}

fn nz(expr: Scalar) -> DomainConstraint {
    DomainConstraint::nonzero(expr)
}

fn notes(texts: &[&str]) -> Vec<String> {
    texts.iter().map(|t| t.to_string()).collect()
}

/// A branch whose label is generated from its substitution.
fn branch(params: &[&str], map: Vec<(&str, Scalar)>) -> Branch {
    let label = map
        .iter()
        .map(|(p, e)| format!("{p} = {e}"))
        .collect::<Vec<_>>()
        .join("; ");
    branch_labeled(&label, params, map, Vec::new())
}

fn branch_labeled(
    label: &str,
    params: &[&str],
    map: Vec<(&str, Scalar)>,
    constraints: Vec<DomainConstraint>,
) -> Branch {
    Branch {
        label: label.to_string(),
        params: pv(params),
        map: map.into_iter().map(|(p, e)| (Var::new(p), e)).collect(),
        constraints,
    }
}

fn parametric(
    family: u8,
    class: HermClass,
    branches: Vec<Branch>,
    constraint_exprs: Vec<Scalar>,
) -> SubfamilyClaim {
    SubfamilyClaim {
        family,
        class,
        outcome: ClaimOutcome::Parametric { branches, constraint_exprs },
        notes: Vec::new(),
    }
}

fn empty(
    family: u8,
    class: HermClass,
    certificate: EmptyCertificate,
    obstruction: Scalar,
) -> SubfamilyClaim {
    SubfamilyClaim {
        family,
        class,
        outcome: ClaimOutcome::Empty { certificate, obstruction },
        notes: Vec::new(),
    }
}

fn with_notes(mut claim: SubfamilyClaim, texts: &[&str]) -> SubfamilyClaim {
    claim.notes = notes(texts);
    claim
}

fn f1() -> FamilySpec {
    let (lambda, r, w1, w2) = (v("lambda"), v("r"), v("w1"), v("w2"));
    let theta2 = (&r * &w1).div(&lambda).expect("lambda is a nonzero scalar");
    FamilySpec {
        id: 1,
        case: Case::A,
        params: pv(&["lambda", "r", "w1", "w2"]),
        constraints: vec![nz(lambda.clone()), nz(r.clone())],
        sc: StructureConstants { lambda, r, w1, w2, theta2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f2() -> FamilySpec {
    let (lambda, alpha, beta, w1, w2) = (v("lambda"), v("alpha"), v("beta"), v("w1"), v("w2"));
    let separation = (&lambda - &alpha).pow(2) + beta.pow(2);
    FamilySpec {
        id: 2,
        case: Case::A,
        params: pv(&["lambda", "alpha", "beta", "w1", "w2"]),
        constraints: vec![nz(lambda.clone()), nz(separation)],
        sc: StructureConstants { lambda, alpha, beta, w1, w2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f3() -> FamilySpec {
    let (alpha, beta, w1, w2, theta2) = (v("alpha"), v("beta"), v("w1"), v("w2"), v("theta2"));
    let lambda = Scalar::int(-2) * &alpha;
    FamilySpec {
        id: 3,
        case: Case::A,
        params: pv(&["alpha", "beta", "w1", "w2", "theta2"]),
        constraints: vec![nz(alpha.clone()), nz(theta2.clone())],
        sc: StructureConstants { lambda, alpha, beta, w1, w2, theta2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f4() -> FamilySpec {
    let (lambda, z2, w1, w2) = (v("lambda"), v("z2"), v("w1"), v("w2"));
    let alpha = lambda.clone();
    let r = z2.neg();
    let theta2 = (&z2 * &w1).neg().div(&lambda).expect("lambda is a nonzero scalar");
    FamilySpec {
        id: 4,
        case: Case::B,
        params: pv(&["lambda", "z2", "w1", "w2"]),
        constraints: vec![nz(lambda.clone())],
        sc: StructureConstants {
            lambda,
            alpha,
            r,
            z2,
            w1,
            w2,
            theta2,
            ..StructureConstants::zero()
        },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f5() -> FamilySpec {
    let (alpha, a, beta, b, r) = (v("alpha"), v("a"), v("beta"), v("b"), v("r"));
    let det = &(&alpha * &b) - &(&a * &beta);
    let dd = Scalar::int(2) * &det;
    let div = |num: Scalar| num.div(&dd).expect("domain keeps the determinant nonzero");
    let z1 = div((&(&beta * &b) - &(&alpha * &a)).mul(&r).neg());
    let z2 = div((&(&alpha * &b) + &(&beta * &a)).mul(&r).neg());
    let z3 = div((b.pow(2) - a.pow(2)).mul(&r).neg());
    let z4 = div(Scalar::int(-2) * &(&(&r * &a) * &b));
    let w1 = div((alpha.pow(2) - beta.pow(2)).mul(&r).neg());
    let w2 = div(Scalar::int(2) * &(&(&r * &alpha) * &beta));
    let theta1 = div(&a * &r.pow(2));
    let theta2 = div((&alpha * &r.pow(2)).neg());
    FamilySpec {
        id: 5,
        case: Case::C,
        params: pv(&["alpha", "a", "beta", "b", "r"]),
        constraints: vec![nz(r.clone()), nz(det)],
        sc: StructureConstants {
            alpha,
            a,
            beta,
            b,
            r,
            z1,
            z2,
            z3,
            z4,
            w1,
            w2,
            theta1,
            theta2,
            ..StructureConstants::zero()
        },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f6() -> FamilySpec {
    let (z1, z2, z3, r) = (v("z1"), v("z2"), v("z3"), v("r"));
    let (theta1, theta2) = (v("theta1"), v("theta2"));
    let w1 = z1.pow(2).neg().div(&z3).expect("z3 is a nonzero scalar");
    let z4 = (&z3 * &(&r + &(Scalar::int(2) * &z2)))
        .div(&(Scalar::int(2) * &z1))
        .expect("z1 is a nonzero scalar");
    let w2 = (&z1 * &(&r - &(Scalar::int(2) * &z2)))
        .div(&(Scalar::int(2) * &z3))
        .expect("z3 is a nonzero scalar");
    FamilySpec {
        id: 6,
        case: Case::D,
        params: pv(&["z1", "z2", "z3", "r", "theta1", "theta2"]),
        constraints: vec![nz(z1.clone()), nz(z3.clone()), nz(r.clone())],
        sc: StructureConstants {
            r,
            z1,
            z2,
            z3,
            z4,
            w1,
            w2,
            theta1,
            theta2,
            ..StructureConstants::zero()
        },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f7() -> FamilySpec {
    let (z2, w1, w2, theta1, theta2) = (v("z2"), v("w1"), v("w2"), v("theta1"), v("theta2"));
    let r = Scalar::int(2) * &z2;
    FamilySpec {
        id: 7,
        case: Case::D,
        params: pv(&["z2", "w1", "w2", "theta1", "theta2"]),
        constraints: vec![nz(w1.clone()), nz(z2.clone())],
        sc: StructureConstants { r, z2, w1, w2, theta1, theta2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f8() -> FamilySpec {
    let (z2, z4, w2, r) = (v("z2"), v("z4"), v("w2"), v("r"));
    let (theta1, theta2) = (v("theta1"), v("theta2"));
    FamilySpec {
        id: 8,
        case: Case::D,
        params: pv(&["z2", "z4", "w2", "r", "theta1", "theta2"]),
        constraints: vec![nz(r.clone())],
        sc: StructureConstants { r, z2, z4, w2, theta1, theta2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f9() -> FamilySpec {
    let (z2, z3, z4, theta1, theta2) = (v("z2"), v("z3"), v("z4"), v("theta1"), v("theta2"));
    let r = Scalar::int(-2) * &z2;
    FamilySpec {
        id: 9,
        case: Case::D,
        params: pv(&["z2", "z3", "z4", "theta1", "theta2"]),
        constraints: vec![nz(z3.clone()), nz(z2.clone())],
        sc: StructureConstants { r, z2, z3, z4, theta1, theta2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f10() -> FamilySpec {
    let (alpha, a, beta, b) = (v("alpha"), v("a"), v("beta"), v("b"));
    let det = &(&alpha * &b) - &(&a * &beta);
    FamilySpec {
        id: 10,
        case: Case::E,
        params: pv(&["alpha", "a", "beta", "b"]),
        constraints: vec![nz(det)],
        sc: StructureConstants { alpha, a, beta, b, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f11() -> FamilySpec {
    let (z1, z2, z3, w1) = (v("z1"), v("z2"), v("z3"), v("w1"));
    let (theta1, theta2) = (v("theta1"), v("theta2"));
    let z4 = (&z2 * &z3).div(&z1).expect("z1 is a nonzero scalar");
    let w2 = (&z2 * &w1).div(&z1).expect("z1 is a nonzero scalar");
    FamilySpec {
        id: 11,
        case: Case::F,
        params: pv(&["z1", "z2", "z3", "w1", "theta1", "theta2"]),
        constraints: vec![nz(z1.clone())],
        sc: StructureConstants {
            z1,
            z2,
            z3,
            z4,
            w1,
            w2,
            theta1,
            theta2,
            ..StructureConstants::zero()
        },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f12() -> FamilySpec {
    let (z3, w1, w2, theta1, theta2) = (v("z3"), v("w1"), v("w2"), v("theta1"), v("theta2"));
    let z4 = (&z3 * &w2).div(&w1).expect("w1 is a nonzero scalar");
    FamilySpec {
        id: 12,
        case: Case::F,
        params: pv(&["z3", "w1", "w2", "theta1", "theta2"]),
        constraints: vec![nz(w1.clone())],
        sc: StructureConstants { z3, z4, w1, w2, theta1, theta2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f13() -> FamilySpec {
    let (z3, z4, theta1, theta2) = (v("z3"), v("z4"), v("theta1"), v("theta2"));
    FamilySpec {
        id: 13,
        case: Case::F,
        params: pv(&["z3", "z4", "theta1", "theta2"]),
        constraints: vec![nz(z3.clone())],
        sc: StructureConstants { z3, z4, theta1, theta2, ..StructureConstants::zero() },
        tag: "nilpotent",
        notes: Vec::new(),
    }
}

fn f14() -> FamilySpec {
    let (z2, z4, w2, theta1, theta2) = (v("z2"), v("z4"), v("w2"), v("theta1"), v("theta2"));
    FamilySpec {
        id: 14,
        case: Case::F,
        params: pv(&["z2", "z4", "w2", "theta1", "theta2"]),
        constraints: Vec::new(),
        sc: StructureConstants { z2, z4, w2, theta1, theta2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f15() -> FamilySpec {
    let (alpha, w1, w2) = (v("alpha"), v("w1"), v("w2"));
    FamilySpec {
        id: 15,
        case: Case::F,
        params: pv(&["alpha", "w1", "w2"]),
        constraints: vec![nz(alpha.clone())],
        sc: StructureConstants { alpha, w1, w2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f16() -> FamilySpec {
    let (beta, w1, w2, theta1, theta2) = (v("beta"), v("w1"), v("w2"), v("theta1"), v("theta2"));
    FamilySpec {
        id: 16,
        case: Case::F,
        params: pv(&["beta", "w1", "w2", "theta1", "theta2"]),
        constraints: vec![nz(beta.clone())],
        sc: StructureConstants { beta, w1, w2, theta1, theta2, ..StructureConstants::zero() },
        tag: "not solvable in general",
        notes: Vec::new(),
    }
}

fn f17() -> FamilySpec {
    let (alpha, a, w1, w2) = (v("alpha"), v("a"), v("w1"), v("w2"));
    let z1 = (&a * &w1).neg().div(&alpha).expect("alpha is a nonzero scalar");
    let z2 = (&a * &w2).neg().div(&alpha).expect("alpha is a nonzero scalar");
    let z3 = (&a.pow(2) * &w1).neg().div(&alpha.pow(2)).expect("alpha is a nonzero scalar");
    let z4 = (&a.pow(2) * &w2).neg().div(&alpha.pow(2)).expect("alpha is a nonzero scalar");
    FamilySpec {
        id: 17,
        case: Case::F,
        params: pv(&["alpha", "a", "w1", "w2"]),
        constraints: vec![nz(alpha.clone()), nz(a.clone())],
        sc: StructureConstants { alpha, a, z1, z2, z3, z4, w1, w2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f18() -> FamilySpec {
    let (beta, b, z3, z4) = (v("beta"), v("b"), v("z3"), v("z4"));
    let (theta1, theta2) = (v("theta1"), v("theta2"));
    let z1 = (&beta * &z3).div(&b).expect("b is a nonzero scalar");
    let z2 = (&beta * &z4).div(&b).expect("b is a nonzero scalar");
    let w1 = (&beta.pow(2) * &z3).neg().div(&b.pow(2)).expect("b is a nonzero scalar");
    let w2 = (&beta.pow(2) * &z4).neg().div(&b.pow(2)).expect("b is a nonzero scalar");
    FamilySpec {
        id: 18,
        case: Case::F,
        params: pv(&["beta", "b", "z3", "z4", "theta1", "theta2"]),
        constraints: vec![nz(beta.clone()), nz(b.clone())],
        sc: StructureConstants {
            beta,
            b,
            z1,
            z2,
            z3,
            z4,
            w1,
            w2,
            theta1,
            theta2,
            ..StructureConstants::zero()
        },
        tag: "not solvable in general",
        notes: Vec::new(),
    }
}

fn f19() -> FamilySpec {
    let (alpha, beta, w1, w2) = (v("alpha"), v("beta"), v("w1"), v("w2"));
    FamilySpec {
        id: 19,
        case: Case::F,
        params: pv(&["alpha", "beta", "w1", "w2"]),
        constraints: vec![nz(alpha.clone()), nz(beta.clone())],
        sc: StructureConstants { alpha, beta, w1, w2, ..StructureConstants::zero() },
        tag: "solvable",
        notes: Vec::new(),
    }
}

fn f20() -> FamilySpec {
    let (alpha, a, beta, w1, w2) = (v("alpha"), v("a"), v("beta"), v("w1"), v("w2"));
    let b = (&beta * &a).div(&alpha).expect("alpha is a nonzero scalar");
    let z1 = (&a * &w1).neg().div(&alpha).expect("alpha is a nonzero scalar");
    let z2 = (&a * &w2).neg().div(&alpha).expect("alpha is a nonzero scalar");
    let z3 = (&a.pow(2) * &w1).neg().div(&alpha.pow(2)).expect("alpha is a nonzero scalar");
    let z4 = (&a.pow(2) * &w2).neg().div(&alpha.pow(2)).expect("alpha is a nonzero scalar");
    FamilySpec {
        id: 20,
        case: Case::F,
        params: pv(&["alpha", "a", "beta", "w1", "w2"]),
        constraints: vec![nz(alpha.clone()), nz(a.clone()), nz(beta.clone())],
        sc: StructureConstants {
            alpha,
            a,
            beta,
            b,
            z1,
            z2,
            z3,
            z4,
            w1,
            w2,
            ..StructureConstants::zero()
        },
        tag: "solvable",
        notes: Vec::new(),
    }
}

/// `2 * alpha` as an obstruction against a domain with `alpha != 0`: the
/// certificate shared by the empty almost Kähler and Kähler loci of the
/// families whose fundamental-form witness collapses to `2 * alpha`.
fn alpha_obstruction(family: u8, class: HermClass) -> SubfamilyClaim {
    let note = match class {
        HermClass::AlmostKahler => "theta2 + 2*alpha reduces to 2*alpha, nonzero on the domain",
        _ => "inherits the almost Kähler obstruction",
    };
    with_notes(
        empty(
            family,
            class,
            EmptyCertificate::EqualsNonzeroDomainExpr {
                class_eq: 1,
                domain_constraint: 0,
                scale: rat(2, 1),
            },
            v("alpha"),
        ),
        &[note],
    )
}

fn claims() -> Vec<SubfamilyClaim> {
    use HermClass::{AlmostKahler, Integrable, Kahler};
    let zero = Scalar::zero;
    let mut out = Vec::with_capacity(60);

    // Family 1.
    out.push(parametric(
        1,
        AlmostKahler,
        vec![branch(&["lambda", "r", "w2"], vec![("w1", zero())])],
        vec![v("w1")],
    ));
    out.push(parametric(
        1,
        Integrable,
        vec![branch(&["lambda", "r"], vec![("w1", zero()), ("w2", zero())])],
        vec![v("w1"), v("w2")],
    ));
    out.push(parametric(
        1,
        Kahler,
        vec![branch(&["lambda", "r"], vec![("w1", zero()), ("w2", zero())])],
        vec![v("w1"), v("w2")],
    ));

    // Family 2.
    out.push(parametric(
        2,
        AlmostKahler,
        vec![branch(&["lambda", "beta", "w1", "w2"], vec![("alpha", zero())])],
        vec![v("alpha")],
    ));
    out.push(parametric(
        2,
        Integrable,
        vec![branch(&["lambda", "alpha", "beta"], vec![("w1", zero()), ("w2", zero())])],
        vec![v("w1"), v("w2")],
    ));
    out.push(parametric(
        2,
        Kahler,
        vec![branch(
            &["lambda", "beta"],
            vec![("alpha", zero()), ("w1", zero()), ("w2", zero())],
        )],
        vec![v("alpha"), v("w1"), v("w2")],
    ));

    // Family 3.
    let minus_2alpha = Scalar::int(-2) * &v("alpha");
    out.push(parametric(
        3,
        AlmostKahler,
        vec![branch(&["alpha", "beta", "w1", "w2"], vec![("theta2", minus_2alpha.clone())])],
        vec![v("theta2") + Scalar::int(2) * &v("alpha")],
    ));
    out.push(parametric(
        3,
        Integrable,
        vec![branch(&["alpha", "beta", "theta2"], vec![("w1", zero()), ("w2", zero())])],
        vec![v("w1"), v("w2")],
    ));
    out.push(parametric(
        3,
        Kahler,
        vec![branch(
            &["alpha", "beta"],
            vec![("theta2", minus_2alpha), ("w1", zero()), ("w2", zero())],
        )],
        vec![v("theta2") + Scalar::int(2) * &v("alpha"), v("w1"), v("w2")],
    ));

    // Family 4.
    let two_lambda2_over_z2 = (Scalar::int(2) * &v("lambda").pow(2))
        .div(&v("z2"))
        .expect("z2 is a nonzero scalar");
    out.push(parametric(
        4,
        AlmostKahler,
        vec![branch_labeled(
            &format!("w1 = {two_lambda2_over_z2}"),
            &["lambda", "z2", "w2"],
            vec![("w1", two_lambda2_over_z2)],
            vec![nz(v("z2"))],
        )],
        vec![&(&v("w1") * &v("z2")) - &(Scalar::int(2) * &v("lambda").pow(2))],
    ));
    let minus_2z2 = Scalar::int(-2) * &v("z2");
    out.push(parametric(
        4,
        Integrable,
        vec![branch(&["lambda", "z2"], vec![("w1", minus_2z2.clone()), ("w2", zero())])],
        vec![Scalar::int(2) * &v("z2") + v("w1"), v("w2")],
    ));
    out.push(with_notes(
        empty(
            4,
            Kahler,
            EmptyCertificate::SumOfSquares {
                solve: SolveSpec::IntegrabilityBranch,
                combine: vec![(v("lambda"), 1)],
                scale: rat(2, 1),
            },
            v("lambda").pow(2) + v("z2").pow(2),
        ),
        &["on the integrable slice the remaining condition reads 2*(lambda^2 + z2^2) = 0"],
    ));

    // Family 5.
    let b_solved = (v("r").pow(2) + Scalar::int(4) * &(&v("a") * &v("beta")))
        .div(&(Scalar::int(4) * &v("alpha")))
        .expect("alpha is a nonzero scalar");
    let beta_solved = (Scalar::int(4) * &(&v("alpha") * &v("b")) - v("r").pow(2))
        .div(&(Scalar::int(4) * &v("a")))
        .expect("a is a nonzero scalar");
    out.push(with_notes(
        parametric(
            5,
            AlmostKahler,
            vec![
                branch_labeled(
                    "chart alpha != 0",
                    &["alpha", "a", "beta", "r"],
                    vec![("b", b_solved)],
                    vec![nz(v("alpha"))],
                ),
                branch_labeled(
                    "chart a != 0",
                    &["alpha", "a", "b", "r"],
                    vec![("beta", beta_solved)],
                    vec![nz(v("a"))],
                ),
            ],
            vec![
                v("r").pow(2) - Scalar::int(4) * &(&v("alpha") * &v("b"))
                    + Scalar::int(4) * &(&v("a") * &v("beta")),
            ],
        ),
        &[
            "the locus r^2 = 4*(alpha*b - a*beta) is covered by two charts, one solving \
             for b where alpha != 0 and one solving for beta where a != 0; the sign of r \
             picks the square-root branch",
        ],
    ));
    out.push(parametric(
        5,
        Integrable,
        vec![branch(
            &["alpha", "beta", "r"],
            vec![("a", v("beta")), ("b", v("alpha").neg())],
        )],
        vec![&v("a") - &v("beta"), &v("b") + &v("alpha")],
    ));
    out.push(with_notes(
        empty(
            5,
            Kahler,
            EmptyCertificate::SumOfSquares {
                solve: SolveSpec::IntegrabilityBranch,
                combine: vec![(v("a"), 0), (v("alpha").neg(), 1)],
                scale: rat(-1, 2),
            },
            v("r").pow(2)
                + Scalar::int(4) * &v("alpha").pow(2)
                + Scalar::int(4) * &v("beta").pow(2),
        ),
        &[
            "on the integrable slice the almost Kähler conditions combine to \
             -(r^2 + 4*alpha^2 + 4*beta^2)/2 = 0, impossible with r != 0",
        ],
    ));

    // Family 6.
    let r_solved = (v("z1").pow(2) + v("z3").pow(2))
        .div(&v("z3"))
        .expect("z3 is a nonzero scalar");
    let z2_solved = (v("z1").pow(2) - v("z3").pow(2))
        .div(&(Scalar::int(2) * &v("z3")))
        .expect("z3 is a nonzero scalar");
    out.push(parametric(
        6,
        AlmostKahler,
        vec![branch(
            &["z1", "z2", "z3", "r"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(parametric(
        6,
        Integrable,
        vec![branch(
            &["z1", "z3", "theta1", "theta2"],
            vec![("r", r_solved.clone()), ("z2", z2_solved.clone())],
        )],
        vec![
            &(&v("r") * &v("z3")) - &(v("z1").pow(2) + v("z3").pow(2)),
            Scalar::int(2) * &(&v("z2") * &v("z3")) - v("z1").pow(2) + v("z3").pow(2),
        ],
    ));
    out.push(parametric(
        6,
        Kahler,
        vec![branch(
            &["z1", "z3"],
            vec![
                ("r", r_solved),
                ("z2", z2_solved),
                ("theta1", zero()),
                ("theta2", zero()),
            ],
        )],
        vec![
            v("theta1"),
            v("theta2"),
            &(&v("r") * &v("z3")) - &(v("z1").pow(2) + v("z3").pow(2)),
            Scalar::int(2) * &(&v("z2") * &v("z3")) - v("z1").pow(2) + v("z3").pow(2),
        ],
    ));

    // Family 7.
    out.push(parametric(
        7,
        AlmostKahler,
        vec![branch(
            &["z2", "w1", "w2"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(parametric(
        7,
        Integrable,
        vec![branch(
            &["z2", "theta1", "theta2"],
            vec![("w1", Scalar::int(-2) * &v("z2")), ("w2", zero())],
        )],
        vec![Scalar::int(2) * &v("z2") + v("w1"), v("w2")],
    ));
    out.push(parametric(
        7,
        Kahler,
        vec![branch(
            &["z2"],
            vec![
                ("w1", Scalar::int(-2) * &v("z2")),
                ("w2", zero()),
                ("theta1", zero()),
                ("theta2", zero()),
            ],
        )],
        vec![
            v("theta1"),
            v("theta2"),
            Scalar::int(2) * &v("z2") + v("w1"),
            v("w2"),
        ],
    ));

    // Family 8.
    out.push(parametric(
        8,
        AlmostKahler,
        vec![branch(
            &["z2", "z4", "w2", "r"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(parametric(
        8,
        Integrable,
        vec![branch(
            &["w2", "r", "theta1", "theta2"],
            vec![("z2", zero()), ("z4", v("w2").neg())],
        )],
        vec![v("z2"), &v("z4") + &v("w2")],
    ));
    out.push(parametric(
        8,
        Kahler,
        vec![branch(
            &["w2", "r"],
            vec![
                ("z2", zero()),
                ("z4", v("w2").neg()),
                ("theta1", zero()),
                ("theta2", zero()),
            ],
        )],
        vec![v("theta1"), v("theta2"), v("z2"), &v("z4") + &v("w2")],
    ));

    // Family 9.
    out.push(parametric(
        9,
        AlmostKahler,
        vec![branch(
            &["z2", "z3", "z4"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(parametric(
        9,
        Integrable,
        vec![branch(
            &["z2", "theta1", "theta2"],
            vec![("z3", Scalar::int(-2) * &v("z2")), ("z4", zero())],
        )],
        vec![Scalar::int(2) * &v("z2") + v("z3"), v("z4")],
    ));
    out.push(parametric(
        9,
        Kahler,
        vec![branch(
            &["z2"],
            vec![
                ("z3", Scalar::int(-2) * &v("z2")),
                ("z4", zero()),
                ("theta1", zero()),
                ("theta2", zero()),
            ],
        )],
        vec![
            v("theta1"),
            v("theta2"),
            Scalar::int(2) * &v("z2") + v("z3"),
            v("z4"),
        ],
    ));

    // Family 10.
    let det = &(&v("alpha") * &v("b")) - &(&v("a") * &v("beta"));
    out.push(with_notes(
        empty(
            10,
            AlmostKahler,
            EmptyCertificate::ForcesDomainZero {
                solve: SolveSpec::ClassLinear(vec![
                    (Var::new("a"), zero()),
                    (Var::new("alpha"), zero()),
                ]),
                domain_constraint: 0,
            },
            det.clone(),
        ),
        &["the almost Kähler conditions force alpha = a = 0, collapsing alpha*b - a*beta"],
    ));
    out.push(with_notes(
        SubfamilyClaim {
            family: 10,
            class: Integrable,
            outcome: ClaimOutcome::Whole,
            notes: Vec::new(),
        },
        &["every bracket component pairing the leaf and horizontal directions vanishes"],
    ));
    out.push(with_notes(
        empty(
            10,
            Kahler,
            EmptyCertificate::ForcesDomainZero {
                solve: SolveSpec::ClassLinear(vec![
                    (Var::new("a"), zero()),
                    (Var::new("alpha"), zero()),
                ]),
                domain_constraint: 0,
            },
            det,
        ),
        &["the almost Kähler conditions force alpha = a = 0, collapsing alpha*b - a*beta"],
    ));

    // Family 11.
    let w1_solved = Scalar::int(-2) * &v("z2") - v("z3");
    out.push(parametric(
        11,
        AlmostKahler,
        vec![branch(
            &["z1", "z2", "z3", "w1"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(with_notes(
        empty(
            11,
            Integrable,
            EmptyCertificate::SumOfSquares {
                solve: SolveSpec::ClassLinear(vec![(Var::new("w1"), w1_solved.clone())]),
                combine: vec![(v("z1"), 0)],
                scale: rat(2, 1),
            },
            v("z1").pow(2) + v("z2").pow(2),
        ),
        &["the two integrability conditions combine to 2*(z1^2 + z2^2) = 0, impossible with z1 != 0"],
    ));
    out.push(with_notes(
        empty(
            11,
            Kahler,
            EmptyCertificate::SumOfSquares {
                solve: SolveSpec::ClassLinear(vec![(Var::new("w1"), w1_solved)]),
                combine: vec![(v("z1"), 2)],
                scale: rat(2, 1),
            },
            v("z1").pow(2) + v("z2").pow(2),
        ),
        &["empty because the integrable locus is already empty"],
    ));

    // Family 12.
    out.push(parametric(
        12,
        AlmostKahler,
        vec![branch(
            &["z3", "w1", "w2"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(parametric(
        12,
        Integrable,
        vec![branch(
            &["w1", "w2", "theta1", "theta2"],
            vec![("z3", v("w1").neg())],
        )],
        vec![&v("z3") + &v("w1")],
    ));
    out.push(parametric(
        12,
        Kahler,
        vec![branch(
            &["w1", "w2"],
            vec![("z3", v("w1").neg()), ("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2"), &v("z3") + &v("w1")],
    ));

    // Family 13.
    out.push(parametric(
        13,
        AlmostKahler,
        vec![branch(&["z3", "z4"], vec![("theta1", zero()), ("theta2", zero())])],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(with_notes(
        empty(
            13,
            Integrable,
            EmptyCertificate::EqualsNonzeroDomainExpr {
                class_eq: 1,
                domain_constraint: 0,
                scale: rat(1, 1),
            },
            v("z3"),
        ),
        &["integrability forces z3 = 0, which the domain excludes"],
    ));
    out.push(with_notes(
        empty(
            13,
            Kahler,
            EmptyCertificate::EqualsNonzeroDomainExpr {
                class_eq: 3,
                domain_constraint: 0,
                scale: rat(1, 1),
            },
            v("z3"),
        ),
        &["integrability forces z3 = 0, which the domain excludes"],
    ));

    // Family 14.
    out.push(parametric(
        14,
        AlmostKahler,
        vec![branch(
            &["z2", "z4", "w2"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(parametric(
        14,
        Integrable,
        vec![branch(
            &["w2", "theta1", "theta2"],
            vec![("z2", zero()), ("z4", v("w2").neg())],
        )],
        vec![v("z2"), &v("z4") + &v("w2")],
    ));
    out.push(parametric(
        14,
        Kahler,
        vec![branch(
            &["w2"],
            vec![
                ("z2", zero()),
                ("z4", v("w2").neg()),
                ("theta1", zero()),
                ("theta2", zero()),
            ],
        )],
        vec![v("theta1"), v("theta2"), v("z2"), &v("z4") + &v("w2")],
    ));

    // Family 15.
    out.push(alpha_obstruction(15, AlmostKahler));
    out.push(parametric(
        15,
        Integrable,
        vec![branch(&["alpha"], vec![("w1", zero()), ("w2", zero())])],
        vec![v("w1"), v("w2")],
    ));
    out.push(alpha_obstruction(15, Kahler));

    // Family 16.
    out.push(parametric(
        16,
        AlmostKahler,
        vec![branch(
            &["beta", "w1", "w2"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(parametric(
        16,
        Integrable,
        vec![branch(
            &["beta", "theta1", "theta2"],
            vec![("w1", zero()), ("w2", zero())],
        )],
        vec![v("w1"), v("w2")],
    ));
    out.push(parametric(
        16,
        Kahler,
        vec![branch(
            &["beta"],
            vec![
                ("w1", zero()),
                ("w2", zero()),
                ("theta1", zero()),
                ("theta2", zero()),
            ],
        )],
        vec![v("theta1"), v("theta2"), v("w1"), v("w2")],
    ));

    // Family 17.
    out.push(alpha_obstruction(17, AlmostKahler));
    out.push(with_notes(
        parametric(
            17,
            Integrable,
            vec![branch(&["alpha", "a"], vec![("w1", zero()), ("w2", zero())])],
            vec![v("w1"), v("w2")],
        ),
        &["the integrable locus is exactly the slice w1 = w2 = 0"],
    ));
    out.push(alpha_obstruction(17, Kahler));

    // Family 18.
    out.push(parametric(
        18,
        AlmostKahler,
        vec![branch(
            &["beta", "b", "z3", "z4"],
            vec![("theta1", zero()), ("theta2", zero())],
        )],
        vec![v("theta1"), v("theta2")],
    ));
    out.push(parametric(
        18,
        Integrable,
        vec![branch(
            &["beta", "b", "theta1", "theta2"],
            vec![("z3", zero()), ("z4", zero())],
        )],
        vec![v("z3"), v("z4")],
    ));
    out.push(parametric(
        18,
        Kahler,
        vec![branch(
            &["beta", "b"],
            vec![
                ("z3", zero()),
                ("z4", zero()),
                ("theta1", zero()),
                ("theta2", zero()),
            ],
        )],
        vec![v("theta1"), v("theta2"), v("z3"), v("z4")],
    ));

    // Family 19.
    out.push(alpha_obstruction(19, AlmostKahler));
    out.push(with_notes(
        parametric(
            19,
            Integrable,
            vec![branch(&["alpha", "beta"], vec![("w1", zero()), ("w2", zero())])],
            vec![v("w1"), v("w2")],
        ),
        &["the integrable locus is exactly the slice w1 = w2 = 0"],
    ));
    out.push(alpha_obstruction(19, Kahler));

    // Family 20.
    out.push(alpha_obstruction(20, AlmostKahler));
    out.push(parametric(
        20,
        Integrable,
        vec![branch(&["alpha", "a", "beta"], vec![("w1", zero()), ("w2", zero())])],
        vec![v("w1"), v("w2")],
    ));
    out.push(alpha_obstruction(20, Kahler));

    out
}

pub(super) fn standard() -> Catalog {
    Catalog {
        families: vec![
            f1(),
            f2(),
            f3(),
            f4(),
            f5(),
            f6(),
            f7(),
            f8(),
            f9(),
            f10(),
            f11(),
            f12(),
            f13(),
            f14(),
            f15(),
            f16(),
            f17(),
            f18(),
            f19(),
            f20(),
        ],
        claims: claims(),
    }
}
