//! Acceptance gate: one test per criterion, each printing a pass line and
//! enforcing its time budget.
//!
//! 1. Every catalog family satisfies the closure conditions symbolically.
//! 2. On >= 1000 sampled structure-constant tables, the fundamental form is
//!    closed exactly when theta1 = 2a and theta2 = -2*alpha, and the torsion
//!    vanishes exactly when 2*z1 = z4 + w2 and 2*z2 = -(z3 + w1).
//! 3. The displayed symbolic formulas hold on fully generic constants.
//! 4. All sixty subfamily claims verify, with the advertised parameter
//!    counts per branch.
//! 5. On >= 1000 samples the horizontal second fundamental form is
//!    g-proportional to alpha Z + a W, the vertical trace vanishes, and the
//!    direct foliation flags agree with the connection-derived ones.
//! 6. The leaf curvature is -lambda^2.
//! 7. On >= 1000 samples the fourteen-equation closure system agrees with
//!    the sixteen-component generic Jacobi residuals.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use liefol::families::verify::{verify_catalog, verify_family, VerifyOptions};
use liefol::families::{Catalog, HermClass};
use liefol::geometry::{
    foliation_flags, foliation_flags_from_connection, gaussian_curvature_k, levi_civita,
    second_fundamental,
};
use liefol::hermitian::{classify, d_omega_basis, nijenhuis_basis, PAIRS};
use liefol::liealg::{StructureConstants, Vector4, PARAM_NAMES, TRIPLES, W, X, Y, Z};
use liefol::scalar::{rat, Scalar, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn finish(criterion: u32, budget: Duration, started: Instant, detail: &str) {
    let elapsed = started.elapsed();
    println!("[criterion {criterion}] PASS in {elapsed:.2?}: {detail}");
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn sample_rational(rng: &mut ChaCha8Rng) -> liefol::Rational {
    rat(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=10))
}

/// A table with every structure constant drawn at random (usually not a Lie
/// algebra).
fn random_constants(rng: &mut ChaCha8Rng) -> StructureConstants {
    let mut sc = StructureConstants::zero();
    for name in PARAM_NAMES {
        *sc.field_mut(name).unwrap() = Scalar::Rat(sample_rational(rng));
    }
    sc
}

#[test]
fn criterion_1_families_close_symbolically() {
    let started = Instant::now();
    let catalog = Catalog::standard();
    assert_eq!(catalog.families.len(), 20);
    for family in &catalog.families {
        let report = verify_family(family);
        assert!(
            report.ok(),
            "family {} fails closure: {:?}",
            family.id,
            report.failures
        );
        assert!(family.sc.is_lie_algebra());
        assert!(family.sc.to_bracket_table().jacobi_holds_generic());
    }
    finish(1, Duration::from_secs(10), started, "all 20 families satisfy closure symbolically");
}

#[test]
fn criterion_2_class_conditions_match_invariants() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let catalog = Catalog::standard();
    let mut batch: Vec<StructureConstants> = Vec::new();
    for _ in 0..400 {
        batch.push(random_constants(&mut rng));
    }
    for _ in 0..200 {
        // Conditioned to satisfy the closed-form conditions.
        let mut sc = random_constants(&mut rng);
        sc.theta1 = Scalar::int(2).mul(&sc.a);
        sc.theta2 = Scalar::int(-2).mul(&sc.alpha);
        batch.push(sc);
    }
    for _ in 0..200 {
        // Conditioned to satisfy the torsion-free conditions.
        let mut sc = random_constants(&mut rng);
        sc.z4 = Scalar::int(2).mul(&sc.z1).sub(&sc.w2);
        sc.z3 = Scalar::int(-2).mul(&sc.z2).sub(&sc.w1);
        batch.push(sc);
    }
    for i in 0..240 {
        let family = &catalog.families[i % catalog.families.len()];
        let (_, sc) = family.sample(&mut rng);
        batch.push(sc);
    }
    assert!(batch.len() >= 1000);

    for sc in &batch {
        let t = sc.to_bracket_table();
        let res = classify(sc);
        let d_omega_zero = TRIPLES.iter().all(|&tr| d_omega_basis(&t, tr).is_zero());
        assert_eq!(
            d_omega_zero, res.almost_kahler,
            "closedness of the fundamental form disagrees with the conditions on {sc:?}"
        );
        let nijenhuis_zero = PAIRS.iter().all(|&p| nijenhuis_basis(&t, p).is_zero());
        assert_eq!(
            nijenhuis_zero, res.integrable,
            "torsion vanishing disagrees with the conditions on {sc:?}"
        );
        assert_eq!(res.kahler, res.almost_kahler && res.integrable);
    }
    finish(
        2,
        Duration::from_secs(5),
        started,
        "closedness and torsion conditions match on 1040 sampled tables",
    );
}

#[test]
fn criterion_3_symbolic_formulas() {
    let started = Instant::now();
    let sc = StructureConstants::generic();
    let t = sc.to_bracket_table();

    let minus = |e: &Scalar| e.neg();
    let theta2_plus_2alpha = sc.theta2.add(&Scalar::int(2).mul(&sc.alpha));
    let theta1_minus_2a = sc.theta1.sub(&Scalar::int(2).mul(&sc.a));
    assert_eq!(d_omega_basis(&t, (X, Y, Z)), minus(&theta2_plus_2alpha));
    assert_eq!(d_omega_basis(&t, (X, Y, W)), theta1_minus_2a);
    assert!(d_omega_basis(&t, (X, Z, W)).is_zero());
    assert!(d_omega_basis(&t, (Y, Z, W)).is_zero());

    let n_xz = nijenhuis_basis(&t, (X, Z));
    let c1 = Scalar::int(2).mul(&sc.z1).sub(&sc.z4).sub(&sc.w2);
    let c2 = Scalar::int(2).mul(&sc.z2).add(&sc.z3).add(&sc.w1);
    let expected = Vector4::new([Scalar::zero(), Scalar::zero(), c1.neg(), c2.neg()]);
    assert_eq!(n_xz, expected);
    assert!(nijenhuis_basis(&t, (X, Y)).is_zero());
    assert!(nijenhuis_basis(&t, (Z, W)).is_zero());

    let form = second_fundamental(&levi_civita(&t));
    let mean = Vector4::new([Scalar::zero(), Scalar::zero(), sc.alpha.clone(), sc.a.clone()]);
    assert_eq!(form.h_xx, mean);
    assert_eq!(form.h_yy, mean);
    assert!(form.h_xy.is_zero());
    assert!(form.vertical_trace().is_zero());
    assert_eq!(form.conformal_witness().unwrap(), mean);

    finish(
        3,
        Duration::from_secs(1),
        started,
        "generic-table formulas for the fundamental form, torsion, and second fundamental form",
    );
}

#[test]
fn criterion_4_all_claims_verify_with_advertised_arities() {
    let started = Instant::now();
    let catalog = Catalog::standard();
    let report = verify_catalog(&catalog, &VerifyOptions::default());
    for claim in &report.claims {
        assert!(
            claim.ok(),
            "claim ({}, {:?}) failed: {:?}",
            claim.family,
            claim.class,
            claim.failures
        );
    }
    assert!(report.ok);
    assert_eq!(report.claims.len(), 60);

    // (family, class, outcome kind, free parameters per branch)
    #[rustfmt::skip]
    let expected: &[(u8, HermClass, &str, &[usize])] = &[
        (1, HermClass::AlmostKahler, "parametric", &[3]),
        (1, HermClass::Integrable, "parametric", &[2]),
        (1, HermClass::Kahler, "parametric", &[2]),
        (2, HermClass::AlmostKahler, "parametric", &[4]),
        (2, HermClass::Integrable, "parametric", &[3]),
        (2, HermClass::Kahler, "parametric", &[2]),
        (3, HermClass::AlmostKahler, "parametric", &[4]),
        (3, HermClass::Integrable, "parametric", &[3]),
        (3, HermClass::Kahler, "parametric", &[2]),
        (4, HermClass::AlmostKahler, "parametric", &[3]),
        (4, HermClass::Integrable, "parametric", &[2]),
        (4, HermClass::Kahler, "empty", &[]),
        (5, HermClass::AlmostKahler, "parametric", &[4, 4]),
        (5, HermClass::Integrable, "parametric", &[3]),
        (5, HermClass::Kahler, "empty", &[]),
        (6, HermClass::AlmostKahler, "parametric", &[4]),
        (6, HermClass::Integrable, "parametric", &[4]),
        (6, HermClass::Kahler, "parametric", &[2]),
        (7, HermClass::AlmostKahler, "parametric", &[3]),
        (7, HermClass::Integrable, "parametric", &[3]),
        (7, HermClass::Kahler, "parametric", &[1]),
        (8, HermClass::AlmostKahler, "parametric", &[4]),
        (8, HermClass::Integrable, "parametric", &[4]),
        (8, HermClass::Kahler, "parametric", &[2]),
        (9, HermClass::AlmostKahler, "parametric", &[3]),
        (9, HermClass::Integrable, "parametric", &[3]),
        (9, HermClass::Kahler, "parametric", &[1]),
        (10, HermClass::AlmostKahler, "empty", &[]),
        (10, HermClass::Integrable, "whole", &[]),
        (10, HermClass::Kahler, "empty", &[]),
        (11, HermClass::AlmostKahler, "parametric", &[4]),
        (11, HermClass::Integrable, "empty", &[]),
        (11, HermClass::Kahler, "empty", &[]),
        (12, HermClass::AlmostKahler, "parametric", &[3]),
        (12, HermClass::Integrable, "parametric", &[4]),
        (12, HermClass::Kahler, "parametric", &[2]),
        (13, HermClass::AlmostKahler, "parametric", &[2]),
        (13, HermClass::Integrable, "empty", &[]),
        (13, HermClass::Kahler, "empty", &[]),
        (14, HermClass::AlmostKahler, "parametric", &[3]),
        (14, HermClass::Integrable, "parametric", &[3]),
        (14, HermClass::Kahler, "parametric", &[1]),
        (15, HermClass::AlmostKahler, "empty", &[]),
        (15, HermClass::Integrable, "parametric", &[1]),
        (15, HermClass::Kahler, "empty", &[]),
        (16, HermClass::AlmostKahler, "parametric", &[3]),
        (16, HermClass::Integrable, "parametric", &[3]),
        (16, HermClass::Kahler, "parametric", &[1]),
        (17, HermClass::AlmostKahler, "empty", &[]),
        (17, HermClass::Integrable, "parametric", &[2]),
        (17, HermClass::Kahler, "empty", &[]),
        (18, HermClass::AlmostKahler, "parametric", &[4]),
        (18, HermClass::Integrable, "parametric", &[4]),
        (18, HermClass::Kahler, "parametric", &[2]),
        (19, HermClass::AlmostKahler, "empty", &[]),
        (19, HermClass::Integrable, "parametric", &[2]),
        (19, HermClass::Kahler, "empty", &[]),
        (20, HermClass::AlmostKahler, "empty", &[]),
        (20, HermClass::Integrable, "parametric", &[3]),
        (20, HermClass::Kahler, "empty", &[]),
    ];
    assert_eq!(expected.len(), 60);
    for (family, class, kind, arities) in expected {
        let got = report
            .claims
            .iter()
            .find(|c| c.family == *family && c.class == Some(*class))
            .unwrap_or_else(|| panic!("missing claim report for ({family}, {class})"));
        assert_eq!(
            &got.subject, kind,
            "claim ({family}, {class}) has outcome {} instead of {kind}",
            got.subject
        );
        assert_eq!(
            got.branch_params, *arities,
            "claim ({family}, {class}) has branch arities {:?}, expected {arities:?}",
            got.branch_params
        );
    }
    finish(
        4,
        Duration::from_secs(60),
        started,
        "all 60 subfamily claims verified with the advertised parameter counts",
    );
}

#[test]
fn criterion_5_second_fundamental_form_shape() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let sc = random_constants(&mut rng);
        let t = sc.to_bracket_table();
        let form = second_fundamental(&levi_civita(&t));
        let mean = Vector4::new([Scalar::zero(), Scalar::zero(), sc.alpha.clone(), sc.a.clone()]);
        assert_eq!(form.h_xx, mean, "h(X,X) is not alpha Z + a W on {sc:?}");
        assert_eq!(form.h_yy, mean, "h(Y,Y) is not alpha Z + a W on {sc:?}");
        assert!(form.h_xy.is_zero(), "h(X,Y) is nonzero on {sc:?}");
        assert!(form.vertical_trace().is_zero(), "vertical trace is nonzero on {sc:?}");
        assert_eq!(form.conformal_witness().unwrap(), mean);
        let direct = foliation_flags(&sc);
        let derived = foliation_flags_from_connection(&t).unwrap();
        assert_eq!(direct, derived, "foliation flags disagree on {sc:?}");
    }
    finish(
        5,
        Duration::from_secs(10),
        started,
        "second fundamental form shape and foliation flags agree on 1000 samples",
    );
}

#[test]
fn criterion_6_leaf_curvature() {
    let started = Instant::now();
    let lambda = Scalar::var("lambda");
    assert_eq!(gaussian_curvature_k(&lambda), lambda.pow(2).neg());
    assert_eq!(gaussian_curvature_k(&Scalar::int(2)), Scalar::int(-4));
    assert_eq!(gaussian_curvature_k(&Scalar::Rat(rat(1, 2))), Scalar::Rat(rat(-1, 4)));
    assert!(gaussian_curvature_k(&Scalar::zero()).is_zero());
    finish(6, Duration::from_secs(1), started, "leaf curvature is -lambda^2");
}

#[test]
fn criterion_7_closure_system_matches_generic_jacobi() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let catalog = Catalog::standard();
    let mut batch: Vec<StructureConstants> = Vec::new();
    for _ in 0..400 {
        batch.push(random_constants(&mut rng));
    }
    for i in 0..300 {
        let family = &catalog.families[i % catalog.families.len()];
        let (_, sc) = family.sample(&mut rng);
        batch.push(sc);
    }
    for i in 0..300 {
        // A Lie point with one entry knocked loose.
        let family = &catalog.families[i % catalog.families.len()];
        let (_, mut sc) = family.sample(&mut rng);
        let name = PARAM_NAMES[rng.gen_range(0..PARAM_NAMES.len())];
        let slot = sc.field_mut(name).unwrap();
        *slot = slot.add(&Scalar::int(1));
        batch.push(sc);
    }
    assert!(batch.len() >= 1000);

    let mut lie_points = 0usize;
    for sc in &batch {
        let fourteen = sc.is_lie_algebra();
        let sixteen = sc.to_bracket_table().jacobi_holds_generic();
        assert_eq!(
            fourteen, sixteen,
            "closure system and generic Jacobi residuals disagree on {sc:?}"
        );
        if fourteen {
            lie_points += 1;
        }
    }
    // The family batch guarantees both verdicts appear.
    assert!(lie_points >= 300, "expected at least the 300 family points to close");
    assert!(lie_points < batch.len(), "every sample closed; batch is degenerate");
    finish(
        7,
        Duration::from_secs(5),
        started,
        "fourteen-equation system matches generic Jacobi residuals on 1000 samples",
    );
}

/// The classification examples used throughout the suite, re-checked here
/// end to end through the public API.
#[test]
fn classification_spot_checks() {
    let catalog = Catalog::standard();

    // Family 1 at w1 = 0 is almost Kähler but not integrable when w2 != 0.
    let mut b = BTreeMap::new();
    b.insert(Var::new("lambda"), rat(1, 1));
    b.insert(Var::new("r"), rat(2, 1));
    b.insert(Var::new("w1"), rat(0, 1));
    b.insert(Var::new("w2"), rat(3, 1));
    let sc = catalog.make_family(1, &b).unwrap();
    let res = classify(&sc);
    assert!(res.almost_kahler && !res.integrable && !res.kahler);

    // Family 10 is integrable everywhere and never almost Kähler.
    let mut b = BTreeMap::new();
    b.insert(Var::new("alpha"), rat(1, 1));
    b.insert(Var::new("a"), rat(0, 1));
    b.insert(Var::new("beta"), rat(0, 1));
    b.insert(Var::new("b"), rat(1, 1));
    let sc = catalog.make_family(10, &b).unwrap();
    let res = classify(&sc);
    assert!(!res.almost_kahler && res.integrable && !res.kahler);

    // Family 7 at w1 = -2*z2, w2 = theta1 = theta2 = 0 is Kähler.
    let mut b = BTreeMap::new();
    b.insert(Var::new("z2"), rat(1, 1));
    b.insert(Var::new("w1"), rat(-2, 1));
    b.insert(Var::new("w2"), rat(0, 1));
    b.insert(Var::new("theta1"), rat(0, 1));
    b.insert(Var::new("theta2"), rat(0, 1));
    let sc = catalog.make_family(7, &b).unwrap();
    let res = classify(&sc);
    assert!(res.almost_kahler && res.integrable && res.kahler);
}
