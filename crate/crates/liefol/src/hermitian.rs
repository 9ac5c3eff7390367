//! The adapted almost Hermitian structure `J(X) = Y, J(Z) = W` and its
//! classification into almost Kahler, integrable, and Kahler types.
//!
//! The fundamental two-form is `omega(u, v) = g(Ju, v)`.  For left-invariant
//! structures its differential and the Nijenhuis tensor reduce to bracket
//! algebra:
//!
//! ```text
//! d_omega(u,v,w) = -g(J[u,v], w) - g(J[v,w], u) - g(J[w,u], v)
//! N(u,v)         = [u,v] + J[Ju,v] + J[u,Jv] - [Ju,Jv]
//! ```

use serde::Serialize;

use crate::geometry::{foliation_flags, FoliationFlags};
use crate::liealg::{BracketTable, StructureConstants, Vector4, W, X, Y, Z};
use crate::scalar::Scalar;

/// The six increasing basis pairs on which tensors are tabulated.
pub const PAIRS: [(usize, usize); 6] = [(X, Y), (X, Z), (X, W), (Y, Z), (Y, W), (Z, W)];

/// Applies the adapted complex structure: `J(X) = Y`, `J(Y) = -X`,
/// `J(Z) = W`, `J(W) = -Z`, extended linearly.
pub fn apply_j(v: &Vector4) -> Vector4 {
    let mut out = Vector4::zero();
    out[Y] = v[X].clone();
    out[X] = -&v[Y];
    out[W] = v[Z].clone();
    out[Z] = -&v[W];
    out
}

/// The fundamental two-form `omega(u, v) = g(Ju, v)`.
pub fn kahler_form(u: &Vector4, v: &Vector4) -> Scalar {
    apply_j(u).dot(v)
}

/// `d_omega(u, v, w)` for left-invariant vector fields.
pub fn d_omega(t: &BracketTable, u: &Vector4, v: &Vector4, w: &Vector4) -> Scalar {
    let term = |p: &Vector4, q: &Vector4, s: &Vector4| apply_j(&t.bracket(p, q)).dot(s);
    -(&(term(u, v, w) + term(v, w, u)) + term(w, u, v))
}

/// `d_omega` on a basis triple.
pub fn d_omega_basis(t: &BracketTable, triple: (usize, usize, usize)) -> Scalar {
    let (i, j, k) = triple;
    d_omega(t, &Vector4::basis(i), &Vector4::basis(j), &Vector4::basis(k))
}

/// The Nijenhuis tensor `N(u, v)` for left-invariant vector fields.
pub fn nijenhuis(t: &BracketTable, u: &Vector4, v: &Vector4) -> Vector4 {
    let ju = apply_j(u);
    let jv = apply_j(v);
    t.bracket(u, v)
        .add(&apply_j(&t.bracket(&ju, v)))
        .add(&apply_j(&t.bracket(u, &jv)))
        .sub(&t.bracket(&ju, &jv))
}

/// `N` on a basis pair.
pub fn nijenhuis_basis(t: &BracketTable, pair: (usize, usize)) -> Vector4 {
    nijenhuis(t, &Vector4::basis(pair.0), &Vector4::basis(pair.1))
}

/// The four scalar witnesses deciding the classification; each class
/// condition holds exactly when its witnesses vanish.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witnesses {
    /// `theta1 - 2a`: obstruction to `d_omega = 0` alongside the next one.
    pub theta1_minus_2a: Scalar,
    /// `theta2 + 2alpha`.
    pub theta2_plus_2alpha: Scalar,
    /// `2z1 - z4 - w2`: `Z`-obstruction to integrability.
    pub two_z1_minus_z4_minus_w2: Scalar,
    /// `2z2 + z3 + w1`: `W`-obstruction to integrability.
    pub two_z2_plus_z3_plus_w1: Scalar,
}

/// Result of classifying one structure-constant assignment.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassificationResult {
    /// `d_omega = 0`: `theta1 = 2a` and `theta2 = -2alpha`.
    pub almost_kahler: bool,
    /// `N = 0`: `2z1 - z4 - w2 = 0` and `2z2 + z3 + w1 = 0`.
    pub integrable: bool,
    /// Both of the above.
    pub kahler: bool,
    pub witnesses: Witnesses,
    pub foliation: FoliationFlags,
}

/// Classifies the adapted structure on a structure-constant assignment.
pub fn classify(sc: &StructureConstants) -> ClassificationResult {
    let two = Scalar::int(2);
    let witnesses = Witnesses {
        theta1_minus_2a: &sc.theta1 - &(&two * &sc.a),
        theta2_plus_2alpha: &sc.theta2 + &(&two * &sc.alpha),
        two_z1_minus_z4_minus_w2: &(&two * &sc.z1) - &sc.z4 - &sc.w2,
        two_z2_plus_z3_plus_w1: &(&two * &sc.z2) + &sc.z3 + &sc.w1,
    };
    let almost_kahler =
        witnesses.theta1_minus_2a.is_zero() && witnesses.theta2_plus_2alpha.is_zero();
    let integrable = witnesses.two_z1_minus_z4_minus_w2.is_zero()
        && witnesses.two_z2_plus_z3_plus_w1.is_zero();
    ClassificationResult {
        almost_kahler,
        integrable,
        kahler: almost_kahler && integrable,
        witnesses,
        foliation: foliation_flags(sc),
    }
}
