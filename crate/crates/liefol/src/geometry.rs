//! Metric geometry of the adapted frame: Levi-Civita connection, second
//! fundamental forms of the two distributions, foliation flags, and the
//! curvature of the quotient disc.
//!
//! Everything is computed from the bracket table via the Koszul formula for a
//! left-invariant metric on an orthonormal basis:
//!
//! ```text
//! 2*g(nabla_{e_i} e_j, e_k) = c_ijk - c_jki + c_kij
//! ```
//!
//! where `c_ijk` is the `e_k`-coefficient of `[e_i, e_j]`.

use thiserror::Error;

use crate::liealg::{BracketTable, StructureConstants, Vector4, BASIS, W, X, Y, Z};
use crate::scalar::{rat, Scalar};

/// Failure of the horizontal distribution to be umbilic with a shared
/// normal, i.e. of the foliation to be conformal.
#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum NotConformal {
    #[error("mixed second fundamental form B_H(X,Y) has nonzero {component}-component {value}")]
    MixedTermNonzero { component: &'static str, value: String },
    #[error("B_H(X,X) and B_H(Y,Y) differ in the {component}-component: {left} vs {right}")]
    DiagonalMismatch { component: &'static str, left: String, right: String },
}

/// Connection coefficients `gamma[i][j][k] = g(nabla_{e_i} e_j, e_k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Connection {
    gamma: [[[Scalar; 4]; 4]; 4],
}

impl Connection {
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[i][j][k]
    }

    /// `nabla_{e_i} e_j` as a vector.
    pub fn nabla(&self, i: usize, j: usize) -> Vector4 {
        Vector4::new(std::array::from_fn(|k| self.gamma[i][j][k].clone()))
    }
}

/// Levi-Civita connection of the left-invariant metric, via Koszul.
pub fn levi_civita(t: &BracketTable) -> Connection {
    let half = Scalar::Rat(rat(1, 2));
    let gamma = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                let c = |p: usize, q: usize, s: usize| t.coeff(p, q, s);
                &half * &(c(i, j, k) - c(j, k, i) + c(k, i, j))
            })
        })
    });
    Connection { gamma }
}

/// Second fundamental forms of the vertical (leaf) and horizontal
/// distributions.  Vertical values live in the span of `X, Y`; horizontal
/// values in the span of `Z, W`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecondFundamental {
    /// `B_V(Z,Z)`: horizontal part of `nabla_Z Z`.
    pub v_zz: Vector4,
    /// `B_V(Z,W)`: horizontal part of the symmetrized `nabla` on `(Z, W)`.
    pub v_zw: Vector4,
    /// `B_V(W,W)`: horizontal part of `nabla_W W`.
    pub v_ww: Vector4,
    /// `B_H(X,X)`: vertical part of `nabla_X X`.
    pub h_xx: Vector4,
    /// `B_H(X,Y)`: vertical part of the symmetrized `nabla` on `(X, Y)`.
    pub h_xy: Vector4,
    /// `B_H(Y,Y)`: vertical part of `nabla_Y Y`.
    pub h_yy: Vector4,
}

fn project(v: &Vector4, indices: [usize; 2]) -> Vector4 {
    let mut out = Vector4::zero();
    for i in indices {
        out[i] = v[i].clone();
    }
    out
}

/// Both second fundamental forms, computed from the connection.
pub fn second_fundamental(conn: &Connection) -> SecondFundamental {
    let horizontal = |v: &Vector4| project(v, [X, Y]);
    let vertical = |v: &Vector4| project(v, [Z, W]);
    let half = Scalar::Rat(rat(1, 2));
    let sym = |i: usize, j: usize| conn.nabla(i, j).add(&conn.nabla(j, i)).scale(&half);
    SecondFundamental {
        v_zz: horizontal(&conn.nabla(Z, Z)),
        v_zw: horizontal(&sym(Z, W)),
        v_ww: horizontal(&conn.nabla(W, W)),
        h_xx: vertical(&conn.nabla(X, X)),
        h_xy: vertical(&sym(X, Y)),
        h_yy: vertical(&conn.nabla(Y, Y)),
    }
}

impl SecondFundamental {
    /// Trace of `B_V` over the orthonormal leaf basis `(Z, W)`.
    pub fn vertical_trace(&self) -> Vector4 {
        self.v_zz.add(&self.v_ww)
    }

    /// True when the leaves are totally geodesic (`B_V` vanishes).
    pub fn leaves_totally_geodesic(&self) -> bool {
        self.v_zz.is_zero() && self.v_zw.is_zero() && self.v_ww.is_zero()
    }

    /// The conformality witness: the vertical vector `V` with
    /// `B_H = g (x) V`, or an error describing how conformality fails.
    pub fn conformal_witness(&self) -> Result<Vector4, NotConformal> {
        for k in 0..4 {
            if !self.h_xy[k].is_zero() {
                return Err(NotConformal::MixedTermNonzero {
                    component: BASIS[k],
                    value: self.h_xy[k].to_string(),
                });
            }
        }
        for k in 0..4 {
            if self.h_xx[k] != self.h_yy[k] {
                return Err(NotConformal::DiagonalMismatch {
                    component: BASIS[k],
                    left: self.h_xx[k].to_string(),
                    right: self.h_yy[k].to_string(),
                });
            }
        }
        Ok(self.h_xx.clone())
    }
}

/// Status of the foliation read off a structure-constant assignment.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct FoliationFlags {
    /// Leaves are totally geodesic: `z1 = z2 = z3 + w1 = z4 + w2 = 0`.
    pub totally_geodesic: bool,
    /// The foliation is Riemannian (the witness vanishes): `alpha = a = 0`.
    pub riemannian: bool,
    /// The horizontal distribution is integrable: `theta1 = theta2 = 0`.
    pub h_integrable: bool,
    /// The conformality witness `V = alpha*Z + a*W`.
    pub mean_curvature: Vector4,
}

impl serde::Serialize for Vector4 {
    /// Serializes as a map from basis names to rendered components.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(4))?;
        for (i, name) in BASIS.iter().enumerate() {
            map.serialize_entry(name, &self.0[i])?;
        }
        map.end()
    }
}

/// Foliation flags read directly from the structure constants.
pub fn foliation_flags(sc: &StructureConstants) -> FoliationFlags {
    let mut mean = Vector4::zero();
    mean[Z] = sc.alpha.clone();
    mean[W] = sc.a.clone();
    FoliationFlags {
        totally_geodesic: sc.z1.is_zero()
            && sc.z2.is_zero()
            && (&sc.z3 + &sc.w1).is_zero()
            && (&sc.z4 + &sc.w2).is_zero(),
        riemannian: sc.alpha.is_zero() && sc.a.is_zero(),
        h_integrable: sc.theta1.is_zero() && sc.theta2.is_zero(),
        mean_curvature: mean,
    }
}

/// Foliation flags derived from the connection of an arbitrary bracket
/// table; fails when the horizontal distribution is not umbilic.
pub fn foliation_flags_from_connection(t: &BracketTable) -> Result<FoliationFlags, NotConformal> {
    let forms = second_fundamental(&levi_civita(t));
    let witness = forms.conformal_witness()?;
    let xy = t.entry(X, Y);
    Ok(FoliationFlags {
        totally_geodesic: forms.leaves_totally_geodesic(),
        riemannian: witness.is_zero(),
        h_integrable: xy[Z].is_zero() && xy[W].is_zero(),
        mean_curvature: witness,
    })
}

/// Gaussian curvature of the quotient disc carrying the two-dimensional
/// model algebra `[W, Z] = lambda*W`, computed from its own Koszul
/// connection and curvature tensor.
pub fn gaussian_curvature_k(lambda: &Scalar) -> Scalar {
    // Index 0 is Z, index 1 is W; c[i][j][k] is the e_k-coefficient of
    // [e_i, e_j] in the two-dimensional algebra.
    let mut c: [[[Scalar; 2]; 2]; 2] =
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero())));
    c[1][0][1] = lambda.clone();
    c[0][1][1] = -lambda;

    let half = Scalar::Rat(rat(1, 2));
    let gamma: [[[Scalar; 2]; 2]; 2] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| &half * &(&(&c[i][j][k] - &c[j][k][i]) + &c[k][i][j]))
        })
    });
    let nabla_vec = |i: usize, v: &[Scalar; 2]| -> [Scalar; 2] {
        // nabla_{e_i} of a constant-coefficient field v^j e_j.
        std::array::from_fn(|k| {
            let mut acc = Scalar::zero();
            for j in 0..2 {
                acc = acc + (&v[j] * &gamma[i][j][k]);
            }
            acc
        })
    };

    // R(Z,W)W = nabla_Z nabla_W W - nabla_W nabla_Z W - nabla_[Z,W] W.
    let nabla_w_w: [Scalar; 2] = std::array::from_fn(|k| gamma[1][1][k].clone());
    let nabla_z_w: [Scalar; 2] = std::array::from_fn(|k| gamma[0][1][k].clone());
    let first = nabla_vec(0, &nabla_w_w);
    let second = nabla_vec(1, &nabla_z_w);
    let zw: [Scalar; 2] = std::array::from_fn(|k| c[0][1][k].clone());
    let third = nabla_vec_by(&zw, &gamma);
    let r: [Scalar; 2] = std::array::from_fn(|k| &(&first[k] - &second[k]) - &third[k]);

    // Sectional curvature of the orthonormal plane (Z, W): g(R(Z,W)W, Z).
    r[0].clone()
}

/// `nabla_u W` for `u = u^i e_i` with constant coefficients.
fn nabla_vec_by(u: &[Scalar; 2], gamma: &[[[Scalar; 2]; 2]; 2]) -> [Scalar; 2] {
    std::array::from_fn(|k| {
        let mut acc = Scalar::zero();
        for i in 0..2 {
            acc = acc + (&u[i] * &gamma[i][1][k]);
        }
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic_table() -> BracketTable {
        StructureConstants::generic().to_bracket_table()
    }

    #[test]
    fn koszul_is_metric_and_torsion_free_symbolically() {
        let t = generic_table();
        let conn = levi_civita(&t);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    // Metric compatibility: gamma_ijk = -gamma_ikj.
                    assert_eq!(conn.gamma(i, j, k), &conn.gamma(i, k, j).neg());
                    // Torsion freeness: gamma_ijk - gamma_jik = c_ijk.
                    assert_eq!(
                        &(conn.gamma(i, j, k) - conn.gamma(j, i, k)),
                        t.coeff(i, j, k)
                    );
                }
            }
        }
    }

    #[test]
    fn connection_entries_match_hand_computation() {
        let conn = levi_civita(&generic_table());
        assert_eq!(conn.gamma(X, X, Z), &Scalar::var("alpha"));
        assert_eq!(conn.gamma(X, X, W), &Scalar::var("a"));
        assert_eq!(conn.gamma(Y, Y, Z), &Scalar::var("alpha"));
        assert_eq!(conn.gamma(Z, Z, X), &-&Scalar::var("z1"));
    }

    #[test]
    fn second_fundamental_forms_match_hand_computation() {
        let forms = second_fundamental(&levi_civita(&generic_table()));
        let s = |name: &str| Scalar::var(name);
        assert_eq!(forms.v_zz, Vector4::new([-&s("z1"), -&s("z2"), Scalar::zero(), Scalar::zero()]));
        assert_eq!(forms.v_ww, Vector4::new([s("z1"), s("z2"), Scalar::zero(), Scalar::zero()]));
        let half = Scalar::Rat(rat(-1, 2));
        assert_eq!(
            forms.v_zw,
            Vector4::new([
                &half * &(&s("z3") + &s("w1")),
                &half * &(&s("z4") + &s("w2")),
                Scalar::zero(),
                Scalar::zero(),
            ])
        );
        assert_eq!(forms.h_xx, Vector4::new([Scalar::zero(), Scalar::zero(), s("alpha"), s("a")]));
        assert_eq!(forms.h_yy, forms.h_xx);
        assert!(forms.h_xy.is_zero());
        // Minimality of the leaves is built into the shape.
        assert!(forms.vertical_trace().is_zero());
    }

    #[test]
    fn conformal_witness_is_the_mean_curvature_vector() {
        let forms = second_fundamental(&levi_civita(&generic_table()));
        let v = forms.conformal_witness().unwrap();
        assert_eq!(v.to_string(), "alpha*Z + a*W");
    }

    #[test]
    fn non_conformal_table_is_detected() {
        // An ad-hoc table outside the adapted shape: [Z,X] = X with no
        // matching [Z,Y] term makes B_H(X,X) != B_H(Y,Y).
        let mut t = BracketTable::zero();
        t.set_pair(Z, X, Vector4::basis(X));
        let forms = second_fundamental(&levi_civita(&t));
        match forms.conformal_witness() {
            Err(NotConformal::DiagonalMismatch { component, .. }) => assert_eq!(component, "Z"),
            other => panic!("expected diagonal mismatch, got {other:?}"),
        }
    }

    #[test]
    fn flags_from_constants_and_connection_agree_on_an_example() {
        // lambda=1, r=2, w1=3, w2=4, theta2=6: not totally geodesic
        // (z3 + w1 = 3), Riemannian, horizontally non-integrable.
        let mut sc = StructureConstants::zero();
        sc.lambda = Scalar::int(1);
        sc.r = Scalar::int(2);
        sc.w1 = Scalar::int(3);
        sc.w2 = Scalar::int(4);
        sc.theta2 = Scalar::int(6);
        let direct = foliation_flags(&sc);
        let derived = foliation_flags_from_connection(&sc.to_bracket_table()).unwrap();
        assert_eq!(direct, derived);
        assert!(!direct.totally_geodesic);
        assert!(direct.riemannian);
        assert!(!direct.h_integrable);
        assert!(direct.mean_curvature.is_zero());
    }

    #[test]
    fn totally_geodesic_flag_needs_the_mixed_sums_to_vanish() {
        let mut sc = StructureConstants::zero();
        sc.z3 = Scalar::int(5);
        sc.w1 = Scalar::int(-5);
        sc.z4 = Scalar::int(2);
        sc.w2 = Scalar::int(-2);
        let flags = foliation_flags(&sc);
        assert!(flags.totally_geodesic);
        sc.w2 = Scalar::int(1);
        assert!(!foliation_flags(&sc).totally_geodesic);
    }

    #[test]
    fn quotient_curvature_is_minus_lambda_squared() {
        assert_eq!(gaussian_curvature_k(&Scalar::zero()), Scalar::zero());
        assert_eq!(gaussian_curvature_k(&Scalar::int(2)), Scalar::int(-4));
        assert_eq!(gaussian_curvature_k(&Scalar::Rat(rat(1, 2))), Scalar::Rat(rat(-1, 4)));
        let lambda = Scalar::var("lambda");
        assert_eq!(gaussian_curvature_k(&lambda), -&lambda.pow(2));
    }
}
