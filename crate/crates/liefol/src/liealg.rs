//! Four-dimensional metric Lie algebras in the adapted frame.
//!
//! The orthonormal basis is `X, Y, Z, W` (indices 0..4), with the horizontal
//! distribution spanned by `X, Y` and the vertical (leaf) distribution by
//! `Z, W`.  A [`StructureConstants`] value packs the fourteen parameters of
//! the bracket relations
//!
//! ```text
//! [W,Z] = lambda*W
//! [Z,X] = alpha*X + beta*Y + z1*Z + w1*W
//! [Z,Y] = -beta*X + alpha*Y + z2*Z + w2*W
//! [W,X] = a*X + b*Y + z3*Z - z1*W
//! [W,Y] = -b*X + a*Y + z4*Z - z2*W
//! [Y,X] = r*X + theta1*Z + theta2*W
//! ```
//!
//! and the Jacobi identity is available in two independent forms: the
//! fourteen-polynomial closure system and a generic trilinear expansion over
//! basis triples.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize};

use crate::scalar::{Rational, Scalar, ScalarError, Var};

/// Basis indices.
pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
pub const W: usize = 3;

/// Basis names, by index.
pub const BASIS: [&str; 4] = ["X", "Y", "Z", "W"];

/// The increasing basis triples on which the Jacobi identity is checked.
pub const TRIPLES: [(usize, usize, usize); 4] = [(X, Y, Z), (X, Y, W), (X, Z, W), (Y, Z, W)];

/// The fourteen structure constants, in canonical order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StructureConstants {
    pub lambda: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub r: Scalar,
    pub z1: Scalar,
    pub z2: Scalar,
    pub z3: Scalar,
    pub z4: Scalar,
    pub w1: Scalar,
    pub w2: Scalar,
    pub theta1: Scalar,
    pub theta2: Scalar,
}

/// Field names of [`StructureConstants`], in canonical order.
pub const PARAM_NAMES: [&str; 14] = [
    "lambda", "alpha", "beta", "a", "b", "r", "z1", "z2", "z3", "z4", "w1", "w2", "theta1",
    "theta2",
];

impl StructureConstants {
    /// The abelian algebra: every constant zero.
    pub fn zero() -> StructureConstants {
        StructureConstants::from_array(std::array::from_fn(|_| Scalar::zero()))
    }

    /// Fully symbolic constants: each field is its own parameter.
    pub fn generic() -> StructureConstants {
        StructureConstants::from_array(std::array::from_fn(|i| Scalar::var(PARAM_NAMES[i])))
    }

    pub fn from_array(fields: [Scalar; 14]) -> StructureConstants {
        let [lambda, alpha, beta, a, b, r, z1, z2, z3, z4, w1, w2, theta1, theta2] = fields;
        StructureConstants {
            lambda, alpha, beta, a, b, r, z1, z2, z3, z4, w1, w2, theta1, theta2,
        }
    }

    pub fn to_array(&self) -> [&Scalar; 14] {
        [
            &self.lambda, &self.alpha, &self.beta, &self.a, &self.b, &self.r, &self.z1, &self.z2,
            &self.z3, &self.z4, &self.w1, &self.w2, &self.theta1, &self.theta2,
        ]
    }

    /// `(name, value)` pairs in canonical order.
    pub fn fields(&self) -> impl Iterator<Item = (&'static str, &Scalar)> {
        PARAM_NAMES.into_iter().zip(self.to_array())
    }

    /// Mutable access to a field by name.
    pub fn field_mut(&mut self, name: &str) -> Option<&mut Scalar> {
        let slot = match name {
            "lambda" => &mut self.lambda,
            "alpha" => &mut self.alpha,
            "beta" => &mut self.beta,
            "a" => &mut self.a,
            "b" => &mut self.b,
            "r" => &mut self.r,
            "z1" => &mut self.z1,
            "z2" => &mut self.z2,
            "z3" => &mut self.z3,
            "z4" => &mut self.z4,
            "w1" => &mut self.w1,
            "w2" => &mut self.w2,
            "theta1" => &mut self.theta1,
            "theta2" => &mut self.theta2,
            _ => return None,
        };
        Some(slot)
    }

    /// Evaluates every field at a rational point.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Var, Rational>,
    ) -> Result<StructureConstants, ScalarError> {
        let mut out = Vec::with_capacity(14);
        for s in self.to_array() {
            out.push(Scalar::Rat(s.substitute(bindings)?));
        }
        Ok(StructureConstants::from_array(out.try_into().expect("fourteen fields")))
    }

    /// Substitutes scalars for parameters in every field.
    pub fn subst_symbolic(
        &self,
        bind: &impl Fn(Var) -> Option<Scalar>,
    ) -> Result<StructureConstants, ScalarError> {
        let mut out = Vec::with_capacity(14);
        for s in self.to_array() {
            out.push(s.subst_symbolic(bind)?);
        }
        Ok(StructureConstants::from_array(out.try_into().expect("fourteen fields")))
    }

    /// Expands the six bracket relations into a full antisymmetric table.
    pub fn to_bracket_table(&self) -> BracketTable {
        let s = self;
        let mut t = BracketTable::zero();
        t.set_pair(W, Z, Vector4::new([Scalar::zero(), Scalar::zero(), Scalar::zero(), s.lambda.clone()]));
        t.set_pair(Z, X, Vector4::new([s.alpha.clone(), s.beta.clone(), s.z1.clone(), s.w1.clone()]));
        t.set_pair(Z, Y, Vector4::new([-&s.beta, s.alpha.clone(), s.z2.clone(), s.w2.clone()]));
        t.set_pair(W, X, Vector4::new([s.a.clone(), s.b.clone(), s.z3.clone(), -&s.z1]));
        t.set_pair(W, Y, Vector4::new([-&s.b, s.a.clone(), s.z4.clone(), -&s.z2]));
        t.set_pair(Y, X, Vector4::new([s.r.clone(), Scalar::zero(), s.theta1.clone(), s.theta2.clone()]));
        t
    }

    /// The fourteen closure conditions equivalent to the Jacobi identity on
    /// this bracket shape.  The algebra is a Lie algebra exactly when every
    /// entry vanishes.
    pub fn jacobi_residuals(&self) -> [Scalar; 14] {
        let s = self;
        let two = Scalar::int(2);
        [
            // 1
            &s.lambda * &s.a,
            // 2
            &s.lambda * &s.b,
            // 3
            -(&s.w2 * &s.z3) + (&s.w1 * &s.z4) - &two * (&s.alpha * &s.theta1) + (&s.r * &s.z1),
            // 4
            -(&two * (&s.z4 * &s.z1)) + &two * (&s.z3 * &s.z2) - &two * (&s.a * &s.theta1)
                + (&s.r * &s.z3),
            // 5
            -(&s.lambda * &s.z3) - (&s.z2 * &s.b) + (&s.z4 * &s.beta) - (&s.z1 * &s.a)
                + (&s.z3 * &s.alpha),
            // 6
            -(&s.lambda * &s.z4) - (&s.z2 * &s.a) + (&s.z4 * &s.alpha) + (&s.z1 * &s.b)
                - (&s.z3 * &s.beta),
            // 7
            (&s.lambda * &s.theta1) - (&s.w1 * &s.z4) + (&s.w2 * &s.z3) - &two * (&s.a * &s.theta2)
                - (&s.r * &s.z1),
            // 8
            -(&s.lambda * &s.theta2) + &two * (&s.z1 * &s.w2) - &two * (&s.z2 * &s.w1)
                - &two * (&s.alpha * &s.theta2)
                + (&s.r * &s.w1),
            // 9
            -(&s.w2 * &s.a) - (&s.w1 * &s.b) - (&s.z2 * &s.alpha) - (&s.z1 * &s.beta)
                - (&s.alpha * &s.r),
            // 10
            -(&s.w2 * &s.b) + (&s.w1 * &s.a) - (&s.z2 * &s.beta) + (&s.z1 * &s.alpha)
                + (&s.r * &s.beta),
            // 11
            (&s.lambda * &s.z1) - (&s.w2 * &s.b) - (&s.z2 * &s.beta) - (&s.w1 * &s.a)
                - (&s.z1 * &s.alpha),
            // 12
            (&s.z2 * &s.a) + (&s.z1 * &s.b) - (&s.z4 * &s.alpha) - (&s.z3 * &s.beta)
                - (&s.a * &s.r),
            // 13
            (&s.z2 * &s.b) - (&s.z1 * &s.a) - (&s.z4 * &s.beta) + (&s.z3 * &s.alpha)
                + (&s.r * &s.b),
            // 14
            (&s.lambda * &s.z2) - (&s.w2 * &s.a) - (&s.z2 * &s.alpha) + (&s.w1 * &s.b)
                + (&s.z1 * &s.beta),
        ]
    }

    /// True exactly when the fourteen closure conditions all vanish.
    pub fn is_lie_algebra(&self) -> bool {
        self.jacobi_residuals().iter().all(Scalar::is_zero)
    }
}

impl<'de> Deserialize<'de> for StructureConstants {
    /// Accepts a map from parameter names to scalar expressions; omitted
    /// parameters default to `0`, unknown keys are rejected.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<StructureConstants, D::Error> {
        #[derive(Deserialize, Default)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            lambda: Option<Scalar>,
            alpha: Option<Scalar>,
            beta: Option<Scalar>,
            a: Option<Scalar>,
            b: Option<Scalar>,
            r: Option<Scalar>,
            z1: Option<Scalar>,
            z2: Option<Scalar>,
            z3: Option<Scalar>,
            z4: Option<Scalar>,
            w1: Option<Scalar>,
            w2: Option<Scalar>,
            theta1: Option<Scalar>,
            theta2: Option<Scalar>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let or_zero = |v: Option<Scalar>| v.unwrap_or_else(Scalar::zero);
        Ok(StructureConstants {
            lambda: or_zero(raw.lambda),
            alpha: or_zero(raw.alpha),
            beta: or_zero(raw.beta),
            a: or_zero(raw.a),
            b: or_zero(raw.b),
            r: or_zero(raw.r),
            z1: or_zero(raw.z1),
            z2: or_zero(raw.z2),
            z3: or_zero(raw.z3),
            z4: or_zero(raw.z4),
            w1: or_zero(raw.w1),
            w2: or_zero(raw.w2),
            theta1: or_zero(raw.theta1),
            theta2: or_zero(raw.theta2),
        })
    }
}

/// A vector expressed in the adapted basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector4(pub [Scalar; 4]);

impl Vector4 {
    pub fn new(components: [Scalar; 4]) -> Vector4 {
        Vector4(components)
    }

    pub fn zero() -> Vector4 {
        Vector4(std::array::from_fn(|_| Scalar::zero()))
    }

    /// The `i`-th basis vector.
    pub fn basis(i: usize) -> Vector4 {
        let mut v = Vector4::zero();
        v.0[i] = Scalar::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &Vector4) -> Vector4 {
        Vector4(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }

    pub fn sub(&self, rhs: &Vector4) -> Vector4 {
        Vector4(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }

    pub fn neg(&self) -> Vector4 {
        Vector4(std::array::from_fn(|i| -&self.0[i]))
    }

    pub fn scale(&self, c: &Scalar) -> Vector4 {
        Vector4(std::array::from_fn(|i| c * &self.0[i]))
    }

    /// Inner product in the orthonormal adapted basis.
    pub fn dot(&self, rhs: &Vector4) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..4 {
            acc = acc + (&self.0[i] * &rhs.0[i]);
        }
        acc
    }
}

impl std::ops::Index<usize> for Vector4 {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for Vector4 {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl std::fmt::Display for Vector4 {
    /// Renders as a combination of basis vectors, e.g. `2*X + 6*W`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let rendered = c.to_string();
            let (neg, body) = match rendered.strip_prefix('-') {
                Some(rest) => (true, rest.to_owned()),
                None => (false, rendered),
            };
            match (wrote, neg) {
                (false, false) => {}
                (false, true) => f.write_str("-")?,
                (true, false) => f.write_str(" + ")?,
                (true, true) => f.write_str(" - ")?,
            }
            wrote = true;
            if body == "1" {
                write!(f, "{}", BASIS[i])?;
            } else if body.contains([' ', '+', '-']) {
                write!(f, "({body})*{}", BASIS[i])?;
            } else {
                write!(f, "{body}*{}", BASIS[i])?;
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A full antisymmetric bracket table: `entry(i, j)` holds `[e_i, e_j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketTable {
    c: [[Vector4; 4]; 4],
}

impl BracketTable {
    pub fn zero() -> BracketTable {
        BracketTable { c: std::array::from_fn(|_| std::array::from_fn(|_| Vector4::zero())) }
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set_pair(&mut self, i: usize, j: usize, v: Vector4) {
        assert_ne!(i, j, "bracket of a basis vector with itself is zero");
        self.c[j][i] = v.neg();
        self.c[i][j] = v;
    }

    /// `[e_i, e_j]` as a vector.
    pub fn entry(&self, i: usize, j: usize) -> &Vector4 {
        &self.c[i][j]
    }

    /// The coefficient of `e_k` in `[e_i, e_j]`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j].0[k]
    }

    /// Bilinear extension of the bracket to arbitrary vectors.
    pub fn bracket(&self, u: &Vector4, v: &Vector4) -> Vector4 {
        let mut acc = Vector4::zero();
        for i in 0..4 {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if i == j || v.0[j].is_zero() {
                    continue;
                }
                let c = &u.0[i] * &v.0[j];
                acc = acc.add(&self.c[i][j].scale(&c));
            }
        }
        acc
    }

    /// Generic Jacobi residuals: for each increasing basis triple
    /// `(i, j, k)` the cyclic sum `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] +
    /// [[e_k,e_i],e_j]`, which vanishes exactly on Lie algebras.
    pub fn jacobi_residuals_generic(&self) -> [Vector4; 4] {
        std::array::from_fn(|t| {
            let (i, j, k) = TRIPLES[t];
            let term = |p: usize, q: usize, s: usize| {
                self.bracket(self.entry(p, q), &Vector4::basis(s))
            };
            term(i, j, k).add(&term(j, k, i)).add(&term(k, i, j))
        })
    }

    /// True exactly when all sixteen generic residual components vanish.
    pub fn jacobi_holds_generic(&self) -> bool {
        self.jacobi_residuals_generic().iter().all(Vector4::is_zero)
    }
}
