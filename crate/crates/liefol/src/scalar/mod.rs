//! Exact scalar arithmetic.
//!
//! A [`Scalar`] is either an arbitrary-precision rational or a rational
//! function of named parameters.  Mixing the two promotes the rational to a
//! constant function; any operation whose result turns out constant collapses
//! back to the rational representation, so values stay canonical and `==` is
//! semantic equality.

pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod sym;

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use parse::{parse_scalar, ParseError};
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;
pub use sym::{Var, SYSTEM_PARAMS};

/// Arbitrary-precision rational number.
pub type Rational = num::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Errors from scalar arithmetic and substitution.
#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no binding for parameter `{0}`")]
    MissingBinding(String),
}

/// An exact scalar: a rational constant or a rational function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rat(Rational),
    Fun(RatFunc),
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::Rat(rat(n, 1))
    }

    /// The parameter named `name`, as a scalar.
    pub fn var(name: &str) -> Scalar {
        Scalar::Fun(RatFunc::var(Var::new(name)))
    }

    pub fn var_of(v: Var) -> Scalar {
        Scalar::Fun(RatFunc::var(v))
    }

    /// Collapses constant rational functions back to `Rat`.
    fn normalized(self) -> Scalar {
        match self {
            Scalar::Fun(f) => match f.as_constant() {
                Some(c) => Scalar::Rat(c),
                None => Scalar::Fun(f),
            },
            s => s,
        }
    }

    pub(crate) fn as_fun(&self) -> RatFunc {
        match self {
            Scalar::Rat(c) => RatFunc::from_rational(c.clone()),
            Scalar::Fun(f) => f.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(c) => c.is_zero(),
            Scalar::Fun(f) => f.is_zero(),
        }
    }

    /// `Some(c)` when the scalar is the constant `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(c) => Some(c.clone()),
            Scalar::Fun(f) => f.as_constant(),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => Scalar::Fun(self.as_fun().add(&rhs.as_fun())).normalized(),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => Scalar::Fun(self.as_fun().sub(&rhs.as_fun())).normalized(),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => Scalar::Fun(self.as_fun().mul(&rhs.as_fun())).normalized(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fun(f) => Scalar::Fun(f.neg()),
        }
    }

    /// Exact division; fails when `rhs` is the zero scalar.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a / b)),
            _ => Ok(Scalar::Fun(self.as_fun().div(&rhs.as_fun())?).normalized()),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                let mut acc = Rational::one();
                for _ in 0..exp {
                    acc *= a;
                }
                Scalar::Rat(acc)
            }
            Scalar::Fun(f) => Scalar::Fun(f.pow(exp)).normalized(),
        }
    }

    /// Evaluates at a rational point.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Rational>) -> Result<Rational, ScalarError> {
        match self {
            Scalar::Rat(c) => Ok(c.clone()),
            Scalar::Fun(f) => f.eval(&|v| bindings.get(&v).cloned()),
        }
    }

    /// Substitutes scalars (possibly symbolic) for parameters; parameters the
    /// binder leaves out are kept.  Fails with `DivisionByZero` when a
    /// denominator collapses to the zero function.
    pub fn subst_symbolic(
        &self,
        bind: &impl Fn(Var) -> Option<Scalar>,
    ) -> Result<Scalar, ScalarError> {
        let eval_poly = |p: &Poly| -> Result<Scalar, ScalarError> {
            let mut acc = Scalar::zero();
            for (m, c) in p.terms() {
                let mut t = Scalar::Rat(c.clone());
                for (v, e) in m.factors() {
                    let x = bind(v).unwrap_or_else(|| Scalar::var_of(v));
                    t = t.mul(&x.pow(e));
                }
                acc = acc.add(&t);
            }
            Ok(acc)
        };
        match self {
            Scalar::Rat(c) => Ok(Scalar::Rat(c.clone())),
            Scalar::Fun(f) => {
                let num = eval_poly(f.num())?;
                let den = eval_poly(f.den())?;
                num.div(&den)
            }
        }
    }

    /// All parameters the scalar depends on.
    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        match self {
            Scalar::Rat(_) => Default::default(),
            Scalar::Fun(f) => f.vars(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Scalar {
        Scalar::Rat(c)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(self, rhs)
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl std::fmt::Display for Scalar {
    /// Renders in the expression grammar accepted by [`parse_scalar`], so
    /// rendering and parsing round-trip.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Rat(c) => write!(f, "{c}"),
            Scalar::Fun(fun) => {
                let num = fun.num();
                let den = fun.den();
                if den.as_constant().map_or(false, |c| c.is_one()) {
                    return write!(f, "{num}");
                }
                if num.term_count() > 1 {
                    write!(f, "({num})")?;
                } else {
                    write!(f, "{num}")?;
                }
                f.write_str("/")?;
                // A denominator may go bare only when it parses back as a
                // single factor: one variable power with unit coefficient.
                let bare = den.term_count() == 1 && {
                    let (m, c) = den.leading().unwrap();
                    c.is_one() && m.factors().count() == 1
                };
                if bare {
                    write!(f, "{den}")
                } else {
                    write!(f, "({den})")
                }
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Scalar, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bindings(pairs: &[(&str, Rational)]) -> BTreeMap<Var, Rational> {
        pairs.iter().map(|(n, c)| (Var::new(n), c.clone())).collect()
    }

    #[test]
    fn rational_arithmetic() {
        let half = Scalar::Rat(rat(1, 2));
        let third = Scalar::Rat(rat(1, 3));
        assert_eq!(&half + &third, Scalar::Rat(rat(5, 6)));
        assert_eq!(
            half.div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn variables_promote_and_constants_collapse() {
        let x = Scalar::var("z1");
        let sq = &x * &x;
        assert!(matches!(sq, Scalar::Fun(_)));
        assert_eq!(sq.to_string(), "z1^2");
        // x - x collapses back to the rational zero.
        assert_eq!(&x - &x, Scalar::zero());
        // x / x collapses to the rational one.
        assert_eq!(x.div(&x).unwrap(), Scalar::one());
    }

    #[test]
    fn fraction_cancellation() {
        let z1 = Scalar::var("z1");
        let z3 = Scalar::var("z3");
        let f = (&z1 * &z1).div(&z3).unwrap();
        assert!((&f + &f.neg()).is_zero());
        assert_eq!(f.to_string(), "z1^2/z3");
    }

    #[test]
    fn division_reduces() {
        let x = Scalar::var("z1");
        let num = &(&x * &x) - &Scalar::one();
        let den = &x - &Scalar::one();
        assert_eq!(num.div(&den).unwrap(), &x + &Scalar::one());
    }

    #[test]
    fn substitute_evaluates_and_reports_errors() {
        let z1 = Scalar::var("z1");
        let z3 = Scalar::var("z3");
        let f = (&z1 * &z1).div(&z3).unwrap();
        assert_eq!(
            f.substitute(&bindings(&[("z1", rat(1, 1)), ("z3", rat(2, 1))])).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            f.substitute(&bindings(&[("z1", rat(1, 1)), ("z3", rat(0, 1))])),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(
            f.substitute(&bindings(&[("z1", rat(1, 1))])),
            Err(ScalarError::MissingBinding("z3".into()))
        );
    }

    #[test]
    fn symbolic_substitution_composes() {
        // Substitute z1 -> a/b into z1^2: get a^2/b^2.
        let f = Scalar::var("z1").pow(2);
        let a_over_b = Scalar::var("a").div(&Scalar::var("b")).unwrap();
        let z1 = Var::new("z1");
        let g = f
            .subst_symbolic(&|v| (v == z1).then(|| a_over_b.clone()))
            .unwrap();
        assert_eq!(g, a_over_b.pow(2));
    }

    #[test]
    fn rendering_round_trips_through_the_parser() {
        let samples = [
            Scalar::Rat(rat(-3, 4)),
            Scalar::var("lambda"),
            (&Scalar::var("r") * &Scalar::var("w1")).div(&Scalar::var("lambda")).unwrap(),
            (&Scalar::var("z1").pow(2) + &Scalar::var("z2").pow(2))
                .div(&(&Scalar::var("z3") * &Scalar::int(2)))
                .unwrap(),
            &Scalar::var("alpha") - &Scalar::Rat(rat(5, 2)),
        ];
        for s in samples {
            let rendered = s.to_string();
            let back = parse_scalar(&rendered).unwrap();
            assert_eq!(back, s, "round-trip failed for `{rendered}`");
        }
    }
}
