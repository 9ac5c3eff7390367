//! Rational functions: reduced fractions of multivariate polynomials.
//!
//! Every value is kept in canonical form — numerator and denominator coprime,
//! denominator monic and nonzero, zero represented as `0/1` — so structural
//! equality is semantic equality and `is_zero` is sound and complete.

use num::Zero;

use super::poly::Poly;
use super::sym::Var;
use super::{Rational, ScalarError};

/// A reduced fraction of polynomials over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num / den` in canonical form; fails when `den` is the zero
    /// polynomial.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::one() });
        }
        let g = Poly::gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading().expect("nonzero denominator").1.clone();
        let inv = Rational::new(lc.denom().clone(), lc.numer().clone());
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_rational(c: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` when the value is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        self.den
            .as_constant()
            .and_then(|d| self.num.as_constant().map(|n| n / d))
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("product of nonzero denominators is nonzero")
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("product of nonzero denominators is nonzero")
    }

    /// Fails when `rhs` is the zero function.
    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        let mut acc = RatFunc::from_poly(Poly::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates at a rational point.  Fails with `DivisionByZero` when the
    /// denominator vanishes there and with `MissingBinding` on unbound
    /// variables.
    pub fn eval(&self, bind: &impl Fn(Var) -> Option<Rational>) -> Result<Rational, ScalarError> {
        let missing = |v: Var| ScalarError::MissingBinding(v.name());
        let d = self.den.eval(bind).map_err(missing)?;
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.num.eval(bind).map_err(missing)?;
        Ok(n / d)
    }

    /// All variables occurring in numerator or denominator.
    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        let mut vs = self.num.vars();
        vs.extend(self.den.vars());
        vs
    }
}
