//! Multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by monomial; the monomial order is
//! lexicographic with earlier-interned variables more significant, so the
//! fourteen structure parameters dominate in their canonical order.  All
//! coefficient arithmetic is exact.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::sym::Var;
use super::Rational;

/// An exponent vector, stored densely by variable rank with trailing zeros
/// trimmed.  The derived ordering on the underlying `Vec` is exactly the
/// lexicographic monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Monomial {
        if exp == 0 {
            return Monomial::one();
        }
        let mut e = vec![0; v.index() + 1];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.get(v.index()).copied().unwrap_or(0)
    }

    /// The variables occurring in this monomial, with their exponents.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_index(i), e))
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn trim(mut v: Vec<u32>) -> Monomial {
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut e = vec![0; n];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0);
        }
        Monomial::trim(e)
    }

    /// Componentwise quotient, or `None` when `other` does not divide `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut e = self.0.clone();
        for (i, &oe) in other.0.iter().enumerate() {
            if e[i] < oe {
                return None;
            }
            e[i] -= oe;
        }
        Some(Monomial::trim(e))
    }

    /// Drops `v` from the monomial entirely.
    fn without(&self, v: Var) -> Monomial {
        let mut e = self.0.clone();
        if v.index() < e.len() {
            e[v.index()] = 0;
        }
        Monomial::trim(e)
    }
}

/// A multivariate polynomial with rational coefficients.  The term map never
/// stores a zero coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v, 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// The most significant variable occurring, if any.
    pub fn main_var(&self) -> Option<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v))
            .min()
    }

    /// All variables occurring in the polynomial.
    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v))
            .collect()
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point; `Err(v)` reports the first unbound
    /// variable encountered.
    pub fn eval(&self, bind: &impl Fn(Var) -> Option<Rational>) -> Result<Rational, Var> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = bind(v).ok_or(v)?;
                for _ in 0..e {
                    t *= &x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// The coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coeff_of_power(&self, v: Var, k: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                out.insert_term(m.without(v), c.clone());
            }
        }
        out
    }

    /// Divides by the leading coefficient so the leading term is monic.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, lc)) => {
                let inv = Rational::one() / lc;
                self.scale(&inv)
            }
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let m = rm.try_div(dm)?;
            let c = rc / dc;
            let t = Poly::term(m, c);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Pseudo-remainder of `self` by `d` viewed as polynomials in `v`; the
    /// result is an associate of the remainder, adequate for the primitive
    /// Euclidean algorithm.
    fn pseudo_rem_in(&self, d: &Poly, v: Var) -> Poly {
        let m = d.degree_in(v);
        debug_assert!(m > 0);
        let lc_d = d.coeff_of_power(v, m);
        let mut r = self.clone();
        while !r.is_zero() {
            let k = r.degree_in(v);
            if k < m {
                break;
            }
            let lc_r = r.coeff_of_power(v, k);
            let shift = Poly::term(Monomial::var(v, k - m), Rational::one());
            r = &(&lc_d * &r) - &(&(&lc_r * &shift) * d);
        }
        r
    }

    /// Content with respect to `v`: the gcd of the `v`-power coefficients.
    fn content_in(&self, v: Var) -> Poly {
        let mut c = Poly::zero();
        for k in 0..=self.degree_in(v) {
            let coeff = self.coeff_of_power(v, k);
            if !coeff.is_zero() {
                c = Poly::gcd(&c, &coeff);
            }
        }
        c
    }

    fn primitive_in(&self, v: Var) -> Poly {
        let c = self.content_in(v);
        self.exact_div(&c).expect("content divides its polynomial")
    }

    /// Greatest common divisor, normalized monic.  Uses content / primitive
    /// part recursion with a pseudo-remainder Euclidean loop in the most
    /// significant shared variable.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.as_constant().is_some() || b.as_constant().is_some() {
            return Poly::one();
        }
        let v = a.main_var().unwrap().min(b.main_var().unwrap());
        if a.degree_in(v) == 0 {
            return Poly::gcd(a, &b.content_in(v));
        }
        if b.degree_in(v) == 0 {
            return Poly::gcd(&a.content_in(v), b);
        }
        let ca = a.content_in(v);
        let cb = b.content_in(v);
        let cg = Poly::gcd(&ca, &cb);
        let mut f = a.exact_div(&ca).expect("content divides");
        let mut g = b.exact_div(&cb).expect("content divides");
        if f.degree_in(v) < g.degree_in(v) {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            if g.is_zero() {
                break;
            }
            if g.degree_in(v) == 0 {
                // A nonzero v-free remainder of two v-primitive polynomials:
                // their gcd is v-free and primitive, hence trivial.
                return cg.monic();
            }
            let r = f.pseudo_rem_in(&g, v);
            f = g;
            g = if r.is_zero() { r } else { r.primitive_in(v) };
        }
        (&cg * &f.primitive_in(v)).monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (am, ac) in &self.terms {
            for (bm, bc) in &rhs.terms {
                out.insert_term(am.mul(bm), ac * bc);
            }
        }
        out
    }
}

impl std::fmt::Display for Poly {
    /// Renders terms leading-first, e.g. `2*z1^2 - z2 + 1/2`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut wrote_factor = false;
            if !mag.is_one() || m.is_one() {
                write!(f, "{mag}")?;
                wrote_factor = true;
            }
            for (v, e) in m.factors() {
                if wrote_factor {
                    f.write_str("*")?;
                }
                wrote_factor = true;
                if e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}
