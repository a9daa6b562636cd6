//! Quotients of polynomials, used for curve parametrizations.

use std::fmt;

use num_traits::Zero;

use super::{gcd, Var};
use crate::error::{Error, Result};
use crate::numeric::Rat;
use crate::Poly;

/// `num / den` kept in reduced form: `gcd(num, den) = 1`, `den` normalized.
#[derive(Clone)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::raw(num, den).reduced())
    }

    /// Unreduced quotient; call [`Self::reduced`] at the end of a chain.
    pub(crate) fn raw(num: Poly, den: Poly) -> Self {
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_poly(Poly::constant(r))
    }

    pub fn reduced(self) -> Self {
        if self.num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = gcd(&self.num, &self.den);
        let num = self.num.try_div(&g).expect("gcd divides");
        let den = self.den.try_div(&g).expect("gcd divides");
        let u = den.normalization_unit();
        let inv = u.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
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

    pub fn as_poly(&self) -> Option<Poly> {
        self.den
            .as_constant()
            .map(|d| self.num.scale(&d.recip()))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::raw(&self.num + &o.num, self.den.clone()).reduced();
        }
        Self::raw(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .reduced()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::raw(&self.num * &o.num, &self.den * &o.den).reduced()
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::raw(&self.num * &o.den, &self.den * &o.num).reduced())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::raw(self.num.scale(r), self.den.clone()).reduced()
    }

    pub fn derivative(&self, v: Var) -> Self {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        Self::raw(n, &self.den * &self.den).reduced()
    }

    /// Binds variables to rationals; fails when the denominator vanishes.
    pub fn eval_partial(&self, bindings: &[(Var, Rat)]) -> Result<Self> {
        let den = self.den.eval_partial(bindings);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::raw(self.num.eval_partial(bindings), den).reduced())
    }

    /// Value at a point where every variable is bound.
    pub fn eval_rat(&self, bindings: &[(Var, Rat)]) -> Result<Rat> {
        let r = self.eval_partial(bindings)?;
        r.as_poly()
            .and_then(|p| p.as_constant())
            .ok_or_else(|| Error::UnboundVariable("rational function has free variables".into()))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Substitutes rational functions for variables. Denominators are cleared by
/// homogenizing each variable to its degree, and the quotient is reduced once.
pub fn substitute(p: &Poly, bindings: &[(Var, RationalFunction)]) -> Result<RationalFunction> {
    if bindings.iter().any(|(_, b)| b.den.is_zero()) {
        return Err(Error::DivisionByZero);
    }
    let degs: Vec<u32> = bindings.iter().map(|(v, _)| p.degree(*v)).collect();
    let mut num = Poly::zero();
    for (m, c) in p.terms() {
        let mut rest = m.clone();
        let mut t = Poly::one();
        for ((v, b), &d) in bindings.iter().zip(&degs) {
            let e = m.exp(*v);
            rest = rest.with_exp(*v, 0);
            if d == 0 {
                continue;
            }
            t = &t * &(&b.num.pow(e) * &b.den.pow(d - e));
        }
        num = &num + &t.mul_monomial(&rest, c);
    }
    let mut den = Poly::one();
    for ((_, b), &d) in bindings.iter().zip(&degs) {
        if d > 0 {
            den = &den * &b.den.pow(d);
        }
    }
    if num.is_zero() {
        return Ok(RationalFunction::from_rat(Rat::zero()));
    }
    Ok(RationalFunction::raw(num, den).reduced())
}
