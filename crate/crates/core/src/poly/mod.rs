//! Sparse multivariate polynomials.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order (variable 0 is the largest), so the last entry is the
//! leading term. The container is generic over the coefficient type; the
//! exact algorithms (gcd, resultants, factoring) work on `MPoly<Rat>`.

mod exact;
pub(crate) use exact::prem_coeffs;
mod gcd;
mod monomial;
mod ratfun;
mod rational;
mod registry;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numeric::{Coeff, Rat};

pub use gcd::{content_primitive, gcd, gcd_poly, squarefree_part};
pub use monomial::Monomial;
pub use ratfun::{substitute, RationalFunction};
pub use registry::{Var, VarRegistry};

/// Sparse polynomial with coefficients in `C`.
#[derive(Clone, PartialEq)]
pub struct MPoly<C: Coeff = Rat> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff + Eq> Eq for MPoly<C> {}

impl<C: Coeff + std::hash::Hash> std::hash::Hash for MPoly<C> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl<C: Coeff> Default for MPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> MPoly<C> {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<C> {
        if self.is_zero() {
            Some(C::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> C {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total).max().unwrap_or(0)
    }

    pub fn lowest_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total).min()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variables that occur, in registry order.
    pub fn vars(&self) -> Vec<Var> {
        let n = self.terms.keys().map(Monomial::len).max().unwrap_or(0);
        (0..n)
            .map(Var)
            .filter(|&v| self.contains_var(v))
            .collect()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul_ref(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &C) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.mul_ref(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients with respect to `v`: entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Self> {
        let mut out = vec![Self::zero(); self.degree(v) as usize + 1];
        for (m, c) in &self.terms {
            let k = m.exp(v);
            out[k as usize].terms.insert(m.with_exp(v, 0), c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Self]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mono = Monomial::var(v, k as u32);
            for (m, a) in &c.terms {
                p.add_term(m.mul(&mono), a.clone());
            }
        }
        p
    }

    pub fn coeff_of(&self, v: Var, k: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_in(&self, v: Var) -> Self {
        self.coeff_of(v, self.degree(v))
    }

    pub fn derivative(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(v);
            (e > 0).then(|| (m.with_exp(v, e - 1), c.mul_ref(&C::of_i64(e as i64))))
        }))
    }

    /// Replaces `v` by the polynomial `q`.
    pub fn compose(&self, v: Var, q: &Self) -> Self {
        let coeffs = self.coeffs_in(v);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    /// Binds the listed variables to values, leaving the rest symbolic.
    pub fn eval_partial(&self, bindings: &[(Var, C)]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut mono = m.clone();
            for (v, val) in bindings {
                let e = m.exp(*v);
                if e > 0 {
                    coeff = coeff.mul_ref(&pow_coeff(val, e));
                    mono = mono.with_exp(*v, 0);
                }
            }
            (mono, coeff)
        }))
    }

    /// Full evaluation; every variable of the polynomial must be bound.
    pub fn eval(&self, value: impl Fn(Var) -> Option<C>) -> Result<C> {
        let vars = self.vars();
        let mut vals = Vec::with_capacity(vars.len());
        for v in vars {
            let x = value(v).ok_or_else(|| Error::UnboundVariable(VarRegistry::standard().name(v)))?;
            vals.push((v, x));
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in &vals {
                let e = m.exp(*v);
                if e > 0 {
                    t = t.mul_ref(&pow_coeff(x, e));
                }
            }
            acc.add_assign_ref(&t);
        }
        Ok(acc)
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces each bound `v` by `v + shift`.
    pub fn translate(&self, shifts: &[(Var, C)]) -> Self {
        let mut p = self.clone();
        for (v, s) in shifts {
            if s.is_zero() || !p.contains_var(*v) {
                continue;
            }
            let lin = &Self::var(*v) + &Self::constant(s.clone());
            p = p.compose(*v, &lin);
        }
        p
    }

    /// Renames variables (a permutation or injective relabelling).
    pub fn rename(&self, map: &[(Var, Var)]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = map
                    .iter()
                    .find(|(from, _)| from.0 == i)
                    .map(|(_, to)| *to)
                    .unwrap_or(Var(i));
                out = out.mul(&Monomial::var(v, e));
            }
            (out, c.clone())
        }))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

fn pow_coeff<C: Coeff>(x: &C, e: u32) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc.mul_ref(x);
    }
    acc
}

impl<C: Coeff> Add for &MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: &MPoly<C>) -> MPoly<C> {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: &MPoly<C>) -> MPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        out
    }
}

impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &MPoly<C>) -> MPoly<C> {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr for MPoly<C> {
            type Output = MPoly<C>;
            fn $f(self, rhs: MPoly<C>) -> MPoly<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coeff> $tr<&MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $f(self, rhs: &MPoly<C>) -> MPoly<C> {
                (&self).$f(rhs)
            }
        }
        impl<C: Coeff> $tr<MPoly<C>> for &MPoly<C> {
            type Output = MPoly<C>;
            fn $f(self, rhs: MPoly<C>) -> MPoly<C> {
                self.$f(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<C: Coeff> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        -&self
    }
}

impl fmt::Display for MPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_poly(self, VarRegistry::standard()))
    }
}

impl fmt::Debug for MPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coeff> MPoly<C> {
    /// Debug rendering with raw exponent vectors, for non-rational coefficients.
    pub fn raw_terms(&self) -> Vec<(Vec<u32>, C)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.exps().to_vec(), c.clone()))
            .collect()
    }
}
