//! Dense univariate polynomials over the rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::factor::modp::Field;
use crate::factor::zassenhaus::{to_fp, ztrim, zprimitive};
use crate::numeric::{denominator_lcm, Int, Rat};
use crate::poly::{Monomial, Var};
use crate::Poly;

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct UPoly {
    c: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Rat::from_integer(Int::from(v))).collect())
    }

    pub fn from_int_coeffs(c: &[Int]) -> Self {
        Self::new(c.iter().map(|v| Rat::from_integer(v.clone())).collect())
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        Self::new(vec![r])
    }

    /// `x - r`
    pub fn linear_root(r: &Rat) -> Self {
        Self::new(vec![-r.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with `deg 0 = -1`.
    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lc(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(self.c.iter().map(|a| a * r).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Rat::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * Rat::from_integer(Int::from(k)))
                .collect(),
        )
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.deg() < d.deg() {
            return (Self::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let dn = d.c.len() - 1;
        let inv = d.lc().recip();
        let mut q = vec![Rat::zero(); r.len() - dn];
        for k in (dn..r.len()).rev() {
            let f = &r[k] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                let t = &f * dj;
                r[k - dn + j] -= t;
            }
            q[k - dn] = f;
        }
        r.truncate(dn);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient, `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero for two zeros), by a primitive remainder sequence
    /// over Z after a coprimality test modulo a large prime.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return (self + other).monic();
        }
        let (mut a, mut b) = (self.primitive_int(), other.primitive_int());
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.len() == 1 || coprime_mod_p(&a, &b) {
            return Self::one();
        }
        loop {
            let r = zprimitive(&zprem(&a, &b));
            if r.is_empty() {
                return Self::from_int_coeffs(&b).monic();
            }
            if r.len() == 1 {
                return Self::one();
            }
            a = std::mem::replace(&mut b, r);
        }
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if coprime.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        (g.deg() == 0).then(|| s.rem(m))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn squarefree_part(&self) -> Self {
        if self.deg() <= 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Primitive integer coefficients with positive leading coefficient.
    pub fn primitive_int(&self) -> Vec<Int> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = denominator_lcm(self.c.iter());
        let ints: Vec<Int> = self.c.iter().map(|a| (a * Rat::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(Int::zero(), |acc, a| num_integer::Integer::gcd(&acc, a));
        let sign = if ints.last().is_some_and(|a| a.is_negative()) { -Int::one() } else { Int::one() };
        ints.into_iter().map(|a| a * &sign / &g).collect()
    }

    pub fn from_poly(p: &Poly, v: Var) -> Option<Self> {
        if p.vars().iter().any(|&w| w != v) {
            return None;
        }
        let mut c = vec![Rat::zero(); p.degree(v) as usize + 1];
        for (m, a) in p.terms() {
            c[m.exp(v) as usize] = a.clone();
        }
        Some(Self::new(c))
    }

    pub fn to_poly(&self, v: Var) -> Poly {
        Poly::from_terms(
            self.c
                .iter()
                .enumerate()
                .map(|(k, a)| (Monomial::var(v, k as u32), a.clone())),
        )
    }

    /// Number of distinct real roots (Sturm sequence on the square-free part).
    pub fn count_real_roots(&self) -> usize {
        let f = self.squarefree_part();
        if f.deg() <= 0 {
            return 0;
        }
        let mut seq = vec![f.clone(), f.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        let variations = |signs: Vec<i8>| -> usize {
            let nz: Vec<i8> = signs.into_iter().filter(|&s| s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let sign = |r: &Rat| -> i8 {
            if r.is_positive() {
                1
            } else if r.is_negative() {
                -1
            } else {
                0
            }
        };
        let at_pos: Vec<i8> = seq.iter().map(|p| sign(&p.lc())).collect();
        let at_neg: Vec<i8> = seq
            .iter()
            .map(|p| {
                let s = sign(&p.lc());
                if p.deg() % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect();
        variations(at_neg) - variations(at_pos)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.c.iter().map(|a| -a).collect())
    }
}

/// Pseudo-remainder of `a` by `b` over Z.
fn zprem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r.pop();
        r = ztrim(r);
    }
    r
}

/// True when `a`, `b` are coprime modulo some prime not dividing both
/// leading coefficients, which proves them coprime over Q.
fn coprime_mod_p(a: &[Int], b: &[Int]) -> bool {
    for p in [1_000_003u64, 1_000_033, 1_000_037] {
        let field = Field::new(p);
        let (ap, bp) = (to_fp(&a.to_vec(), field), to_fp(&b.to_vec(), field));
        if ap.len() != a.len() || bp.len() != b.len() {
            continue;
        }
        return field.gcd(&ap, &bp).len() == 1;
    }
    false
}
