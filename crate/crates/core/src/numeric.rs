//! Exact scalars: arbitrary-precision integers and normalized rationals.
//!
//! `Int` and `Rat` are `num-bigint`/`num-rational` types. The [`Coeff`]
//! trait is the small arithmetic surface the polynomial container needs, so
//! the same container also runs over `f64` for plotting.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Coefficient arithmetic used by [`crate::poly::MPoly`].
pub trait Coeff: Clone + PartialEq + Debug + Zero + One + Send + Sync + 'static {
    fn of_i64(v: i64) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }
}

/// Coefficients supporting exact division (fields, or `Int` when divisible).
pub trait ExactCoeff: Coeff {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! big_coeff {
    ($t:ty) => {
        impl Coeff for $t {
            fn of_i64(v: i64) -> Self {
                <$t>::from(BigInt::from(v))
            }
            fn add_ref(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub_ref(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg_ref(&self) -> Self {
                -self
            }
            fn add_assign_ref(&mut self, rhs: &Self) {
                *self += rhs;
            }
        }
    };
}

big_coeff!(BigInt);
big_coeff!(BigRational);

impl ExactCoeff for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl ExactCoeff for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Coeff for f64 {
    fn of_i64(v: i64) -> Self {
        v as f64
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn int_gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(op: RatOp, a: &Rat, b: &Rat) -> Result<Rat> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rint(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn parse_int(s: &str) -> Result<Int> {
    Int::from_str(s).map_err(|e| Error::Syntax {
        pos: 0,
        msg: format!("bad integer `{s}`: {e}"),
    })
}

/// Parses `p` or `p/q`; the result is normalized.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n.trim())?;
            let d = parse_int(d.trim())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Canonical text: `p/q`, or `p` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Exact square root of a nonnegative rational, if it is a rational square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rat::new(n, d))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // huge numerators: scale down by bit length first
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
        let n = (r.numer() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rat>) -> Int {
    values
        .into_iter()
        .fold(Int::one(), |acc, r| acc.lcm(r.denom()))
}

/// Gcd of the numerators of `values` (zero when all are zero).
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rat>) -> Int {
    values
        .into_iter()
        .fold(Int::zero(), |acc, r| acc.gcd(r.numer()))
}
