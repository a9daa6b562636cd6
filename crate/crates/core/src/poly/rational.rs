//! Rational-coefficient specifics: numeric content and the canonical
//! normalization (coprime integer coefficients, positive leading coefficient).

use num_traits::{One, Signed, Zero};

use super::MPoly;
use crate::numeric::{denominator_lcm, numerator_gcd, Int, Rat};

impl MPoly<Rat> {
    pub fn from_int(v: i64) -> Self {
        Self::constant(Rat::from_integer(Int::from(v)))
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::constant(r)
    }

    /// Positive rational `c` with `self / c` having coprime integer coefficients.
    pub fn numeric_content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let coeffs: Vec<&Rat> = self.terms().map(|(_, c)| c).collect();
        let g = numerator_gcd(coeffs.iter().copied());
        let l = denominator_lcm(coeffs.iter().copied());
        Rat::new(g, l)
    }

    /// Canonical representative of the associate class.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.numeric_content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Unit `u` with `self = u * self.normalized()`.
    pub fn normalization_unit(&self) -> Rat {
        let mut c = self.numeric_content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        c
    }

    pub fn is_normalized(&self) -> bool {
        !self.is_zero() && self.numeric_content().is_one() && self.leading_coeff().is_positive()
    }

    /// Equality up to a nonzero rational factor.
    pub fn associate(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Integer-coefficient image of the normalized polynomial.
    pub fn to_int_poly(&self) -> MPoly<Int> {
        self.normalized().map_coeffs(|c| c.numer().clone())
    }

    pub fn from_int_poly(p: &MPoly<Int>) -> Self {
        p.map_coeffs(|c| Rat::from_integer(c.clone()))
    }

    pub fn to_f64(&self) -> MPoly<f64> {
        self.map_coeffs(crate::numeric::rat_to_f64)
    }
}
