//! Exact division and pseudo-division.

use super::{MPoly, Var};
use crate::error::{Error, Result};
use crate::numeric::{Coeff, ExactCoeff};

impl<C: ExactCoeff> MPoly<C> {
    /// `self / d` when the division is exact, `None` otherwise.
    pub fn try_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            let mut out = Self::zero();
            for (m, a) in self.terms() {
                out.add_term(m.clone(), a.exact_div(&c)?);
            }
            return Some(out);
        }
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((lm, lc)) = rem.leading_term() {
            if !dm.divides(lm) {
                return None;
            }
            let c = lc.exact_div(&dc)?;
            let m = dm.quotient_of(lm);
            rem = &rem - &d.mul_monomial(&m, &c);
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Pseudo-remainder of `a` by `b` as univariate polynomials in `v`,
    /// together with the quotient and the power of `lc_v(b)` used:
    /// `lc^power * a = q * b + r`, `deg_v r < deg_v b`, `power = max(deg a - deg b + 1, 0)`.
    pub fn pseudo_divide(&self, b: &Self, v: Var) -> Result<(Self, Self, u32)> {
        let bc = b.coeffs_in(v);
        if bc.len() < 2 {
            return Err(Error::BadDivisor);
        }
        let (q, r, power) = prem_coeffs(&self.coeffs_in(v), &bc);
        Ok((
            Self::from_coeffs_in(v, &q),
            Self::from_coeffs_in(v, &r),
            power,
        ))
    }
}

/// Pseudo-division on coefficient vectors (index = degree).
pub(crate) fn prem_coeffs<C: Coeff>(
    a: &[MPoly<C>],
    b: &[MPoly<C>],
) -> (Vec<MPoly<C>>, Vec<MPoly<C>>, u32) {
    let n = b.len() - 1;
    let mut r: Vec<MPoly<C>> = a.to_vec();
    trim(&mut r);
    if r.len() <= n {
        return (Vec::new(), r, 0);
    }
    let m = r.len() - 1;
    let lc = &b[n];
    let steps = m - n + 1;
    let mut q = vec![MPoly::zero(); m - n + 1];
    for k in (n..=m).rev() {
        let rk = r.get(k).cloned().unwrap_or_default();
        // q = q*lc + rk*v^(k-n); r = r*lc - rk*v^(k-n)*b
        for qi in q.iter_mut() {
            *qi = &*qi * lc;
        }
        q[k - n] = &q[k - n] + &rk;
        for ri in r.iter_mut() {
            *ri = &*ri * lc;
        }
        if !rk.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                let idx = j + k - n;
                r[idx] = &r[idx] - &(&rk * bj);
            }
        }
        r.truncate(k);
    }
    trim(&mut r);
    trim(&mut q);
    (q, r, steps as u32)
}

pub(crate) fn trim<C: Coeff>(v: &mut Vec<MPoly<C>>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use crate::text::p;
    use crate::{Poly, Var};

    fn check_identity(a: &Poly, b: &Poly, v: Var) -> (Poly, Poly, u32) {
        let (q, r, k) = a.pseudo_divide(b, v).unwrap();
        let lc = b.lc_in(v);
        assert_eq!(&lc.pow(k) * a, &(&q * b) + &r);
        assert!(r.is_zero() || r.degree(v) < b.degree(v));
        (q, r, k)
    }

    #[test]
    fn pseudo_division_examples() {
        let (q, r, k) = check_identity(&p("x^2"), &p("2*x+y"), Var::X);
        assert_eq!((q, r, k), (p("2*x - y"), p("y^2"), 2));
        check_identity(&p("x+1"), &p("x"), Var::X);
        check_identity(&p("t^3"), &p("t^2+1"), Var::T);
        assert!(p("x").pseudo_divide(&p("y"), Var::X).is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.try_div(&p("x - y")), Some(p("x + y")));
        assert_eq!(a.try_div(&p("x + 2*y")), None);
        assert_eq!(p("3*x").try_div(&p("3/2")), Some(p("2*x")));
    }
}
