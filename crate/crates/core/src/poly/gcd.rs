//! Multivariate gcd over the rationals: recursive content extraction plus
//! the subresultant remainder sequence in the main variable.

use super::exact::prem_coeffs;
use super::Var;
use crate::error::{Error, Result};
use crate::upoly::UPoly;
use crate::numeric::Rat;
use crate::Poly;
use num_traits::Zero;

/// Normalized greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    gcd_rec(a, b, None)
}

/// Gcd computed with `v` as the main variable of the remainder sequence.
/// Same value as [`gcd`].
pub fn gcd_poly(a: &Poly, b: &Poly, v: Var) -> Poly {
    gcd_rec(a, b, Some(v))
}

fn gcd_rec(a: &Poly, b: &Poly, main: Option<Var>) -> Poly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let mut vars = a.vars();
    for v in b.vars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    let v = match main {
        Some(v) if vars.contains(&v) => v,
        _ => vars[0],
    };
    if vars.len() == 1 {
        let ua = UPoly::from_poly(a, v).expect("univariate");
        let ub = UPoly::from_poly(b, v).expect("univariate");
        return ua.gcd(&ub).to_poly(v).normalized();
    }
    if vars.len() == 2 && a.contains_var(v) && b.contains_var(v) {
        let w = if vars[0] == v { vars[1] } else { vars[0] };
        return bivariate_gcd(a, b, v, w);
    }
    if !a.contains_var(v) {
        return gcd_rec(a, &content_in(b, v), None);
    }
    if !b.contains_var(v) {
        return gcd_rec(&content_in(a, v), b, None);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.try_div(&ca).expect("content divides");
    let pb = b.try_div(&cb).expect("content divides");
    let g = gcd_rec(&ca, &cb, None);
    let h = prs_gcd(&pa, &pb, v);
    (&g * &h).normalized()
}

/// Bivariate gcd by evaluating `y` at small integers, univariate gcds in
/// `x`, Newton interpolation, and trial division.
fn bivariate_gcd(a: &Poly, b: &Poly, x: Var, y: Var) -> Poly {
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let cont = gcd_rec(&ca, &cb, None);
    let pa = a.try_div(&ca).expect("content divides");
    let pb = b.try_div(&cb).expect("content divides");
    let as_u = |p: &Poly| UPoly::from_poly(p, y).expect("univariate in y");
    let la = as_u(&pa.lc_in(x));
    let lb = as_u(&pb.lc_in(x));
    let lg = la.gcd(&lb);
    let bound = pa.degree(y).min(pb.degree(y)) as usize + lg.deg().max(0) as usize;

    let mut best: Option<usize> = None;
    let mut interp: Vec<UPoly> = Vec::new();
    let mut modulus = UPoly::one();
    let mut points = 0usize;
    let candidates = std::iter::once(0i64).chain((1..).flat_map(|c| [c, -c]));
    for c in candidates {
        let cr = Rat::from_integer(c.into());
        if la.eval(&cr).is_zero() || lb.eval(&cr).is_zero() {
            continue;
        }
        let ua = UPoly::from_poly(&pa.eval_partial(&[(y, cr.clone())]), x).expect("univariate");
        let ub = UPoly::from_poly(&pb.eval_partial(&[(y, cr.clone())]), x).expect("univariate");
        let g = ua.gcd(&ub);
        let d = g.deg() as usize;
        if d == 0 {
            return cont.normalized();
        }
        match best {
            Some(bd) if d > bd => continue,
            Some(bd) if d == bd => {}
            _ => {
                best = Some(d);
                interp = vec![UPoly::zero(); d + 1];
                modulus = UPoly::one();
                points = 0;
            }
        }
        let g = g.scale(&lg.eval(&cr));
        let mc = modulus.eval(&cr);
        for (k, slot) in interp.iter_mut().enumerate() {
            let delta = (g.coeff(k) - slot.eval(&cr)) / &mc;
            if !delta.is_zero() {
                *slot = &*slot + &modulus.scale(&delta);
            }
        }
        modulus = &modulus * &UPoly::linear_root(&cr);
        points += 1;
        if points > bound {
            let coeffs: Vec<Poly> = interp.iter().map(|u| u.to_poly(y)).collect();
            let cand = primitive_in(&Poly::from_coeffs_in(x, &coeffs), x);
            if pa.try_div(&cand).is_some() && pb.try_div(&cand).is_some() {
                return (&cont * &cand).normalized();
            }
        }
    }
    unreachable!("the evaluation loop only exits by returning")
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub(crate) fn content_in(p: &Poly, v: Var) -> Poly {
    let mut g = Poly::zero();
    for c in p.coeffs_in(v).iter().filter(|c| !c.is_zero()) {
        g = gcd_rec(&g, c, None);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

pub(crate) fn primitive_in(p: &Poly, v: Var) -> Poly {
    let c = content_in(p, v);
    p.try_div(&c).expect("content divides")
}

fn prs_gcd(a: &Poly, b: &Poly, v: Var) -> Poly {
    let (mut a, mut b) = if a.degree(v) >= b.degree(v) {
        (a.coeffs_in(v), b.coeffs_in(v))
    } else {
        (b.coeffs_in(v), a.coeffs_in(v))
    };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let (_, r, _) = prem_coeffs(&a, &b);
        if r.is_empty() {
            return primitive_in(&Poly::from_coeffs_in(v, &b), v).normalized();
        }
        if r.len() == 1 {
            return Poly::one();
        }
        let div = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| c.try_div(&div).expect("subresultant division is exact"))
            .collect();
        g = a.last().cloned().expect("nonzero");
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .try_div(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
}

/// `(content, primitive)` with respect to `v`: `p = content * primitive`,
/// content free of `v`, primitive normalized.
pub fn content_primitive(p: &Poly, v: Var) -> Result<(Poly, Poly)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = content_in(p, v);
    let prim = p.try_div(&c).expect("content divides").normalized();
    let content = p.try_div(&prim).expect("primitive divides");
    Ok((content, prim))
}

/// Product of the distinct irreducible factors, normalized.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Poly::one());
    }
    let mut g = p.clone();
    for v in p.vars() {
        g = gcd(&g, &p.derivative(v));
        if g.is_constant() {
            break;
        }
    }
    Ok(p.try_div(&g).expect("gcd divides").normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::p;
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p("(x-y)*(x+y)"), &p("(x-y)^2")), p("x - y"));
        assert_eq!(gcd(&p("-3*x^2 + 3*y"), &Poly::zero()), p("x^2 - y"));
        assert_eq!(gcd_poly(&p("(x-y)*(x+y)"), &p("(x-y)^2"), Var::Y), p("x - y"));
        assert_eq!(gcd(&p("x*y + y"), &p("y^2*x + y^2")), p("x*y + y"));
        assert_eq!(gcd(&p("x + 1"), &p("x + 2")), Poly::one());
        // oracle quartic for the focus pole shares the auxiliary circle
        let oracle = p("(x^2+y^2-3*x)^2 - 25*(x-3)^2 - 16*y^2");
        assert_eq!(gcd(&oracle, &p("x^2+y^2-25")), p("x^2+y^2-25"));
    }

    #[test]
    fn content_primitive_examples() {
        let (c, pp) = content_primitive(&p("2*x^2*y + 4*x*y"), Var::X).unwrap();
        assert_eq!((c, pp), (p("2*y"), p("x^2 + 2*x")));
        let (c, pp) = content_primitive(&p("x^2+1"), Var::X).unwrap();
        assert_eq!((c, pp), (p("1"), p("x^2+1")));
        assert_eq!(content_primitive(&Poly::zero(), Var::X), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&p("(x-y)^2*(x+y)")).unwrap(), p("(x-y)*(x+y)").normalized());
        let cubic = p("x^2*y - 3*x^2 - 4*x*y + 8*x + y^3 - 8*y^2 + 16*y + 16");
        assert_eq!(squarefree_part(&cubic.pow(2)).unwrap(), cubic);
        assert_eq!(squarefree_part(&p("y^2*(x+1)")).unwrap(), p("x*y + y"));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 1..5).prop_map(|ts| {
            Poly::from_terms(ts.into_iter().map(|(i, j, c)| {
                (
                    super::super::Monomial::from_exps(vec![i, j]),
                    crate::numeric::rint(c),
                )
            }))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn gcd_of_multiples_is_divisible(a in small_poly(), b in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            let d = gcd(&(&a * &g), &(&b * &g));
            prop_assert!(d.try_div(&g.normalized()).is_some() || (a.is_zero() && b.is_zero()));
        }

        #[test]
        fn bivariate_gcd_matches_prs(a in small_poly(), b in small_poly(), g in small_poly()) {
            let (fa, fb) = (&a * &g, &b * &g);
            prop_assume!(fa.contains_var(Var::X) && fb.contains_var(Var::X));
            prop_assume!(fa.contains_var(Var::Y) && fb.contains_var(Var::Y));
            let fast = bivariate_gcd(&fa, &fb, Var::X, Var::Y);
            let cont = gcd(&content_in(&fa, Var::X), &content_in(&fb, Var::X));
            let slow = &cont * &prs_gcd(&primitive_in(&fa, Var::X), &primitive_in(&fb, Var::X), Var::X);
            prop_assert_eq!(fast, slow.normalized());
        }

        #[test]
        fn squarefree_ignores_squares(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_constant() && !b.is_constant());
            prop_assume!(gcd(&a, &b).is_constant());
            prop_assume!(squarefree_part(&a).unwrap().associate(&a) && squarefree_part(&b).unwrap().associate(&b));
            let lhs = squarefree_part(&(&a.pow(2) * &b)).unwrap();
            let rhs = squarefree_part(&(&a * &b)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
