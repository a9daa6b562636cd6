//! Bivariate factorization: lucky specialization, y-adic Hensel lifting over
//! Q, recombination by trial division. Also the Kronecker substitution path.

use num_traits::{One, Zero};

use super::zassenhaus::{self, ZPoly};
use crate::error::{Error, Result};
use crate::numeric::{rint, Int, Rat};
use crate::poly::{content_primitive, Monomial, Var};
use crate::upoly::UPoly;
use crate::Poly;

/// Truncated power series in y with coefficients in Q[x].
type Series = Vec<UPoly>;

fn series_mul(a: &Series, b: &Series, k: usize) -> Series {
    let mut out = vec![UPoly::zero(); k.min(a.len() + b.len() - 1)];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= k {
                break;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

fn to_series(p: &Poly, xv: Var, yv: Var) -> Series {
    p.coeffs_in(yv)
        .iter()
        .map(|c| UPoly::from_poly(c, xv).expect("bivariate input"))
        .collect()
}

fn from_series(s: &Series, xv: Var, yv: Var) -> Poly {
    let coeffs: Vec<Poly> = s.iter().map(|c| c.to_poly(xv)).collect();
    Poly::from_coeffs_in(yv, &coeffs)
}

pub(crate) fn zpoly_to_upoly(z: &ZPoly) -> UPoly {
    UPoly::from_int_coeffs(z)
}

/// Candidate specialization points 0, 1, -1, 2, -2, ... up to |c| = 50.
fn lucky_points() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=50).flat_map(|c| [c, -c]))
}

/// Irreducible factors of `g`, which must be square-free, primitive with
/// respect to `xv` and of positive degree in `xv`.
pub(crate) fn factor_squarefree(g: &Poly, xv: Var, yv: Var) -> Result<Vec<Poly>> {
    if g.degree(yv) == 0 {
        let u = UPoly::from_poly(g, xv).ok_or(Error::Internal("not univariate".into()))?;
        return Ok(zassenhaus::factor_squarefree(&u.primitive_int())?
            .iter()
            .map(|z| zpoly_to_upoly(z).to_poly(xv).normalized())
            .collect());
    }
    let n = g.degree(xv) as usize;
    let lc = g.lc_in(xv);
    let mut lucky = None;
    for c in lucky_points() {
        let cr = rint(c);
        if lc.eval_partial(&[(yv, cr.clone())]).is_zero() {
            continue;
        }
        let f0 = UPoly::from_poly(&g.eval_partial(&[(yv, cr)]), xv).expect("bivariate input");
        if f0.deg() as usize == n && f0.gcd(&f0.derivative()).deg() == 0 {
            lucky = Some((c, f0));
            break;
        }
    }
    let (c, f0) = lucky.ok_or(Error::LuckyPointNotFound)?;
    let univ = zassenhaus::factor_squarefree(&f0.primitive_int())?;
    if univ.len() == 1 {
        return Ok(vec![g.normalized()]);
    }
    let fhat: Vec<UPoly> = univ.iter().map(|z| zpoly_to_upoly(z).monic()).collect();

    let shift = &Poly::var(yv) + &Poly::constant(rint(c));
    let h = g.compose(yv, &shift);
    let hs = to_series(&h, xv, yv);
    let lcs: Series = to_series(&h.lc_in(xv), xv, yv);
    let k = (h.degree(yv) + h.lc_in(xv).degree(yv) + 1) as usize;
    let lc0 = lcs[0].coeff(0);
    let r = fhat.len();
    let s: Vec<UPoly> = (0..r)
        .map(|i| {
            let others = (0..r)
                .filter(|&l| l != i)
                .fold(UPoly::one(), |acc, l| &acc * &fhat[l]);
            others
                .inverse_mod(&fhat[i])
                .expect("factors of a square-free polynomial are coprime")
                .scale(&lc0.recip())
        })
        .collect();

    let mut lifted: Vec<Series> = fhat.iter().map(|f| vec![f.clone()]).collect();
    for j in 1..k {
        let prod = lifted
            .iter()
            .fold(lcs.clone(), |acc, f| series_mul(&acc, f, j + 1));
        let target = hs.get(j).cloned().unwrap_or_else(UPoly::zero);
        let e = &target - &prod.get(j).cloned().unwrap_or_else(UPoly::zero);
        for (f, (fi, si)) in lifted.iter_mut().zip(fhat.iter().zip(&s)) {
            f.push((&e * si).rem(fi));
        }
    }

    let mut rest = h;
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc_series = to_series(&rest.lc_in(xv), xv, yv);
        let mut hit = None;
        for subset in super::subsets(lifted.len(), size) {
            let prod = subset
                .iter()
                .fold(lc_series.clone(), |acc, &i| series_mul(&acc, &lifted[i], k));
            let cand = from_series(&prod, xv, yv);
            if cand.degree(xv) == 0 {
                continue;
            }
            let (_, prim) = content_primitive(&cand, xv)?;
            if let Some(q) = rest.try_div(&prim) {
                hit = Some((subset, prim, q));
                break;
            }
        }
        match hit {
            Some((subset, prim, q)) => {
                found.push(prim);
                rest = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f)| f)
                    .collect();
            }
            None => size += 1,
        }
    }
    found.push(rest);
    let back = &Poly::var(yv) - &Poly::constant(rint(c));
    Ok(found
        .iter()
        .map(|f| f.compose(yv, &back).normalized())
        .collect())
}

/// Same contract as [`factor_squarefree`], via `y -> x^N` and univariate
/// factoring.
pub(crate) fn factor_kronecker(g: &Poly, xv: Var, yv: Var) -> Result<Vec<Poly>> {
    let nx = g.degree(xv) + 1;
    let gi = g.normalized();
    let deg = (g.degree(xv) + nx * g.degree(yv)) as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (m, c) in gi.terms() {
        coeffs[(m.exp(xv) + nx * m.exp(yv)) as usize] += c;
    }
    let image = UPoly::new(coeffs);
    let mut pieces: Vec<ZPoly> = Vec::new();
    for (q, mult) in super::upoly_squarefree(&image) {
        for z in zassenhaus::factor_squarefree(&q.primitive_int())? {
            for _ in 0..mult {
                pieces.push(z.clone());
            }
        }
    }
    let unmap = |z: &ZPoly| -> Poly {
        Poly::from_terms(z.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| {
            let e = e as u32;
            let mut exps = vec![0u32; xv.0.max(yv.0) + 1];
            exps[xv.0] = e % nx;
            exps[yv.0] = e / nx;
            (Monomial::from_exps(exps), Rat::from_integer(c.clone()))
        }))
    };
    let mut rest = gi;
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pieces.len() && !rest.is_constant() {
        let mut hit = None;
        for subset in super::subsets(pieces.len(), size) {
            let prod = subset
                .iter()
                .fold(vec![Int::one()], |acc, &i| zassenhaus::zmul(&acc, &pieces[i]));
            let cand = unmap(&prod);
            if cand.is_constant() {
                continue;
            }
            if let Some(q) = rest.try_div(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand.normalized());
                rest = q;
                pieces = pieces
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, z)| z)
                    .collect();
            }
            None => size += 1,
        }
    }
    if !rest.is_constant() {
        found.push(rest.normalized());
    }
    Ok(found)
}
