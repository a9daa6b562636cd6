//! Univariate factorization over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Field, Fp};
use crate::error::{Error, Result};
use crate::numeric::Int;

/// Dense integer polynomial, low to high.
pub(crate) type ZPoly = Vec<Int>;

const ODD_PRIMES: [u64; 25] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101,
];

pub(crate) fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub(crate) fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

/// Exact quotient over Z, or `None` if `b` does not divide `a`.
pub(crate) fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let lb = b.last()?;
    let mut r = a.clone();
    if r.len() < b.len() {
        return r.iter().all(|c| c.is_zero()).then(Vec::new);
    }
    let mut q = vec![Int::zero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| ztrim(q))
}

pub(crate) fn zcontent(a: &ZPoly) -> Int {
    a.iter().fold(Int::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn zprimitive(a: &ZPoly) -> ZPoly {
    let mut g = zcontent(a);
    if g.is_zero() {
        return Vec::new();
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

pub(crate) fn to_fp(a: &ZPoly, f: Field) -> Fp {
    let p = BigInt::from(f.p);
    f.norm(
        a.iter()
            .map(|c| c.mod_floor(&p).to_u64().expect("reduced below p"))
            .collect(),
    )
}

fn symmetric(c: &Int, m: &Int, half: &Int) -> Int {
    let r = c.mod_floor(m);
    if &r > half {
        r - m
    } else {
        r
    }
}

/// Factors a square-free primitive polynomial of positive degree with
/// positive leading coefficient into primitive irreducibles.
pub(crate) fn factor_squarefree(f: &ZPoly) -> Result<Vec<ZPoly>> {
    let n = f.len() - 1;
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let lc = f.last().expect("nonzero").clone();
    let mut chosen = None;
    for &p in &ODD_PRIMES {
        let field = Field::new(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = to_fp(f, field);
        if field.is_squarefree(&fp) {
            chosen = Some((field, fp));
            break;
        }
    }
    let (field, fp) = chosen.ok_or(Error::NotSquareFree)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ field.p);
    let modular = field.factor_squarefree(&fp, &mut rng);
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }

    // p^k > 2 |lc| 2^n ||f||_2
    let norm2: Int = f.iter().map(|c| c * c).sum::<Int>().sqrt() + 1;
    let bound = lc.abs() * (Int::one() << n) * norm2 * 2;
    let p = BigInt::from(field.p);
    let mut modulus = p.clone();
    let mut k = 1;
    while modulus <= bound {
        modulus *= &p;
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, field, k);
    Ok(recombine(f, lifted, &modulus))
}

/// Lifts monic factors `f ≡ lc·∏g_i (mod p)` to precision `p^k`.
fn hensel_lift(f: &ZPoly, gs: &[Fp], field: Field, k: u32) -> Vec<ZPoly> {
    let p = BigInt::from(field.p);
    let lc = f.last().expect("nonzero").clone();
    let lc_p = to_fp(&vec![lc.clone()], field)[0];
    let lc_inv = field.inv(lc_p);
    let r = gs.len();
    let s: Vec<Fp> = (0..r)
        .map(|i| {
            let others = (0..r)
                .filter(|&l| l != i)
                .fold(vec![1u64], |acc, l| field.mul(&acc, &gs[l]));
            let inv = field
                .inverse_mod(&others, &gs[i])
                .expect("distinct modular factors are coprime");
            field.scale(&inv, lc_inv)
        })
        .collect();
    let mut lifted: Vec<ZPoly> = gs
        .iter()
        .map(|g| g.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let mut pj = p.clone();
    for _ in 1..k {
        let next = &pj * &p;
        let prod = lifted
            .iter()
            .fold(vec![lc.clone()], |acc, g| {
                zmul(&acc, g).into_iter().map(|c| c.mod_floor(&next)).collect()
            });
        let diff: ZPoly = (0..f.len())
            .map(|i| {
                let d = &f[i] - prod.get(i).cloned().unwrap_or_default();
                d.mod_floor(&next) / &pj
            })
            .collect();
        let e = to_fp(&diff, field);
        if !e.is_empty() {
            for (g, (gi, si)) in lifted.iter_mut().zip(gs.iter().zip(&s)) {
                let delta = field.rem(&field.mul(&e, si), gi);
                for (j, &c) in delta.iter().enumerate() {
                    g[j] += &pj * BigInt::from(c);
                }
            }
        }
        pj = next;
    }
    lifted
}

/// Subset recombination, smallest subsets first.
fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, modulus: &Int) -> Vec<ZPoly> {
    let half = modulus / 2;
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in super::subsets(lifted.len(), size) {
            let lc = f.last().expect("nonzero").clone();
            let prod = subset.iter().fold(vec![lc], |acc, &i| {
                zmul(&acc, &lifted[i])
                    .iter()
                    .map(|c| symmetric(c, modulus, &half))
                    .collect()
            });
            let cand = zprimitive(&ztrim(prod));
            if let Some(q) = zdiv_exact(&f, &cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                f = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    out.push(zprimitive(&f));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        c.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn sorted(mut v: Vec<ZPoly>) -> Vec<ZPoly> {
        v.sort();
        v
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(sorted(factor_squarefree(&z(&[-1, 0, 1])).unwrap()), vec![z(&[-1, 1]), z(&[1, 1])]);
        assert_eq!(factor_squarefree(&z(&[1, 0, 1])).unwrap(), vec![z(&[1, 0, 1])]);
        assert_eq!(factor_squarefree(&z(&[1, -6, 2])).unwrap(), vec![z(&[1, -6, 2])]);
        // x^4 + 1 splits mod every prime but is irreducible
        assert_eq!(factor_squarefree(&z(&[1, 0, 0, 0, 1])).unwrap(), vec![z(&[1, 0, 0, 0, 1])]);
    }

    #[test]
    fn non_monic_product() {
        let a = z(&[3, -7, 5]);
        let b = z(&[-2, 0, 0, 4, 9]);
        let c = z(&[1, 6]);
        let f = zmul(&zmul(&a, &b), &c);
        let got = sorted(factor_squarefree(&f).unwrap());
        assert_eq!(got, sorted(vec![a, b, c]));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^8 - 40x^6 + 352x^4 - 960x^2 + 576, minimal polynomial of √2+√3+√5
        let f = z(&[576, 0, -960, 0, 352, 0, -40, 0, 1]);
        assert_eq!(factor_squarefree(&f).unwrap(), vec![f]);
    }
}
