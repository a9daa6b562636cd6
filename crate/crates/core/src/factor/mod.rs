//! Factorization over Q: square-free decomposition, univariate Zassenhaus,
//! bivariate Hensel lifting.

mod bivariate;
pub(crate) mod modp;
pub(crate) mod zassenhaus;

use std::fmt;

use crate::error::{Error, Result};
use crate::numeric::Rat;
use crate::poly::{content_primitive, gcd, Var};
use crate::upoly::UPoly;
use crate::Poly;

/// `unit · ∏ factor^mult`, factors normalized and irreducible over Q.
#[derive(Clone, PartialEq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    fn from_parts(p: &Poly, mut factors: Vec<(Poly, u32)>) -> Result<Self> {
        let key = |q: &Poly| {
            let terms: Vec<_> = q.terms().rev().map(|(m, c)| (m.clone(), c.clone())).collect();
            (q.total_degree(), terms)
        };
        factors.sort_by(|(a, ma), (b, mb)| (key(a), ma).cmp(&(key(b), mb)));
        let bare = factors
            .iter()
            .fold(Poly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        let unit = p
            .try_div(&bare)
            .and_then(|u| u.as_constant())
            .ok_or_else(|| Error::Internal("factors do not divide the input".into()))?;
        let out = Factorization { unit, factors };
        if !verify_product(p, &out) {
            return Err(Error::Internal("factorization failed verification".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::numeric::format_rat(&self.unit))?;
        for (p, m) in &self.factors {
            if *m == 1 {
                write!(f, " * ({p})")?;
            } else {
                write!(f, " * ({p})^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// True iff `unit · ∏ factor^mult` equals `p` exactly.
pub fn verify_product(p: &Poly, f: &Factorization) -> bool {
    f.product() == *p
}

/// Square-free decomposition with respect to `v`, via Yun's algorithm.
/// Parts are normalized; their product recovers `p` up to its content in `v`.
pub fn yun_squarefree(p: &Poly, v: Var) -> Result<Vec<(Poly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree(v) == 0 {
        return Ok(Vec::new());
    }
    let (_, prim) = content_primitive(p, v)?;
    let dp = prim.derivative(v);
    let a0 = gcd(&prim, &dp);
    let mut b = prim.try_div(&a0).expect("gcd divides");
    let mut c = dp.try_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative(v);
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree(v) > 0 {
        let a = gcd(&b, &d);
        if a.degree(v) > 0 {
            out.push((a.normalized(), i));
        }
        b = b.try_div(&a).expect("gcd divides");
        c = d.try_div(&a).expect("gcd divides");
        d = &c - &b.derivative(v);
        i += 1;
    }
    Ok(out)
}

/// Yun over Q[x] for dense polynomials; parts are monic.
pub(crate) fn upoly_squarefree(f: &UPoly) -> Vec<(UPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() <= 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let mut c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Complete factorization of a polynomial in at most one variable.
pub fn factor_univariate(p: &Poly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = p.vars();
    if vars.len() > 1 {
        return Err(Error::Unsupported(format!(
            "factor_univariate on a polynomial in {} variables",
            vars.len()
        )));
    }
    let mut factors = Vec::new();
    if let Some(&v) = vars.first() {
        for (q, m) in yun_squarefree(p, v)? {
            let u = UPoly::from_poly(&q, v).expect("univariate");
            for z in zassenhaus::factor_squarefree(&u.primitive_int())? {
                factors.push((bivariate::zpoly_to_upoly(&z).to_poly(v).normalized(), m));
            }
        }
    }
    Factorization::from_parts(p, factors)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Method {
    Hensel,
    Kronecker,
}

fn factor_two_vars(p: &Poly, method: Method) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = p.vars();
    match vars.len() {
        0 | 1 => return factor_univariate(p),
        2 => {}
        n => {
            return Err(Error::Unsupported(format!(
                "factorization in {n} variables"
            )))
        }
    }
    let (xv, yv) = (vars[0], vars[1]);
    let (content, prim) = content_primitive(p, xv)?;
    let mut factors = factor_univariate(&content)?.factors;
    for (q, m) in yun_squarefree(&prim, xv)? {
        let parts = match method {
            Method::Hensel => bivariate::factor_squarefree(&q, xv, yv)?,
            Method::Kronecker => bivariate::factor_kronecker(&q, xv, yv)?,
        };
        factors.extend(parts.into_iter().map(|f| (f, m)));
    }
    Factorization::from_parts(p, factors)
}

/// Complete factorization over Q of a polynomial in at most two variables.
/// The result is checked with [`verify_product`] before it is returned.
pub fn factor_bivariate(p: &Poly) -> Result<Factorization> {
    factor_two_vars(p, Method::Hensel)
}

/// Fallback path: Kronecker substitution `y -> x^(deg_x + 1)` and a
/// univariate factorization. Slower; used to cross-check.
pub fn factor_kronecker(p: &Poly) -> Result<Factorization> {
    factor_two_vars(p, Method::Kronecker)
}

pub fn is_irreducible(p: &Poly) -> Result<bool> {
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    let f = factor_bivariate(p)?;
    Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
}

/// k-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    Subsets {
        n,
        idx: (0..k).collect(),
        done: k > n,
    }
}

struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
