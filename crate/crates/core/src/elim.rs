//! Resultants and implicitization of rational curves.


use crate::error::{Error, Result};
use crate::factor::factor_bivariate;
use crate::numeric::{rat, rint, Rat};
use crate::poly::{gcd, squarefree_part, substitute, RationalFunction, Var};
use crate::Poly;

/// Square matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(n: usize, entries: Vec<Poly>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::Internal(format!(
                "matrix of dimension {n} needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(PolyMatrix { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.n + j]
    }

    /// Fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> Poly {
        let n = self.n;
        let mut m: Vec<Vec<Poly>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut sign = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = !sign;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.try_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }
}

fn check_degrees(p: &Poly, q: &Poly, v: Var) -> Result<(usize, usize)> {
    let (m, n) = (p.degree(v) as usize, q.degree(v) as usize);
    if m == 0 && n == 0 {
        return Err(Error::BothConstant);
    }
    Ok((m, n))
}

/// Sylvester matrix of `p` and `q` in `v`, rows of `p` first.
pub fn sylvester(p: &Poly, q: &Poly, v: Var) -> Result<PolyMatrix> {
    let (m, n) = check_degrees(p, q, v)?;
    let size = m + n;
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    let coeff = |c: &[Poly], k: usize| c.get(k).cloned().unwrap_or_default();
    let mut entries = vec![Poly::zero(); size * size];
    for i in 0..n {
        for k in 0..=m {
            entries[i * size + i + k] = coeff(&pc, m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            entries[(n + i) * size + i + k] = coeff(&qc, n - k);
        }
    }
    PolyMatrix::new(size, entries)
}

/// `Res_v(p, q)` as the Bareiss determinant of the Sylvester matrix.
pub fn resultant_bareiss(p: &Poly, q: &Poly, v: Var) -> Result<Poly> {
    Ok(sylvester(p, q, v)?.determinant())
}

/// `Res_v(p, q)` by the subresultant remainder sequence. Equal to the
/// Sylvester determinant with the rows of `p` first.
pub fn resultant(p: &Poly, q: &Poly, v: Var) -> Result<Poly> {
    let (m, n) = check_degrees(p, q, v)?;
    if p.is_zero() || q.is_zero() {
        return Ok(Poly::zero());
    }
    if n == 0 {
        return Ok(q.pow(m as u32));
    }
    if m == 0 {
        return Ok(p.pow(n as u32));
    }
    let mut negate = false;
    let (mut a, mut b) = if m < n {
        negate = m * n % 2 == 1;
        (q.coeffs_in(v), p.coeffs_in(v))
    } else {
        (p.coeffs_in(v), q.coeffs_in(v))
    };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = (da - db) as u32;
        if da * db % 2 == 1 {
            negate = !negate;
        }
        let (_, r, _) = crate::poly::prem_coeffs(&a, &b);
        if r.is_empty() {
            return Ok(Poly::zero());
        }
        let div = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| c.try_div(&div).expect("subresultant division is exact"))
            .collect();
        g = a.last().cloned().expect("nonzero");
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .try_div(&h.pow(delta - 1))
                .expect("subresultant division is exact"),
        };
        if b.len() == 1 {
            break;
        }
    }
    let da = (a.len() - 1) as u32;
    let lb = &b[0];
    let res = if da == 1 {
        lb.clone()
    } else {
        lb.pow(da)
            .try_div(&h.pow(da - 1))
            .expect("subresultant division is exact")
    };
    Ok(if negate { -res } else { res })
}

/// Output of [`implicitize`].
#[derive(Clone, Debug, PartialEq)]
pub struct Implicitization {
    /// Normalized product of the factors that vanish on the curve.
    pub curve: Poly,
    /// `Res_t(x·den_x − num_x, y·den_y − num_y)` as computed.
    pub raw: Poly,
    /// Factors of `raw` (and its content in the curve variables) that were
    /// dropped, normalized.
    pub removed: Vec<Poly>,
}

/// Parameter values used to test factors, before pole removal.
pub fn default_sample_values() -> Vec<Rat> {
    [1, 2, 3, 5, 7, 11, -1, -2]
        .into_iter()
        .map(rint)
        .chain([rat(1, 2), rat(1, 3)])
        .collect()
}

pub const MIN_SAMPLES: usize = 6;

fn hits_pole(r: &RationalFunction, param: Var, t0: &Rat) -> bool {
    r.den().eval_partial(&[(param, t0.clone())]).is_zero()
}

/// The default samples that avoid the poles of the parametrization.
pub fn usable_samples(param: (&RationalFunction, &RationalFunction), t: Var) -> Result<Vec<Rat>> {
    let out: Vec<Rat> = default_sample_values()
        .into_iter()
        .filter(|t0| !hits_pole(param.0, t, t0) && !hits_pole(param.1, t, t0))
        .collect();
    if out.len() < MIN_SAMPLES {
        return Err(Error::TooFewSamples(out.len()));
    }
    Ok(out)
}

/// True if `f` vanishes at the curve point of every sample.
pub(crate) fn vanishes_on(
    f: &Poly,
    param: (&RationalFunction, &RationalFunction),
    t: Var,
    out: (Var, Var),
    samples: &[Rat],
) -> Result<bool> {
    for t0 in samples {
        let bind = [(t, t0.clone())];
        let x0 = param.0.eval_partial(&bind)?;
        let y0 = param.1.eval_partial(&bind)?;
        if !substitute(f, &[(out.0, x0), (out.1, y0)])?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits `factors` into those vanishing at all sampled points of the
/// parametrization `(x(t), y(t))` and the rest.
pub fn filter_relevant_factors(
    factors: &[Poly],
    param: (&RationalFunction, &RationalFunction),
    samples: &[Rat],
) -> Result<(Vec<Poly>, Vec<Poly>)> {
    filter_in(factors, param, Var::T, (Var::X, Var::Y), samples)
}

pub(crate) fn filter_in(
    factors: &[Poly],
    param: (&RationalFunction, &RationalFunction),
    t: Var,
    out: (Var, Var),
    samples: &[Rat],
) -> Result<(Vec<Poly>, Vec<Poly>)> {
    for t0 in samples {
        if hits_pole(param.0, t, t0) || hits_pole(param.1, t, t0) {
            return Err(Error::SampleHitsPole(crate::numeric::format_rat(t0)));
        }
    }
    let mut kept = Vec::new();
    let mut removed = Vec::new();
    for f in factors {
        if vanishes_on(f, param, t, out, samples)? {
            kept.push(f.clone());
        } else {
            removed.push(f.clone());
        }
    }
    if kept.is_empty() {
        return Err(Error::AllFactorsRejected);
    }
    Ok((kept, removed))
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `vars`.
pub fn content_in_vars(p: &Poly, vars: &[Var]) -> Poly {
    let mut parts = vec![p.clone()];
    for &v in vars {
        parts = parts.iter().flat_map(|q| q.coeffs_in(v)).collect();
    }
    parts
        .iter()
        .filter(|c| !c.is_zero())
        .fold(Poly::zero(), |g, c| gcd(&g, c))
}

/// Distinct candidate components of an eliminant in the variables `out`,
/// plus its nonconstant content in other variables (normalized).
pub(crate) fn split_eliminant(raw: &Poly, out: (Var, Var)) -> Result<(Vec<Poly>, Option<Poly>)> {
    if raw.is_zero() {
        return Err(Error::DegenerateParametrization);
    }
    let only_curve_vars = raw.vars().iter().all(|&v| v == out.0 || v == out.1);
    if only_curve_vars {
        let f = factor_bivariate(raw)?;
        return Ok((f.factors.into_iter().map(|(q, _)| q).collect(), None));
    }
    let content = content_in_vars(raw, &[out.0, out.1]);
    let prim = raw.try_div(&content).expect("content divides");
    let cands = if prim.is_constant() {
        Vec::new()
    } else {
        vec![squarefree_part(&prim)?]
    };
    Ok((cands, (!content.is_constant()).then(|| content.normalized())))
}

/// Implicit equation of `(x(t), y(t))` in the variables `out`.
pub fn implicitize(
    xr: &RationalFunction,
    yr: &RationalFunction,
    param: Var,
    out: (Var, Var),
) -> Result<Implicitization> {
    let p1 = &(&Poly::var(out.0) * xr.den()) - xr.num();
    let p2 = &(&Poly::var(out.1) * yr.den()) - yr.num();
    if !p1.contains_var(param) && !p2.contains_var(param) {
        return Err(Error::DegenerateParametrization);
    }
    let raw = resultant(&p1, &p2, param)?;
    let (cands, content) = split_eliminant(&raw, out)?;
    let samples = usable_samples((xr, yr), param)?;
    let (kept, mut removed) = filter_in(&cands, (xr, yr), param, out, &samples)?;
    if let Some(c) = content {
        removed.insert(0, c);
    }
    let curve = kept.iter().fold(Poly::one(), |acc, f| &acc * f).normalized();
    Ok(Implicitization {
        curve,
        raw,
        removed,
    })
}
