//! Pedal curves of conics: the locus of the feet of the perpendiculars from
//! a pole onto the tangent lines.

use num_traits::Zero;

use crate::conic::{foot_of_perpendicular, rational_parametrization, Conic, Point2, SymbolicPoint};
use crate::elim::{self, content_in_vars, implicitize, split_eliminant, usable_samples};
use crate::error::{Error, Result};
use crate::numeric::{rat_sqrt, rint, Rat};
use crate::poly::{gcd, Monomial, RationalFunction, Var};
use crate::upoly::UPoly;
use crate::Poly;

pub use crate::elim::filter_relevant_factors;

/// Which lines through the moving conic point the perpendicular is dropped on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineFamily {
    Tangent,
    Normal,
    /// Both at once, eliminated with a single resultant. The eliminant
    /// then holds the tangent pedal and the normal pedal together.
    TangentOrNormal,
}

impl LineFamily {
    pub fn name(self) -> &'static str {
        match self {
            LineFamily::Tangent => "tangent",
            LineFamily::Normal => "normal",
            LineFamily::TangentOrNormal => "tangent-or-normal",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PedalResult {
    pub conic: Conic,
    pub pole: SymbolicPoint,
    pub family: LineFamily,
    /// Foot of the perpendicular as a function of `t`.
    pub parametrization: (RationalFunction, RationalFunction),
    /// Normalized, square-free equation of the pedal.
    pub implicit: Poly,
    /// Resultant as computed, before any cleanup.
    pub raw: Poly,
    /// Dropped factors of `raw`, including content in the pole variables.
    pub removed: Vec<Poly>,
    /// Content in the pole variables times every component traced by some
    /// branch of the construction, normalized.
    pub eliminant: Poly,
}

fn moving_point(conic: &Conic) -> Result<(RationalFunction, RationalFunction)> {
    let p = rational_parametrization(conic)?;
    Ok((p.x, p.y))
}

/// Feet of the perpendiculars from `pole` onto the tangents, in `t`.
pub fn pedal_foot_param(
    conic: &Conic,
    pole: &SymbolicPoint,
) -> Result<(RationalFunction, RationalFunction)> {
    let (x, y) = moving_point(conic)?;
    foot_of_perpendicular(&conic.tangent_at(&x, &y)?, pole)
}

/// Feet of the perpendiculars from `pole` onto the normals, in `t`.
pub fn normal_foot_param(
    conic: &Conic,
    pole: &SymbolicPoint,
) -> Result<(RationalFunction, RationalFunction)> {
    let (x, y) = moving_point(conic)?;
    foot_of_perpendicular(&conic.normal_at(&x, &y)?, pole)
}

/// Tangent pedal of `conic` with respect to `pole`.
pub fn pedal_implicit(conic: &Conic, pole: &SymbolicPoint) -> Result<PedalResult> {
    pedal_with_family(conic, pole, LineFamily::Tangent)
}

pub fn pedal_with_family(
    conic: &Conic,
    pole: &SymbolicPoint,
    family: LineFamily,
) -> Result<PedalResult> {
    let out = (Var::X, Var::Y);
    match family {
        LineFamily::Tangent | LineFamily::Normal => {
            let (xr, yr) = if family == LineFamily::Tangent {
                pedal_foot_param(conic, pole)?
            } else {
                normal_foot_param(conic, pole)?
            };
            let imp = implicitize(&xr, &yr, Var::T, out)?;
            let content = content_in_vars(&imp.raw, &[out.0, out.1]);
            let eliminant = if content.is_constant() {
                imp.curve.clone()
            } else {
                (&content * &imp.curve).normalized()
            };
            Ok(PedalResult {
                conic: conic.clone(),
                pole: pole.clone(),
                family,
                parametrization: (xr, yr),
                implicit: imp.curve,
                raw: imp.raw,
                removed: imp.removed,
                eliminant,
            })
        }
        LineFamily::TangentOrNormal => tangent_or_normal(conic, pole),
    }
}

/// Feet `H` with `(H − B)·(H − D) = 0` and `H − B` along the tangent or the
/// normal at `B`.
fn tangent_or_normal(conic: &Conic, pole: &SymbolicPoint) -> Result<PedalResult> {
    let out = (Var::X, Var::Y);
    let (bx, by) = moving_point(conic)?;
    let g = gcd(bx.den(), by.den());
    let fx = by.den().try_div(&g).expect("gcd divides");
    let fy = bx.den().try_div(&g).expect("gcd divides");
    let (nx, ny, w) = (bx.num() * &fx, by.num() * &fy, bx.den() * &fx);
    let (x, y) = (Poly::var(Var::X), Poly::var(Var::Y));
    let hx = &(&x * &w) - &nx;
    let hy = &(&y * &w) - &ny;
    let thales = &(&hx * &(&x - &pole.x)) + &(&hy * &(&y - &pole.y));
    let [a, b, c, d, e, _] = conic.coeffs().clone();
    let two = rint(2);
    let gx = &(&nx.scale(&(&two * &a)) + &ny.scale(&b)) + &w.scale(&d);
    let gy = &(&nx.scale(&b) + &ny.scale(&(&two * &c))) + &w.scale(&e);
    let along_tangent = &(&hx * &gx) + &(&hy * &gy);
    let along_normal = &(&hy * &gx) - &(&hx * &gy);
    let raw = elim::resultant(&thales, &(&along_tangent * &along_normal), Var::T)?;

    let tangent = pedal_foot_param(conic, pole)?;
    let normal = normal_foot_param(conic, pole)?;
    let (cands, content) = split_eliminant(&raw, out)?;
    let ts = usable_samples((&tangent.0, &tangent.1), Var::T)?;
    let ns = usable_samples((&normal.0, &normal.1), Var::T)?;
    let mut implicit = Poly::one();
    let mut eliminant = content.clone().unwrap_or_else(Poly::one);
    let mut removed: Vec<Poly> = content.into_iter().collect();
    let mut any_tangent = false;
    for f in cands {
        let on_t = elim::vanishes_on(&f, (&tangent.0, &tangent.1), Var::T, out, &ts)?;
        let on_n = elim::vanishes_on(&f, (&normal.0, &normal.1), Var::T, out, &ns)?;
        if on_t {
            implicit = &implicit * &f;
            any_tangent = true;
        }
        if on_t || on_n {
            eliminant = &eliminant * &f;
        } else {
            removed.push(f);
        }
    }
    if !any_tangent {
        return Err(Error::AllFactorsRejected);
    }
    Ok(PedalResult {
        conic: conic.clone(),
        pole: pole.clone(),
        family: LineFamily::TangentOrNormal,
        parametrization: tangent,
        implicit: implicit.normalized(),
        raw,
        removed,
        eliminant: eliminant.normalized(),
    })
}

/// `(x²+y²−px−qy)² − a2(x−p)² − b2(y−q)²`, normalized: the tangent pedal of
/// `x²/a2 + y²/b2 = 1` with respect to `(p, q)`, up to extra components.
pub fn central_pedal_oracle(a2: &Rat, b2: &Rat, pole: &Point2) -> Poly {
    let x = Poly::var(Var::X);
    let y = Poly::var(Var::Y);
    let px = Poly::constant(pole.x.clone());
    let py = Poly::constant(pole.y.clone());
    let base = &(&(&(&x * &x) + &(&y * &y)) - &(&px * &x)) - &(&py * &y);
    let dx = &x - &px;
    let dy = &y - &py;
    let q = &(&(&base * &base) - &(&dx * &dx).scale(a2)) - &(&dy * &dy).scale(b2);
    q.normalized()
}

/// Parameters of a translated canonical limaçon
/// `(X²+Y²+a·e·Y)² − a²(X²+Y²)` with `X = x + r1`, `Y = y + r2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LimaconMatch {
    pub a: Rat,
    pub e: Rat,
    pub r1: Rat,
    pub r2: Rat,
}

impl LimaconMatch {
    /// The matched quartic in `x`, `y`, normalized.
    pub fn quartic(&self) -> Poly {
        canonical_limacon(&self.a, &self.e)
            .translate(&[(Var::X, self.r1.clone()), (Var::Y, self.r2.clone())])
            .normalized()
    }
}

pub fn canonical_limacon(a: &Rat, e: &Rat) -> Poly {
    let x = Poly::var(Var::X);
    let y = Poly::var(Var::Y);
    let s = &(&x * &x) + &(&y * &y);
    let inner = &s + &y.scale(&(a * e));
    &(&inner * &inner) - &s.scale(&(a * a))
}

fn xy(i: u32, j: u32) -> Monomial {
    Monomial::from_exps(vec![i, j])
}

/// Every translated canonical limaçon with rational `a ≠ 0`, `e` equal to
/// `q` up to a constant factor. Each returned match is checked by expanding
/// it back.
pub fn limacon_match(q: &Poly) -> Result<Vec<LimaconMatch>> {
    if q.is_zero()
        || q.total_degree() != 4
        || q.vars().iter().any(|&v| v != Var::X && v != Var::Y)
    {
        return Err(Error::NotQuartic);
    }
    let lead = q.coeff(&xy(4, 0));
    if lead.is_zero() {
        return Ok(Vec::new());
    }
    let qn = q.scale(&lead.recip());
    let c30 = qn.coeff(&xy(3, 0));
    let c03 = qn.coeff(&xy(0, 3));
    let c20 = qn.coeff(&xy(2, 0));
    let r1 = &c30 / rint(4);

    // unknown r2 carried as the variable s; K = a·e and A = a² follow from
    // the Y³ and X² coefficients
    let s = Poly::var(Var::S);
    let k = &Poly::constant(&c03 / rint(2)) - &s.scale(&rint(2));
    let big_a = &(&(&Poly::constant(rint(6) * &r1 * &r1) + &(&s * &s).scale(&rint(2)))
        + &(&k * &s).scale(&rint(2)))
        - &Poly::constant(c20);
    let (x, y) = (Poly::var(Var::X), Poly::var(Var::Y));
    let xs = &x + &Poly::constant(r1.clone());
    let ys = &y + &s;
    let sum = &(&xs * &xs) + &(&ys * &ys);
    let inner = &sum + &(&k * &ys);
    let model = &(&inner * &inner) - &(&big_a * &sum);
    let diff = &model - &qn;

    let mut g = Poly::zero();
    for cx in diff.coeffs_in(Var::X) {
        for c in cx.coeffs_in(Var::Y) {
            g = gcd(&g, &c);
        }
    }
    if g.is_zero() || g.is_constant() {
        return Ok(Vec::new());
    }
    let gu = UPoly::from_poly(&g, Var::S).ok_or_else(|| Error::Internal("gcd not in s".into()))?;
    let target = q.normalized();
    let mut out = Vec::new();
    for r2 in crate::conic::rational_roots(&gu) {
        let kv = k.eval_partial(&[(Var::S, r2.clone())]).constant_term();
        let av = big_a.eval_partial(&[(Var::S, r2.clone())]).constant_term();
        let Some(a) = rat_sqrt(&av) else { continue };
        if a.is_zero() {
            continue;
        }
        for a in [a.clone(), -a] {
            let m = LimaconMatch {
                e: &kv / &a,
                a,
                r1: r1.clone(),
                r2: r2.clone(),
            };
            if m.quartic() != target {
                return Err(Error::Internal("limacon match failed its round trip".into()));
            }
            out.push(m);
        }
    }
    out.sort();
    Ok(out)
}
