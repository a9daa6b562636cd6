//! Singular points of plane curves over Q: location, tangent cones,
//! double-point classification, and the line-pencil parametrization of
//! singular cubics with its derivative and self-intersection certificates.

use num_traits::{One, Signed, Zero};

use crate::conic::{rational_roots, Point2};
use crate::elim::resultant;
use crate::error::{Error, Result};
use crate::factor::factor_univariate;
use crate::numeric::format_rat;
use crate::poly::{gcd, squarefree_part, substitute, RationalFunction, Var};
use crate::upoly::UPoly;
use crate::{Poly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingularityKind {
    Crunode,
    Acnode,
    Cusp,
    Higher,
    Undetermined,
}

impl SingularityKind {
    pub fn name(self) -> &'static str {
        match self {
            SingularityKind::Crunode => "crunode",
            SingularityKind::Acnode => "acnode",
            SingularityKind::Cusp => "cusp",
            SingularityKind::Higher => "higher",
            SingularityKind::Undetermined => "undetermined",
        }
    }
}

pub type Vec2 = [Rat; 2];

#[derive(Clone, Debug, PartialEq)]
pub struct CuspCertificate {
    pub t0: Rat,
    pub v1: Vec2,
    pub v2: Vec2,
    pub v3: Vec2,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Certificates {
    pub cusp: Option<CuspCertificate>,
    /// Minimal polynomial in `t` of the parameter pair meeting at the point.
    pub pair_polynomial: Option<Poly>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularityReport {
    pub point: Point2,
    pub multiplicity: u32,
    /// Lowest homogeneous part of the curve translated to the point, in `u`, `v`.
    pub tangent_cone: Poly,
    /// `b² - 4ac` of the normalized cone `a u² + b uv + c v²` for double points.
    pub discriminant: Option<Rat>,
    pub kind: SingularityKind,
    /// The point has no real branch through it.
    pub isolated: bool,
    pub certificates: Option<Certificates>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PencilParametrization {
    pub xr: RationalFunction,
    pub yr: RationalFunction,
    pub base_point: Point2,
}

/// A pair of parameters with the same image.
#[derive(Clone, Debug, PartialEq)]
pub struct SelfIntersection {
    pub minimal_polynomial: Poly,
    /// Minimal polynomial of the partner parameters; equal to
    /// `minimal_polynomial` when the pair is conjugate.
    pub partner: Poly,
    pub image: Option<Point2>,
}

fn eval_at(p: &Poly, pt: &Point2) -> Rat {
    p.eval(|v| match v {
        Var::X => Some(pt.x.clone()),
        Var::Y => Some(pt.y.clone()),
        _ => None,
    })
    .unwrap_or_else(|_| Rat::zero())
}

fn check_plane_curve(f: &Poly) -> Result<()> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if f.vars().iter().any(|&v| v != Var::X && v != Var::Y) {
        return Err(Error::Unsupported("curve must be a polynomial in x, y".into()));
    }
    Ok(())
}

/// Rational singular points of `f`, and the number of real candidate
/// abscissae that are not rational and were left unresolved.
pub fn singular_points_rational(f: &Poly) -> Result<(Vec<Point2>, usize)> {
    check_plane_curve(f)?;
    if !squarefree_part(f)?.associate(f) {
        return Err(Error::NotSquareFree);
    }
    let fx = f.derivative(Var::X);
    let fy = f.derivative(Var::Y);
    if !f.contains_var(Var::X) || !f.contains_var(Var::Y) {
        // a product of parallel lines
        return Ok((Vec::new(), 0));
    }
    let pairs = [(f, &fx), (f, &fy), (&fx, &fy)];
    let mut cand = Poly::zero();
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() || (!a.contains_var(Var::Y) && !b.contains_var(Var::Y)) {
            continue;
        }
        let r = resultant(a, b, Var::Y)?;
        if !r.is_zero() {
            cand = gcd(&cand, &r);
        }
    }
    if cand.is_zero() {
        return Err(Error::Internal("all singular-locus resultants vanish".into()));
    }
    let cand = UPoly::from_poly(&cand, Var::X)
        .ok_or_else(|| Error::Internal("candidate polynomial is not univariate".into()))?
        .squarefree_part();
    let mut points = Vec::new();
    let mut residual_poly = cand.clone();
    let mut residual = 0;
    for x0 in rational_roots(&cand) {
        residual_poly = residual_poly
            .div_exact(&UPoly::linear_root(&x0))
            .expect("rational root divides");
        let mut g = UPoly::zero();
        for q in [f, &fx, &fy] {
            let u = UPoly::from_poly(&q.eval_partial(&[(Var::X, x0.clone())]), Var::Y)
                .expect("univariate in y");
            g = g.gcd(&u);
        }
        if g.deg() <= 0 {
            continue;
        }
        let ys = rational_roots(&g);
        residual += g.count_real_roots() - ys.len();
        points.extend(ys.into_iter().map(|y0| Point2::new(x0.clone(), y0)));
    }
    residual += residual_poly.count_real_roots();
    points.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
    Ok((points, residual))
}

fn local(f: &Poly, p: &Point2) -> Poly {
    f.translate(&[(Var::X, p.x.clone()), (Var::Y, p.y.clone())])
        .rename(&[(Var::X, Var::U), (Var::Y, Var::V)])
}

/// Multiplicity of `p` on `f` and the tangent cone in the local variables `u`, `v`.
pub fn tangent_cone(f: &Poly, p: &Point2) -> Result<(u32, Poly)> {
    check_plane_curve(f)?;
    if !eval_at(f, p).is_zero() {
        return Err(Error::PointNotOnCurve);
    }
    let g = local(f, p);
    let m = g.lowest_total_degree().ok_or(Error::ZeroPolynomial)?;
    Ok((m, g.homogeneous_component(m).normalized()))
}

fn binary_quadratic_discriminant(cone: &Poly) -> Rat {
    let c = |i: u32, j: u32| cone.coeff_of(Var::U, i).coeff_of(Var::V, j).constant_term();
    let (a, b, cc) = (c(2, 0), c(1, 1), c(0, 2));
    &b * &b - Rat::from_integer(4.into()) * a * cc
}

pub fn classify_singularity(f: &Poly, p: &Point2) -> Result<SingularityReport> {
    let (m, cone) = tangent_cone(f, p)?;
    if m < 2 {
        return Err(Error::NotSingular);
    }
    let is_cubic = f.total_degree() == 3;
    let mut report = SingularityReport {
        point: p.clone(),
        multiplicity: m,
        tangent_cone: cone.clone(),
        discriminant: None,
        kind: SingularityKind::Higher,
        isolated: false,
        certificates: None,
    };
    if m > 2 {
        return Ok(report);
    }
    let disc = binary_quadratic_discriminant(&cone);
    report.discriminant = Some(disc.clone());
    if disc.is_negative() {
        report.kind = SingularityKind::Acnode;
        report.isolated = true;
    } else if disc.is_positive() {
        report.kind = SingularityKind::Crunode;
        if is_cubic {
            let param = pencil_parametrization(f, p)?;
            let pair = self_intersection_pairs(&param)?
                .into_iter()
                .find(|s| s.image.as_ref() == Some(p))
                .map(|s| s.minimal_polynomial);
            report.certificates = Some(Certificates { cusp: None, pair_polynomial: pair });
        }
    } else {
        report.kind = SingularityKind::Undetermined;
        if is_cubic {
            if let Some(cert) = cusp_certificate_at_base(f, p, &cone)? {
                report.kind = SingularityKind::Cusp;
                report.certificates = Some(Certificates { cusp: Some(cert), pair_polynomial: None });
            }
        }
    }
    Ok(report)
}

/// Runs the cusp certificate at the parameter of the cone's double direction.
fn cusp_certificate_at_base(f: &Poly, p: &Point2, cone: &Poly) -> Result<Option<CuspCertificate>> {
    let along = |c: &Poly, chart: Chart| match chart {
        Chart::Slope => c.eval_partial(&[(Var::U, Rat::one())]).rename(&[(Var::V, Var::T)]),
        Chart::InverseSlope => c.eval_partial(&[(Var::V, Rat::one())]).rename(&[(Var::U, Var::T)]),
    };
    for chart in [Chart::Slope, Chart::InverseSlope] {
        let dir = UPoly::from_poly(&along(cone, chart), Var::T).expect("univariate");
        if dir.deg() < 2 {
            continue;
        }
        let Some(t0) = rational_roots(&dir).into_iter().next() else {
            continue;
        };
        let param = pencil_in_chart(f, p, chart)?;
        let v = derivative_vectors(&param, &t0, 3)?;
        if certificate_holds(&v) {
            let [v1, v2, v3]: [Vec2; 3] = v.try_into().expect("three vectors");
            return Ok(Some(CuspCertificate { t0, v1, v2, v3 }));
        }
        return Ok(None);
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Chart {
    /// `y - py = t (x - px)`
    Slope,
    /// `x - px = t (y - py)`
    InverseSlope,
}

/// Rational parametrization of a cubic by the pencil of lines of slope `t`
/// through the double point `p`.
pub fn pencil_parametrization(f: &Poly, p: &Point2) -> Result<PencilParametrization> {
    pencil_in_chart(f, p, Chart::Slope)
}

fn pencil_in_chart(f: &Poly, p: &Point2, chart: Chart) -> Result<PencilParametrization> {
    check_plane_curve(f)?;
    if f.total_degree() != 3 {
        return Err(Error::NotCubic);
    }
    let g = local(f, p);
    if g.lowest_total_degree() != Some(2) {
        return Err(Error::NotDoublePoint);
    }
    // u = s, v = s t (or the transpose): g = s² C2 + s³ C3
    let (du, dv) = match chart {
        Chart::Slope => (Poly::one(), Poly::var(Var::T)),
        Chart::InverseSlope => (Poly::var(Var::T), Poly::one()),
    };
    let dir = |c: Poly| {
        substitute(
            &c,
            &[(Var::U, RationalFunction::from_poly(du.clone())), (Var::V, RationalFunction::from_poly(dv.clone()))],
        )
        .map(|r| r.as_poly().expect("polynomial substitution"))
    };
    let c2 = dir(g.homogeneous_component(2))?;
    let c3 = dir(g.homogeneous_component(3))?;
    if c3.is_zero() {
        return Err(Error::NotDoublePoint);
    }
    let s = RationalFunction::new(-&c2, c3)?.reduced();
    let shift = |r: &Rat, d: &Poly| {
        RationalFunction::from_rat(r.clone()).add(&s.mul(&RationalFunction::from_poly(d.clone())))
    };
    Ok(PencilParametrization {
        xr: shift(&p.x, &du),
        yr: shift(&p.y, &dv),
        base_point: p.clone(),
    })
}

/// The first `k` derivatives of `(x(t), y(t))` at `t0`.
pub fn derivative_vectors(param: &PencilParametrization, t0: &Rat, k: usize) -> Result<Vec<Vec2>> {
    let pole = || Error::PoleAtT0(format_rat(t0));
    let at = |r: &RationalFunction| r.eval_rat(&[(Var::T, t0.clone())]).map_err(|_| pole());
    at(&param.xr)?;
    at(&param.yr)?;
    let (mut dx, mut dy) = (param.xr.clone(), param.yr.clone());
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        dx = dx.derivative(Var::T);
        dy = dy.derivative(Var::T);
        out.push([at(&dx)?, at(&dy)?]);
    }
    Ok(out)
}

fn certificate_holds(v: &[Vec2]) -> bool {
    let zero = |w: &Vec2| w[0].is_zero() && w[1].is_zero();
    let det = &v[1][0] * &v[2][1] - &v[1][1] * &v[2][0];
    zero(&v[0]) && !zero(&v[1]) && !det.is_zero()
}

/// `V1(t0) = 0`, `V2(t0) != 0` and `det[V2; V3] != 0`.
pub fn cusp_certificate(param: &PencilParametrization, t0: &Rat) -> Result<bool> {
    Ok(certificate_holds(&derivative_vectors(param, t0, 3)?))
}

/// `(a(t1) b(t2) - a(t2) b(t1)) / (t1 - t2)` for `r = a / b`.
fn divided_difference(r: &RationalFunction) -> Poly {
    let at = |p: &Poly, v: Var| p.rename(&[(Var::T, v)]);
    let cross = &(&at(r.num(), Var::T1) * &at(r.den(), Var::T2)) - &(&at(r.num(), Var::T2) * &at(r.den(), Var::T1));
    let diff = &Poly::var(Var::T1) - &Poly::var(Var::T2);
    cross.try_div(&diff).expect("t1 - t2 divides the cross difference")
}

fn to_t(p: &Poly, v: Var) -> UPoly {
    UPoly::from_poly(&p.rename(&[(v, Var::T)]), Var::T).expect("univariate")
}

/// Value of `r` in Q[t]/(m) when it is a rational constant there.
fn reduce_mod(r: &RationalFunction, m: &UPoly) -> Option<Rat> {
    let num = to_t(r.num(), Var::T);
    let den = to_t(r.den(), Var::T);
    let inv = den.rem(m).inverse_mod(m)?;
    let v = (&num * &inv).rem(m);
    if v.deg() <= 0 {
        Some(v.coeff(0))
    } else {
        None
    }
}

/// Parameter pairs `t1 != t2` with the same image.
pub fn self_intersection_pairs(param: &PencilParametrization) -> Result<Vec<SelfIntersection>> {
    let d1 = divided_difference(&param.xr);
    let d2 = divided_difference(&param.yr);
    let common = gcd(&d1, &d2);
    let (d1, d2) = if common.is_constant() {
        (d1, d2)
    } else {
        (d1.try_div(&common).expect("gcd divides"), d2.try_div(&common).expect("gcd divides"))
    };
    let res = resultant(&d1, &d2, Var::T2)?;
    if res.is_zero() || res.is_constant() {
        return Ok(Vec::new());
    }
    let dens = to_t(&(param.xr.den() * param.yr.den()), Var::T);
    let lc1 = d1.lc_in(Var::T2);
    let lc2 = d2.lc_in(Var::T2);
    let diag = |d: &Poly| d.eval_partial(&[]).rename(&[(Var::T2, Var::T1)]);
    let (s1, s2) = (diag(&d1), diag(&d2));
    let divides = |m: &UPoly, p: &Poly| p.is_zero() || to_t(p, Var::T1).rem(m).is_zero();

    let mut kept = Vec::new();
    for (f, _) in factor_univariate(&res.rename(&[(Var::T1, Var::T)]))?.factors {
        let m = to_t(&f, Var::T);
        if dens.rem(&m).is_zero() {
            continue;
        }
        if divides(&m, &lc1) && divides(&m, &lc2) {
            continue;
        }
        if divides(&m, &s1) && divides(&m, &s2) {
            continue;
        }
        kept.push((f, m));
    }

    let mut out = Vec::new();
    for (f, m) in &kept {
        // partner parameters: common roots in t2 of the system over the roots of m
        let mt1 = m.to_poly(Var::T1);
        let r1 = resultant(&mt1, &d1, Var::T1)?;
        let r2 = resultant(&mt1, &d2, Var::T1)?;
        let rr = gcd(&r1, &r2);
        let partner = kept
            .iter()
            .find(|(_, m2)| !rr.is_zero() && to_t(&rr, Var::T2).rem(m2).is_zero())
            .map(|(g, _)| g.clone());
        let Some(partner) = partner else {
            continue;
        };
        let image = match (reduce_mod(&param.xr, m), reduce_mod(&param.yr, m)) {
            (Some(x), Some(y)) => Some(Point2::new(x, y)),
            _ => None,
        };
        out.push(SelfIntersection { minimal_polynomial: f.clone(), partner, image });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rint};
    use crate::text::p;

    const ACNODE_CUBIC: &str = "x^2*y - 5*x^2 + 2*x*y - 8*x + y^3 - 12*y^2 + 36*y + 4";
    const CUSP_CUBIC: &str = "x^2*y - 3*x^2 - 4*x*y + 8*x + y^3 - 8*y^2 + 16*y + 16";
    const CRUNODE_CUBIC: &str = "x^2*y + y^3 - x^2 + 6*x*y - 4*y^2 + 4*y + 36";

    fn rf(num: &str, den: &str) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn singular_points() {
        assert_eq!(singular_points_rational(&p(CUSP_CUBIC)).unwrap(), (vec![Point2::from_ints(4, 4)], 0));
        assert_eq!(singular_points_rational(&p(CRUNODE_CUBIC)).unwrap(), (vec![Point2::from_ints(-6, 2)], 0));
        assert_eq!(singular_points_rational(&p(ACNODE_CUBIC)).unwrap().0, vec![Point2::from_ints(-2, 6)]);
        assert_eq!(singular_points_rational(&p("x^2 + y^2 - 1")).unwrap(), (vec![], 0));
        assert_eq!(singular_points_rational(&p("(x - y)^2*(x + y)")), Err(Error::NotSquareFree));
        // node at the origin plus a nonrational real pair elsewhere is not expected here
        assert_eq!(
            singular_points_rational(&p("x^2 - y^2")).unwrap(),
            (vec![Point2::from_ints(0, 0)], 0)
        );
    }

    #[test]
    fn cones() {
        assert_eq!(tangent_cone(&p(ACNODE_CUBIC), &Point2::from_ints(-2, 6)).unwrap(), (2, p("u^2 - 2*u*v + 6*v^2")));
        let (m, cone) = tangent_cone(&p(CUSP_CUBIC), &Point2::from_ints(4, 4)).unwrap();
        assert_eq!(m, 2);
        assert!(binary_quadratic_discriminant(&cone).is_zero());
        assert_eq!(tangent_cone(&p("x^2 - y^2"), &Point2::from_ints(0, 0)).unwrap(), (2, p("u^2 - v^2")));
        assert_eq!(tangent_cone(&p("x^2 - y^2"), &Point2::from_ints(1, 0)), Err(Error::PointNotOnCurve));
    }

    #[test]
    fn pencil_examples() {
        let cusp_param = pencil_parametrization(&p(CUSP_CUBIC), &Point2::from_ints(4, 4)).unwrap();
        assert_eq!(cusp_param.xr, rf("4*t^3 - 4*t^2 - 1", "t*(t^2 + 1)"));
        assert_eq!(cusp_param.yr, rf("-(4*t - 3)", "t^2 + 1"));
        let at = |r: &RationalFunction| r.eval_rat(&[(Var::T, rat(-1, 2))]).unwrap();
        assert_eq!((at(&cusp_param.xr), at(&cusp_param.yr)), (rint(4), rint(4)));
        let eq8 = pencil_parametrization(&p(CRUNODE_CUBIC), &Point2::from_ints(-6, 2)).unwrap();
        assert_eq!(eq8.xr, rf("-(6*t^3 + 2*t^2 + 1)", "t*(t^2 + 1)"));
        assert_eq!(eq8.yr, rf("6*t + 1", "t^2 + 1"));
        for (f, param) in [(CUSP_CUBIC, &cusp_param), (CRUNODE_CUBIC, &eq8)] {
            let back = substitute(&p(f), &[(Var::X, param.xr.clone()), (Var::Y, param.yr.clone())]).unwrap();
            assert!(back.is_zero());
        }
        assert_eq!(pencil_parametrization(&p("x^2 - y^2"), &Point2::from_ints(0, 0)), Err(Error::NotCubic));
        assert_eq!(pencil_parametrization(&p(CUSP_CUBIC), &Point2::from_ints(0, 4)), Err(Error::NotDoublePoint));
    }

    #[test]
    fn derivative_vectors_at_cusp() {
        let cusp_param = pencil_parametrization(&p(CUSP_CUBIC), &Point2::from_ints(4, 4)).unwrap();
        let v = derivative_vectors(&cusp_param, &rat(-1, 2), 3).unwrap();
        assert_eq!(v[0], [rint(0), rint(0)]);
        assert_eq!(v[1], [rat(64, 5), rat(-32, 5)]);
        assert_eq!(v[2], [rat(2688, 25), rat(-384, 25)]);
        assert!(cusp_certificate(&cusp_param, &rat(-1, 2)).unwrap());
        assert_eq!(derivative_vectors(&cusp_param, &rint(0), 1), Err(Error::PoleAtT0("0".into())));
    }

    #[test]
    fn certificate_rejects_smooth_points() {
        let circle = PencilParametrization {
            xr: rf("1 - t^2", "1 + t^2"),
            yr: rf("2*t", "1 + t^2"),
            base_point: Point2::from_ints(1, 0),
        };
        assert!(!cusp_certificate(&circle, &rint(0)).unwrap());
        let eq8 = pencil_parametrization(&p(CRUNODE_CUBIC), &Point2::from_ints(-6, 2)).unwrap();
        assert!(!cusp_certificate(&eq8, &rat(2823, 1000)).unwrap());
        assert!(!cusp_certificate(&eq8, &rat(177, 1000)).unwrap());
    }

    #[test]
    fn self_intersections() {
        let eq8 = pencil_parametrization(&p(CRUNODE_CUBIC), &Point2::from_ints(-6, 2)).unwrap();
        let pairs = self_intersection_pairs(&eq8).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].minimal_polynomial, p("2*t^2 - 6*t + 1"));
        assert_eq!(pairs[0].partner, p("2*t^2 - 6*t + 1"));
        assert_eq!(pairs[0].image, Some(Point2::from_ints(-6, 2)));
        let cusp_param = pencil_parametrization(&p(CUSP_CUBIC), &Point2::from_ints(4, 4)).unwrap();
        assert!(self_intersection_pairs(&cusp_param).unwrap().is_empty());
        let circle = PencilParametrization {
            xr: rf("1 - t^2", "1 + t^2"),
            yr: rf("2*t", "1 + t^2"),
            base_point: Point2::from_ints(1, 0),
        };
        assert!(self_intersection_pairs(&circle).unwrap().is_empty());
    }

    #[test]
    fn classification() {
        let r = classify_singularity(&p(CRUNODE_CUBIC), &Point2::from_ints(-6, 2)).unwrap();
        assert_eq!(r.kind, SingularityKind::Crunode);
        assert_eq!(r.certificates.unwrap().pair_polynomial, Some(p("2*t^2 - 6*t + 1")));
        let r = classify_singularity(&p(CUSP_CUBIC), &Point2::from_ints(4, 4)).unwrap();
        assert_eq!(r.kind, SingularityKind::Cusp);
        let cert = r.certificates.unwrap().cusp.unwrap();
        assert_eq!(cert.t0, rat(-1, 2));
        assert_eq!(cert.v2, [rat(64, 5), rat(-32, 5)]);
        assert_eq!(cert.v3, [rat(2688, 25), rat(-384, 25)]);
        let r = classify_singularity(&p(ACNODE_CUBIC), &Point2::from_ints(-2, 6)).unwrap();
        assert_eq!((r.kind, r.discriminant, r.isolated), (SingularityKind::Acnode, Some(rint(-20)), true));
        assert_eq!(
            classify_singularity(&p(CUSP_CUBIC), &Point2::from_ints(0, 4)).map(|r| r.kind),
            Err(Error::PointNotOnCurve)
        );
        assert_eq!(classify_singularity(&p("x^2 + y^2 - 1"), &Point2::from_ints(1, 0)), Err(Error::NotSingular));
        let r = classify_singularity(&p("x^3 - y^3 + x^4"), &Point2::from_ints(0, 0)).unwrap();
        assert_eq!((r.kind, r.multiplicity), (SingularityKind::Higher, 3));
    }
}
