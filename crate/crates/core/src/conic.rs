//! Conics `Ax² + Bxy + Cy² + Dx + Ey + F = 0` over Q, lines in implicit
//! form, and the exact constructions the pedal pipeline needs.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{format_rat, rat_sqrt, rint, Rat};
use crate::poly::{gcd, substitute, Monomial, RationalFunction, Var};
use crate::upoly::UPoly;
use crate::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Rat,
    pub y: Rat,
}

impl Point2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(rint(x), rint(y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rat(&self.x), format_rat(&self.y))
    }
}

/// A point whose coordinates are polynomials, typically in the pole
/// variables `xD`, `yD`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicPoint {
    pub x: Poly,
    pub y: Poly,
}

impl SymbolicPoint {
    /// The generic pole `(xD, yD)`.
    pub fn generic() -> Self {
        SymbolicPoint {
            x: Poly::var(Var::XD),
            y: Poly::var(Var::YD),
        }
    }

    pub fn as_point(&self) -> Option<Point2> {
        Some(Point2::new(self.x.as_constant()?, self.y.as_constant()?))
    }

    pub fn is_numeric(&self) -> bool {
        self.x.is_constant() && self.y.is_constant()
    }
}

impl From<&Point2> for SymbolicPoint {
    fn from(p: &Point2) -> Self {
        SymbolicPoint {
            x: Poly::constant(p.x.clone()),
            y: Poly::constant(p.y.clone()),
        }
    }
}

impl fmt::Display for SymbolicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `a·x + b·y + c = 0`; coefficients may involve parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
}

impl Line {
    pub fn new(a: Poly, b: Poly, c: Poly) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateLine);
        }
        Ok(Line { a, b, c })
    }

    /// Divides out the common polynomial factor and fixes the sign.
    fn reduced(self) -> Self {
        let g = gcd(&gcd(&self.a, &self.b), &self.c);
        let (a, b, c) = (
            self.a.try_div(&g).expect("gcd divides"),
            self.b.try_div(&g).expect("gcd divides"),
            self.c.try_div(&g).expect("gcd divides"),
        );
        let l = Line { a, b, c };
        let unit = l.poly().normalization_unit().recip();
        Line {
            a: l.a.scale(&unit),
            b: l.b.scale(&unit),
            c: l.c.scale(&unit),
        }
    }

    /// `a·x + b·y + c` as a polynomial.
    pub fn poly(&self) -> Poly {
        &(&(&self.a * &Poly::var(Var::X)) + &(&self.b * &Poly::var(Var::Y))) + &self.c
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.poly())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Ellipse,
    Parabola,
    Hyperbola,
    Degenerate,
}

impl ConicKind {
    pub fn name(self) -> &'static str {
        match self {
            ConicKind::Ellipse => "ellipse",
            ConicKind::Parabola => "parabola",
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::Degenerate => "degenerate",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Inside,
    On,
    Outside,
}

impl Position {
    pub fn name(self) -> &'static str {
        match self {
            Position::Inside => "inside",
            Position::On => "on",
            Position::Outside => "outside",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Conic {
    coeffs: [Rat; 6],
    kind: ConicKind,
}

/// Kind from the discriminant `B² − 4AC` and the 3×3 determinant.
pub fn classify_conic(c: &[Rat; 6]) -> Result<ConicKind> {
    let [a, b, cc, d, e, f] = c;
    if a.is_zero() && b.is_zero() && cc.is_zero() {
        return Err(Error::NotAConic);
    }
    let two = rint(2);
    let (h, g, k) = (b / &two, d / &two, e / &two);
    let det = a * (cc * f - &k * &k) - &h * (&h * f - &k * &g) + &g * (&h * &k - cc * &g);
    if det.is_zero() {
        return Ok(ConicKind::Degenerate);
    }
    let disc = b * b - rint(4) * a * cc;
    Ok(if disc.is_negative() {
        ConicKind::Ellipse
    } else if disc.is_zero() {
        ConicKind::Parabola
    } else {
        ConicKind::Hyperbola
    })
}

fn mono(x: u32, y: u32) -> Monomial {
    Monomial::from_exps(vec![x, y])
}

impl Conic {
    pub fn new(coeffs: [Rat; 6]) -> Result<Self> {
        let kind = classify_conic(&coeffs)?;
        Ok(Conic { coeffs, kind })
    }

    /// Reads the coefficients of a polynomial of degree 2 in `x`, `y`.
    pub fn from_poly(p: &Poly) -> Result<Self> {
        if p.vars().iter().any(|&v| v != Var::X && v != Var::Y) || p.total_degree() != 2 {
            return Err(Error::NotAConic);
        }
        let c = |x, y| p.coeff(&mono(x, y));
        Conic::new([c(2, 0), c(1, 1), c(0, 2), c(1, 0), c(0, 1), c(0, 0)])
    }

    pub fn coeffs(&self) -> &[Rat; 6] {
        &self.coeffs
    }

    pub fn kind(&self) -> ConicKind {
        self.kind
    }

    pub fn poly(&self) -> Poly {
        let exps = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)];
        Poly::from_terms(
            exps.iter()
                .zip(&self.coeffs)
                .map(|(&(x, y), c)| (mono(x, y), c.clone())),
        )
    }

    pub fn eval(&self, p: &Point2) -> Rat {
        let [a, b, c, d, e, f] = &self.coeffs;
        a * &p.x * &p.x + b * &p.x * &p.y + c * &p.y * &p.y + d * &p.x + e * &p.y + f
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.eval(p).is_zero()
    }

    /// Half-gradient `(A x + B/2 y + D/2, B/2 x + C y + E/2)` at a point
    /// given by polynomial coordinates over a common denominator `w`,
    /// scaled by `w`.
    fn half_gradient(&self, nx: &Poly, ny: &Poly, w: &Poly) -> (Poly, Poly) {
        let [a, b, c, d, e, _] = &self.coeffs;
        let half = Rat::new(1.into(), 2.into());
        let gx = &(&nx.scale(a) + &ny.scale(&(b * &half))) + &w.scale(&(d * &half));
        let gy = &(&nx.scale(&(b * &half)) + &ny.scale(c)) + &w.scale(&(e * &half));
        (gx, gy)
    }

    /// Tangent line at an on-conic point `(x, y)` given as rational
    /// functions (for instance of a parameter), computed as the polar line.
    pub fn tangent_at(&self, x: &RationalFunction, y: &RationalFunction) -> Result<Line> {
        self.check_on(x, y)?;
        let (nx, ny, w) = common_denominator(x, y);
        let [_, _, _, d, e, f] = &self.coeffs;
        let half = Rat::new(1.into(), 2.into());
        let (gx, gy) = self.half_gradient(&nx, &ny, &w);
        let c = &(&nx.scale(&(d * &half)) + &ny.scale(&(e * &half))) + &w.scale(f);
        Line::new(gx, gy, c).map(Line::reduced)
    }

    pub fn tangent_at_point(&self, p: &Point2) -> Result<Line> {
        self.tangent_at(
            &RationalFunction::from_rat(p.x.clone()),
            &RationalFunction::from_rat(p.y.clone()),
        )
    }

    /// Normal line at an on-conic point: through the point, along the gradient.
    pub fn normal_at(&self, x: &RationalFunction, y: &RationalFunction) -> Result<Line> {
        self.check_on(x, y)?;
        let (nx, ny, w) = common_denominator(x, y);
        let (gx, gy) = self.half_gradient(&nx, &ny, &w);
        // -gy (X - nx/w) + gx (Y - ny/w) = 0, times w
        let a = -&(&gy * &w);
        let b = &gx * &w;
        let c = &(&gy * &nx) - &(&gx * &ny);
        Line::new(a, b, c).map(Line::reduced)
    }

    fn check_on(&self, x: &RationalFunction, y: &RationalFunction) -> Result<()> {
        let v = substitute(&self.poly(), &[(Var::X, x.clone()), (Var::Y, y.clone())])?;
        if v.is_zero() {
            Ok(())
        } else {
            Err(Error::PointNotOnConic)
        }
    }

    pub fn position(&self, p: &Point2) -> Result<Position> {
        point_position(self, p)
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}

/// `(nx, ny, w)` with `x = nx/w`, `y = ny/w`.
fn common_denominator(x: &RationalFunction, y: &RationalFunction) -> (Poly, Poly, Poly) {
    if x.den() == y.den() {
        return (x.num().clone(), y.num().clone(), x.den().clone());
    }
    let g = gcd(x.den(), y.den());
    let fx = y.den().try_div(&g).expect("gcd divides");
    let fy = x.den().try_div(&g).expect("gcd divides");
    (x.num() * &fx, y.num() * &fy, x.den() * &fx)
}

/// Orthogonal projection of `d` onto `l`, solved without slopes.
pub fn foot_of_perpendicular(
    l: &Line,
    d: &SymbolicPoint,
) -> Result<(RationalFunction, RationalFunction)> {
    let (a, b, c) = (&l.a, &l.b, &l.c);
    let den = &(a * a) + &(b * b);
    if den.is_zero() {
        return Err(Error::DegenerateLine);
    }
    let cross = &(b * &d.x) - &(a * &d.y);
    let x = &(b * &cross) - &(a * c);
    let y = &(-&(a * &cross)) - &(b * c);
    Ok((
        RationalFunction::new(x, den.clone())?,
        RationalFunction::new(y, den)?,
    ))
}

/// Rational parametrization in `t`, with the point it misses, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct ConicParametrization {
    pub x: RationalFunction,
    pub y: RationalFunction,
    pub missing: Option<Point2>,
}

pub fn rational_parametrization(conic: &Conic) -> Result<ConicParametrization> {
    match conic.kind {
        ConicKind::Degenerate => Err(Error::UnsupportedKind("degenerate conic")),
        ConicKind::Parabola => Ok(parabola_parametrization(conic)),
        _ => {
            if let Some(p) = axis_aligned_ellipse(conic) {
                return Ok(p);
            }
            let p0 = find_rational_point(conic).ok_or(Error::NoRationalPoint)?;
            Ok(pencil_parametrization(conic, &p0))
        }
    }
}

fn t() -> Poly {
    Poly::var(Var::T)
}

fn lin(c0: &Rat, c1: &Rat, c2: &Rat) -> Poly {
    // c0 + c1 t + c2 t²
    Poly::from_terms([
        (Monomial::one(), c0.clone()),
        (Monomial::var(Var::T, 1), c1.clone()),
        (Monomial::var(Var::T, 2), c2.clone()),
    ])
}

/// Vertex frame: `V + k (t w + t²/2 d)` with `d` along the axis.
fn parabola_parametrization(conic: &Conic) -> ConicParametrization {
    let [a, b, c, d, e, _] = conic.coeffs.clone();
    let two = rint(2);
    let half_b = &b / &two;
    let dir = if a.is_zero() && b.is_zero() {
        (Rat::one(), Rat::zero())
    } else {
        (half_b.clone(), -a.clone())
    };
    let w = (dir.1.clone(), -dir.0.clone());
    // gradient(P) = 2 M P + (D, E); M w gives the vertex line
    let mw = (&a * &w.0 + &half_b * &w.1, &half_b * &w.0 + &c * &w.1);
    let alpha = &two * &mw.0;
    let beta = &two * &mw.1;
    let gamma = &d * &w.0 + &e * &w.1;
    let p0 = if !alpha.is_zero() {
        Point2::new(-&gamma / &alpha, Rat::zero())
    } else {
        Point2::new(Rat::zero(), -&gamma / &beta)
    };
    let g_d = &d * &dir.0 + &e * &dir.1;
    let s = -conic.eval(&p0) / &g_d;
    let v = Point2::new(&p0.x + &s * &dir.0, &p0.y + &s * &dir.1);
    let q_w = &a * &w.0 * &w.0 + &b * &w.0 * &w.1 + &c * &w.1 * &w.1;
    let k = -&g_d / (&two * &q_w);
    let kx = (&k * &w.0, &k * &dir.0 / &two);
    let ky = (&k * &w.1, &k * &dir.1 / &two);
    let x = lin(&v.x, &kx.0, &kx.1);
    let y = lin(&v.y, &ky.0, &ky.1);
    ConicParametrization {
        x: RationalFunction::from_poly(x),
        y: RationalFunction::from_poly(y),
        missing: None,
    }
}

/// `(h + a(1−t²)/(1+t²), k + 2bt/(1+t²))` when `B = 0` and both semi-axes
/// are rational.
fn axis_aligned_ellipse(conic: &Conic) -> Option<ConicParametrization> {
    let [a, b, c, d, e, _] = &conic.coeffs;
    if !b.is_zero() || conic.kind != ConicKind::Ellipse {
        return None;
    }
    let two = rint(2);
    let center = Point2::new(-d / (&two * a), -e / (&two * c));
    let f0 = conic.eval(&center);
    let sa = rat_sqrt(&(-&f0 / a))?;
    let sb = rat_sqrt(&(-&f0 / c))?;
    if sa.is_zero() || sb.is_zero() {
        return None;
    }
    let den = lin(&Rat::one(), &Rat::zero(), &Rat::one());
    let xn = lin(&(&center.x + &sa), &Rat::zero(), &(&center.x - &sa));
    let yn = lin(&center.y, &(&two * &sb), &center.y);
    Some(ConicParametrization {
        x: RationalFunction::new(xn, den.clone()).ok()?,
        y: RationalFunction::new(yn, den).ok()?,
        missing: Some(Point2::new(&center.x - &sa, center.y)),
    })
}

/// Lines through `p0` with slope `t`.
fn pencil_parametrization(conic: &Conic, p0: &Point2) -> ConicParametrization {
    let [a, b, c, d, e, _] = &conic.coeffs;
    let two = rint(2);
    let gx = &two * a * &p0.x + b * &p0.y + d;
    let gy = b * &p0.x + &two * c * &p0.y + e;
    let q = lin(a, b, c);
    let s_num = -&lin(&gx, &gy, &Rat::zero());
    let x = &Poly::constant(p0.x.clone()) * &q + s_num.clone();
    let y = &(&Poly::constant(p0.y.clone()) * &q) + &(&s_num * &t());
    let missing = (!c.is_zero()).then(|| Point2::new(p0.x.clone(), &p0.y - &gy / c));
    ConicParametrization {
        x: RationalFunction::new(x, q.clone()).expect("nonzero quadratic form"),
        y: RationalFunction::new(y, q).expect("nonzero quadratic form"),
        missing,
    }
}

fn rational_roots_of_quadratic(c2: &Rat, c1: &Rat, c0: &Rat) -> Vec<Rat> {
    if c2.is_zero() {
        if c1.is_zero() {
            return Vec::new();
        }
        return vec![-c0 / c1];
    }
    let disc = c1 * c1 - rint(4) * c2 * c0;
    match rat_sqrt(&disc) {
        Some(r) => vec![(-c1 + &r) / (rint(2) * c2), (-c1 - r) / (rint(2) * c2)],
        None => Vec::new(),
    }
}

/// Bounded search: axis intersections, then `x = n/m` with small height.
pub fn find_rational_point(conic: &Conic) -> Option<Point2> {
    let [a, b, c, d, e, f] = &conic.coeffs;
    // on the vertical line x = x0: C y² + (B x0 + E) y + (A x0² + D x0 + F)
    let on_vertical = |x0: &Rat| -> Option<Point2> {
        let roots = rational_roots_of_quadratic(c, &(b * x0 + e), &(a * x0 * x0 + d * x0 + f));
        roots.into_iter().next().map(|y| Point2::new(x0.clone(), y))
    };
    if let Some(p) = on_vertical(&Rat::zero()) {
        return Some(p);
    }
    if let Some(x) = rational_roots_of_quadratic(a, d, f).into_iter().next() {
        return Some(Point2::new(x, Rat::zero()));
    }
    for height in 1..=100i64 {
        for den in 1..=height {
            for num in [height, -height] {
                let cand = [Rat::new(num.into(), den.into()), Rat::new(den.into(), height.into())];
                for x0 in cand.iter().chain(std::iter::once(&-&cand[1])) {
                    if let Some(p) = on_vertical(x0) {
                        return Some(p);
                    }
                }
            }
        }
    }
    None
}

/// Inside iff `F(p)` has the sign opposite to `A + C`; the focus and the
/// center are inside.
pub fn point_position(conic: &Conic, p: &Point2) -> Result<Position> {
    match conic.kind {
        ConicKind::Ellipse | ConicKind::Parabola => {}
        ConicKind::Hyperbola => return Err(Error::UnsupportedKind("hyperbola")),
        ConicKind::Degenerate => return Err(Error::UnsupportedKind("degenerate conic")),
    }
    let v = conic.eval(p);
    if v.is_zero() {
        return Ok(Position::On);
    }
    let trace = &conic.coeffs[0] + &conic.coeffs[2];
    Ok(if v.is_positive() != trace.is_positive() {
        Position::Inside
    } else {
        Position::Outside
    })
}

/// Rational roots of a univariate polynomial with rational coefficients.
pub(crate) fn rational_roots(u: &UPoly) -> Vec<Rat> {
    let mut out = Vec::new();
    let sq = u.squarefree_part();
    if sq.deg() <= 0 {
        return out;
    }
    for f in crate::factor::factor_univariate(&sq.to_poly(Var::T))
        .map(|f| f.factors)
        .unwrap_or_default()
    {
        let (f, _) = f;
        if f.degree(Var::T) == 1 {
            let c1 = f.coeff(&Monomial::var(Var::T, 1));
            let c0 = f.constant_term();
            out.push(-c0 / c1);
        }
    }
    out.sort();
    out
}
