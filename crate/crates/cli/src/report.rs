//! JSON report types, versioned as `pedcurve/1`.

use serde::{Deserialize, Serialize};

use pedcurve::conic::Point2;
use pedcurve::factor::Factorization;
use pedcurve::numeric::format_rat;
use pedcurve::pedal::LimaconMatch;
use pedcurve::singular::{SelfIntersection, SingularityKind, SingularityReport};
use pedcurve::text::format_poly;
use pedcurve::{Poly, Rat, VarRegistry};

pub const SCHEMA: &str = "pedcurve/1";

pub fn poly_text(p: &Poly) -> String {
    format_poly(p, VarRegistry::standard())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: String,
    pub normalized: bool,
    pub command: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conic: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conic_kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pole: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pole_position: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parametrization: Option<ParamJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub implicit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eliminant: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singularities: Option<Vec<SingularityJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unresolved_singular_candidates: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_intersections: Option<Vec<SelfIntersectionJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limacon_matches: Option<Vec<LimaconJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub svg: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorJson>,
    #[serde(default)]
    pub warnings: Vec<String>,
    pub timing_ms: f64,
}

impl Report {
    pub fn new(command: &[String]) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            normalized: true,
            command: command.to_vec(),
            conic: None,
            conic_kind: None,
            pole: None,
            pole_position: None,
            family: None,
            parametrization: None,
            implicit: None,
            eliminant: None,
            removed: Vec::new(),
            factorization: None,
            irreducible: None,
            singularities: None,
            unresolved_singular_candidates: None,
            self_intersections: None,
            limacon_matches: None,
            svg: None,
            error: None,
            warnings: Vec::new(),
            timing_ms: 0.0,
        }
    }
}

/// Output of `--poles-file`: one report per line, in input order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchReport {
    pub schema: String,
    pub normalized: bool,
    pub command: Vec<String>,
    pub reports: Vec<Report>,
    pub timing_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorJson {
    /// `input` or `internal`.
    pub class: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamJson {
    pub x: String,
    pub y: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_point: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub missing_point: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub poly: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationJson {
    pub unit: String,
    pub factors: Vec<FactorJson>,
}

impl From<&Factorization> for FactorizationJson {
    fn from(f: &Factorization) -> Self {
        FactorizationJson {
            unit: format_rat(&f.unit),
            factors: f
                .factors
                .iter()
                .map(|(p, m)| FactorJson { poly: poly_text(p), multiplicity: *m })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspJson {
    pub t0: String,
    pub v1: [String; 2],
    pub v2: [String; 2],
    pub v3: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularityJson {
    pub point: [String; 2],
    pub multiplicity: u32,
    pub tangent_cone: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<String>,
    pub kind: String,
    pub isolated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cusp_certificate: Option<CuspJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair_polynomial: Option<String>,
}

pub fn point_text(p: &Point2) -> [String; 2] {
    [format_rat(&p.x), format_rat(&p.y)]
}

fn vec_text(v: &[Rat; 2]) -> [String; 2] {
    [format_rat(&v[0]), format_rat(&v[1])]
}

pub const ACNODE_NOTE: &str = "isolated real point: lies on the curve but not on any visible real branch";

impl From<&SingularityReport> for SingularityJson {
    fn from(r: &SingularityReport) -> Self {
        let certs = r.certificates.as_ref();
        SingularityJson {
            point: point_text(&r.point),
            multiplicity: r.multiplicity,
            tangent_cone: poly_text(&r.tangent_cone),
            discriminant: r.discriminant.as_ref().map(format_rat),
            kind: r.kind.name().to_string(),
            isolated: r.isolated,
            note: (r.kind == SingularityKind::Acnode).then(|| ACNODE_NOTE.to_string()),
            cusp_certificate: certs.and_then(|c| c.cusp.as_ref()).map(|c| CuspJson {
                t0: format_rat(&c.t0),
                v1: vec_text(&c.v1),
                v2: vec_text(&c.v2),
                v3: vec_text(&c.v3),
            }),
            pair_polynomial: certs.and_then(|c| c.pair_polynomial.as_ref()).map(poly_text),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelfIntersectionJson {
    pub minimal_polynomial: String,
    pub partner: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image: Option<[String; 2]>,
}

impl From<&SelfIntersection> for SelfIntersectionJson {
    fn from(s: &SelfIntersection) -> Self {
        SelfIntersectionJson {
            minimal_polynomial: poly_text(&s.minimal_polynomial),
            partner: poly_text(&s.partner),
            image: s.image.as_ref().map(point_text),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimaconJson {
    pub a: String,
    pub e: String,
    pub r1: String,
    pub r2: String,
    pub quartic: String,
}

impl From<&LimaconMatch> for LimaconJson {
    fn from(m: &LimaconMatch) -> Self {
        LimaconJson {
            a: format_rat(&m.a),
            e: format_rat(&m.e),
            r1: format_rat(&m.r1),
            r2: format_rat(&m.r2),
            quartic: poly_text(&m.quartic()),
        }
    }
}
