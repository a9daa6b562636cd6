//! Command-line front end: argument parsing, command dispatch, JSON reports
//! and SVG plots.

pub mod render;
pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use pedcurve::conic::{rational_parametrization, Conic, Point2, SymbolicPoint};
use pedcurve::elim::implicitize;
use pedcurve::factor::{factor_bivariate, factor_kronecker};
use pedcurve::pedal::{limacon_match, pedal_with_family, LineFamily};
use pedcurve::singular::{
    classify_singularity, pencil_parametrization, self_intersection_pairs, singular_points_rational,
    SingularityKind,
};
use pedcurve::text::{format_ratfun, parse_poly, parse_ratfun};
use pedcurve::{Poly, Var, VarRegistry};

use render::{render_svg, PlotSpec};
use report::{point_text, poly_text, BatchReport, ErrorJson, ParamJson, Report, ACNODE_NOTE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pedcurve", version, about = "Exact pedal curves of conics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Print the JSON report instead of a text summary.
    #[arg(long)]
    pub json: bool,
    /// Write an SVG plot of the resulting curve.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Plot window `x0,x1,y0,y1`.
    #[arg(long, default_value = "-10,10,-10,10", allow_hyphen_values = true)]
    pub window: String,
    /// Grid cells per axis.
    #[arg(long, default_value_t = 256)]
    pub resolution: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Tangent,
    Normal,
    TangentOrNormal,
}

impl From<Family> for LineFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Tangent => LineFamily::Tangent,
            Family::Normal => LineFamily::Normal,
            Family::TangentOrNormal => LineFamily::TangentOrNormal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hensel,
    Kronecker,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pedal curve of a conic with respect to a pole.
    Pedal {
        #[arg(long, allow_hyphen_values = true)]
        conic: String,
        /// `x,y` with rational or symbolic coordinates, e.g. `-6,2` or `xD,yD`.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "poles_file")]
        pole: Option<String>,
        /// One pole per line; reports are emitted in input order.
        #[arg(long, conflicts_with = "pole")]
        poles_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Family::Tangent)]
        family: Family,
        #[command(flatten)]
        out: Output,
    },
    /// Implicit equation of a rational parametrization in `t`.
    Implicitize {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[command(flatten)]
        out: Output,
    },
    /// Factorization over Q of a polynomial in at most two variables.
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Method::Hensel)]
        method: Method,
        #[command(flatten)]
        out: Output,
    },
    /// Rational singular points and their classification.
    Singular {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
    /// Rational parametrization of a conic, or the pencil parametrization
    /// of a cubic through a double point.
    Param {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "poly")]
        conic: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "conic", requires = "point")]
        poly: Option<String>,
        /// Double point `x,y` of the cubic.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Translated canonical limaçons equal to a quartic.
    MatchLimacon {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
    /// SVG plot of `F(x, y) = 0`.
    Plot {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(pedcurve::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }

    fn to_json(&self) -> ErrorJson {
        let class = if self.exit_code() == EXIT_INTERNAL { "internal" } else { "input" };
        ErrorJson { class: class.to_string(), message: self.to_string() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<pedcurve::Error> for CliError {
    fn from(e: pedcurve::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// What a run printed and its exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn reg() -> &'static VarRegistry {
    VarRegistry::standard()
}

pub fn parse_point(text: &str) -> CliResult<SymbolicPoint> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Input(format!("point `{text}` must be `x,y`")));
    }
    Ok(SymbolicPoint {
        x: parse_poly(parts[0], reg())?,
        y: parse_poly(parts[1], reg())?,
    })
}

fn parse_numeric_point(text: &str) -> CliResult<Point2> {
    parse_point(text)?
        .as_point()
        .ok_or_else(|| CliError::Input(format!("point `{text}` must have rational coordinates")))
}

fn parse_conic(text: &str) -> CliResult<Conic> {
    Ok(Conic::from_poly(&parse_poly(text, reg())?)?)
}

fn plot_spec(out: &Output) -> CliResult<PlotSpec> {
    PlotSpec::new(PlotSpec::parse_window(&out.window).map_err(CliError::Input)?, out.resolution)
        .map_err(CliError::Input)
}

fn write_svg(f: &Poly, out: &Output, path: &Path, report: &mut Report) -> CliResult<()> {
    let spec = plot_spec(out)?;
    let (svg, contour) = render_svg(f, &spec).map_err(CliError::Input)?;
    if contour.polylines.is_empty() {
        report.warnings.push("empty window: the curve has no sign change in the plot window".into());
    }
    std::fs::write(path, svg).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    report.svg = Some(path.display().to_string());
    Ok(())
}

fn add_singularities(f: &Poly, report: &mut Report) -> CliResult<()> {
    let (points, residual) = singular_points_rational(f)?;
    let mut out = Vec::new();
    for pt in &points {
        let r = classify_singularity(f, pt)?;
        if r.kind == SingularityKind::Acnode {
            report.warnings.push(format!(
                "({}, {}): {ACNODE_NOTE}",
                point_text(pt)[0],
                point_text(pt)[1]
            ));
        }
        out.push((&r).into());
    }
    report.singularities = Some(out);
    report.unresolved_singular_candidates = Some(residual);
    Ok(())
}

fn is_plane_curve(f: &Poly) -> bool {
    !f.is_constant() && f.vars().iter().all(|&v| v == Var::X || v == Var::Y)
}

fn pedal_report(
    argv: &[String],
    conic: &Conic,
    pole_text: &str,
    family: Family,
    out: &Output,
) -> CliResult<Report> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    let pole = parse_point(pole_text)?;
    report.conic = Some(poly_text(&conic.poly()));
    report.conic_kind = Some(conic.kind().name().to_string());
    report.pole = Some([poly_text(&pole.x), poly_text(&pole.y)]);
    report.family = Some(LineFamily::from(family).name().to_string());
    if let Some(pt) = pole.as_point() {
        report.pole_position = Some(conic.position(&pt)?.name().to_string());
    }
    let res = pedal_with_family(conic, &pole, family.into())?;
    report.parametrization = Some(ParamJson {
        x: format_ratfun(&res.parametrization.0, reg()),
        y: format_ratfun(&res.parametrization.1, reg()),
        base_point: None,
        missing_point: None,
    });
    report.implicit = Some(poly_text(&res.implicit));
    report.eliminant = Some(poly_text(&res.eliminant));
    report.removed = res.removed.iter().map(poly_text).collect();
    if is_plane_curve(&res.implicit) {
        let f = factor_bivariate(&res.implicit)?;
        report.irreducible = Some(f.factors.len() == 1 && f.factors[0].1 == 1);
        report.factorization = Some((&f).into());
        add_singularities(&res.implicit, &mut report)?;
        if let Some(path) = &out.svg {
            write_svg(&res.implicit, out, path, &mut report)?;
        }
    } else if out.svg.is_some() {
        report.warnings.push("symbolic pole: no plot written".into());
    }
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn run_single(argv: &[String], command: &Command) -> CliResult<Report> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    match command {
        Command::Pedal { conic, pole, family, out, .. } => {
            let conic = parse_conic(conic)?;
            let pole = pole.as_deref().ok_or_else(|| CliError::Input("missing --pole".into()))?;
            return pedal_report(argv, &conic, pole, *family, out);
        }
        Command::Implicitize { x, y, out } => {
            let xr = parse_ratfun(x, reg())?;
            let yr = parse_ratfun(y, reg())?;
            let bad = |r: &pedcurve::RationalFunction| {
                r.num().vars().into_iter().chain(r.den().vars()).any(|v| v != Var::T)
            };
            if bad(&xr) || bad(&yr) {
                return Err(CliError::Input("parametrization must be in t only".into()));
            }
            let imp = implicitize(&xr, &yr, Var::T, (Var::X, Var::Y))?;
            report.parametrization = Some(ParamJson {
                x: format_ratfun(&xr, reg()),
                y: format_ratfun(&yr, reg()),
                base_point: None,
                missing_point: None,
            });
            report.implicit = Some(poly_text(&imp.curve));
            report.eliminant = Some(poly_text(&imp.raw.normalized()));
            report.removed = imp.removed.iter().map(poly_text).collect();
            if let Some(path) = &out.svg {
                write_svg(&imp.curve, out, path, &mut report)?;
            }
        }
        Command::Factor { poly, method, .. } => {
            let f = parse_poly(poly, reg())?;
            let fac = match method {
                Method::Hensel => factor_bivariate(&f)?,
                Method::Kronecker => factor_kronecker(&f)?,
            };
            report.implicit = Some(poly_text(&f.normalized()));
            if !f.is_constant() {
                report.irreducible = Some(fac.factors.len() == 1 && fac.factors[0].1 == 1);
            }
            report.factorization = Some((&fac).into());
        }
        Command::Singular { poly, out } => {
            let f = parse_poly(poly, reg())?;
            report.implicit = Some(poly_text(&f.normalized()));
            add_singularities(&f, &mut report)?;
            if let Some(path) = &out.svg {
                write_svg(&f, out, path, &mut report)?;
            }
        }
        Command::Param { conic, poly, point, out } => {
            if let Some(c) = conic {
                let c = parse_conic(c)?;
                let par = rational_parametrization(&c)?;
                report.conic = Some(poly_text(&c.poly()));
                report.conic_kind = Some(c.kind().name().to_string());
                report.parametrization = Some(ParamJson {
                    x: format_ratfun(&par.x, reg()),
                    y: format_ratfun(&par.y, reg()),
                    base_point: None,
                    missing_point: par.missing.as_ref().map(point_text),
                });
            } else {
                let f = parse_poly(poly.as_deref().expect("clap requires --poly"), reg())?;
                let pt = parse_numeric_point(point.as_deref().expect("clap requires --point"))?;
                let par = pencil_parametrization(&f, &pt)?;
                report.implicit = Some(poly_text(&f.normalized()));
                report.parametrization = Some(ParamJson {
                    x: format_ratfun(&par.xr, reg()),
                    y: format_ratfun(&par.yr, reg()),
                    base_point: Some(point_text(&par.base_point)),
                    missing_point: None,
                });
                report.self_intersections =
                    Some(self_intersection_pairs(&par)?.iter().map(Into::into).collect());
                if let Some(path) = &out.svg {
                    write_svg(&f, out, path, &mut report)?;
                }
            }
        }
        Command::MatchLimacon { poly, .. } => {
            let f = parse_poly(poly, reg())?;
            report.implicit = Some(poly_text(&f.normalized()));
            report.limacon_matches = Some(limacon_match(&f)?.iter().map(Into::into).collect());
        }
        Command::Plot { poly, out } => {
            let f = parse_poly(poly, reg())?;
            report.implicit = Some(poly_text(&f.normalized()));
            let path = out
                .svg
                .as_ref()
                .ok_or_else(|| CliError::Input("plot needs --svg <path>".into()))?;
            write_svg(&f, out, path, &mut report)?;
        }
    }
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn output_of(command: &Command) -> &Output {
    match command {
        Command::Pedal { out, .. }
        | Command::Implicitize { out, .. }
        | Command::Factor { out, .. }
        | Command::Singular { out, .. }
        | Command::Param { out, .. }
        | Command::MatchLimacon { out, .. }
        | Command::Plot { out, .. } => out,
    }
}

/// Human-readable summary of a report.
pub fn summary(r: &Report) -> String {
    let mut s = String::new();
    let mut line = |k: &str, v: &str| s.push_str(&format!("{k}: {v}\n"));
    if let Some(c) = &r.conic {
        line("conic", c);
    }
    if let Some(p) = &r.pole {
        line("pole", &format!("({}, {})", p[0], p[1]));
    }
    if let Some(p) = &r.parametrization {
        line("x(t)", &p.x);
        line("y(t)", &p.y);
    }
    if let Some(i) = &r.implicit {
        line("curve", i);
    }
    for rm in &r.removed {
        line("removed", rm);
    }
    if let Some(f) = &r.factorization {
        let parts: Vec<String> = f
            .factors
            .iter()
            .map(|x| if x.multiplicity > 1 { format!("({})^{}", x.poly, x.multiplicity) } else { format!("({})", x.poly) })
            .collect();
        line("factors", &format!("{} * {}", f.unit, parts.join(" * ")));
    }
    if let Some(b) = r.irreducible {
        line("irreducible", &b.to_string());
    }
    for sg in r.singularities.iter().flatten() {
        line(
            "singular point",
            &format!("({}, {}) {} m={} cone {}", sg.point[0], sg.point[1], sg.kind, sg.multiplicity, sg.tangent_cone),
        );
    }
    for si in r.self_intersections.iter().flatten() {
        line("self-intersection parameters", &si.minimal_polynomial);
    }
    for m in r.limacon_matches.iter().flatten() {
        line("limacon", &format!("a={} e={} shift=({}, {})", m.a, m.e, m.r1, m.r2));
    }
    if let Some(p) = &r.svg {
        line("svg", p);
    }
    if let Some(e) = &r.error {
        line("error", &e.message);
    }
    s
}

fn render_report(r: &Report, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(r).expect("report serializes") + "\n"
    } else {
        summary(r)
    }
}

fn run_batch(argv: &[String], command: &Command, path: &Path) -> Outcome {
    let start = Instant::now();
    let Command::Pedal { conic, family, out, .. } = command else {
        unreachable!("only pedal takes --poles-file")
    };
    let fail = |e: CliError| Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(CliError::Input(format!("cannot read {}: {e}", path.display()))),
    };
    let conic = match parse_conic(conic) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let poles: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    let batch_out = Output { svg: None, ..out.clone() };
    let results: Vec<(Report, i32)> = poles
        .par_iter()
        .map(|pole| match pedal_report(argv, &conic, pole, *family, &batch_out) {
            Ok(r) => (r, EXIT_OK),
            Err(e) => {
                let mut r = Report::new(argv);
                r.pole = Some([pole.to_string(), String::new()]);
                r.error = Some(e.to_json());
                (r, e.exit_code())
            }
        })
        .collect();
    let code = results.iter().map(|(_, c)| *c).max().unwrap_or(EXIT_OK);
    let batch = BatchReport {
        schema: report::SCHEMA.to_string(),
        normalized: true,
        command: argv.to_vec(),
        reports: results.into_iter().map(|(r, _)| r).collect(),
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    let stdout = if out.json {
        serde_json::to_string_pretty(&batch).expect("report serializes") + "\n"
    } else {
        batch.reports.iter().map(summary).collect::<Vec<_>>().join("\n")
    };
    Outcome { stdout, stderr: String::new(), code }
}

/// Runs the command line `argv` (without the program name).
pub fn run(argv: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(std::iter::once("pedcurve".to_string()).chain(argv.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    if let Command::Pedal { poles_file: Some(path), .. } = &cli.command {
        return run_batch(argv, &cli.command, path);
    }
    let json = output_of(&cli.command).json;
    match run_single(argv, &cli.command) {
        Ok(r) => {
            let stderr = r.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Outcome { stdout: render_report(&r, json), stderr, code: EXIT_OK }
        }
        Err(e) => {
            let stdout = if json {
                let mut r = Report::new(argv);
                r.error = Some(e.to_json());
                render_report(&r, true)
            } else {
                String::new()
            };
            Outcome { stdout, stderr: format!("error: {e}\n"), code: e.exit_code() }
        }
    }
}
