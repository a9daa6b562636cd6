//! Marching-squares rendering of `F(x, y) = 0` to SVG.

use std::collections::HashMap;
use std::fmt::Write as _;

use pedcurve::{Poly, Var};

#[derive(Clone, Debug, PartialEq)]
pub struct PlotSpec {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    /// Grid cells per axis.
    pub resolution: usize,
    /// Stroke width in pixels.
    pub stroke: f64,
}

impl PlotSpec {
    pub fn new(window: [f64; 4], resolution: usize) -> Result<Self, String> {
        let [xmin, xmax, ymin, ymax] = window;
        if !window.iter().all(|v| v.is_finite()) || xmin >= xmax || ymin >= ymax {
            return Err(format!("invalid window {xmin},{xmax},{ymin},{ymax}"));
        }
        if resolution < 16 {
            return Err(format!("resolution {resolution} is below 16"));
        }
        Ok(PlotSpec { xmin, xmax, ymin, ymax, resolution, stroke: 1.5 })
    }

    /// Parses `x0,x1,y0,y1`.
    pub fn parse_window(text: &str) -> Result<[f64; 4], String> {
        let parts: Vec<f64> = text
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| format!("window `{text}` is not four decimals"))?;
        parts
            .try_into()
            .map_err(|_| format!("window `{text}` must have four values"))
    }

    fn x(&self, i: f64) -> f64 {
        self.xmin + (self.xmax - self.xmin) * i / self.resolution as f64
    }

    fn y(&self, j: f64) -> f64 {
        self.ymin + (self.ymax - self.ymin) * j / self.resolution as f64
    }
}

/// Float evaluator for a polynomial in `x`, `y`.
#[derive(Clone, Debug)]
pub struct Evaluator {
    terms: Vec<(i32, i32, f64)>,
}

impl Evaluator {
    pub fn new(f: &Poly) -> Result<Self, String> {
        if f.vars().iter().any(|&v| v != Var::X && v != Var::Y) {
            return Err("plotting needs a polynomial in x and y only".into());
        }
        let fl = f.to_f64();
        let terms = fl
            .terms()
            .map(|(m, c)| (m.exp(Var::X) as i32, m.exp(Var::Y) as i32, *c))
            .collect();
        Ok(Evaluator { terms })
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().map(|&(i, j, c)| c * x.powi(i) * y.powi(j)).sum()
    }
}

/// Sampled values on the `(resolution + 1)²` grid nodes.
#[derive(Clone, Debug)]
pub struct Grid {
    pub spec: PlotSpec,
    values: Vec<f64>,
}

impl Grid {
    pub fn sample(f: &Evaluator, spec: &PlotSpec) -> Self {
        let n = spec.resolution + 1;
        let mut values = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                values.push(f.eval(spec.x(i as f64), spec.y(j as f64)));
            }
        }
        Grid { spec: spec.clone(), values }
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[j * (self.spec.resolution + 1) + i]
    }

    pub fn node(&self, i: usize, j: usize) -> (f64, f64) {
        (self.spec.x(i as f64), self.spec.y(j as f64))
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Lower-left node of the cell containing `(x, y)`.
    pub fn cell_of(&self, x: f64, y: f64) -> Option<(usize, usize)> {
        let s = &self.spec;
        let fi = (x - s.xmin) / (s.xmax - s.xmin) * s.resolution as f64;
        let fj = (y - s.ymin) / (s.ymax - s.ymin) * s.resolution as f64;
        if fi < 0.0 || fj < 0.0 || fi >= s.resolution as f64 || fj >= s.resolution as f64 {
            return None;
        }
        Some((fi as usize, fj as usize))
    }

    pub fn cell_has_crossing(&self, i: usize, j: usize) -> bool {
        let c = [self.value(i, j), self.value(i + 1, j), self.value(i + 1, j + 1), self.value(i, j + 1)];
        let pos = c.iter().filter(|v| **v >= 0.0).count();
        pos != 0 && pos != 4
    }
}

/// Edge key: lower-left node and direction (0 horizontal, 1 vertical).
type EdgeKey = (usize, usize, u8);

#[derive(Clone, Debug, Default)]
pub struct Contour {
    pub polylines: Vec<Vec<(f64, f64)>>,
    pub max_abs: f64,
}

impl Contour {
    pub fn vertices(&self) -> impl Iterator<Item = &(f64, f64)> {
        self.polylines.iter().flatten()
    }
}

fn refine(f: &Evaluator, a: (f64, f64), b: (f64, f64), fa: f64, fb: f64, tol: f64) -> (f64, f64) {
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    let (mut lo, mut hi, mut flo) = (a, b, fa);
    let mut mid = lo;
    for _ in 0..80 {
        mid = ((lo.0 + hi.0) / 2.0, (lo.1 + hi.1) / 2.0);
        let fm = f.eval(mid.0, mid.1);
        if fm.abs() <= tol {
            break;
        }
        if (fm >= 0.0) == (flo >= 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    mid
}

pub fn trace(f: &Evaluator, spec: &PlotSpec) -> (Grid, Contour) {
    let grid = Grid::sample(f, spec);
    let max_abs = grid.max_abs();
    let tol = 1e-9 * max_abs;
    let n = spec.resolution;
    let mut points: HashMap<EdgeKey, (f64, f64)> = HashMap::new();
    let mut point_at = |key: EdgeKey| -> (f64, f64) {
        *points.entry(key).or_insert_with(|| {
            let (i, j, d) = key;
            let (i2, j2) = if d == 0 { (i + 1, j) } else { (i, j + 1) };
            refine(f, grid.node(i, j), grid.node(i2, j2), grid.value(i, j), grid.value(i2, j2), tol)
        })
    };
    let mut segments: Vec<(EdgeKey, EdgeKey)> = Vec::new();
    for j in 0..n {
        for i in 0..n {
            // corners counter-clockwise from lower-left, edges between them
            let v = [grid.value(i, j), grid.value(i + 1, j), grid.value(i + 1, j + 1), grid.value(i, j + 1)];
            let edges: [EdgeKey; 4] = [(i, j, 0), (i + 1, j, 1), (i, j + 1, 0), (i, j, 1)];
            let crossing: Vec<usize> = (0..4).filter(|&k| (v[k] >= 0.0) != (v[(k + 1) % 4] >= 0.0)).collect();
            match crossing.len() {
                2 => segments.push((edges[crossing[0]], edges[crossing[1]])),
                4 => {
                    let (cx, cy) = grid.node(i, j);
                    let h = ((spec.xmax - spec.xmin) / (2.0 * n as f64), (spec.ymax - spec.ymin) / (2.0 * n as f64));
                    let centre = f.eval(cx + h.0, cy + h.1) >= 0.0;
                    if centre == (v[0] >= 0.0) {
                        segments.push((edges[0], edges[1]));
                        segments.push((edges[2], edges[3]));
                    } else {
                        segments.push((edges[3], edges[0]));
                        segments.push((edges[1], edges[2]));
                    }
                }
                _ => {}
            }
        }
    }
    for (a, b) in &segments {
        point_at(*a);
        point_at(*b);
    }
    let polylines = join(&segments)
        .into_iter()
        .map(|chain| chain.into_iter().map(|k| points[&k]).collect())
        .collect();
    (grid, Contour { polylines, max_abs })
}

/// Chains segments that share edge points into polylines.
fn join(segments: &[(EdgeKey, EdgeKey)]) -> Vec<Vec<EdgeKey>> {
    let mut adj: HashMap<EdgeKey, Vec<usize>> = HashMap::new();
    for (s, (a, b)) in segments.iter().enumerate() {
        adj.entry(*a).or_default().push(s);
        adj.entry(*b).or_default().push(s);
    }
    let mut used = vec![false; segments.len()];
    let other = |s: usize, k: EdgeKey| if segments[s].0 == k { segments[s].1 } else { segments[s].0 };
    let extend = |chain: &mut Vec<EdgeKey>, used: &mut Vec<bool>| loop {
        let end = *chain.last().expect("nonempty chain");
        let next = adj[&end].iter().copied().find(|&s| !used[s]);
        match next {
            Some(s) => {
                used[s] = true;
                chain.push(other(s, end));
            }
            None => break,
        }
    };
    let mut out = Vec::new();
    // open chains first, starting from endpoints of degree one
    let mut starts: Vec<EdgeKey> = adj.iter().filter(|(_, v)| v.len() == 1).map(|(k, _)| *k).collect();
    starts.sort();
    let mut all: Vec<EdgeKey> = adj.keys().copied().collect();
    all.sort();
    starts.extend(all);
    for start in starts {
        while let Some(&s) = adj[&start].iter().find(|&&s| !used[s]) {
            used[s] = true;
            let mut chain = vec![start, other(s, start)];
            extend(&mut chain, &mut used);
            out.push(chain);
        }
    }
    out
}

/// SVG 1.1 document with one `path` per polyline. Returns the document and
/// the traced contour; an empty contour yields a plot with a warning note.
pub fn render_svg(f: &Poly, spec: &PlotSpec) -> Result<(String, Contour), String> {
    let ev = Evaluator::new(f)?;
    let (_, contour) = trace(&ev, spec);
    let size = 512.0;
    let sx = size / (spec.xmax - spec.xmin);
    let sy = size / (spec.ymax - spec.ymin);
    let px = |x: f64, y: f64| ((x - spec.xmin) * sx, (spec.ymax - y) * sy);
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(svg, r##"<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="#bbbbbb"/>"##);
    if contour.polylines.is_empty() {
        let _ = writeln!(svg, r##"<text x="10" y="20" font-size="14" fill="#aa0000">empty window: no sign change of F</text>"##);
    }
    for line in &contour.polylines {
        let mut d = String::new();
        for (k, &(x, y)) in line.iter().enumerate() {
            let (a, b) = px(x, y);
            let _ = write!(d, "{}{a:.3} {b:.3}", if k == 0 { "M" } else { " L" });
        }
        let _ = writeln!(svg, r#"<path d="{d}" fill="none" stroke="black" stroke-width="{}"/>"#, spec.stroke);
    }
    svg.push_str("</svg>\n");
    Ok((svg, contour))
}
