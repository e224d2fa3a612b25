//! SVG rendering of a script environment in the affine chart `z = 1`.
//!
//! Only the output coordinates are floating point. Conic samples are exact
//! points of the conic, obtained as second intersections of lines through a
//! fixed point of the curve.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use pgeo_core::conic::Conic;
use pgeo_core::{HomLine, HomPoint, Scalar};

use crate::script::{Env, Value};

/// World rectangle `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Viewport {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Option<Self> {
        (x0 < x1 && y0 < y1 && [x0, y0, x1, y1].iter().all(|v| v.is_finite())).then_some(Viewport { x0, y0, x1, y1 })
    }

    pub fn from_scalars(v: &[Scalar; 4]) -> Option<Self> {
        Viewport::new(v[0].to_f64(), v[1].to_f64(), v[2].to_f64(), v[3].to_f64())
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        (self.x0..=self.x1).contains(&x) && (self.y0..=self.y1).contains(&y)
    }
}

impl std::str::FromStr for Viewport {
    type Err = String;

    /// `x0,y0,x1,y1`, each a rational in `n/d` form or a decimal.
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.parse::<Scalar>().map(|x| x.to_f64()).or_else(|_| p.parse::<f64>()).map_err(|_| format!("bad number `{p}`"))
            })
            .collect::<Result<_, _>>()?;
        match parts.as_slice() {
            &[x0, y0, x1, y1] => Viewport::new(x0, y0, x1, y1).ok_or_else(|| "empty viewport".to_string()),
            _ => Err("expected x0,y0,x1,y1".into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChartOptions {
    /// `None` fits the finite points of the environment.
    pub viewport: Option<Viewport>,
    /// Width of the image in pixels; the height keeps the aspect ratio.
    pub width: f64,
    /// Samples per conic.
    pub samples: usize,
}

impl Default for ChartOptions {
    fn default() -> Self {
        ChartOptions { viewport: None, width: 512.0, samples: 128 }
    }
}

struct Chart {
    vp: Viewport,
    scale: f64,
    width: f64,
    height: f64,
}

impl Chart {
    fn new(vp: Viewport, width: f64) -> Self {
        let scale = width / (vp.x1 - vp.x0);
        Chart { vp, scale, width, height: (vp.y1 - vp.y0) * scale }
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.vp.x0) * self.scale, (self.vp.y1 - y) * self.scale)
    }
}

fn affine(p: &HomPoint) -> Option<(f64, f64)> {
    p.to_affine().map(|(x, y)| (x.to_f64(), y.to_f64()))
}

/// Bounding box of the finite points, padded; `[-5, 5]²` when there are none.
fn fit(env: &Env) -> Viewport {
    let pts: Vec<(f64, f64)> = env
        .iter()
        .filter_map(|(_, v)| match v {
            Value::Point(p) => affine(p),
            _ => None,
        })
        .collect();
    if pts.is_empty() {
        return Viewport { x0: -5.0, y0: -5.0, x1: 5.0, y1: 5.0 };
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for (x, y) in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = 0.2 * (x1 - x0).max(y1 - y0).max(2.0);
    Viewport { x0: x0 - pad, y0: y0 - pad, x1: x1 + pad, y1: y1 + pad }
}

/// The part of `l` inside the viewport, as two world points.
fn clip_line(l: &HomLine, vp: &Viewport) -> Option<((f64, f64), (f64, f64))> {
    let [a, b, c] = l.scalars().map(|s| s.to_f64());
    if a == 0.0 && b == 0.0 {
        return None;
    }
    let mut hits: Vec<(f64, f64)> = Vec::new();
    if b != 0.0 {
        for x in [vp.x0, vp.x1] {
            hits.push((x, -(a * x + c) / b));
        }
    }
    if a != 0.0 {
        for y in [vp.y0, vp.y1] {
            hits.push((-(b * y + c) / a, y));
        }
    }
    let eps = 1e-9 * (vp.x1 - vp.x0).max(vp.y1 - vp.y0);
    let inside = Viewport { x0: vp.x0 - eps, y0: vp.y0 - eps, x1: vp.x1 + eps, y1: vp.y1 + eps };
    hits.retain(|&(x, y)| inside.contains(x, y));
    hits.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));
    match (hits.first(), hits.last()) {
        (Some(&p), Some(&q)) if (p.0 - q.0).abs() + (p.1 - q.1).abs() > eps => Some((p, q)),
        _ => None,
    }
}

fn rational(v: f64) -> Scalar {
    Scalar::new((v * 1e6).round() as i64, 1_000_000).expect("nonzero denominator")
}

/// `n` exact points of `k`, in order around the curve, as homogeneous
/// scalar triples with a consistent sign (so the sign of `z` tells which
/// side of the line at infinity a sample lies on).
///
/// Sample `i` is the second intersection of the line through a fixed finite
/// point `P` of `k` in direction `θ = πi/n`; the inscribed-angle theorem
/// makes the samples of a circle equally spaced.
pub fn conic_samples(k: &Conic, n: usize) -> Vec<[Scalar; 3]> {
    let p = k.locus().find(|x| x.is_finite()).expect("a conic has finite points");
    let p = p.scalars();
    let m = k.matrix_scalars();
    (0..n)
        .map(|i| {
            let theta = std::f64::consts::PI * i as f64 / n as f64;
            let w = [rational(theta.cos()), rational(theta.sin()), Scalar::zero()];
            let q = m.quadratic_form(&w);
            let b2 = Scalar::from(2) * m.bilinear(&p, &w);
            [0, 1, 2].map(|j| &q * &p[j] - &b2 * &w[j])
        })
        .collect()
}

/// Pixel polylines of a conic, broken where the curve passes through
/// infinity or far outside the picture.
fn conic_paths(k: &Conic, chart: &Chart, n: usize) -> (Vec<Vec<(f64, f64)>>, bool) {
    let samples = conic_samples(k, n);
    let far = 10.0 * chart.width.max(chart.height);
    let pts: Vec<Option<(f64, f64)>> = samples
        .iter()
        .map(|s| {
            if s[2].is_zero() {
                return None;
            }
            let (x, y) = ((&s[0] / &s[2]).to_f64(), (&s[1] / &s[2]).to_f64());
            let (px, py) = chart.px(x, y);
            (px.abs() < far && py.abs() < far).then_some((px, py))
        })
        .collect();
    let signs: Vec<i8> = samples.iter().map(|s| s[2].sign()).collect();
    let breaks: Vec<usize> =
        (0..n).filter(|&i| pts[i].is_none() || pts[(i + 1) % n].is_none() || signs[i] != signs[(i + 1) % n]).collect();
    if breaks.is_empty() {
        return (vec![pts.into_iter().flatten().collect()], true);
    }
    // walk once around, starting just after a break
    let start = (breaks[0] + 1) % n;
    let mut paths = Vec::new();
    let mut cur: Vec<(f64, f64)> = Vec::new();
    for step in 0..n {
        let i = (start + step) % n;
        if let Some(p) = pts[i] {
            cur.push(p);
        }
        if breaks.contains(&i) {
            if cur.len() > 1 {
                paths.push(std::mem::take(&mut cur));
            }
            cur.clear();
        }
    }
    if cur.len() > 1 {
        paths.push(cur);
    }
    (paths, false)
}

/// Arrow from inside the picture to the edge point in direction `(dx, dy)`.
fn ideal_arrow(chart: &Chart, dx: f64, dy: f64) -> ((f64, f64), (f64, f64)) {
    let (cx, cy) = (chart.width / 2.0, chart.height / 2.0);
    let (ux, uy) = {
        let n = dx.hypot(dy);
        (dx / n, -dy / n)
    };
    let tx = if ux != 0.0 { cx / ux.abs() } else { f64::INFINITY };
    let ty = if uy != 0.0 { cy / uy.abs() } else { f64::INFINITY };
    let t = tx.min(ty);
    let tip = (cx + t * ux, cy + t * uy);
    let tail = (tip.0 - 30.0 * ux, tip.1 - 30.0 * uy);
    (tail, tip)
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The SVG document for `env`. Points, lines and conics are drawn; maps
/// and scalars are not.
pub fn render_svg(env: &Env, opts: &ChartOptions) -> String {
    let chart = Chart::new(opts.viewport.unwrap_or_else(|| fit(env)), opts.width);
    let (w, h) = (chart.width, chart.height);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#);
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="12" stroke-width="1.5">"#);
    for (name, v) in env.iter() {
        let name = esc(name);
        match v {
            Value::Point(p) => match affine(p) {
                Some((x, y)) if chart.vp.contains(x, y) => {
                    let (px, py) = chart.px(x, y);
                    let _ = writeln!(s, r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="black"/>"#);
                    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{name}</text>"#, px + 5.0, py - 5.0);
                }
                Some(_) => {}
                None => {
                    let [x, y, _] = p.scalars().map(|c| c.to_f64());
                    let ((ax, ay), (bx, by)) = ideal_arrow(&chart, x, y);
                    let (ux, uy) = ((bx - ax) / 30.0, (by - ay) / 30.0);
                    let (l, r) = ((bx - 8.0 * ux - 4.0 * uy, by - 8.0 * uy + 4.0 * ux), (bx - 8.0 * ux + 4.0 * uy, by - 8.0 * uy - 4.0 * ux));
                    let _ = writeln!(
                        s,
                        r#"<path d="M {ax:.2} {ay:.2} L {bx:.2} {by:.2} M {:.2} {:.2} L {bx:.2} {by:.2} L {:.2} {:.2}" stroke="gray" fill="none"/>"#,
                        l.0, l.1, r.0, r.1
                    );
                    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" fill="gray">{name}</text>"#, ax - 12.0 * ux, ay - 12.0 * uy);
                }
            },
            Value::Line(l) => {
                if let Some((a, b)) = clip_line(l, &chart.vp) {
                    let ((x1, y1), (x2, y2)) = (chart.px(a.0, a.1), chart.px(b.0, b.1));
                    let _ = writeln!(s, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="steelblue"/>"#);
                    let (mx, my) = (x1 + 0.25 * (x2 - x1), y1 + 0.25 * (y2 - y1));
                    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" fill="steelblue">{name}</text>"#, mx + 4.0, my - 4.0);
                }
            }
            Value::Conic(k) => {
                let (paths, closed) = conic_paths(k, &chart, opts.samples);
                for path in &paths {
                    let mut d = String::new();
                    for (i, (x, y)) in path.iter().enumerate() {
                        let _ = write!(d, "{}{x:.2} {y:.2} ", if i == 0 { "M " } else { "L " });
                    }
                    if closed {
                        d.push('Z');
                    }
                    let _ = writeln!(s, r#"<path class="conic" d="{}" stroke="darkred" fill="none"/>"#, d.trim_end());
                }
                if let Some(&(x, y)) = paths.iter().flatten().min_by(|a, b| a.1.total_cmp(&b.1)) {
                    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" fill="darkred">{name}</text>"#, x + 4.0, y - 6.0);
                }
            }
            Value::Map(_) | Value::Scalar(_) | Value::Bool(_) => {}
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}

pub fn write_svg(env: &Env, path: &Path, opts: &ChartOptions) -> io::Result<()> {
    std::fs::write(path, render_svg(env, opts))
}
