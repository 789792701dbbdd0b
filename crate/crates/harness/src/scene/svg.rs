//! Deterministic SVG output for scenes.

use std::collections::HashMap;
use std::fmt::Write as _;

use orthokit::conics::{Conic, ConicClass};
use orthokit::{Rational, Scalar};

use super::eval::{evaluate_objects, Object};
use super::{Atom, Expr, SceneDoc, SceneError, Value};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 0.1;
const FAMILY_SAMPLES: [(i64, i64); 5] = [(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)];
const STYLE: &str = "\
.point{fill:#000}\
.center{fill:#c0392b}\
.label{font:12px sans-serif}\
.line{stroke:#7f8c8d;stroke-width:1}\
.perpendicular{stroke:#c0392b;stroke-width:1;stroke-dasharray:4 3}\
.triangle{fill:none;stroke:#1f4e79;stroke-width:1.5}\
.member{fill:none;stroke:#5d6d7e;stroke-width:1}\
.conic{fill:none;stroke:#8e44ad;stroke-width:1.5}";

type P = (f64, f64);

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn f(q: &Rational) -> f64 {
    q.to_f64()
}

fn vertices(t: &orthokit::family::Triangle<Rational>) -> [P; 3] {
    t.vertices().map(|v| (f(&v.x), f(&v.y)))
}

fn family_members(fam: &orthokit::family::LinearFamily<Rational>) -> Vec<[P; 3]> {
    FAMILY_SAMPLES
        .iter()
        .map(|&(n, d)| vertices(&fam.at(&Rational::from_ratio(n, d))))
        .collect()
}

#[derive(Clone, Copy, Debug)]
struct View {
    xmin: f64,
    ymax: f64,
    scale: f64,
    height: f64,
}

impl View {
    fn fit(points: &[P]) -> View {
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points.iter().filter(|(x, y)| x.is_finite() && y.is_finite()) {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        if xmin > xmax {
            (xmin, xmax, ymin, ymax) = (-10.0, 10.0, -10.0, 10.0);
        }
        let span = (xmax - xmin).max(ymax - ymin).max(1e-6);
        let (cx, cy) = ((xmin + xmax) / 2.0, (ymin + ymax) / 2.0);
        let w = (xmax - xmin).max(span / 4.0) * (1.0 + 2.0 * MARGIN);
        let h = (ymax - ymin).max(span / 4.0) * (1.0 + 2.0 * MARGIN);
        let scale = WIDTH / w;
        View {
            xmin: cx - w / 2.0,
            ymax: cy + h / 2.0,
            scale,
            height: (h * scale).round(),
        }
    }

    fn px(&self, (x, y): P) -> P {
        ((x - self.xmin) * self.scale, (self.ymax - y) * self.scale)
    }

    fn world_box(&self) -> (f64, f64, f64, f64) {
        let ymin = self.ymax - self.height / self.scale;
        (self.xmin, self.xmin + WIDTH / self.scale, ymin, self.ymax)
    }
}

/// Extreme points of a real ellipse, so bounded conics fit in the view.
fn ellipse_extent(c: &Conic<Rational>) -> Vec<P> {
    if c.classify() != ConicClass::Ellipse {
        return Vec::new();
    }
    let [a, b, cc, d, e, k] = c.coeffs().map(|q| f(&q));
    let det = 4.0 * a * cc - b * b;
    let x0 = (b * e - 2.0 * cc * d) / det;
    let y0 = (b * d - 2.0 * a * e) / det;
    let value = a * x0 * x0 + b * x0 * y0 + cc * y0 * y0 + d * x0 + e * y0 + k;
    let rhs = -value;
    let du = (4.0 * cc * rhs / det).max(0.0).sqrt();
    let dv = (4.0 * a * rhs / det).max(0.0).sqrt();
    vec![(x0 - du, y0 - dv), (x0 + du, y0 + dv)]
}

struct Conicf {
    c: [f64; 6],
}

impl Conicf {
    fn new(c: &Conic<Rational>) -> Conicf {
        let c = c.coeffs().map(|q| f(&q));
        let m = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        Conicf { c: c.map(|x| x / m) }
    }

    fn q(&self, (dx, dy): P) -> f64 {
        let [a, b, c, ..] = self.c;
        a * dx * dx + b * dx * dy + c * dy * dy
    }

    fn grad(&self, (x, y): P) -> P {
        let [a, b, c, d, e, _] = self.c;
        (2.0 * a * x + b * y + d, b * x + 2.0 * c * y + e)
    }

    /// Real points on the horizontal line at height `y`.
    fn on_row(&self, y: f64) -> Vec<f64> {
        let [a, b, c, d, e, k] = self.c;
        roots(a, b * y + d, c * y * y + e * y + k)
    }

    fn on_column(&self, x: f64) -> Vec<f64> {
        let [a, b, c, d, e, k] = self.c;
        roots(c, b * x + e, a * x * x + d * x + k)
    }

    fn center(&self) -> Option<P> {
        let [a, b, c, d, e, _] = self.c;
        let det = 4.0 * a * c - b * b;
        (det.abs() > 1e-12).then(|| ((b * e - 2.0 * c * d) / det, (b * d - 2.0 * a * e) / det))
    }

    fn find_point(&self, view: &View) -> Option<P> {
        let (x0, x1, y0, y1) = view.world_box();
        if let Some((cx, cy)) = self.center() {
            if let Some(&x) = self.on_row(cy).first() {
                return Some((x, cy));
            }
            if let Some(&y) = self.on_column(cx).first() {
                return Some((cx, y));
            }
        }
        let (w, h) = (x1 - x0, y1 - y0);
        for k in 0..=400 {
            let y = y0 - h + 3.0 * h * k as f64 / 400.0;
            if let Some(&x) = self.on_row(y).first() {
                return Some((x, y));
            }
        }
        for k in 0..=400 {
            let x = x0 - w + 3.0 * w * k as f64 / 400.0;
            if let Some(&y) = self.on_column(x).first() {
                return Some((x, y));
            }
        }
        None
    }
}

fn roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return Vec::new();
    }
    if a.abs() <= 1e-12 * scale {
        return if b.abs() > 1e-12 * scale { vec![-c / b] } else { Vec::new() };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        if disc > -1e-12 * scale * scale {
            return vec![-b / (2.0 * a)];
        }
        return Vec::new();
    }
    let r = disc.sqrt();
    let q = -0.5 * (b + b.signum() * r);
    let mut out = if q == 0.0 { vec![0.0] } else { vec![q / a, c / q] };
    out.sort_by(f64::total_cmp);
    out
}

/// Clips the line `a x + b y + c = 0` to the view, in pixels.
fn clip_line([a, b, c]: [f64; 3], view: &View) -> Option<(P, P)> {
    let (x0, x1, y0, y1) = view.world_box();
    let mut hits: Vec<P> = Vec::new();
    if b.abs() > 1e-15 {
        for x in [x0, x1] {
            let y = -(a * x + c) / b;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if a.abs() > 1e-15 {
        for y in [y0, y1] {
            let x = -(b * y + c) / a;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));
    match (hits.first(), hits.last()) {
        (Some(&p), Some(&q)) if p != q => Some((view.px(p), view.px(q))),
        _ => None,
    }
}

struct Tracer<'a> {
    conic: &'a Conicf,
    view: &'a View,
    origin: P,
    grad: P,
    path: String,
    pen_down: bool,
}

impl Tracer<'_> {
    fn dir(theta: f64) -> P {
        (theta.cos(), theta.sin())
    }

    /// The second intersection with the line through the origin point
    /// in direction `theta`, in pixels, or `None` when it is far away.
    fn at(&self, theta: f64) -> Option<P> {
        let d = Self::dir(theta);
        let q = self.conic.q(d);
        let s = -(self.grad.0 * d.0 + self.grad.1 * d.1) / q;
        let p = self.view.px((self.origin.0 + s * d.0, self.origin.1 + s * d.1));
        let far = 20.0 * WIDTH.max(self.view.height);
        (p.0.is_finite() && p.1.is_finite() && p.0.abs() < far && p.1.abs() < far).then_some(p)
    }

    fn emit(&mut self, p: P) {
        let cmd = if self.pen_down { 'L' } else { 'M' };
        let _ = write!(self.path, "{cmd}{} {} ", num(p.0), num(p.1));
        self.pen_down = true;
    }

    fn beyond_same_edge(&self, a: P, b: P) -> bool {
        let (w, h) = (WIDTH, self.view.height);
        (a.0 < 0.0 && b.0 < 0.0) || (a.0 > w && b.0 > w) || (a.1 < 0.0 && b.1 < 0.0) || (a.1 > h && b.1 > h)
    }

    fn segment(&mut self, t0: f64, p0: Option<P>, t1: f64, p1: Option<P>, depth: u32) {
        let crosses = self.conic.q(Self::dir(t0)).signum() != self.conic.q(Self::dir(t1)).signum();
        let close = match (p0, p1) {
            (Some(a), Some(b)) => (a.0 - b.0).hypot(a.1 - b.1) <= 2.0 || self.beyond_same_edge(a, b),
            _ => false,
        };
        if depth < 18 && !close && (crosses || p0.is_some() || p1.is_some()) {
            let tm = (t0 + t1) / 2.0;
            let pm = self.at(tm);
            self.segment(t0, p0, tm, pm, depth + 1);
            self.segment(tm, pm, t1, p1, depth + 1);
            return;
        }
        match (p0, p1) {
            (Some(_), Some(b)) if !crosses => self.emit(b),
            _ => self.pen_down = false,
        }
    }

    fn trace(conic: &Conicf, view: &View, origin: P) -> String {
        let mut tr = Tracer {
            conic,
            view,
            origin,
            grad: conic.grad(origin),
            path: String::new(),
            pen_down: false,
        };
        let n = 256;
        let step = std::f64::consts::PI / n as f64;
        let mut prev = tr.at(0.0);
        if let Some(p) = prev {
            tr.emit(p);
        }
        for k in 1..=n {
            let t = k as f64 * step;
            let cur = tr.at(t);
            tr.segment(t - step, prev, t, cur, 0);
            prev = cur;
        }
        tr.path
    }
}

/// Lines making up a degenerate conic.
fn degenerate_lines(c: &Conicf) -> Vec<[f64; 3]> {
    let [a, b, cc, d, e, _] = c.c;
    let dirs: Vec<P> = if a.abs() > 1e-12 {
        roots(a, b, cc).into_iter().map(|t| (t, 1.0)).collect()
    } else {
        let mut v = vec![(1.0, 0.0)];
        v.extend(roots(cc, b, 0.0).into_iter().filter(|t| t.abs() > 1e-12).map(|t| (1.0, t)));
        if b.abs() <= 1e-12 {
            v.truncate(1);
        }
        v
    };
    let mut lines = Vec::new();
    for (i, &(dx, dy)) in dirs.iter().enumerate() {
        if dirs[..i].iter().any(|&(px, py)| (px * dy - py * dx).abs() < 1e-9) {
            continue;
        }
        let (nx, ny) = (-dy, dx);
        let through: Vec<P> = if let Some(ctr) = c.center() {
            vec![ctr]
        } else {
            // parallel lines meet the normal through the origin once each
            let qa = c.q((nx, ny));
            roots(qa, d * nx + e * ny, c.c[5]).into_iter().map(|s| (s * nx, s * ny)).collect()
        };
        for (px, py) in through {
            lines.push([nx, ny, -(nx * px + ny * py)]);
        }
    }
    lines
}

fn conic_path(c: &Conic<Rational>, view: &View) -> String {
    let cf = Conicf::new(c);
    match c.classify() {
        ConicClass::LinePair { .. } | ConicClass::OtherDegenerate => {
            let mut path = String::new();
            for l in degenerate_lines(&cf) {
                if let Some((p, q)) = clip_line(l, view) {
                    let _ = write!(path, "M{} {} L{} {} ", num(p.0), num(p.1), num(q.0), num(q.1));
                }
            }
            path
        }
        _ => match cf.find_point(view) {
            Some(origin) => Tracer::trace(&cf, view, origin),
            None => String::new(),
        },
    }
}

fn polygon(out: &mut String, class: &str, pts: &[P; 3], view: &View) {
    let coords: Vec<String> = pts
        .iter()
        .map(|&p| {
            let (x, y) = view.px(p);
            format!("{},{}", num(x), num(y))
        })
        .collect();
    let _ = writeln!(out, "<polygon class=\"{class}\" points=\"{}\"/>", coords.join(" "));
}

fn marker(out: &mut String, class: &str, name: &str, p: P, view: &View) {
    let (x, y) = view.px(p);
    let _ = writeln!(out, "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"3\"/>", num(x), num(y));
    let _ = writeln!(
        out,
        "<text class=\"label\" x=\"{}\" y=\"{}\">{name}</text>",
        num(x + 5.0),
        num(y - 5.0)
    );
}

fn finite_point(v: &Value) -> Option<P> {
    match v {
        Value::Point(p) => p.to_point().map(|q| (f(&q.x), f(&q.y))),
        _ => None,
    }
}

/// The first argument of a center construction, when it names a triangle.
fn center_source<'a>(obj: &Object, values: &HashMap<&str, &'a Value>) -> Option<&'a Value> {
    match &obj.expr {
        Expr::Call { func, args } if func == "orthology_center" || func == "harmonic_center" => match args.first() {
            Some(Atom::Name(n)) => values.get(n.as_str()).copied(),
            _ => None,
        },
        _ => None,
    }
}

pub fn render_svg(doc: &SceneDoc) -> Result<String, SceneError> {
    let objects = evaluate_objects(doc)?;
    let mut fit: Vec<P> = Vec::new();
    for o in &objects {
        match &o.value {
            Value::Point(_) => fit.extend(finite_point(&o.value)),
            Value::Triangle(t) => fit.extend(vertices(t)),
            Value::Family(fam) => fit.extend(family_members(fam).into_iter().flatten()),
            Value::Conic(c) => fit.extend(ellipse_extent(c)),
            _ => {}
        }
    }
    let mut out = String::new();
    if objects.is_empty() {
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{w}\" viewBox=\"0 0 {w} {w}\"></svg>",
            w = WIDTH
        );
        return Ok(out);
    }
    let view = View::fit(&fit);
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = WIDTH,
        h = view.height
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
    let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>");
    let values: HashMap<&str, &Value> = objects.iter().map(|o| (o.name.as_str(), &o.value)).collect();
    for o in &objects {
        let _ = writeln!(out, "<g id=\"{}\">", o.name);
        match &o.value {
            Value::Scalar(_) => {}
            Value::Point(_) => {
                if let Some(p) = finite_point(&o.value) {
                    match center_source(o, &values) {
                        Some(Value::Triangle(t)) => {
                            let (cx, cy) = view.px(p);
                            for v in vertices(t) {
                                let (x, y) = view.px(v);
                                let _ = writeln!(
                                    out,
                                    "<line class=\"perpendicular\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                                    num(x),
                                    num(y),
                                    num(cx),
                                    num(cy)
                                );
                            }
                            marker(&mut out, "center", &o.name, p, &view);
                        }
                        _ => marker(&mut out, "point", &o.name, p, &view),
                    }
                }
            }
            Value::Line(l) => {
                if let Some((p, q)) = clip_line(l.coords().map(|x| f(&x)), &view) {
                    let _ = writeln!(
                        out,
                        "<line class=\"line\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                        num(p.0),
                        num(p.1),
                        num(q.0),
                        num(q.1)
                    );
                }
            }
            Value::Triangle(t) => polygon(&mut out, "triangle", &vertices(t), &view),
            Value::Family(fam) => {
                for m in family_members(fam) {
                    polygon(&mut out, "member", &m, &view);
                }
            }
            Value::Conic(c) => {
                let _ = writeln!(out, "<path class=\"conic\" d=\"{}\"/>", conic_path(c, &view).trim_end());
            }
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::parse_scene;

    fn svg(src: &str) -> String {
        render_svg(&parse_scene(src).unwrap()).unwrap()
    }

    #[test]
    fn empty_scene_is_a_valid_document() {
        let s = svg("");
        assert!(s.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(s.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn both_centers_draw_six_perpendiculars() {
        let s = svg(
            "triangle T = (0,0) (4,0) (1,3)\ntriangle U = (3,3) (-2,2) (1,-2)\n\
             point O = orthology_center T U\npoint O' = orthology_center U T",
        );
        assert_eq!(s.matches("class=\"perpendicular\"").count(), 6);
        assert_eq!(s.matches("class=\"center\"").count(), 2);
    }

    #[test]
    fn family_with_gamma() {
        let s = svg("triangle T = (0,0) (4,0) (1,3)\ntriangle U = (3,3) (-2,2) (1,-2)\nfamily F = T U\nconic G = gamma F 1/2");
        assert_eq!(s.matches("class=\"member\"").count(), 5);
        assert_eq!(s.matches("class=\"conic\"").count(), 1);
        let d = s.split("class=\"conic\" d=\"").nth(1).unwrap();
        assert!(d.starts_with('M') && d.matches('L').count() > 50);
    }

    #[test]
    fn conic_points_lie_on_the_circle() {
        let s = svg("triangle T = (0,0) (4,0) (0,4)\nconic C = circumcircle T");
        let d = s.split("class=\"conic\" d=\"").nth(1).unwrap().split('"').next().unwrap();
        let circle: Conic<Rational> = Conic::from_i64([1, 0, 1, -4, -4, 0]);
        let mut fit = vec![(0.0, 0.0), (4.0, 0.0), (0.0, 4.0)];
        fit.extend(ellipse_extent(&circle));
        let view = View::fit(&fit);
        for pair in d.split(['M', 'L']).filter(|p| !p.trim().is_empty()) {
            let mut it = pair.split_whitespace().map(|x| x.parse::<f64>().unwrap());
            let (px, py) = (it.next().unwrap(), it.next().unwrap());
            let (x, y) = (px / view.scale + view.xmin, view.ymax - py / view.scale);
            let r = ((x - 2.0).powi(2) + (y - 2.0).powi(2)).sqrt();
            assert!((r - 8f64.sqrt()).abs() < 0.01, "{x} {y}");
        }
    }

    #[test]
    fn line_pairs_draw_both_lines() {
        let s = svg("point A = (0,0)\nconic C = (1, 0, -1, 0, 0, 0)");
        let d = s.split("class=\"conic\" d=\"").nth(1).unwrap();
        assert_eq!(d.split('"').next().unwrap().matches('M').count(), 2);
    }

    #[test]
    fn rendering_is_deterministic() {
        let src = "triangle T = (0,0) (4,0) (1,3)\nfamily F = kiepert T\nconic K = center_conic T F";
        assert_eq!(svg(src), svg(src));
    }
}
