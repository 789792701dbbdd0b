//! Exact evaluation of scenes.

use std::collections::HashMap;
use std::fmt;

use orthokit::conics::{
    conic_through_5, correspondence_envelope, envelope_conic, gamma_conic, parabola_focus, Conic,
};
use orthokit::constructions::{
    alpha_pedal_triangle, altitude_configuration, contact_triangles, kiepert_family, outer_square_centers,
    pedal_triangle, simson_line, triangle_from_tangent_params, ReferenceTriangle,
};
use orthokit::family::{spiral_center, Degeneracies, LinearFamily, PairCenter, Singularity, Triangle, VertexPair};
use orthokit::kernel::{collinear, concurrent, intersect};
use orthokit::operator4::{operator_of_family, Eigen};
use orthokit::orthology::{
    alpha_orthology_center, carnot_sum, carrier_intersection, center_conic, center_line, common_center_correspondence,
    desargues_axis, harmonic_center, is_harmonic, is_orthologic_family, orthology_center, perspector, rideau_check,
    trajectory_concurrence, triangles_orthologic, unique_h, AngleParam, CenterLocus,
};
use orthokit::{HPoint, Line, Rational, Scalar, Vec2};
use serde_json::json;

use super::{Atom, Expr, Kind, SceneDoc, SceneError, Stmt};

/// A scene object.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Rational),
    Point(HPoint<Rational>),
    Line(Line<Rational>),
    Triangle(Triangle<Rational>),
    Family(LinearFamily<Rational>),
    Conic(Conic<Rational>),
}

type Res<T> = Result<T, String>;

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Scalar(_) => Kind::Scalar,
            Value::Point(_) => Kind::Point,
            Value::Line(_) => Kind::Line,
            Value::Triangle(_) => Kind::Triangle,
            Value::Family(_) => Kind::Family,
            Value::Conic(_) => Kind::Conic,
        }
    }

    fn scalar(&self) -> Res<&Rational> {
        match self {
            Value::Scalar(q) => Ok(q),
            other => Err(format!("expected a scalar, got a {}", other.kind())),
        }
    }

    fn hpoint(&self) -> Res<&HPoint<Rational>> {
        match self {
            Value::Point(p) => Ok(p),
            other => Err(format!("expected a point, got a {}", other.kind())),
        }
    }

    fn point(&self) -> Res<Vec2<Rational>> {
        self.hpoint()?.to_point().ok_or_else(|| "the point is at infinity".to_string())
    }

    fn line(&self) -> Res<&Line<Rational>> {
        match self {
            Value::Line(l) => Ok(l),
            other => Err(format!("expected a line, got a {}", other.kind())),
        }
    }

    fn triangle(&self) -> Res<&Triangle<Rational>> {
        match self {
            Value::Triangle(t) => Ok(t),
            other => Err(format!("expected a triangle, got a {}", other.kind())),
        }
    }

    fn family(&self) -> Res<&LinearFamily<Rational>> {
        match self {
            Value::Family(f) => Ok(f),
            other => Err(format!("expected a family, got a {}", other.kind())),
        }
    }

    fn conic(&self) -> Res<&Conic<Rational>> {
        match self {
            Value::Conic(c) => Ok(c),
            other => Err(format!("expected a conic, got a {}", other.kind())),
        }
    }

    fn reference(&self) -> Res<ReferenceTriangle<Rational>> {
        ReferenceTriangle::new(self.triangle()?.clone()).map_err(err)
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Scalar(q) => json!(q.to_string()),
            Value::Point(p) => match p.to_point() {
                Some(v) => point_json(&v),
                None => json!({"direction": p.direction().map(|d| point_json(&d))}),
            },
            Value::Line(l) => json!(normalized(&l.coords())),
            Value::Triangle(t) => triangle_json(t),
            Value::Family(f) => json!({"t0": triangle_json(&f.t0), "t1": triangle_json(&f.t1)}),
            Value::Conic(c) => json!(normalized(&c.coeffs())),
        }
    }
}

fn normalized(coeffs: &[Rational]) -> Vec<String> {
    Rational::normalize(coeffs).iter().map(|q| q.to_string()).collect()
}

fn point_text(p: &Vec2<Rational>) -> String {
    format!("({}, {})", p.x, p.y)
}

fn point_json(p: &Vec2<Rational>) -> serde_json::Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn triangle_text(t: &Triangle<Rational>) -> String {
    let v: Vec<String> = t.vertices().iter().map(point_text).collect();
    format!("[{}]", v.join(", "))
}

fn triangle_json(t: &Triangle<Rational>) -> serde_json::Value {
    json!(t.vertices().iter().map(point_json).collect::<Vec<_>>())
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(q) => write!(f, "{q}"),
            Value::Point(p) => match p.to_point() {
                Some(v) => f.write_str(&point_text(&v)),
                None => {
                    let [x, y, _] = p.coords();
                    write!(f, "({x} : {y} : 0)")
                }
            },
            Value::Line(l) => write!(f, "[{}]", normalized(&l.coords()).join(", ")),
            Value::Triangle(t) => f.write_str(&triangle_text(t)),
            Value::Family(fam) => write!(f, "{} -> {}", triangle_text(&fam.t0), triangle_text(&fam.t1)),
            Value::Conic(c) => write!(f, "[{}]", normalized(&c.coeffs()).join(", ")),
        }
    }
}

/// The answer to one query.
#[derive(Clone, Debug, PartialEq)]
pub struct Answer {
    pub query: String,
    pub text: String,
    pub json: serde_json::Value,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.query, self.text)
    }
}

pub fn answers_json(answers: &[Answer]) -> String {
    let items: Vec<serde_json::Value> = answers
        .iter()
        .map(|a| json!({"query": a.query, "value": a.json}))
        .collect();
    let mut s = serde_json::to_string_pretty(&items).expect("answers serialize");
    s.push('\n');
    s
}

/// A declared object with its defining expression.
#[derive(Clone, Debug)]
pub struct Object {
    pub name: String,
    pub expr: Expr,
    pub value: Value,
}

struct Env {
    values: HashMap<String, Value>,
}

impl Env {
    fn atom(&self, a: &Atom) -> Res<Value> {
        match a {
            Atom::Name(n) => self.values.get(n).cloned().ok_or_else(|| format!("`{n}` is not defined")),
            Atom::Number(q) => Ok(Value::Scalar(q.clone())),
            Atom::Tuple(items) => match items.as_slice() {
                [x, y] => Ok(Value::Point(HPoint::finite(&Vec2::new(x.clone(), y.clone())))),
                [a, b, c] => Line::new(a.clone(), b.clone(), c.clone()).map(Value::Line).map_err(err),
                [_, _, _, _, _, _] => {
                    let c: [Rational; 6] = items.clone().try_into().expect("six");
                    Conic::new(c).map(Value::Conic).map_err(err)
                }
                _ => Err("a tuple has 2, 3 or 6 entries".into()),
            },
        }
    }

    fn atoms(&self, atoms: &[Atom]) -> Res<Vec<Value>> {
        atoms.iter().map(|a| self.atom(a)).collect()
    }
}

fn compose(kind: Kind, args: Vec<Value>) -> Res<Value> {
    if args.len() == 1 {
        return Ok(args.into_iter().next().expect("one"));
    }
    match kind {
        Kind::Line => Line::join(args[0].hpoint()?, args[1].hpoint()?).map(Value::Line).map_err(err),
        Kind::Triangle => Ok(Value::Triangle(Triangle::new(args[0].point()?, args[1].point()?, args[2].point()?))),
        Kind::Family => Ok(Value::Family(LinearFamily::new(args[0].triangle()?.clone(), args[1].triangle()?.clone()))),
        Kind::Conic => {
            let pts: Vec<HPoint<Rational>> = args.iter().map(|a| a.hpoint().cloned()).collect::<Res<_>>()?;
            let pts: [HPoint<Rational>; 5] = pts.try_into().map_err(|_| "five points".to_string())?;
            conic_through_5(pts).map(Value::Conic).map_err(err)
        }
        _ => Err(format!("cannot build a {kind}")),
    }
}

fn angle(c: &Value, s: &Value) -> Res<AngleParam<Rational>> {
    AngleParam::new(c.scalar()?.clone(), s.scalar()?.clone()).map_err(err)
}

fn index(v: &Value) -> Res<usize> {
    let q = v.scalar()?;
    (0..3)
        .find(|i| *q == Rational::from_i64(*i as i64))
        .ok_or_else(|| "an index must be 0, 1 or 2".to_string())
}

fn call(name: &str, a: &[Value]) -> Res<Value> {
    use Value as V;
    let p = |v: Vec2<Rational>| V::Point(HPoint::finite(&v));
    let v = match name {
        "midpoint" => p(a[0].point()?.midpoint(&a[1].point()?)),
        "centroid" => p(a[0].triangle()?.centroid()),
        "circumcenter" => p(a[0].reference()?.circumcenter),
        "orthocenter" => p(a[0].reference()?.orthocenter),
        "incenter" => p(a[0].reference()?.incenter().map_err(err)?),
        "isogonal" => p(a[1].reference()?.isogonal_conjugate(&a[0].point()?).map_err(err)?),
        "orthology_center" => V::Point(orthology_center(a[0].triangle()?, a[1].triangle()?).map_err(err)?),
        "harmonic_center" => V::Point(harmonic_center(a[0].triangle()?, a[1].triangle()?).map_err(err)?),
        "alpha_center" => V::Point(
            alpha_orthology_center(a[0].triangle()?, a[1].triangle()?, &angle(&a[2], &a[3])?).map_err(err)?,
        ),
        "perspector" => V::Point(perspector(a[0].triangle()?, a[1].triangle()?).map_err(err)?),
        "orthopole" => V::Point(orthokit::constructions::orthopole(a[0].triangle()?, a[1].line()?).map_err(err)?),
        "meet" => V::Point(intersect(a[0].line()?, a[1].line()?).map_err(err)?),
        "foot" => p(a[1].line()?.foot(&a[0].point()?)),
        "spiral_center" => {
            let f = a[0].family()?;
            match spiral_center(&f.t0.a, &f.t1.a, &f.t0.b, &f.t1.b).map_err(err)? {
                PairCenter::Spiral(m) | PairCenter::Concurrence(m) => V::Point(m),
            }
        }
        "carrier_meet" => p(carrier_intersection(a[0].family()?).map_err(err)?),
        "trajectory_meet" => V::Point(trajectory_concurrence(a[0].family()?).map_err(err)?),
        "focus" => V::Point(parabola_focus(a[0].conic()?).map_err(err)?),
        "join" => V::Line(Line::join(a[0].hpoint()?, a[1].hpoint()?).map_err(err)?),
        "perpendicular" => V::Line(Line::through_with_direction(&a[0].point()?, &a[1].line()?.normal()).map_err(err)?),
        "parallel" => V::Line(Line::through_with_direction(&a[0].point()?, &a[1].line()?.direction()).map_err(err)?),
        "simson" => V::Line(simson_line(&a[0].point()?, &a[1].reference()?).map_err(err)?),
        "desargues_axis" => V::Line(desargues_axis(a[0].triangle()?, a[1].triangle()?).map_err(err)?),
        "center_line" => match center_line(a[0].family()?, a[1].triangle()?).map_err(err)? {
            CenterLocus::Line(l) => V::Line(l),
            CenterLocus::Point(c) => return Err(format!("every center is {}", point_text(&c))),
        },
        "trajectory" => V::Line(
            a[0].family()?
                .trajectory(index(&a[1])?)
                .ok_or_else(|| "the vertex does not move".to_string())?,
        ),
        "side" => V::Line(a[0].triangle()?.side_line(index(&a[1])?).map_err(err)?),
        "pedal" => V::Triangle(pedal_triangle(&a[0].point()?, &a[1].reference()?)),
        "alpha_pedal" => V::Triangle(
            alpha_pedal_triangle(&a[0].point()?, &a[1].reference()?, &angle(&a[2], &a[3])?).map_err(err)?,
        ),
        "projection" => V::Triangle(orthokit::constructions::projection_triangle(a[0].triangle()?, a[1].line()?)),
        "reflection" => V::Triangle(orthokit::constructions::reflection_triangle(a[0].triangle()?, a[1].line()?)),
        "member" => V::Triangle(a[0].family()?.at(a[1].scalar()?)),
        "medial" => V::Triangle(a[0].reference()?.medial()),
        "contact" => V::Triangle(contact_triangles(&a[0].reference()?).map_err(err)?.0),
        "excontact" => V::Triangle(contact_triangles(&a[0].reference()?).map_err(err)?.1),
        "altitude_feet" => V::Triangle(altitude_configuration(&a[0].reference()?).0),
        "altitude_mids" => V::Triangle(altitude_configuration(&a[0].reference()?).1),
        "square_centers" => V::Triangle(outer_square_centers(&a[0].reference()?)),
        "rotate90" => V::Triangle(a[0].triangle()?.map_vertices(Vec2::perp)),
        "tangent_triangle" => {
            let m = [a[2].scalar()?.clone(), a[3].scalar()?.clone(), a[4].scalar()?.clone()];
            V::Triangle(triangle_from_tangent_params(&a[0].point()?, a[1].scalar()?, m).map_err(err)?)
        }
        "kiepert" => V::Family(kiepert_family(&a[0].reference()?)),
        "flies" => {
            let t = a[0].triangle()?;
            let s = [a[1].scalar()?, a[2].scalar()?, a[3].scalar()?];
            let flies = Triangle::from_array([0, 1, 2].map(|i| t.vertex(i).clone() + t.side_dir(i).perp().scale(s[i])));
            V::Family(LinearFamily::new(t.clone(), flies))
        }
        "center_conic" => V::Conic(center_conic(a[0].triangle()?, a[1].family()?).map_err(err)?),
        "gamma" => V::Conic(gamma_conic(a[0].family()?, a[1].scalar()?).map_err(err)?),
        "epsilon" => V::Conic(correspondence_envelope(a[0].family()?).map_err(err)?),
        "envelope" => V::Conic(envelope_conic(a[0].family()?, VertexPair::AB).map_err(err)?),
        "circumcircle" => {
            let r = a[0].reference()?;
            let o = r.circumcenter.clone();
            let two = Rational::from_i64(2);
            let f = o.norm2() - r.circumradius2();
            V::Conic(
                Conic::new([Rational::one(), Rational::zero(), Rational::one(), -(two.clone() * o.x), -(two * o.y), f])
                    .map_err(err)?,
            )
        }
        other => return Err(format!("unknown function `{other}`")),
    };
    Ok(v)
}

fn text_answer(text: impl Into<String>) -> (String, serde_json::Value) {
    let t = text.into();
    (t.clone(), json!(t))
}

fn bool_answer(b: bool) -> (String, serde_json::Value) {
    (b.to_string(), json!(b))
}

fn query(op: &str, a: &[Value]) -> Res<(String, serde_json::Value)> {
    let out = match op {
        "orthologic" => bool_answer(triangles_orthologic(a[0].triangle()?, a[1].triangle()?)),
        "harmonic" => bool_answer(is_harmonic(a[0].triangle()?, a[1].triangle()?).map_err(err)?),
        "carnot" => {
            let v = Value::Scalar(carnot_sum(a[0].triangle()?, a[1].triangle()?));
            (v.to_string(), v.to_json())
        }
        "rideau" => bool_answer(rideau_check(a[0].triangle()?, a[1].triangle()?).map_err(err)?),
        "degenerate" => bool_answer(a[0].triangle()?.is_degenerate()),
        "collinear" => bool_answer(collinear(a[0].hpoint()?, a[1].hpoint()?, a[2].hpoint()?)),
        "concurrent" => bool_answer(concurrent(a[0].line()?, a[1].line()?, a[2].line()?)),
        "orthogonal" => bool_answer(a[0].line()?.is_perpendicular(a[1].line()?)),
        "on" => bool_answer(a[0].conic()?.contains(a[1].hpoint()?)),
        "incident" => bool_answer(a[0].line()?.contains(a[1].hpoint()?)),
        "tangent" => bool_answer(a[0].conic()?.is_tangent(a[1].line()?)),
        "classify" => text_answer(a[0].conic()?.classify().to_string()),
        "degenerate_params" => match a[0].family()?.degenerate_parameters() {
            Degeneracies::All => text_answer("all"),
            d => {
                let items: Vec<String> = d
                    .params()
                    .iter()
                    .map(|p| match p {
                        orthokit::family::DegenerateParam::Finite(r) => r.to_string(),
                        orthokit::family::DegenerateParam::Infinity => "inf".to_string(),
                    })
                    .collect();
                (format!("[{}]", items.join(", ")), json!(items))
            }
        },
        "orthologic_family" => bool_answer(is_orthologic_family(a[0].family()?)),
        "singular" => match a[0].family()?.is_singular() {
            Singularity::Nonsingular => text_answer("nonsingular"),
            Singularity::Singular(pairs) => {
                let items: Vec<String> = pairs.iter().map(|p| format!("{p:?}")).collect();
                (format!("singular [{}]", items.join(", ")), json!(items))
            }
        },
        "operator" => {
            let phi = operator_of_family(a[0].family()?).map_err(err)?;
            let rows = [[&phi.m11, &phi.m12], [&phi.m21, &phi.m22]].map(|r| r.map(|x| x.to_string()));
            (
                format!("[[{}, {}], [{}, {}]]", rows[0][0], rows[0][1], rows[1][0], rows[1][1]),
                json!(rows),
            )
        }
        "eigen" => {
            let phi = operator_of_family(a[0].family()?).map_err(err)?;
            match phi.eigenpairs() {
                Eigen::All(l) => text_answer(format!("all vectors, eigenvalue {l}")),
                Eigen::Pairs(pairs) => {
                    let items: Vec<String> = pairs
                        .iter()
                        .map(|(l, v)| format!("{l} along ({}, {})", v.x, v.y))
                        .collect();
                    (format!("[{}]", items.join("; ")), json!(items))
                }
            }
        }
        "unique_h" => text_answer(unique_h(a[0].family()?).map_err(err)?.to_string()),
        "correspondence" => text_answer(common_center_correspondence(a[0].family()?).map_err(err)?.to_string()),
        name => {
            let v = call(name, a)?;
            (v.to_string(), v.to_json())
        }
    };
    Ok(out)
}

fn eval_error(stmt: &Stmt, message: String) -> SceneError {
    SceneError::Eval {
        stmt: stmt.to_string(),
        message,
    }
}

fn run(doc: &SceneDoc, mut on_query: impl FnMut(&Stmt, &str, Vec<Value>) -> Result<(), SceneError>) -> Result<Vec<Object>, SceneError> {
    let mut env = Env { values: HashMap::new() };
    let mut objects = Vec::new();
    for stmt in &doc.stmts {
        match stmt {
            Stmt::Decl { kind, name, expr } => {
                let value = match expr {
                    Expr::Call { func, args } => env.atoms(args).and_then(|a| call(func, &a)),
                    Expr::Compose(atoms) => env.atoms(atoms).and_then(|a| compose(*kind, a)),
                }
                .map_err(|m| eval_error(stmt, m))?;
                env.values.insert(name.clone(), value.clone());
                objects.push(Object {
                    name: name.clone(),
                    expr: expr.clone(),
                    value,
                });
            }
            Stmt::Query { op, args } => {
                let a = env.atoms(args).map_err(|m| eval_error(stmt, m))?;
                on_query(stmt, op, a)?;
            }
        }
    }
    Ok(objects)
}

/// Evaluates the declarations and answers the queries in order.
pub fn evaluate(doc: &SceneDoc) -> Result<Vec<Answer>, SceneError> {
    let mut answers = Vec::new();
    run(doc, |stmt, op, a| {
        let (text, json) = query(op, &a).map_err(|m| eval_error(stmt, m))?;
        answers.push(Answer {
            query: stmt.to_string(),
            text,
            json,
        });
        Ok(())
    })?;
    Ok(answers)
}

/// Evaluates the declarations only.
pub fn evaluate_objects(doc: &SceneDoc) -> Result<Vec<Object>, SceneError> {
    run(doc, |_, _, _| Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::parse_scene;

    fn answers(src: &str) -> Vec<String> {
        evaluate(&parse_scene(src).unwrap()).unwrap().iter().map(|a| a.text.clone()).collect()
    }

    #[test]
    fn queries_answer_exactly() {
        let src = "point A = (0,0)\ntriangle T = A (4,0) (0,3)\nquery orthocenter T\nquery circumcenter T";
        assert_eq!(answers(src), ["(0, 0)", "(2, 3/2)"]);
    }

    #[test]
    fn simson_feet() {
        let src = "triangle R = (0,0) (4,0) (0,3)\ntriangle P = pedal (4,3) R\nline s = simson (4,3) R\nquery degenerate P\nquery incident s (4,0)\nquery incident s (0,3)\nquery simson (4,3) R";
        assert_eq!(answers(src), ["true", "true", "true", "[3, 4, -12]"]);
    }

    #[test]
    fn family_queries() {
        let src = "triangle T = (0,0) (4,0) (1,3)\ntriangle U = (3,3) (-2,2) (1,-2)\nfamily F = T U\n\
                   query orthologic_family F\nquery orthologic T U\nquery orthology_center T U";
        assert_eq!(answers(src), ["true", "true", "(32/23, 24/23)"]);
    }

    #[test]
    fn evaluation_errors_name_the_statement() {
        let doc = parse_scene("triangle T = (0,0) (1,1) (2,2)\npoint O = circumcenter T").unwrap();
        let e = evaluate(&doc).unwrap_err();
        assert!(matches!(&e, SceneError::Eval { stmt, .. } if stmt == "point O = circumcenter T"), "{e}");
    }
}
