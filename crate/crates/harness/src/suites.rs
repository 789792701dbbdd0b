//! The registry of theorem suites.
//!
//! Each suite samples rational instances and checks one claim on them
//! under either backend. Instances are generated exactly so the float
//! backend sees the same data rounded once.

use std::collections::BTreeMap;
use std::fmt::Display;

use orthokit::conics::{correspondence_envelope, envelope_conic, gamma_conic, parabola_focus, ConicClass};
use orthokit::constructions::{
    altitude_configuration, alpha_pedal_triangle, contact_triangles, kiepert_family, pedal_triangle, ReferenceTriangle,
};
use orthokit::family::{spiral_center, DegenerateParam, LinearFamily, PairCenter, Singularity, Triangle, VectorPair, VertexPair};
use orthokit::kernel::{collinear, collinear_points, concurrent};
use orthokit::operator4::{operator_of_family, Eigen, LinOp2, Subspace4, Vec4};
use orthokit::orthology::{
    alpha_orthology_center, carnot_sum, center_conic, common_center_correspondence, desargues_axis, is_harmonic,
    is_orthologic, is_orthologic_family, orthology_center, perspector, rideau_check, AngleParam,
};
use orthokit::{HPoint, Line, QuadExt, Rational, Scalar, Vec2};
use serde_json::{json, Value};

use crate::gen::{rotation, Sampler};

/// Checks recorded for one trial. Each check contributes a residual:
/// the magnitude of a quantity that must vanish, or `0`/`1` for a
/// predicate that must hold.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub residuals: BTreeMap<String, f64>,
}

impl Default for Outcome {
    fn default() -> Self {
        Outcome {
            pass: true,
            residuals: BTreeMap::new(),
        }
    }
}

impl Outcome {
    fn record(&mut self, name: &str, ok: bool, value: f64) -> bool {
        self.pass &= ok;
        let slot = self.residuals.entry(name.to_string()).or_insert(0.0);
        if value.is_nan() || value > *slot {
            *slot = value;
        }
        ok
    }

    /// A predicate that must hold.
    pub fn check(&mut self, name: &str, ok: bool) -> bool {
        self.record(name, ok, if ok { 0.0 } else { 1.0 })
    }

    /// A sum of terms that must vanish.
    pub fn vanish<F: Scalar>(&mut self, name: &str, terms: &[F]) -> bool {
        let sum = terms.iter().cloned().fold(F::zero(), |a, t| a + t);
        self.record(name, F::vanishes(terms), sum.to_f64().abs())
    }

    /// A value that must be zero.
    pub fn zero<F: Scalar>(&mut self, name: &str, value: &F) -> bool {
        self.record(name, value.is_zero(), value.to_f64().abs())
    }

    /// Unwraps a computation, failing the check `name` on error.
    pub fn ok<T, E: Display>(&mut self, name: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.record(&format!("{name}: {e}"), false, 1.0);
                None
            }
        }
    }
}

/// Converts rational instance data into a backend.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub tol: f64,
}

impl Ctx {
    pub fn s<F: Scalar>(&self, x: &Rational) -> F {
        F::from_rational(x).with_tolerance(self.tol)
    }

    pub fn v<F: Scalar>(&self, p: &Vec2<Rational>) -> Vec2<F> {
        p.map(|x| self.s(x))
    }

    pub fn tri<F: Scalar>(&self, t: &Triangle<Rational>) -> Triangle<F> {
        t.map(|x| self.s(x))
    }

    pub fn fam<F: Scalar>(&self, f: &LinearFamily<Rational>) -> LinearFamily<F> {
        f.map(|x| self.s(x))
    }
}

/// A claim with its sampler and checker.
pub trait Theorem {
    type Instance;
    fn generate(s: &mut Sampler) -> Self::Instance;
    fn describe(i: &Self::Instance) -> Value;
    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome);
}

/// Arithmetic used to check a trial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Backend {
    Exact,
    Float { tol: f64 },
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float { .. } => "float",
        }
    }

    pub fn tol(&self) -> Option<f64> {
        match self {
            Backend::Exact => None,
            Backend::Float { tol } => Some(*tol),
        }
    }
}

/// One trial: its outcome and, on failure, the instance.
#[derive(Clone, Debug)]
pub struct Trial {
    pub index: u64,
    pub outcome: Outcome,
    pub instance: Option<Value>,
}

pub type TrialFn = fn(&mut Sampler, u64, Backend) -> Trial;

pub struct Suite {
    pub id: &'static str,
    pub claim: &'static str,
    pub default_trials: u64,
    pub trial: TrialFn,
}

fn trial<T: Theorem>(s: &mut Sampler, index: u64, backend: Backend) -> Trial {
    let inst = T::generate(s);
    let mut outcome = Outcome::default();
    match backend {
        Backend::Exact => T::check::<Rational>(&inst, &Ctx { tol: 0.0 }, &mut outcome),
        Backend::Float { tol } => T::check::<orthokit::Approx>(&inst, &Ctx { tol }, &mut outcome),
    }
    let instance = (!outcome.pass).then(|| T::describe(&inst));
    Trial {
        index,
        outcome,
        instance,
    }
}

macro_rules! suite {
    ($ty:ty, $id:literal, $trials:literal, $claim:literal) => {
        Suite {
            id: $id,
            claim: $claim,
            default_trials: $trials,
            trial: trial::<$ty>,
        }
    };
}

pub const SUITES: &[Suite] = &[
    suite!(OrthologySymmetry, "orthology-symmetry", 1000,
        "Orthology is symmetric: T ⊥ T′ iff T′ ⊥ T."),
    suite!(CarnotVector, "carnot-vector", 1000,
        "The Carnot sum of two triangles equals twice b·c′ − b′·c."),
    suite!(DegenerateCount, "degenerate-count", 1000,
        "A linear family has at most two degenerate members unless all members are degenerate."),
    suite!(OrthologicFamily, "orthologic-family", 500,
        "If T_0 ⊥ T_1 in a linear family then T_s ⊥ T_t for all s, t."),
    suite!(PerpendicularDegenerates, "perpendicular-degenerates", 500,
        "A nondegenerate nonsingular orthologic family has two degenerate members with perpendicular carriers, along the orthogonal eigenvectors of its operator."),
    suite!(Rideau, "rideau", 500,
        "The affine map taking T to T′ takes O_{T,T′} to O_{T′,T}."),
    suite!(Maxwell, "maxwell", 500,
        "Harmonicity is symmetric: parallels from T to the sides of T′ concur iff parallels from T′ to the sides of T concur."),
    suite!(CenterLine, "center-line", 300,
        "When T_0 and T_1 are orthologic to T′, the center O_{T_t,T′} moves along a line."),
    suite!(CenterConic, "center-conic", 200,
        "When T_0 and T_1 are orthologic to T′, the center O_{T′,T_t} moves along a conic through the vertices of T′."),
    suite!(GammaCoincidence, "gamma-coincidence", 200,
        "In an orthologic family the centers O_{T_λ,T_t} trace the hyperbola through A_λ, B_λ, C_λ with asymptotes along the degenerate carriers."),
    suite!(Sondat, "sondat", 200,
        "For perspective orthologic triangles the perspector and both orthology centers lie on a line perpendicular to the Desargues axis."),
    suite!(EpsilonTangency, "epsilon-tangency", 100,
        "In a nonconcurrent orthologic family the line O_{T_λ,T_μ}O_{T_μ,T_λ} touches the envelope ε of the carrier correspondence."),
    suite!(CommonCenters, "common-centers", 200,
        "In a concurrent orthologic family O_{T_λ,T_μ} = O_{T_μ,T_λ} exactly along an involution λ ↔ μ."),
    suite!(LagrangianRoundtrip, "lagrangian-roundtrip", 1000,
        "A family is orthologic iff its operator is self-adjoint iff its plane of classes is Lagrangian; eigenvectors are degenerate classes; eigenvalue 1 means a singular pair BC."),
    suite!(PedalCriterion, "pedal-criterion", 200,
        "Pedal triangles of P_0 and P_1 are orthologic iff P_0, P_1 and the circumcenter are collinear."),
    suite!(EmelyanovContact, "emelyanov-contact", 200,
        "Incircle and excircle contact points are symmetric about the side midpoints and form orthologic triangles."),
    suite!(AltitudeMidpoints, "altitude-midpoints", 200,
        "The altitude feet triangle is the member t = 2 of the family from ABC to the altitude midpoints and is orthologic to it."),
    suite!(FliesAltitudes, "flies-altitudes", 200,
        "Points moving from the vertices along the altitudes form an orthologic family with perpendicular degenerate carriers."),
    suite!(GergonnianFlies, "gergonnian-flies", 200,
        "Points moving from the vertices to the incircle contact points form a family whose two degenerate carriers are perpendicular lines through the incenter."),
    suite!(Kiepert, "kiepert", 200,
        "The centers of the isosceles apex family trace a conic through the centroid and orthocenter, with AA_{1/t} ⊥ B_tC_t."),
    suite!(FocusMiquel, "focus-miquel", 100,
        "The envelope of the lines A_tB_t is a parabola whose focus is the spiral center of the pair."),
    suite!(RadicalAxes, "radical-axes", 200,
        "The triangle of centers of three circles is orthologic to any triangle with vertices on their radical axes."),
    suite!(HomothetReplacement, "homothet-replacement", 200,
        "The medial triangle of a pedal triangle stays orthologic to the reference triangle."),
    suite!(AlphaPedal, "alpha-pedal", 200,
        "The α-pedal triangle of P is α-orthologic to the reference triangle with center P."),
];

pub fn find(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

// instance descriptions

fn jq(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn jv(p: &Vec2<Rational>) -> Value {
    json!([jq(&p.x), jq(&p.y)])
}

fn jt(t: &Triangle<Rational>) -> Value {
    Value::Array(t.vertices().iter().map(jv).collect())
}

fn jf(f: &LinearFamily<Rational>) -> Value {
    json!({"t0": jt(&f.t0), "t1": jt(&f.t1)})
}

// shared checks

fn form_terms<F: Scalar>(p: &VectorPair<F>, pp: &VectorPair<F>) -> [F; 4] {
    [
        p.b.x.clone() * pp.c.x.clone(),
        p.b.y.clone() * pp.c.y.clone(),
        -(pp.b.x.clone() * p.c.x.clone()),
        -(pp.b.y.clone() * p.c.y.clone()),
    ]
}

fn orthologic_terms<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> [F; 4] {
    form_terms(&t.pair(), &tp.pair())
}

fn lift<F: Scalar>(v: &Vec2<F>) -> Vec2<QuadExt<F>> {
    v.map(|x| QuadExt::pure(x.clone()))
}

/// Perpendicular, possibly irrational, degenerate carriers.
fn check_degenerate_carriers<F: Scalar>(f: &LinearFamily<F>, out: &mut Outcome) -> Option<Vec<Vec2<QuadExt<F>>>> {
    let dirs = f.degenerate_directions();
    let Some(dirs) = dirs.filter(|d| d.len() == 2) else {
        out.check("two degenerate members", false);
        return None;
    };
    out.check("two degenerate members", true);
    out.zero("carrier dot", &dirs[0].dot(&dirs[1]));
    Some(dirs)
}

fn isolated_count<F: Scalar>(f: &LinearFamily<F>) -> Option<usize> {
    f.degenerate_parameters().count()
}

// suites

pub struct OrthologySymmetry;

impl Theorem for OrthologySymmetry {
    type Instance = (Triangle<Rational>, Triangle<Rational>);

    fn generate(s: &mut Sampler) -> Self::Instance {
        if s.coin() {
            s.orthologic_pair()
        } else {
            (s.triangle(), s.triangle())
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"t": jt(&i.0), "t'": jt(&i.1)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let (p, pp) = (cx.tri::<F>(&i.0).pair(), cx.tri::<F>(&i.1).pair());
        out.check("symmetric", is_orthologic(&p, &pp) == is_orthologic(&pp, &p));
        let mut terms = form_terms(&p, &pp).to_vec();
        terms.extend(form_terms(&pp, &p));
        out.vanish("antisymmetric form", &terms);
    }
}

pub struct CarnotVector;

impl Theorem for CarnotVector {
    type Instance = (Triangle<Rational>, Triangle<Rational>);

    fn generate(s: &mut Sampler) -> Self::Instance {
        (s.triangle(), s.triangle())
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"t": jt(&i.0), "t'": jt(&i.1)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let (t, tp) = (cx.tri::<F>(&i.0), cx.tri::<F>(&i.1));
        // |X′Y|² − |X′Z|² over the vertices X′ of T′ and the opposite side YZ of T
        let mut terms = Vec::new();
        for k in 0..3 {
            let x = tp.vertex(k);
            let (b, c) = (t.vertex(k + 1), t.vertex(k + 2));
            terms.push((x.clone() - b.clone()).norm2());
            terms.push(-(x.clone() - c.clone()).norm2());
        }
        let two = F::from_i64(2);
        terms.extend(orthologic_terms(&t, &tp).map(|x| -(two.clone() * x)));
        out.vanish("carnot - 2 form", &terms);
        let sum = terms[..6].iter().cloned().fold(F::zero(), |a, x| a + x);
        out.vanish("carnot sum", &[carnot_sum(&t, &tp), -sum]);
    }
}

pub struct DegenerateCount;

pub struct DegenerateInstance {
    family: LinearFamily<Rational>,
    built_degenerate: bool,
}

impl Theorem for DegenerateCount {
    type Instance = DegenerateInstance;

    fn generate(s: &mut Sampler) -> Self::Instance {
        match s.index(4) {
            0 => {
                // proportional pairs stay degenerate
                let b = s.vector();
                let p0 = VectorPair::new(b.clone(), b.scale(&s.small()));
                let p1 = p0.scale(&s.nonzero_small());
                DegenerateInstance {
                    family: LinearFamily::new(p0.place(&s.point()), p1.place(&s.point())),
                    built_degenerate: true,
                }
            }
            1 => {
                // every vertex stays on one line
                let (o, d) = (s.point(), s.vector());
                let mut on_line = || o.clone() + d.scale(&s.small());
                let t0 = Triangle::new(on_line(), on_line(), on_line());
                let t1 = Triangle::new(on_line(), on_line(), on_line());
                DegenerateInstance {
                    family: LinearFamily::new(t0, t1),
                    built_degenerate: true,
                }
            }
            _ => DegenerateInstance {
                family: s.family(),
                built_degenerate: false,
            },
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"family": jf(&i.family), "built_degenerate": i.built_degenerate})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let f = cx.fam::<F>(&i.family);
        let degs = f.degenerate_parameters();
        match degs.count() {
            None => {
                out.check("built degenerate", i.built_degenerate || f.degeneracy_poly().iter().all(Scalar::is_zero));
            }
            Some(n) => {
                out.check("at most two", n <= 2);
                out.check("built degenerate", !i.built_degenerate);
                for p in degs.params() {
                    let degenerate = match p {
                        DegenerateParam::Finite(r) => f.at_root(&r).is_degenerate(),
                        DegenerateParam::Infinity => f.pair_at_infinity().is_degenerate(),
                    };
                    out.check("roots are degenerate", degenerate);
                }
            }
        }
    }
}

pub struct OrthologicFamily;

impl Theorem for OrthologicFamily {
    type Instance = (LinearFamily<Rational>, Vec<(Rational, Rational)>);

    fn generate(s: &mut Sampler) -> Self::Instance {
        let f = s.orthologic_family();
        let params = (0..5).map(|_| (s.small(), s.small())).collect();
        (f, params)
    }

    fn describe(i: &Self::Instance) -> Value {
        let params: Vec<Value> = i.1.iter().map(|(s, t)| json!([jq(s), jq(t)])).collect();
        json!({"family": jf(&i.0), "params": params})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let f = cx.fam::<F>(&i.0);
        for (s, t) in &i.1 {
            let (ts, tt) = (f.at(&cx.s(s)), f.at(&cx.s(t)));
            out.vanish("T_s ⊥ T_t", &orthologic_terms(&ts, &tt));
        }
    }
}

pub struct PerpendicularDegenerates;

impl Theorem for PerpendicularDegenerates {
    type Instance = LinearFamily<Rational>;

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let f = s.generic_orthologic_family();
            if operator_of_family(&f).is_ok() {
                return f;
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"family": jf(i)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let f = cx.fam::<F>(i);
        out.check("two degenerate classes", isolated_count(&f) == Some(2));
        let Some(dirs) = check_degenerate_carriers(&f, out) else { return };
        let Some(phi) = out.ok("operator", operator_of_family(&f)) else { return };
        out.check("self-adjoint", phi.is_self_adjoint());
        match phi.eigenpairs() {
            Eigen::Pairs(pairs) if pairs.len() == 2 => {
                out.zero("eigenvector dot", &pairs[0].1.dot(&pairs[1].1));
                for d in &dirs {
                    out.check("carrier is an eigenvector", pairs.iter().any(|(_, e)| e.is_parallel(d)));
                }
            }
            _ => {
                out.check("two eigenvectors", false);
            }
        }
    }
}

pub struct Rideau;

impl Theorem for Rideau {
    type Instance = (Triangle<Rational>, Triangle<Rational>);

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let (t, tp) = s.orthologic_pair();
            let finite = |a: &Triangle<Rational>, b: &Triangle<Rational>| {
                orthology_center(a, b).map(|o| o.is_finite()).unwrap_or(false)
            };
            if finite(&t, &tp) && finite(&tp, &t) {
                return (t, tp);
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"t": jt(&i.0), "t'": jt(&i.1)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let (t, tp) = (cx.tri::<F>(&i.0), cx.tri::<F>(&i.1));
        if let Some(ok) = out.ok("rideau", rideau_check(&t, &tp)) {
            out.check("affine image of O_{T,T'} is O_{T',T}", ok);
        }
    }
}

pub struct Maxwell;

impl Theorem for Maxwell {
    type Instance = (Triangle<Rational>, Triangle<Rational>);

    fn generate(s: &mut Sampler) -> Self::Instance {
        let (t, tp) = s.orthologic_pair();
        (t, tp.map_vertices(Vec2::perp))
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"t": jt(&i.0), "t'": jt(&i.1)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let (t, tp) = (cx.tri::<F>(&i.0), cx.tri::<F>(&i.1));
        if let (Some(a), Some(b)) = (out.ok("harmonic", is_harmonic(&t, &tp)), out.ok("harmonic", is_harmonic(&tp, &t))) {
            out.check("T harmonic to T'", a);
            out.check("T' harmonic to T", b);
        }
    }
}

/// A reference triangle and a family whose base triangles are orthologic
/// to it.
pub struct TargetInstance {
    target: Triangle<Rational>,
    family: LinearFamily<Rational>,
    orthologic_family: bool,
}

impl TargetInstance {
    fn describe(&self) -> Value {
        json!({"t'": jt(&self.target), "family": jf(&self.family), "orthologic_family": self.orthologic_family})
    }

    fn sample(s: &mut Sampler, allow_orthologic: bool, params: &[i64]) -> Self {
        loop {
            let inst = if allow_orthologic && s.coin() {
                let f = s.generic_orthologic_family();
                let target = f.at(&s.small());
                TargetInstance {
                    target,
                    family: f,
                    orthologic_family: true,
                }
            } else {
                let target = s.nondegenerate_triangle();
                let t0 = s.triangle_orthologic_to(&target);
                let t1 = s.triangle_orthologic_to(&target);
                TargetInstance {
                    target,
                    family: LinearFamily::new(t0, t1),
                    orthologic_family: false,
                }
            };
            let members_ok = params
                .iter()
                .all(|t| !inst.family.at(&Rational::from_i64(*t)).is_degenerate());
            if !inst.target.is_degenerate() && members_ok && !inst.family.is_degenerate() {
                return inst;
            }
        }
    }
}

pub struct CenterLine;

impl Theorem for CenterLine {
    type Instance = TargetInstance;

    fn generate(s: &mut Sampler) -> Self::Instance {
        TargetInstance::sample(s, false, &[0, 1, 2, 3])
    }

    fn describe(i: &Self::Instance) -> Value {
        i.describe()
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let (f, tp) = (cx.fam::<F>(&i.family), cx.tri::<F>(&i.target));
        let mut centers = Vec::new();
        for t in 0..4 {
            match out.ok("center", orthology_center(&f.at(&F::from_i64(t)), &tp)) {
                Some(o) => centers.push(o),
                None => return,
            }
        }
        for (a, b, c) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            out.check("collinear centers", collinear(&centers[a], &centers[b], &centers[c]));
        }
    }
}

pub struct CenterConic;

impl Theorem for CenterConic {
    type Instance = TargetInstance;

    fn generate(s: &mut Sampler) -> Self::Instance {
        TargetInstance::sample(s, true, &[7])
    }

    fn describe(i: &Self::Instance) -> Value {
        i.describe()
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let (f, tp) = (cx.fam::<F>(&i.family), cx.tri::<F>(&i.target));
        let Some(conic) = out.ok("center conic", center_conic(&tp, &f)) else { return };
        for v in tp.vertices() {
            out.check("through the vertices", conic.contains_point(&v));
        }
        // a member outside the fitted samples
        if let Some(o) = out.ok("center", orthology_center(&tp, &f.at(&F::from_i64(7)))) {
            out.check("independent sample", conic.contains(&o));
        }
        if i.orthologic_family {
            let rectangular = matches!(
                conic.classify(),
                ConicClass::RectangularHyperbola | ConicClass::LinePair { perpendicular: true }
            );
            out.check("rectangular", rectangular);
        }
    }
}

pub struct GammaCoincidence;

impl Theorem for GammaCoincidence {
    type Instance = (LinearFamily<Rational>, Rational);

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let f = s.generic_orthologic_family();
            let l = s.small();
            let two = f.degenerate_directions().is_some_and(|d| d.len() == 2);
            if two && !f.at(&l).is_degenerate() {
                return (f, l);
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"family": jf(&i.0), "lambda": jq(&i.1)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let (f, l) = (cx.fam::<F>(&i.0), cx.s::<F>(&i.1));
        let centers = out.ok("center conic", center_conic(&f.at(&l), &f));
        let gamma = out.ok("gamma", gamma_conic(&f, &l));
        if let (Some(c), Some(g)) = (centers, gamma) {
            out.check("proportional coefficients", c.same(&g));
        }
    }
}

pub struct SondatInstance {
    h: Vec2<Rational>,
    family: LinearFamily<Rational>,
    lambda: Rational,
    mu: Rational,
}

pub struct Sondat;

impl Theorem for Sondat {
    type Instance = SondatInstance;

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let (h, f) = s.concurrent_family();
            let (l, m) = (s.small(), s.small());
            if l == m {
                continue;
            }
            let (t, tp) = (f.at(&l), f.at(&m));
            if t.is_degenerate() || tp.is_degenerate() {
                continue;
            }
            let axis_finite = desargues_axis(&t, &tp).is_ok_and(|a| !a.normal().is_zero());
            let (Ok(o1), Ok(o2)) = (orthology_center(&t, &tp), orthology_center(&tp, &t)) else { continue };
            let hp = HPoint::finite(&h);
            let spread = !(o1.same(&hp) && o2.same(&hp));
            if axis_finite && spread && perspector(&t, &tp).is_ok() {
                return SondatInstance {
                    h,
                    family: f,
                    lambda: l,
                    mu: m,
                };
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"h": jv(&i.h), "family": jf(&i.family), "lambda": jq(&i.lambda), "mu": jq(&i.mu)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let f = cx.fam::<F>(&i.family);
        let (t, tp) = (f.at(&cx.s(&i.lambda)), f.at(&cx.s(&i.mu)));
        let h = HPoint::finite(&cx.v::<F>(&i.h));
        let Some(p) = out.ok("perspector", perspector(&t, &tp)) else { return };
        out.check("perspector is h", p.same(&h));
        let o1 = out.ok("center", orthology_center(&t, &tp));
        let o2 = out.ok("center", orthology_center(&tp, &t));
        let axis = out.ok("axis", desargues_axis(&t, &tp));
        let (Some(o1), Some(o2), Some(axis)) = (o1, o2, axis) else { return };
        out.check("collinear", collinear(&p, &o1, &o2));
        let line = [(&o1, &o2), (&p, &o1), (&p, &o2)]
            .into_iter()
            .find_map(|(a, b)| Line::join(a, b).ok());
        match line {
            Some(line) => out.check("perpendicular to the axis", line.is_perpendicular(&axis)),
            None => out.check("distinct centers", false),
        };
    }
}

pub struct TangencyInstance {
    family: LinearFamily<Rational>,
    lambda: Rational,
    mu: Rational,
}

pub struct EpsilonTangency;

impl Theorem for EpsilonTangency {
    type Instance = TangencyInstance;

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let f = s.generic_orthologic_family();
            let lines: Vec<Line<Rational>> = (0..3).filter_map(|i| f.trajectory(i)).collect();
            if lines.len() < 3 || concurrent(&lines[0], &lines[1], &lines[2]) {
                continue;
            }
            if correspondence_envelope(&f).is_err() {
                continue;
            }
            let (l, m) = (s.small(), s.small());
            let (t, tp) = (f.at(&l), f.at(&m));
            if l == m || t.is_degenerate() || tp.is_degenerate() {
                continue;
            }
            let (Ok(o1), Ok(o2)) = (orthology_center(&t, &tp), orthology_center(&tp, &t)) else { continue };
            if !o1.same(&o2) {
                return TangencyInstance {
                    family: f,
                    lambda: l,
                    mu: m,
                };
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"family": jf(&i.family), "lambda": jq(&i.lambda), "mu": jq(&i.mu)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let f = cx.fam::<F>(&i.family);
        let (t, tp) = (f.at(&cx.s(&i.lambda)), f.at(&cx.s(&i.mu)));
        let Some(eps) = out.ok("epsilon", correspondence_envelope(&f)) else { return };
        let o1 = out.ok("center", orthology_center(&t, &tp));
        let o2 = out.ok("center", orthology_center(&tp, &t));
        let (Some(o1), Some(o2)) = (o1, o2) else { return };
        if let Some(line) = out.ok("center line", Line::join(&o1, &o2)) {
            out.check("tangent to epsilon", eps.is_tangent(&line));
        }
    }
}

pub struct CommonCenters;

impl Theorem for CommonCenters {
    type Instance = (LinearFamily<Rational>, Rational);

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let (_, f) = s.concurrent_family();
            let l = s.small();
            let Ok(g) = common_center_correspondence(&f) else { continue };
            let Some(m) = g.apply_finite(&l).finite().cloned() else { continue };
            if m != l && !f.at(&l).is_degenerate() && !f.at(&m).is_degenerate() {
                return (f, l);
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"family": jf(&i.0), "lambda": jq(&i.1)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let (f, l) = (cx.fam::<F>(&i.0), cx.s::<F>(&i.1));
        let Some(g) = out.ok("correspondence", common_center_correspondence(&f)) else { return };
        out.check("involution", g.is_involution());
        let Some(m) = g.apply_finite(&l).finite().cloned() else {
            out.check("finite image", false);
            return;
        };
        let (t, tp) = (f.at(&l), f.at(&m));
        let o1 = out.ok("center", orthology_center(&t, &tp));
        let o2 = out.ok("center", orthology_center(&tp, &t));
        if let (Some(o1), Some(o2)) = (o1, o2) {
            out.check("common center", o1.same(&o2));
        }
    }
}

pub struct LagrangianRoundtrip;

impl Theorem for LagrangianRoundtrip {
    type Instance = LinearFamily<Rational>;

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let f = if s.coin() { s.orthologic_family() } else { s.family() };
            if operator_of_family(&f).is_ok() {
                return f;
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"family": jf(i)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let f = cx.fam::<F>(i);
        let Some(phi) = out.ok("operator", operator_of_family(&f)) else { return };
        let orth = is_orthologic_family(&f);
        out.check("orthologic iff self-adjoint", orth == phi.is_self_adjoint());
        let u = Subspace4::span(&[Vec4::from_pair(&f.t0.pair()), Vec4::from_pair(&f.t1.pair())]);
        if let Some(lag) = out.ok("lagrangian", u.is_lagrangian()) {
            out.check("orthologic iff lagrangian", orth == lag);
        }
        check_eigen_degenerate(&f, &phi, out);
        let unit = phi.sub(&LinOp2::identity()).det().is_zero();
        let bc = matches!(f.is_singular(), Singularity::Singular(p) if p.contains(&VertexPair::BC));
        out.check("eigenvalue 1 iff BC singular", unit == bc);
    }
}

fn check_eigen_degenerate<F: Scalar>(f: &LinearFamily<F>, phi: &LinOp2<F>, out: &mut Outcome) {
    let degs = f.degenerate_parameters();
    let b0 = lift(&f.t0.pair().b);
    let db = lift(&f.pair_at_infinity().b);
    let b_at = |p: &DegenerateParam<F>| match p {
        DegenerateParam::Finite(r) => b0.clone() + db.scale(&r.to_quad()),
        DegenerateParam::Infinity => db.clone(),
    };
    let params = degs.params();
    match phi.eigenpairs() {
        Eigen::All(_) => {
            out.check("scalar operator iff degenerate family", degs.count().is_none());
        }
        Eigen::Pairs(pairs) => {
            out.check("one degenerate class per eigenvector", degs.count() == Some(pairs.len()));
            for (_, e) in &pairs {
                let hits = params.iter().filter(|p| b_at(p).is_parallel(e)).count();
                out.check("eigenvector is a degenerate class", hits == 1);
            }
        }
    }
}

pub struct PedalCriterion;

impl Theorem for PedalCriterion {
    type Instance = (Triangle<Rational>, Vec2<Rational>, Vec2<Rational>);

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let t = s.nondegenerate_triangle();
            let r = ReferenceTriangle::new(t.clone()).expect("nondegenerate");
            let p0 = s.point();
            let p1 = if s.coin() {
                let o = r.circumcenter.clone();
                o.clone() + (p0.clone() - o).scale(&s.nonzero_small())
            } else {
                s.point()
            };
            if !pedal_triangle(&p0, &r).is_degenerate() && !pedal_triangle(&p1, &r).is_degenerate() {
                return (t, p0, p1);
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"r": jt(&i.0), "p0": jv(&i.1), "p1": jv(&i.2)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let Some(r) = out.ok("reference", ReferenceTriangle::new(cx.tri::<F>(&i.0))) else { return };
        let (p0, p1) = (cx.v::<F>(&i.1), cx.v::<F>(&i.2));
        let orth = F::vanishes(&orthologic_terms(&pedal_triangle(&p0, &r), &pedal_triangle(&p1, &r)));
        out.check("orthologic iff collinear with O", orth == collinear_points(&p0, &p1, &r.circumcenter));
    }
}

pub struct EmelyanovContact;

impl Theorem for EmelyanovContact {
    type Instance = Triangle<Rational>;

    fn generate(s: &mut Sampler) -> Self::Instance {
        s.tangent_triangle()
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"r": jt(i)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let Some(r) = out.ok("reference", ReferenceTriangle::new(cx.tri::<F>(i))) else { return };
        let Some((k, x)) = out.ok("contact", contact_triangles(&r)) else { return };
        for i in 0..3 {
            let mid = r.t.vertex(i + 1).midpoint(r.t.vertex(i + 2));
            out.check("symmetric about the midpoint", k.vertex(i).midpoint(x.vertex(i)).same(&mid));
        }
        out.vanish("K ⊥ X", &orthologic_terms(&k, &x));
    }
}

pub struct AltitudeMidpoints;

impl Theorem for AltitudeMidpoints {
    type Instance = Triangle<Rational>;

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let t = s.nondegenerate_triangle();
            let r = ReferenceTriangle::new(t.clone()).expect("nondegenerate");
            let (feet, mids) = altitude_configuration(&r);
            if !feet.is_degenerate() && !mids.is_degenerate() {
                return t;
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"r": jt(i)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let Some(r) = out.ok("reference", ReferenceTriangle::new(cx.tri::<F>(i))) else { return };
        let (feet, mids) = altitude_configuration(&r);
        out.vanish("ABC ⊥ XYZ", &orthologic_terms(&r.t, &mids));
        let f = LinearFamily::new(r.t.clone(), mids.clone());
        out.check("DEF is T_2", f.at(&F::from_i64(2)).same(&feet));
        out.vanish("DEF ⊥ XYZ", &orthologic_terms(&feet, &mids));
    }
}

pub struct FliesAltitudes;

impl Theorem for FliesAltitudes {
    type Instance = LinearFamily<Rational>;

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let t = s.nondegenerate_triangle();
            let flies = Triangle::from_array([0, 1, 2].map(|i| t.vertex(i).clone() + t.side_dir(i).perp().scale(&s.small())));
            let f = LinearFamily::new(t, flies);
            if f.is_nonsingular() && !f.is_degenerate() {
                return f;
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        let params: Vec<Value> = i
            .degenerate_parameters()
            .params()
            .iter()
            .map(|p| match p {
                DegenerateParam::Finite(r) => Value::String(r.to_quad().to_string()),
                DegenerateParam::Infinity => Value::String("inf".into()),
            })
            .collect();
        json!({"family": jf(i), "degenerate_params": params})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let f = cx.fam::<F>(i);
        out.check("orthologic family", is_orthologic_family(&f));
        out.check("two degenerate parameters", isolated_count(&f) == Some(2));
        check_degenerate_carriers(&f, out);
    }
}

pub struct GergonnianFlies;

impl Theorem for GergonnianFlies {
    type Instance = (Vec2<Rational>, Triangle<Rational>);

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let (i, t) = s.incircle_triangle();
            let r = ReferenceTriangle::new(t.clone()).expect("nondegenerate");
            let (k, _) = contact_triangles(&r).expect("rational sides");
            let f = LinearFamily::new(t.clone(), k);
            if f.is_nonsingular() && !f.is_degenerate() {
                return (i, t);
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"incenter": jv(&i.0), "r": jt(&i.1)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let Some(r) = out.ok("reference", ReferenceTriangle::new(cx.tri::<F>(&i.1))) else { return };
        let Some((k, _)) = out.ok("contact", contact_triangles(&r)) else { return };
        let f = LinearFamily::new(r.t.clone(), k);
        let Some(incenter) = out.ok("incenter", r.incenter()) else { return };
        out.check("incenter", incenter.same(&cx.v(&i.0)));
        let carriers = f.degenerate_carriers();
        if !out.check("two degenerate lines", carriers.len() == 2) {
            return;
        }
        let ih = HPoint::finite(&lift(&incenter));
        for l in &carriers {
            out.check("through the incenter", l.contains(&ih));
        }
        out.zero("carrier dot", &carriers[0].direction().dot(&carriers[1].direction()));
    }
}

pub struct Kiepert;

impl Theorem for Kiepert {
    type Instance = (Triangle<Rational>, [Rational; 3]);

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let t = s.nondegenerate_triangle();
            let ts = [0; 3].map(|_| s.nonzero_small());
            let f = kiepert_family(&ReferenceTriangle::new(t.clone()).expect("nondegenerate"));
            let ok = ts.iter().all(|x| {
                let inv = Rational::one() / x.clone();
                !f.at(x).is_degenerate() && !f.at(&inv).is_degenerate()
            });
            if ok && !f.is_degenerate() {
                return (t, ts);
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"r": jt(&i.0), "params": i.1.iter().map(jq).collect::<Vec<_>>()})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let Some(r) = out.ok("reference", ReferenceTriangle::new(cx.tri::<F>(&i.0))) else { return };
        let f = kiepert_family(&r);
        if let Some(c) = out.ok("center conic", center_conic(&r.t, &f)) {
            out.check("through the centroid", c.contains_point(&r.centroid));
            out.check("through the orthocenter", c.contains_point(&r.orthocenter));
        }
        for t in &i.1 {
            let t = cx.s::<F>(t);
            let inv = F::one() / t.clone();
            let (tt, ti) = (f.at(&t), f.at(&inv));
            for k in 0..3 {
                let cevian = ti.vertex(k).clone() - r.t.vertex(k).clone();
                let side = tt.side_dir(k);
                out.vanish(
                    "AA_{1/t} ⊥ B_tC_t",
                    &[cevian.x.clone() * side.x.clone(), cevian.y.clone() * side.y.clone()],
                );
            }
            let p = out.ok("perspector", perspector(&r.t, &ti));
            let o = out.ok("center", orthology_center(&r.t, &tt));
            if let (Some(p), Some(o)) = (p, o) {
                out.check("perspector of T_{1/t} is O_{ABC,T_t}", p.same(&o));
            }
        }
    }
}

pub struct FocusMiquel;

impl Theorem for FocusMiquel {
    type Instance = LinearFamily<Rational>;

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let f = LinearFamily::new(s.triangle(), s.triangle());
            let (a0, a1, b0, b1) = (&f.t0.a, &f.t1.a, &f.t0.b, &f.t1.b);
            if let Ok(PairCenter::Spiral(_)) = spiral_center(a0, a1, b0, b1) {
                return f;
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"family": jf(i)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let f = cx.fam::<F>(i);
        let Some(m) = out.ok("spiral center", spiral_center(&f.t0.a, &f.t1.a, &f.t0.b, &f.t1.b)) else { return };
        let PairCenter::Spiral(m) = m else {
            out.check("spiral", false);
            return;
        };
        let Some(env) = out.ok("envelope", envelope_conic(&f, VertexPair::AB)) else { return };
        out.check("parabola", env.classify() == ConicClass::Parabola);
        if let Some(focus) = out.ok("focus", parabola_focus(&env)) {
            out.check("focus is the spiral center", focus.same(&m));
        }
    }
}

pub struct RadicalAxes;

impl Theorem for RadicalAxes {
    type Instance = (Triangle<Rational>, [Rational; 3], [Vec2<Rational>; 3]);

    fn generate(s: &mut Sampler) -> Self::Instance {
        let centers = s.nondegenerate_triangle();
        let powers = [0; 3].map(|_| s.rational());
        let probes = [0; 3].map(|_| s.point());
        (centers, powers, probes)
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({
            "centers": jt(&i.0),
            "radii2": i.1.iter().map(jq).collect::<Vec<_>>(),
            "probes": i.2.iter().map(jv).collect::<Vec<_>>(),
        })
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let o = cx.tri::<F>(&i.0).vertices();
        let rr = i.1.clone().map(|x| cx.s::<F>(&x));
        let mut pts = Vec::new();
        for (k, (a, b)) in [(1, 2), (2, 0), (0, 1)].into_iter().enumerate() {
            let n = (o[b].clone() - o[a].clone()).scale(&F::from_i64(2));
            let c = o[a].norm2() - o[b].norm2() - rr[a].clone() + rr[b].clone();
            let Some(axis) = out.ok("radical axis", Line::new(n.x, n.y, c)) else { return };
            let x = axis.foot(&cx.v(&i.2[k]));
            let pa = (x.clone() - o[a].clone()).norm2() - rr[a].clone();
            let pb = (x.clone() - o[b].clone()).norm2() - rr[b].clone();
            out.vanish("equal powers", &[pa, -pb]);
            pts.push(x);
        }
        let x = Triangle::new(pts[0].clone(), pts[1].clone(), pts[2].clone());
        out.vanish("centers ⊥ axis points", &orthologic_terms(&Triangle::from_array(o), &x));
    }
}

pub struct HomothetReplacement;

impl Theorem for HomothetReplacement {
    type Instance = (Triangle<Rational>, Vec2<Rational>);

    fn generate(s: &mut Sampler) -> Self::Instance {
        (s.nondegenerate_triangle(), s.point())
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"r": jt(&i.0), "p": jv(&i.1)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let Some(r) = out.ok("reference", ReferenceTriangle::new(cx.tri::<F>(&i.0))) else { return };
        let ped = pedal_triangle(&cx.v(&i.1), &r);
        let mid = Triangle::from_array([0, 1, 2].map(|k| ped.vertex(k + 1).midpoint(ped.vertex(k + 2))));
        out.vanish("medial of pedal ⊥ ABC", &orthologic_terms(&mid, &r.t));
    }
}

pub struct AlphaPedal;

impl Theorem for AlphaPedal {
    type Instance = (Triangle<Rational>, Vec2<Rational>, Rational);

    fn generate(s: &mut Sampler) -> Self::Instance {
        loop {
            let t = s.nondegenerate_triangle();
            let p = s.point();
            let m = s.small();
            let (c, sn) = rotation(&m);
            let r = ReferenceTriangle::new(t.clone()).expect("nondegenerate");
            let alpha = AngleParam::new(c, sn).expect("rotation");
            if alpha_pedal_triangle(&p, &r, &alpha).is_ok_and(|ap| !ap.is_degenerate()) {
                return (t, p, m);
            }
        }
    }

    fn describe(i: &Self::Instance) -> Value {
        json!({"r": jt(&i.0), "p": jv(&i.1), "m": jq(&i.2)})
    }

    fn check<F: Scalar>(i: &Self::Instance, cx: &Ctx, out: &mut Outcome) {
        let Some(r) = out.ok("reference", ReferenceTriangle::new(cx.tri::<F>(&i.0))) else { return };
        let (c, s) = rotation(&i.2);
        let Some(alpha) = out.ok("angle", AngleParam::new(cx.s::<F>(&c), cx.s::<F>(&s))) else { return };
        let p = cx.v::<F>(&i.1);
        let Some(ap) = out.ok("alpha pedal", alpha_pedal_triangle(&p, &r, &alpha)) else { return };
        if let Some(o) = out.ok("alpha center", alpha_orthology_center(&ap, &r.t, &alpha)) {
            out.check("center is P", o.same(&HPoint::finite(&p)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::Bounds;

    #[test]
    fn ids_are_unique() {
        for (i, a) in SUITES.iter().enumerate() {
            assert!(SUITES[i + 1..].iter().all(|b| b.id != a.id), "{}", a.id);
        }
    }

    #[test]
    fn every_suite_passes_a_few_trials() {
        for suite in SUITES {
            for index in 0..5 {
                let mut s = Sampler::new(11, index, Bounds::default());
                let t = (suite.trial)(&mut s, index, Backend::Exact);
                assert!(t.outcome.pass, "{} #{index}: {:?}", suite.id, t.outcome.residuals);
            }
        }
    }

    #[test]
    fn outcome_keeps_the_worst_residual() {
        let mut o = Outcome::default();
        o.vanish::<Rational>("x", &[Rational::from_i64(2), Rational::from_i64(-1)]);
        o.vanish::<Rational>("x", &[Rational::from_i64(0)]);
        assert!(!o.pass);
        assert_eq!(o.residuals["x"], 1.0);
    }
}
