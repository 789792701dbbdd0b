//! Seeded samplers of rational instances.

use num_bigint::BigInt;
use orthokit::constructions::triangle_from_tangent_params;
use orthokit::family::{LinearFamily, Triangle, VectorPair};
use orthokit::operator4::LinOp2;
use orthokit::{Rational, Scalar, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bounds on sampled numerators and denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub num: i64,
    pub den: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { num: 100, den: 10 }
    }
}

/// Sampler for trial `index` of a run seeded with `seed`.
pub struct Sampler {
    rng: ChaCha8Rng,
    bounds: Bounds,
}

impl Sampler {
    pub fn new(seed: u64, index: u64, bounds: Bounds) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Sampler { rng, bounds }
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    fn ratio(&mut self, num: i64, den: i64) -> Rational {
        let n = self.rng.gen_range(-num..=num);
        let d = self.rng.gen_range(1..=den.max(1));
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    /// A coordinate within the configured bounds.
    pub fn rational(&mut self) -> Rational {
        self.ratio(self.bounds.num, self.bounds.den)
    }

    /// A small parameter, `|num| ≤ 12`, `den ≤ 4`.
    pub fn small(&mut self) -> Rational {
        self.ratio(12, 4)
    }

    pub fn nonzero_small(&mut self) -> Rational {
        loop {
            let x = self.small();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn point(&mut self) -> Vec2<Rational> {
        Vec2::new(self.rational(), self.rational())
    }

    pub fn vector(&mut self) -> Vec2<Rational> {
        loop {
            let v = self.point();
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn triangle(&mut self) -> Triangle<Rational> {
        Triangle::new(self.point(), self.point(), self.point())
    }

    pub fn nondegenerate_triangle(&mut self) -> Triangle<Rational> {
        loop {
            let t = self.triangle();
            if !t.is_degenerate() {
                return t;
            }
        }
    }

    pub fn family(&mut self) -> LinearFamily<Rational> {
        LinearFamily::new(self.triangle(), self.triangle())
    }

    pub fn symmetric_op(&mut self) -> LinOp2<Rational> {
        let r = self.small();
        LinOp2::new(self.small(), r.clone(), r, self.small())
    }

    /// Base pairs read off the graph of a random symmetric operator.
    pub fn orthologic_family(&mut self) -> LinearFamily<Rational> {
        let phi = self.symmetric_op();
        let (b0, b1) = (self.vector(), self.vector());
        let t0 = VectorPair::new(b0.clone(), phi.apply(&b0)).place(&self.point());
        let t1 = VectorPair::new(b1.clone(), phi.apply(&b1)).place(&self.point());
        LinearFamily::new(t0, t1)
    }

    /// A nondegenerate, nonsingular orthologic family.
    pub fn generic_orthologic_family(&mut self) -> LinearFamily<Rational> {
        loop {
            let f = self.orthologic_family();
            if f.is_nonsingular() && !f.is_degenerate() && !f.t0.is_degenerate() && !f.t1.is_degenerate() {
                return f;
            }
        }
    }

    pub fn orthologic_pair(&mut self) -> (Triangle<Rational>, Triangle<Rational>) {
        loop {
            let f = self.orthologic_family();
            if !f.t0.is_degenerate() && !f.t1.is_degenerate() {
                return (f.t0, f.t1);
            }
        }
    }

    /// A nondegenerate triangle orthologic to `tp`.
    pub fn triangle_orthologic_to(&mut self, tp: &Triangle<Rational>) -> Triangle<Rational> {
        let pp = tp.pair();
        loop {
            let b = self.vector();
            // b·c′ = c·b′ leaves c free along b′⊥
            let k = b.dot(&pp.c) / pp.b.norm2();
            let c = pp.b.scale(&k) + pp.b.perp().scale(&self.small());
            let t = VectorPair::new(b, c).place(&self.point());
            if !t.is_degenerate() {
                return t;
            }
        }
    }

    /// A concurrent orthologic family through `h`, moved off its axes
    /// frame by a rational rotation and a translation. Returns `(h, F)`.
    pub fn concurrent_family(&mut self) -> (Vec2<Rational>, LinearFamily<Rational>) {
        loop {
            let h = Vec2::new(self.nonzero_small(), self.nonzero_small());
            let xs = [0; 3].map(|_| self.nonzero_small());
            let Some(f) = axes_family(&h, xs) else { continue };
            let (c, s) = rotation(&self.small());
            let shift = self.point();
            let g = |p: &Vec2<Rational>| p.rotate_by(&c, &s) + shift.clone();
            let placed = LinearFamily::new(f.t0.map_vertices(g), f.t1.map_vertices(g));
            return (g(&h), placed);
        }
    }

    /// A triangle with rational sides circumscribed about a circle.
    pub fn tangent_triangle(&mut self) -> Triangle<Rational> {
        loop {
            let center = self.point();
            let radius = self.nonzero_small().abs();
            let m = [0; 3].map(|_| self.small());
            if let Ok(t) = triangle_from_tangent_params(&center, &radius, m) {
                return t;
            }
        }
    }

    /// A triangle with rational sides whose incircle is the given circle
    /// of the sampled tangent parameters.
    pub fn incircle_triangle(&mut self) -> (Vec2<Rational>, Triangle<Rational>) {
        loop {
            let center = self.point();
            let radius = self.nonzero_small().abs();
            let m = [0; 3].map(|_| self.small());
            let Ok(t) = triangle_from_tangent_params(&center, &radius, m) else { continue };
            let inside = (0..3).all(|i| {
                let (a, b, c) = (t.vertex(i), t.vertex(i + 1), t.vertex(i + 2));
                let side = c.clone() - b.clone();
                side.cross(&(a.clone() - b.clone())).signum() == side.cross(&(center.clone() - b.clone())).signum()
            });
            if inside {
                return (center, t);
            }
        }
    }
}

/// `(cos, sin)` of the rotation with half-angle tangent `m`.
pub fn rotation(m: &Rational) -> (Rational, Rational) {
    let d = Rational::one() + m.square();
    (
        (Rational::one() - m.square()) / d.clone(),
        Rational::from_i64(2) * m.clone() / d,
    )
}

/// The family `A_t = (t·x_a, (1-t)·y_a)` whose trajectories pass through `h`.
pub fn axes_family(h: &Vec2<Rational>, xs: [Rational; 3]) -> Option<LinearFamily<Rational>> {
    let mut t0 = Vec::new();
    let mut t1 = Vec::new();
    for x in xs {
        if x.is_zero() || x.same(&h.x) {
            return None;
        }
        let y = h.y.clone() / (Rational::one() - h.x.clone() / x.clone());
        t0.push(Vec2::new(Rational::zero(), y));
        t1.push(Vec2::new(x, Rational::zero()));
    }
    let t0 = Triangle::new(t0[0].clone(), t0[1].clone(), t0[2].clone());
    let t1 = Triangle::new(t1[0].clone(), t1[1].clone(), t1[2].clone());
    let fam = LinearFamily::new(t0, t1);
    (fam.is_nonsingular() && !fam.is_degenerate()).then_some(fam)
}
