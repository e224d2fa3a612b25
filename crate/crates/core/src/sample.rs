//! Seeded random configurations for the property suites.
//!
//! Coordinates are drawn uniformly from `[-bound, bound]`; degenerate draws
//! are rejected and redrawn. The generator is ChaCha8 so a seed reproduces a
//! run on every platform.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conic::{conic_through_5, second_intersection, Conic};
use crate::plane::{collinear, incident, is_quadrangle, join, meet, HomLine, HomPoint, ProjElement, Vec3};
use crate::projectivity::{Carrier, Perspectivity, Projectivity};

pub const DEFAULT_BOUND: i64 = 10;

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, bound: i64) -> Self {
        assert!(bound >= 1, "coordinate bound must be positive");
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), bound }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-self.bound..=self.bound)
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    fn vec3(&mut self) -> Vec3 {
        [self.int().into(), self.int().into(), self.int().into()]
    }

    pub fn element<T: ProjElement>(&mut self) -> T {
        loop {
            if let Ok(e) = T::from_vec(self.vec3()) {
                return e;
            }
        }
    }

    pub fn point(&mut self) -> HomPoint {
        self.element()
    }

    pub fn line(&mut self) -> HomLine {
        self.element()
    }

    /// A finite point `<x, y, 1>` with integer coordinates.
    pub fn affine_point(&mut self) -> HomPoint {
        HomPoint::new(self.int(), self.int(), 1).expect("z = 1")
    }

    /// An element incident with `e`: the span of `e` and a random dual.
    pub fn incident_with<T: ProjElement>(&mut self, e: &T::Dual) -> T {
        loop {
            let other: T::Dual = self.element();
            if let Ok(x) = e.span(&other) {
                return x;
            }
        }
    }

    pub fn point_on(&mut self, l: &HomLine) -> HomPoint {
        self.incident_with(l)
    }

    pub fn line_through(&mut self, p: &HomPoint) -> HomLine {
        self.incident_with(p)
    }

    /// `n` pairwise distinct points on `l`.
    pub fn points_on(&mut self, l: &HomLine, n: usize) -> Vec<HomPoint> {
        let mut out: Vec<HomPoint> = Vec::with_capacity(n);
        while out.len() < n {
            let p = self.point_on(l);
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// `n` pairwise distinct elements, no three incident with a common dual.
    pub fn general_position<T: ProjElement>(&mut self, n: usize) -> Vec<T> {
        let mut out: Vec<T> = Vec::with_capacity(n);
        'draw: while out.len() < n {
            let x: T = self.element();
            for i in 0..out.len() {
                if out[i] == x {
                    continue 'draw;
                }
                for j in i + 1..out.len() {
                    let span = out[i].span(&out[j]).expect("distinct");
                    if x.lies_with(&span) {
                        continue 'draw;
                    }
                }
            }
            out.push(x);
        }
        out
    }

    pub fn quadrangle(&mut self) -> [HomPoint; 4] {
        let v = self.general_position::<HomPoint>(4);
        debug_assert!(is_quadrangle(&v[0], &v[1], &v[2], &v[3]));
        [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
    }

    pub fn triangle_vertices(&mut self) -> [HomPoint; 3] {
        loop {
            let (a, b, c) = (self.point(), self.point(), self.point());
            if a != b && b != c && a != c && !collinear(&a, &b, &c) {
                return [a, b, c];
            }
        }
    }

    /// Three distinct collinear points `A, B, C` with `C` on `AB`.
    pub fn collinear_triple(&mut self) -> (HomPoint, HomPoint, HomPoint) {
        let l = self.line();
        let p = self.points_on(&l, 3);
        (p[0].clone(), p[1].clone(), p[2].clone())
    }

    /// A point off every line in `avoid`.
    pub fn point_off(&mut self, avoid: &[&HomLine]) -> HomPoint {
        loop {
            let p = self.point();
            if avoid.iter().all(|l| !p.lies_with(*l)) {
                return p;
            }
        }
    }

    /// Meet of two random lines through fixed points, for varied denominators.
    pub fn derived_point(&mut self) -> HomPoint {
        loop {
            let (l, m) = (self.line(), self.line());
            if let Ok(p) = meet(&l, &m) {
                return p;
            }
        }
    }

    pub fn derived_line(&mut self) -> HomLine {
        loop {
            let (p, q) = (self.point(), self.point());
            if let Ok(l) = join(&p, &q) {
                return l;
            }
        }
    }

    /// One random perspectivity out of `from`; `same_kind` keeps ranges on
    /// ranges and pencils on pencils.
    pub fn perspectivity(&mut self, from: &Carrier, same_kind: bool) -> Perspectivity {
        loop {
            let switch = !same_kind && self.range(0, 3) == 0;
            let step = match (from, switch) {
                (Carrier::Range(l), false) => {
                    let m = self.line();
                    let o = self.point_off(&[l, &m]);
                    Perspectivity::central(o, l.clone(), m)
                }
                (Carrier::Range(l), true) => Perspectivity::project(l.clone(), self.point_off(&[l])),
                (Carrier::Pencil(v), false) => {
                    let w = self.point();
                    let axis = self.line_off(&[v, &w]);
                    Perspectivity::axial(axis, v.clone(), w)
                }
                (Carrier::Pencil(v), true) => Perspectivity::cut(v.clone(), self.line_off(&[v])),
            };
            if let Ok(p) = step {
                if p.source() != p.target() {
                    return p;
                }
            }
        }
    }

    /// A chain of `len` random perspectivities starting on `from`.
    pub fn chain(&mut self, from: &Carrier, len: usize, same_kind: bool) -> Projectivity {
        let mut steps = Vec::with_capacity(len);
        let mut cur = from.clone();
        for _ in 0..len {
            let p = self.perspectivity(&cur, same_kind);
            cur = p.target();
            steps.push(p);
        }
        Projectivity::new(steps).expect("steps connect")
    }

    /// A line through none of the points in `avoid`.
    pub fn line_off(&mut self, avoid: &[&HomPoint]) -> HomLine {
        loop {
            let l = self.line();
            if avoid.iter().all(|p| !incident(p, &l)) {
                return l;
            }
        }
    }

    /// A conic through five random points in general position.
    pub fn conic(&mut self) -> Conic {
        let p = self.general_position::<HomPoint>(5);
        conic_through_5(&p[0], &p[1], &p[2], &p[3], &p[4]).expect("general position")
    }

    /// A point of `k`: the second intersection of a random line through a
    /// base point.
    pub fn conic_point(&mut self, k: &Conic) -> HomPoint {
        let u = k.base_points().0.clone();
        loop {
            let l = self.line_through(&u);
            if let Ok(r) = second_intersection(k, &u, &l) {
                return r;
            }
        }
    }

    /// `n` distinct random points of `k`.
    pub fn conic_points(&mut self, k: &Conic, n: usize) -> Vec<HomPoint> {
        let mut out: Vec<HomPoint> = Vec::with_capacity(n);
        while out.len() < n {
            let p = self.conic_point(k);
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}
