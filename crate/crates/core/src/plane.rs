//! The analytic projective plane over the rationals.
//!
//! A point is a one-dimensional subspace of ℚ³ and a line a two-dimensional
//! one; both are stored as the primitive integer triple spanning them (for a
//! line, its normal vector), with the first nonzero entry positive. With that
//! canonical form equality is identity of triples, incidence is a vanishing
//! dot product, and join and meet are both the cross product.
//!
//! Apartness is decidable here, so every constructive witness function below
//! is a total decision procedure. When both alternatives of a witness hold
//! the first one listed is returned.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;
use crate::{Error, Result};

pub type Vec3 = [BigInt; 3];

pub(crate) fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn dot(a: &Vec3, b: &Vec3) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Divides out the content and makes the first nonzero entry positive.
pub(crate) fn primitive(mut v: Vec3) -> Result<Vec3> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if lead_negative {
            *x = -&*x;
        }
    }
    Ok(v)
}

/// Clears denominators of a rational triple.
pub(crate) fn integral(v: &[Scalar; 3]) -> Vec3 {
    let l = v.iter().fold(BigInt::one(), |l, s| l.lcm(s.denom()));
    [0, 1, 2].map(|i| v[i].numer() * (&l / v[i].denom()))
}

pub(crate) fn to_scalars(v: &Vec3) -> [Scalar; 3] {
    [0, 1, 2].map(|i| Scalar::from_int(v[i].clone()))
}

macro_rules! hom_element {
    ($name:ident, $open:literal, $close:literal) => {
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Vec3);

        impl $name {
            pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
                Self::from_vec([a.into(), b.into(), c.into()])
            }

            pub fn from_vec(v: Vec3) -> Result<Self> {
                primitive(v).map($name)
            }

            pub fn from_scalars(v: &[Scalar; 3]) -> Result<Self> {
                Self::from_vec(integral(v))
            }

            pub fn coords(&self) -> &Vec3 {
                &self.0
            }

            pub fn scalars(&self) -> [Scalar; 3] {
                to_scalars(&self.0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{},{},{}{}", $open, self.0[0], self.0[1], self.0[2], $close)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

hom_element!(HomPoint, "<", ">");
hom_element!(HomLine, "[", "]");

impl HomPoint {
    /// The finite point `(x, y)`, i.e. `<x, y, 1>`.
    pub fn affine(x: &Scalar, y: &Scalar) -> Result<Self> {
        Self::from_scalars(&[x.clone(), y.clone(), Scalar::one()])
    }

    pub fn is_finite(&self) -> bool {
        !self.0[2].is_zero()
    }

    /// Coordinates in the chart `z = 1`, when the point is finite.
    pub fn to_affine(&self) -> Option<(Scalar, Scalar)> {
        let z = Scalar::from_int(self.0[2].clone());
        let x = Scalar::from_int(self.0[0].clone()).checked_div(&z).ok()?;
        let y = Scalar::from_int(self.0[1].clone()).checked_div(&z).ok()?;
        Some((x, y))
    }
}

fn split3(body: &str) -> Result<[Scalar; 3]> {
    let parts: alloc::vec::Vec<&str> = body.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::InvalidScalar);
    }
    Ok([parts[0].parse()?, parts[1].parse()?, parts[2].parse()?])
}

/// Accepts `<x,y,z>` and the affine shorthand `(x,y)`.
impl FromStr for HomPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
            return HomPoint::from_scalars(&split3(body)?);
        }
        if let Some(body) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (x, y) = body.split_once(',').ok_or(Error::InvalidScalar)?;
            return HomPoint::affine(&x.trim().parse()?, &y.trim().parse()?);
        }
        Err(Error::InvalidScalar)
    }
}

impl FromStr for HomLine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or(Error::InvalidScalar)?;
        HomLine::from_scalars(&split3(body)?)
    }
}

/// Points and lines seen through the duality that swaps them.
///
/// Join of points and meet of lines are the same operation (`span`), and so
/// is incidence read from either side. Writing the axiom checks against this
/// trait lets one body of code test a statement and its dual.
pub trait ProjElement: Clone + Eq + Ord + fmt::Debug + fmt::Display {
    type Dual: ProjElement<Dual = Self>;

    /// Error for two coincident arguments of `span`.
    const COINCIDENT: Error;
    /// Error for an element incident with both arguments of a C7 witness.
    const ON_BOTH: Error;

    fn coords(&self) -> &Vec3;
    fn from_vec(v: Vec3) -> Result<Self>;

    fn span(&self, other: &Self) -> Result<Self::Dual> {
        if self == other {
            return Err(Self::COINCIDENT);
        }
        Self::Dual::from_vec(cross(self.coords(), other.coords()))
    }

    fn lies_with(&self, dual: &Self::Dual) -> bool {
        dot(self.coords(), dual.coords()).is_zero()
    }

    fn dualize(&self) -> Self::Dual {
        Self::Dual::from_vec(self.coords().clone()).expect("canonical triples are nonzero")
    }
}

impl ProjElement for HomPoint {
    type Dual = HomLine;
    const COINCIDENT: Error = Error::CoincidentPoints;
    const ON_BOTH: Error = Error::LineThroughBothPoints;

    fn coords(&self) -> &Vec3 {
        &self.0
    }
    fn from_vec(v: Vec3) -> Result<Self> {
        HomPoint::from_vec(v)
    }
}

impl ProjElement for HomLine {
    type Dual = HomPoint;
    const COINCIDENT: Error = Error::CoincidentLines;
    const ON_BOTH: Error = Error::PointOnBothLines;

    fn coords(&self) -> &Vec3 {
        &self.0
    }
    fn from_vec(v: Vec3) -> Result<Self> {
        HomLine::from_vec(v)
    }
}

/// The line through two points.
pub fn join(p: &HomPoint, q: &HomPoint) -> Result<HomLine> {
    p.span(q)
}

/// The common point `l·m` of two lines.
pub fn meet(l: &HomLine, m: &HomLine) -> Result<HomPoint> {
    l.span(m)
}

pub fn incident(p: &HomPoint, l: &HomLine) -> bool {
    p.lies_with(l)
}

/// `P ∉ l`. In this model the positive outside relation is exactly the
/// complement of incidence.
pub fn outside(p: &HomPoint, l: &HomLine) -> bool {
    !incident(p, l)
}

pub fn apart<T: ProjElement>(a: &T, b: &T) -> bool {
    a != b
}

pub fn points_apart(p: &HomPoint, q: &HomPoint) -> bool {
    p != q
}

pub fn lines_apart(l: &HomLine, m: &HomLine) -> bool {
    l != m
}

pub fn collinear(p: &HomPoint, q: &HomPoint, r: &HomPoint) -> bool {
    det3(p.coords(), q.coords(), r.coords()).is_zero()
}

pub fn concurrent(l: &HomLine, m: &HomLine, n: &HomLine) -> bool {
    det3(l.coords(), m.coords(), n.coords()).is_zero()
}

pub(crate) fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> BigInt {
    dot(a, &cross(b, c))
}

/// Which alternative of a cotransitivity split holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `z ≠ x`
    Left,
    /// `z ≠ y`
    Right,
}

/// Given `x ≠ y`, decides whether `z ≠ x` (preferred) or `z ≠ y`.
pub fn cotransitive_witness<T: ProjElement>(x: &T, y: &T, z: &T) -> Result<Side> {
    if x == y {
        return Err(T::COINCIDENT);
    }
    Ok(if z != x { Side::Left } else { Side::Right })
}

/// Which line a point avoids in Axiom C7.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C7Branch {
    /// The point lies outside the first line.
    OutsideL,
    /// The point lies outside the second line.
    OutsideM,
}

/// For distinct `l`, `m` and `p ≠ l·m`, returns a line that `p` lies outside.
///
/// Also serves the dual statement: for distinct points `A`, `B` and a line
/// apart from `AB`, says which of the two points it avoids.
pub fn c7_witness<T: ProjElement>(l: &T, m: &T, p: &T::Dual) -> Result<C7Branch> {
    let common = l.span(m)?;
    if *p == common {
        return Err(T::ON_BOTH);
    }
    if !p.lies_with(l) {
        Ok(C7Branch::OutsideL)
    } else if !p.lies_with(m) {
        Ok(C7Branch::OutsideM)
    } else {
        unreachable!("an element incident with two distinct duals is their span")
    }
}

pub fn dualize_point(p: &HomPoint) -> HomLine {
    p.dualize()
}

pub fn dualize_line(l: &HomLine) -> HomPoint {
    l.dualize()
}

/// A nondegenerate triangle; `sides[i]` is the side opposite `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub vertices: [HomPoint; 3],
    pub sides: [HomLine; 3],
}

impl Triangle {
    pub fn new(a: HomPoint, b: HomPoint, c: HomPoint) -> Result<Self> {
        if a == b || b == c || a == c || collinear(&a, &b, &c) {
            return Err(Error::DegenerateTriangle);
        }
        let sides = [join(&b, &c)?, join(&a, &c)?, join(&a, &b)?];
        Ok(Triangle { vertices: [a, b, c], sides })
    }

    /// Corresponding vertices and corresponding sides pairwise distinct.
    pub fn distinct_from(&self, other: &Triangle) -> bool {
        (0..3).all(|i| self.vertices[i] != other.vertices[i] && self.sides[i] != other.sides[i])
    }

    fn all_vertices<'a>(&'a self, other: &'a Triangle) -> impl Iterator<Item = &'a HomPoint> {
        self.vertices.iter().chain(other.vertices.iter())
    }

    fn all_sides<'a>(&'a self, other: &'a Triangle) -> impl Iterator<Item = &'a HomLine> {
        self.sides.iter().chain(other.sides.iter())
    }
}

/// Whether two triangles are perspective from the center `o`.
pub fn perspective_from_center(t1: &Triangle, t2: &Triangle, o: &HomPoint) -> bool {
    t1.distinct_from(t2)
        && (0..3).all(|i| collinear(o, &t1.vertices[i], &t2.vertices[i]))
        && t1.all_sides(t2).all(|s| outside(o, s))
}

/// Axiom D: triangles perspective from a center are perspective from an axis.
pub fn desargues_axis(t1: &Triangle, t2: &Triangle, o: &HomPoint) -> Result<HomLine> {
    if !perspective_from_center(t1, t2, o) {
        return Err(Error::NotPerspectiveFromCenter);
    }
    let meets = [0, 1, 2].map(|i| meet(&t1.sides[i], &t2.sides[i]).expect("corresponding sides are distinct"));
    let axis = join(&meets[0], &meets[1]).expect("side intersections are distinct");
    assert!(incident(&meets[2], &axis), "Desargues: side intersections not collinear");
    assert!(
        t1.all_vertices(t2).all(|v| outside(v, &axis)),
        "Desargues: axis meets a vertex"
    );
    Ok(axis)
}

/// Converse of Desargues, computed the way the synthetic proof runs: Axiom D
/// applied to the triangles `AQQ'` and `BPP'`, which are perspective from `C`.
pub fn desargues_center(t1: &Triangle, t2: &Triangle, axis: &HomLine) -> Result<HomPoint> {
    if !t1.distinct_from(t2) || t1.all_vertices(t2).any(|v| incident(v, axis)) {
        return Err(Error::NotPerspectiveFromAxis);
    }
    let [a, b, c] = [0, 1, 2].map(|i| meet(&t1.sides[i], &t2.sides[i]).expect("corresponding sides are distinct"));
    if ![&a, &b, &c].iter().all(|x| incident(x, axis)) {
        return Err(Error::NotPerspectiveFromAxis);
    }
    let [p, q, r] = t1.vertices.clone();
    let [p2, q2, r2] = t2.vertices.clone();

    let aqq = Triangle::new(a, q.clone(), q2.clone()).expect("A, Q, Q' are noncollinear");
    let bpp = Triangle::new(b, p.clone(), p2.clone()).expect("B, P, P' are noncollinear");
    let rr = desargues_axis(&aqq, &bpp, &c).expect("AQQ' and BPP' are perspective from C");
    debug_assert_eq!(Ok(&rr), join(&r, &r2).as_ref());

    let o = meet(&join(&p, &p2)?, &join(&q, &q2)?).expect("PP' and QQ' are distinct");
    assert!(incident(&o, &rr), "converse Desargues: O is not on RR'");
    assert!(t1.all_sides(t2).all(|s| outside(&o, s)), "converse Desargues: O on a side");
    Ok(o)
}

/// Diagonal points `(AB·CD, AC·BD, AD·BC)` of a quadrangle.
pub fn fano_diagonals(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<[HomPoint; 3]> {
    if !is_quadrangle(a, b, c, d) {
        return Err(Error::DegenerateQuadrangle);
    }
    let diag = [
        meet(&join(a, b)?, &join(c, d)?)?,
        meet(&join(a, c)?, &join(b, d)?)?,
        meet(&join(a, d)?, &join(b, c)?)?,
    ];
    assert!(
        diag[0] != diag[1] && diag[1] != diag[2] && diag[0] != diag[2] && !collinear(&diag[0], &diag[1], &diag[2]),
        "Fano: diagonal points are collinear"
    );
    Ok(diag)
}

/// Four pairwise distinct points, no three collinear.
pub fn is_quadrangle(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> bool {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return false;
            }
        }
    }
    !(collinear(a, b, c) || collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d))
}
