//! Steiner conics, Pascal's theorem, tangents, secants, polars and poles.
//!
//! A [`Conic`] carries two representations: the Steiner data `(π; U, V)`,
//! which the definitional tests and synthetic constructions use, and a
//! primitive symmetric integer matrix `M` with `xᵀMx = 0`, used for fast
//! paths and as an oracle. The two are checked against each other whenever
//! a conic is built and whenever a construction has a matrix counterpart; a
//! disagreement is a bug and panics.
//!
//! Intersections with a line are only computed when one rational point of
//! the intersection is already known, so every result stays rational.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::harmonic::harmonic;
use crate::linalg::{canonical_triple, null_space, Mat3};
use crate::plane::{
    c7_witness, collinear, cotransitive_witness, fano_diagonals, incident, join, meet, outside, to_scalars, C7Branch,
    HomLine, HomPoint, ProjElement, Side,
};
use crate::projectivity::{projectivity_from_triples, Carrier, Element, Projectivity};
use crate::scalar::Scalar;
use crate::spiral;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conic {
    pi: Projectivity,
    u: HomPoint,
    v: HomPoint,
    matrix: [[BigInt; 3]; 3],
    m: Mat3,
}

fn line_image(pi: &Projectivity, l: &HomLine) -> HomLine {
    match pi.apply_line(l) {
        Ok(Element::Line(m)) => m,
        other => unreachable!("pencil map gave {other:?}"),
    }
}

/// Exact fit of `xᵀMx = 0` through the given points; `None` unless the
/// solution is unique up to scale.
fn fit_matrix(points: &[HomPoint]) -> Option<Mat3> {
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            let [x, y, z] = to_scalars(p.coords());
            let two = Scalar::from(2);
            vec![&x * &x, &y * &y, &z * &z, &two * &x * &y, &two * &x * &z, &two * &y * &z]
        })
        .collect();
    let ns = null_space(&rows, 6);
    if ns.len() != 1 {
        return None;
    }
    let c = &ns[0];
    Some(Mat3([
        [c[0].clone(), c[3].clone(), c[4].clone()],
        [c[3].clone(), c[1].clone(), c[5].clone()],
        [c[4].clone(), c[5].clone(), c[2].clone()],
    ]))
}

fn distinct(points: &[&HomPoint]) -> bool {
    let set: BTreeSet<&HomPoint> = points.iter().copied().collect();
    set.len() == points.len()
}

fn no_three_collinear(points: &[&HomPoint]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(points[i], points[j], points[k]) {
                    return false;
                }
            }
        }
    }
    true
}

impl Conic {
    fn assemble(pi: Projectivity, u: HomPoint, v: HomPoint, m: &Mat3) -> Result<Conic> {
        if m.det().is_zero() {
            return Err(Error::DegenerateConic);
        }
        let matrix = m.primitive().ok_or(Error::DegenerateConic)?;
        let m = Mat3(core::array::from_fn(|i| core::array::from_fn(|j| Scalar::from(matrix[i][j].clone()))));
        let conic = Conic { pi, u, v, matrix, m };
        for x in conic.locus().take(10) {
            assert!(conic.satisfies(&x), "Steiner locus point {x} fails the conic matrix");
        }
        Ok(conic)
    }

    /// The matrix as stored: primitive integers, first nonzero entry positive.
    pub fn matrix(&self) -> &[[BigInt; 3]; 3] {
        &self.matrix
    }

    pub fn matrix_scalars(&self) -> &Mat3 {
        &self.m
    }

    pub fn projectivity(&self) -> &Projectivity {
        &self.pi
    }

    pub fn base_points(&self) -> (&HomPoint, &HomPoint) {
        (&self.u, &self.v)
    }

    /// `xᵀMx = 0`.
    pub fn satisfies(&self, x: &HomPoint) -> bool {
        self.m.quadratic_form(&to_scalars(x.coords())).is_zero()
    }

    /// Steiner test: `X = U`, `X = V`, or `X` on `(UX)^π`.
    fn steiner_contains(&self, x: &HomPoint) -> bool {
        if *x == self.u || *x == self.v {
            return true;
        }
        let l = join(&self.u, x).expect("X differs from U");
        incident(x, &line_image(&self.pi, &l))
    }

    /// The points `l·l^π` for lines `l` through `U` in spiral order,
    /// without repeats.
    pub fn locus(&self) -> impl Iterator<Item = HomPoint> + '_ {
        let mut seen = BTreeSet::new();
        spiral::lines_through(&self.u)
            .map(move |l| {
                let image = line_image(&self.pi, &l);
                meet(&l, &image).expect("only UV could be fixed, and π moves it")
            })
            .filter(move |x| seen.insert(x.clone()))
    }
}

pub fn steiner_conic(pi: Projectivity, u: HomPoint, v: HomPoint) -> Result<Conic> {
    if pi.source() != Carrier::Pencil(u.clone()) || pi.target() != Carrier::Pencil(v.clone()) {
        return Err(Error::CarrierMismatch);
    }
    let uv = join(&u, &v)?;
    if line_image(&pi, &uv) == uv {
        return Err(Error::PerspectiveProjectivity);
    }
    let shell = Conic {
        pi,
        u,
        v,
        matrix: Default::default(),
        m: Mat3::zero(),
    };
    let pts: Vec<HomPoint> = shell.locus().take(10).collect();
    let m = fit_matrix(&pts[..5]).ok_or(Error::DegenerateConic)?;
    let Conic { pi, u, v, .. } = shell;
    let conic = Conic::assemble(pi, u, v, &m)?;
    assert!(pts[5..].iter().all(|x| conic.satisfies(x)), "fitted matrix misses a locus point");
    Ok(conic)
}

/// The conic through five points, with Steiner base points `A`, `B`.
pub fn conic_through_5(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint, e: &HomPoint) -> Result<Conic> {
    let pts = [a, b, c, d, e];
    if !distinct(&pts) {
        return Err(Error::DuplicatePoints);
    }
    if !no_three_collinear(&pts) {
        return Err(Error::ThreeCollinear);
    }
    let from_a = [c, d, e].map(|x| Element::Line(join(a, x).expect("distinct")));
    let from_b = [c, d, e].map(|x| Element::Line(join(b, x).expect("distinct")));
    let pi = projectivity_from_triples(
        &Carrier::Pencil(a.clone()),
        [&from_a[0], &from_a[1], &from_a[2]],
        &Carrier::Pencil(b.clone()),
        [&from_b[0], &from_b[1], &from_b[2]],
    )?;
    let owned: Vec<HomPoint> = pts.iter().map(|p| (*p).clone()).collect();
    let m = fit_matrix(&owned).expect("five points in general position fix one conic");
    let ab = join(a, b)?;
    assert!(line_image(&pi, &ab) != ab, "C on neither AB nor a line through A, B: π cannot be perspective");
    Conic::assemble(pi, a.clone(), b.clone(), &m)
}

pub fn on_conic(k: &Conic, x: &HomPoint) -> bool {
    let on = k.steiner_contains(x);
    assert_eq!(on, k.satisfies(x), "Steiner and matrix membership disagree at {x}");
    on
}

pub fn outside_conic(k: &Conic, x: &HomPoint) -> bool {
    !on_conic(k, x)
}

/// `n` distinct points of the locus, in sweep order.
pub fn conic_points(k: &Conic, n: usize) -> Vec<HomPoint> {
    k.locus().take(n).collect()
}

fn require_on(k: &Conic, x: &HomPoint) -> Result<()> {
    if on_conic(k, x) {
        Ok(())
    } else {
        Err(Error::NotOnConic)
    }
}

/// Matrix tangent `M·p`; the caller guarantees `p` is on the conic.
fn matrix_tangent(k: &Conic, p: &HomPoint) -> HomLine {
    let v = k.m.apply_int(p.coords());
    HomLine::from_vec(canonical_triple(&v).expect("nonsingular")).expect("nonzero")
}

pub fn tangent_at(k: &Conic, p: &HomPoint) -> Result<HomLine> {
    require_on(k, p)?;
    let t = matrix_tangent(k, p);
    // rebase at (Q, P): the tangent is the image of the secant QP
    let others: Vec<HomPoint> = k.locus().filter(|x| x != p).take(4).collect();
    let q = &others[0];
    let rebased = conic_through_5(q, p, &others[1], &others[2], &others[3])?;
    assert_eq!(rebased.matrix, k.matrix, "rebased conic differs");
    let synthetic = line_image(&rebased.pi, &join(q, p)?);
    assert_eq!(t, synthetic, "tangent at {p}: matrix and Steiner constructions differ");
    Ok(t)
}

pub fn is_tangent(k: &Conic, p: &HomPoint, l: &HomLine) -> bool {
    incident(p, l) && on_conic(k, p) && matrix_tangent(k, p) == *l
}

/// The other point of `κ` on a line `l` through a known point `P` of `κ`.
///
/// With `W` another point of `l`, `Q(sP + tW) = t(2s·B(P,W) + t·Q(W))`, so
/// the second root is `Q(W)·P − 2B(P,W)·W`.
pub fn second_intersection(k: &Conic, p: &HomPoint, l: &HomLine) -> Result<HomPoint> {
    require_on(k, p)?;
    if !incident(p, l) {
        return Err(Error::ElementNotOnCarrier);
    }
    let w = spiral::points_on(l).find(|w| w != p).expect("lines have many points");
    let (ps, ws) = (to_scalars(p.coords()), to_scalars(w.coords()));
    let b = k.m.bilinear(&ps, &ws);
    if b.is_zero() {
        return Err(Error::TangentLine);
    }
    let qw = k.m.quadratic_form(&ws);
    let two_b = Scalar::from(2) * b;
    let r: [Scalar; 3] = core::array::from_fn(|i| &qw * &ps[i] - &two_b * &ws[i]);
    let r = HomPoint::from_vec(canonical_triple(&r).expect("P and W are independent"))?;
    debug_assert!(r != *p && incident(&r, l));
    assert!(on_conic(k, &r), "second intersection {r} is off the conic");
    Ok(r)
}

/// Intersection of `κ` and `l` given one known common point; without one the
/// answer may be irrational and is refused.
pub fn line_meets(k: &Conic, l: &HomLine, known: Option<&HomPoint>) -> Result<Vec<HomPoint>> {
    let p = known.ok_or(Error::OutOfRationalScope)?;
    match second_intersection(k, p, l) {
        Ok(r) => Ok(vec![p.clone(), r]),
        Err(Error::TangentLine) => Ok(vec![p.clone()]),
        Err(e) => Err(e),
    }
}

/// A line through two distinct points of a conic, with those points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Secant {
    pub line: HomLine,
    pub points: (HomPoint, HomPoint),
}

/// The secant `PX` through a point `X` of `κ`, if `PX` is not the tangent at `X`.
pub fn secant_via(k: &Conic, p: &HomPoint, x: &HomPoint) -> Result<Secant> {
    require_on(k, x)?;
    let line = join(p, x)?;
    let r = second_intersection(k, x, &line)?;
    Ok(Secant { line, points: (x.clone(), r) })
}

/// One secant through `P` from three points of `κ`: find a tangent that
/// `P` avoids, then join `P` to its point of contact.
fn secant_from_triple(k: &Conic, p: &HomPoint, pts: [&HomPoint; 3]) -> Result<Secant> {
    let [a, b, c] = pts;
    let tangents = [tangent_at(k, a)?, tangent_at(k, b)?, tangent_at(k, c)?];
    let e = meet(&tangents[0], &tangents[1]).expect("distinct tangents");
    let f = meet(&tangents[1], &tangents[2]).expect("distinct tangents");
    assert!(e != f, "Axiom P: tangents at three points are concurrent");
    let (i, j) = match cotransitive_witness(&e, &f, p)? {
        Side::Left => (0, 1),
        Side::Right => (1, 2),
    };
    let x = match c7_witness(&tangents[i], &tangents[j], p)? {
        C7Branch::OutsideL => pts[i],
        C7Branch::OutsideM => pts[j],
    };
    let s = secant_via(k, p, x).expect("P avoids the tangent at X");
    Ok(s)
}

/// Two distinct secants through any point.
pub fn secants_through(k: &Conic, p: &HomPoint) -> Result<(Secant, Secant)> {
    let pts = conic_points(k, 3);
    let first = secant_from_triple(k, p, [&pts[0], &pts[1], &pts[2]])?;
    let (a, r) = &first.points;
    let more: Vec<HomPoint> = k.locus().filter(|x| x != a && x != r).take(3).collect();
    let second = secant_from_triple(k, p, [&more[0], &more[1], &more[2]])?;
    assert!(second.line != first.line, "second secant coincides with the first");
    Ok((first, second))
}

/// `QQ'` for the given secant through `P`.
pub fn polar_via(k: &Conic, p: &HomPoint, secant: &Secant) -> Result<HomLine> {
    let (q1, q2) = &secant.points;
    if !incident(p, &secant.line) || !incident(q1, &secant.line) || !incident(q2, &secant.line) {
        return Err(Error::ElementNotOnCarrier);
    }
    if q1 == q2 {
        return Err(Error::TangentLine);
    }
    require_on(k, q1)?;
    require_on(k, q2)?;
    let t1 = tangent_at(k, q1)?;
    let t2 = tangent_at(k, q2)?;
    let q = meet(&t1, &t2).expect("tangents at distinct points differ");
    let q_prime = harmonic(q1, q2, p)?;
    Ok(join(&q, &q_prime).expect("Q lies off the secant"))
}

pub fn polar(k: &Conic, p: &HomPoint) -> Result<HomLine> {
    let (s, _) = secants_through(k, p)?;
    let line = polar_via(k, p, &s)?;
    let oracle = HomLine::from_vec(canonical_triple(&k.m.apply_int(p.coords())).expect("nonsingular"))?;
    assert_eq!(line, oracle, "polar of {p}: construction and matrix differ");
    Ok(line)
}

/// The dual conic: the tangents of `κ`, read as points.
pub fn dual_conic(k: &Conic) -> Result<Conic> {
    let pts = conic_points(k, 5);
    let t: Vec<HomPoint> = pts.iter().map(|x| tangent_at(k, x).map(|l| l.dualize())).collect::<Result<_>>()?;
    let dual = conic_through_5(&t[0], &t[1], &t[2], &t[3], &t[4])?;
    assert!(dual.m.proportional(&k.m.adjugate()), "dual conic is not the adjugate");
    Ok(dual)
}

pub fn pole(k: &Conic, l: &HomLine) -> Result<HomPoint> {
    let dual = dual_conic(k)?;
    let p = polar(&dual, &l.dualize())?.dualize();
    let oracle = HomPoint::from_vec(canonical_triple(&k.m.adjugate().apply_int(l.coords())).expect("nonsingular"))?;
    assert_eq!(p, oracle, "pole of {l}: construction and matrix differ");
    Ok(p)
}

fn hexagon_sides(h: [&HomPoint; 6]) -> [HomLine; 6] {
    core::array::from_fn(|i| join(h[i], h[(i + 1) % 6]).expect("distinct vertices"))
}

pub fn pascal_line(k: &Conic, hexagon: [&HomPoint; 6]) -> Result<HomLine> {
    for x in hexagon {
        require_on(k, x)?;
    }
    if !distinct(&hexagon) {
        return Err(Error::DegenerateHexagon);
    }
    let s = hexagon_sides(hexagon);
    let x = meet(&s[0], &s[3]).expect("AB and DE differ");
    let y = meet(&s[1], &s[4]).expect("BC and EF differ");
    let z = meet(&s[2], &s[5]).expect("CD and FA differ");
    assert!(x != y && y != z && x != z, "Pascal points are not distinct");
    assert!(collinear(&x, &y, &z), "Pascal points are not collinear");
    Ok(join(&x, &y)?)
}

/// The three opposite-side points `(AB·DE, BC·EF, CD·FA)`.
pub fn pascal_points(k: &Conic, hexagon: [&HomPoint; 6]) -> Result<[HomPoint; 3]> {
    pascal_line(k, hexagon)?;
    let s = hexagon_sides(hexagon);
    Ok([meet(&s[0], &s[3])?, meet(&s[1], &s[4])?, meet(&s[2], &s[5])?])
}

/// `F = l·A(CD·(AB·DE)(BC·l))`.
pub fn pascal_sixth_point(
    k: &Conic,
    five: [&HomPoint; 5],
    l: &HomLine,
) -> Result<HomPoint> {
    for x in five {
        require_on(k, x)?;
    }
    if !distinct(&five) {
        return Err(Error::DuplicatePoints);
    }
    let [a, b, c, d, e] = five;
    if !incident(e, l) {
        return Err(Error::ElementNotOnCarrier);
    }
    if [a, b, c, d].iter().any(|x| incident(x, l)) {
        return Err(Error::LineAvoidanceViolated);
    }
    if is_tangent(k, e, l) {
        return Err(Error::TangentLine);
    }
    let x = meet(&join(a, b)?, &join(d, e)?)?;
    let y = meet(&join(b, c)?, l)?;
    let z = meet(&join(c, d)?, &join(&x, &y)?)?;
    let f = meet(l, &join(a, &z)?)?;
    let oracle = second_intersection(k, e, l)?;
    assert_eq!(f, oracle, "sixth point formula disagrees with the second intersection");
    Ok(f)
}

/// The line through the two diagonal points other than `P`, checked to be
/// the polar of `P`.
pub fn quadrangle_polar_check(k: &Conic, quad: [&HomPoint; 4], p: &HomPoint) -> Result<HomLine> {
    for x in quad {
        require_on(k, x)?;
    }
    let [a, b, c, d] = quad;
    let diag = fano_diagonals(a, b, c, d)?;
    let idx = diag.iter().position(|x| x == p).ok_or(Error::DegenerateQuadrangle)?;
    let others: Vec<&HomPoint> = diag.iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, x)| x).collect();
    let line = join(others[0], others[1])?;
    assert_eq!(line, polar(k, p)?, "diagonal line is not the polar");
    Ok(line)
}

/// Whether the tangents at three points are nonconcurrent.
pub fn axiom_p_check(k: &Conic, a: &HomPoint, b: &HomPoint, c: &HomPoint) -> Result<bool> {
    for x in [a, b, c] {
        require_on(k, x)?;
    }
    if !distinct(&[a, b, c]) {
        return Err(Error::NotOnConic);
    }
    let ta = tangent_at(k, a)?;
    let tb = tangent_at(k, b)?;
    let tc = tangent_at(k, c)?;
    let e = meet(&ta, &tb).expect("tangents at distinct points differ");
    Ok(outside(&e, &tc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, z: i64) -> HomPoint {
        HomPoint::new(x, y, z).unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> HomLine {
        HomLine::new(a, b, c).unwrap()
    }

    fn ints(rows: [[i64; 3]; 3]) -> [[BigInt; 3]; 3] {
        rows.map(|r| r.map(BigInt::from))
    }

    fn circle() -> Conic {
        conic_through_5(&pt(1, 0, 1), &pt(0, 1, 1), &pt(-1, 0, 1), &pt(0, -1, 1), &pt(3, 4, 5)).unwrap()
    }

    #[test]
    fn five_point_fits() {
        assert_eq!(circle().matrix(), &ints([[1, 0, 0], [0, 1, 0], [0, 0, -1]]));
        let parabola = conic_through_5(&pt(0, 0, 1), &pt(1, 1, 1), &pt(2, 4, 1), &pt(3, 9, 1), &pt(4, 16, 1)).unwrap();
        assert_eq!(parabola.matrix(), &ints([[2, 0, 0], [0, 0, -1], [0, -1, 0]]));
        assert_eq!(
            conic_through_5(&pt(0, 0, 1), &pt(1, 0, 1), &pt(2, 0, 1), &pt(3, 9, 1), &pt(4, 16, 1)),
            Err(Error::ThreeCollinear)
        );
        assert_eq!(
            conic_through_5(&pt(0, 0, 1), &pt(0, 0, 1), &pt(2, 4, 1), &pt(3, 9, 1), &pt(4, 16, 1)),
            Err(Error::DuplicatePoints)
        );
    }

    #[test]
    fn steiner_unit_circle() {
        let (u, v) = (pt(-1, 0, 1), pt(1, 0, 1));
        let targets = [pt(0, 1, 1), pt(0, -1, 1), pt(3, 4, 5)];
        let from_u = targets.clone().map(|t| Element::Line(join(&u, &t).unwrap()));
        let from_v = targets.map(|t| Element::Line(join(&v, &t).unwrap()));
        let pi = projectivity_from_triples(
            &Carrier::Pencil(u.clone()),
            [&from_u[0], &from_u[1], &from_u[2]],
            &Carrier::Pencil(v.clone()),
            [&from_v[0], &from_v[1], &from_v[2]],
        )
        .unwrap();
        let k = steiner_conic(pi, u.clone(), v.clone()).unwrap();
        assert_eq!(k.matrix(), circle().matrix());

        let persp = Projectivity::single(
            crate::projectivity::Perspectivity::axial(ln(0, 1, -1), u.clone(), v.clone()).unwrap(),
        );
        assert_eq!(steiner_conic(persp, u, v).unwrap_err(), Error::PerspectiveProjectivity);
    }

    #[test]
    fn membership() {
        let k = circle();
        assert!(on_conic(&k, &pt(3, 4, 5)));
        assert!(outside_conic(&k, &pt(0, 0, 1)));
        let (u, v) = k.base_points();
        assert!(on_conic(&k, u) && on_conic(&k, v));
        let pts = conic_points(&k, 3);
        assert_eq!(pts.len(), 3);
        assert!(distinct(&[&pts[0], &pts[1], &pts[2]]));
        assert!(pts.iter().all(|p| on_conic(&k, p)));
    }

    #[test]
    fn tangents_and_second_points() {
        let k = circle();
        assert_eq!(tangent_at(&k, &pt(1, 0, 1)), Ok(ln(1, 0, -1)));
        assert_eq!(tangent_at(&k, &pt(3, 4, 5)), Ok(ln(3, 4, -5)));
        assert_eq!(tangent_at(&k, &pt(0, 0, 1)), Err(Error::NotOnConic));
        let parabola = conic_through_5(&pt(0, 0, 1), &pt(1, 1, 1), &pt(2, 4, 1), &pt(3, 9, 1), &pt(4, 16, 1)).unwrap();
        let t = tangent_at(&parabola, &pt(0, 0, 1)).unwrap();
        assert_eq!(t, ln(0, 1, 0));
        assert_eq!(second_intersection(&parabola, &pt(0, 0, 1), &t), Err(Error::TangentLine));

        let l = join(&pt(1, 0, 1), &pt(0, -1, 1)).unwrap();
        assert_eq!(second_intersection(&k, &pt(1, 0, 1), &l), Ok(pt(0, -1, 1)));
        assert_eq!(second_intersection(&k, &pt(1, 0, 1), &ln(1, 0, -1)), Err(Error::TangentLine));
        assert_eq!(line_meets(&k, &l, None), Err(Error::OutOfRationalScope));
    }

    #[test]
    fn secants() {
        let k = circle();
        for p in [pt(0, 0, 1), pt(1, 0, 1), pt(7, -2, 3)] {
            let (s1, s2) = secants_through(&k, &p).unwrap();
            assert_ne!(s1.line, s2.line);
            for s in [&s1, &s2] {
                assert!(incident(&p, &s.line));
                assert_ne!(s.points.0, s.points.1);
                assert!(on_conic(&k, &s.points.0) && on_conic(&k, &s.points.1));
            }
        }
    }

    #[test]
    fn polars_and_poles() {
        let k = circle();
        assert_eq!(polar(&k, &pt(2, 0, 1)), Ok(ln(2, 0, -1)));
        assert_eq!(polar(&k, &pt(0, 0, 1)), Ok(ln(0, 0, 1)));
        assert_eq!(polar(&k, &pt(1, 0, 1)), Ok(ln(1, 0, -1)));
        assert_eq!(pole(&k, &ln(0, 0, 1)), Ok(pt(0, 0, 1)));
        assert_eq!(pole(&k, &ln(1, 0, -1)), Ok(pt(1, 0, 1)));
        let l = ln(3, -1, 7);
        assert_eq!(polar(&k, &pole(&k, &l).unwrap()), Ok(l));
    }

    #[test]
    fn pascal_examples() {
        let k = circle();
        let hex = [pt(1, 0, 1), pt(3, 4, 5), pt(-3, 4, 5), pt(-1, 0, 1), pt(-3, -4, 5), pt(3, -4, 5)];
        let h: [&HomPoint; 6] = core::array::from_fn(|i| &hex[i]);
        let line = pascal_line(&k, h).unwrap();
        for x in pascal_points(&k, h).unwrap() {
            assert!(incident(&x, &line));
        }
        let mut off = h;
        let centre = pt(0, 0, 1);
        off[2] = &centre;
        assert_eq!(pascal_line(&k, off), Err(Error::NotOnConic));

        let l = join(&hex[4], &hex[5]).unwrap();
        let five = [&hex[0], &hex[1], &hex[2], &hex[3], &hex[4]];
        assert_eq!(pascal_sixth_point(&k, five, &l), Ok(pt(3, -4, 5)));
        let t = tangent_at(&k, &hex[4]).unwrap();
        assert_eq!(pascal_sixth_point(&k, five, &t), Err(Error::TangentLine));
    }

    #[test]
    fn polar_of_diagonal_point() {
        let k = circle();
        let q = [pt(1, 0, 1), pt(0, 1, 1), pt(-3, 4, 5), pt(3, -4, 5)];
        let diag = fano_diagonals(&q[0], &q[1], &q[2], &q[3]).unwrap();
        let line = quadrangle_polar_check(&k, [&q[0], &q[1], &q[2], &q[3]], &diag[0]).unwrap();
        assert!(incident(&diag[1], &line) && incident(&diag[2], &line));
    }

    #[test]
    fn axiom_p_examples() {
        let k = circle();
        assert_eq!(axiom_p_check(&k, &pt(1, 0, 1), &pt(0, 1, 1), &pt(-1, 0, 1)), Ok(true));
        assert_eq!(axiom_p_check(&k, &pt(1, 0, 1), &pt(1, 0, 1), &pt(-1, 0, 1)), Err(Error::NotOnConic));
    }
}
