//! Perspectivities, projectivities and projective collineations.
//!
//! A [`Projectivity`] is a finite chain of [`Perspectivity`] steps and is
//! evaluated step by step with joins and meets. Separately, each step is a
//! linear map on representative vectors; multiplying those and restricting to
//! parameters on the end carriers gives a [`Mat2`] that serves as an
//! independent oracle for the chain (uniqueness, fixed elements, involutions).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{canonical_triple, Mat2, Mat3};
use crate::plane::{
    collinear, dot, incident, is_quadrangle, join, meet, outside, to_scalars, HomLine, HomPoint, ProjElement, Vec3,
};
use crate::scalar::Scalar;
use crate::spiral;
use crate::{Error, Result};

/// A point of a range or a line of a pencil.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Point(HomPoint),
    Line(HomLine),
}

impl Element {
    pub fn coords(&self) -> &Vec3 {
        match self {
            Element::Point(p) => p.coords(),
            Element::Line(l) => l.coords(),
        }
    }

    pub fn as_point(&self) -> Option<&HomPoint> {
        match self {
            Element::Point(p) => Some(p),
            Element::Line(_) => None,
        }
    }

    pub fn as_line(&self) -> Option<&HomLine> {
        match self {
            Element::Line(l) => Some(l),
            Element::Point(_) => None,
        }
    }

    pub fn dualize(&self) -> Element {
        match self {
            Element::Point(p) => Element::Line(p.dualize()),
            Element::Line(l) => Element::Point(l.dualize()),
        }
    }
}

impl From<HomPoint> for Element {
    fn from(p: HomPoint) -> Self {
        Element::Point(p)
    }
}

impl From<HomLine> for Element {
    fn from(l: HomLine) -> Self {
        Element::Line(l)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Point(p) => fmt::Display::fmt(p, f),
            Element::Line(l) => fmt::Display::fmt(l, f),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The points of a line, or the lines through a point.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Carrier {
    Range(HomLine),
    Pencil(HomPoint),
}

impl Carrier {
    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (Carrier::Range(l), Element::Point(p)) => incident(p, l),
            (Carrier::Pencil(v), Element::Line(l)) => incident(v, l),
            _ => false,
        }
    }

    pub fn dualize(&self) -> Carrier {
        match self {
            Carrier::Range(l) => Carrier::Pencil(l.dualize()),
            Carrier::Pencil(v) => Carrier::Range(v.dualize()),
        }
    }

    /// Distinct elements of the carrier in deterministic order.
    pub fn elements(&self) -> alloc::boxed::Box<dyn Iterator<Item = Element> + '_> {
        match self {
            Carrier::Range(l) => alloc::boxed::Box::new(spiral::points_on(l).map(Element::Point)),
            Carrier::Pencil(v) => alloc::boxed::Box::new(spiral::lines_through(v).map(Element::Line)),
        }
    }
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Range(l) => write!(f, "range{l}"),
            Carrier::Pencil(v) => write!(f, "pencil{v}"),
        }
    }
}

/// An elementary map between ranges and pencils.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Perspectivity {
    /// Range to range, projecting from a center: `X ↦ OX·to`.
    Central { center: HomPoint, from: HomLine, to: HomLine },
    /// Pencil to pencil through an axis: `x ↦ (x·axis)V`.
    Axial { axis: HomLine, from: HomPoint, to: HomPoint },
    /// Section of a pencil by a line: `x ↦ x·line`.
    Cut { vertex: HomPoint, line: HomLine },
    /// Range to the pencil at a vertex: `X ↦ XV`.
    Project { line: HomLine, vertex: HomPoint },
}

impl Perspectivity {
    pub fn central(center: HomPoint, from: HomLine, to: HomLine) -> Result<Self> {
        if incident(&center, &from) || incident(&center, &to) {
            return Err(Error::DegeneratePerspectivity);
        }
        Ok(Perspectivity::Central { center, from, to })
    }

    pub fn axial(axis: HomLine, from: HomPoint, to: HomPoint) -> Result<Self> {
        if incident(&from, &axis) || incident(&to, &axis) {
            return Err(Error::DegeneratePerspectivity);
        }
        Ok(Perspectivity::Axial { axis, from, to })
    }

    pub fn cut(vertex: HomPoint, line: HomLine) -> Result<Self> {
        if incident(&vertex, &line) {
            return Err(Error::DegeneratePerspectivity);
        }
        Ok(Perspectivity::Cut { vertex, line })
    }

    pub fn project(line: HomLine, vertex: HomPoint) -> Result<Self> {
        if incident(&vertex, &line) {
            return Err(Error::DegeneratePerspectivity);
        }
        Ok(Perspectivity::Project { line, vertex })
    }

    pub fn source(&self) -> Carrier {
        match self {
            Perspectivity::Central { from, .. } => Carrier::Range(from.clone()),
            Perspectivity::Axial { from, .. } => Carrier::Pencil(from.clone()),
            Perspectivity::Cut { vertex, .. } => Carrier::Pencil(vertex.clone()),
            Perspectivity::Project { line, .. } => Carrier::Range(line.clone()),
        }
    }

    pub fn target(&self) -> Carrier {
        match self {
            Perspectivity::Central { to, .. } => Carrier::Range(to.clone()),
            Perspectivity::Axial { to, .. } => Carrier::Pencil(to.clone()),
            Perspectivity::Cut { line, .. } => Carrier::Range(line.clone()),
            Perspectivity::Project { vertex, .. } => Carrier::Pencil(vertex.clone()),
        }
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if !self.source().contains(x) {
            return Err(Error::ElementNotOnCarrier);
        }
        let image = match (self, x) {
            (Perspectivity::Central { center, to, .. }, Element::Point(p)) => Element::Point(meet(&join(center, p)?, to)?),
            (Perspectivity::Axial { axis, to, .. }, Element::Line(l)) => Element::Line(join(&meet(l, axis)?, to)?),
            (Perspectivity::Cut { line, .. }, Element::Line(l)) => Element::Point(meet(l, line)?),
            (Perspectivity::Project { vertex, .. }, Element::Point(p)) => Element::Line(join(p, vertex)?),
            _ => unreachable!("carrier membership fixes the element kind"),
        };
        Ok(image)
    }

    pub fn inverse(&self) -> Perspectivity {
        match self.clone() {
            Perspectivity::Central { center, from, to } => Perspectivity::Central { center, from: to, to: from },
            Perspectivity::Axial { axis, from, to } => Perspectivity::Axial { axis, from: to, to: from },
            Perspectivity::Cut { vertex, line } => Perspectivity::Project { line, vertex },
            Perspectivity::Project { line, vertex } => Perspectivity::Cut { vertex, line },
        }
    }

    /// The same map read in the dual plane.
    pub fn dualize(&self) -> Perspectivity {
        match self {
            Perspectivity::Central { center, from, to } => Perspectivity::Axial {
                axis: center.dualize(),
                from: from.dualize(),
                to: to.dualize(),
            },
            Perspectivity::Axial { axis, from, to } => Perspectivity::Central {
                center: axis.dualize(),
                from: from.dualize(),
                to: to.dualize(),
            },
            Perspectivity::Cut { vertex, line } => Perspectivity::Project {
                line: vertex.dualize(),
                vertex: line.dualize(),
            },
            Perspectivity::Project { line, vertex } => Perspectivity::Cut {
                vertex: line.dualize(),
                line: vertex.dualize(),
            },
        }
    }

    /// The step as a linear map on representatives, from
    /// `(a × b) × c = b (a·c) − a (b·c)`.
    pub fn linear_map(&self) -> Mat3 {
        match self {
            Perspectivity::Central { center, to, .. } => {
                let (o, m) = (to_scalars(center.coords()), to_scalars(to.coords()));
                let om = Scalar::from_int(dot(center.coords(), to.coords()));
                Mat3::identity().scale(&om).sub(&Mat3::outer(&o, &m))
            }
            Perspectivity::Axial { axis, to, .. } => {
                let (a, v) = (to_scalars(axis.coords()), to_scalars(to.coords()));
                let av = Scalar::from_int(dot(axis.coords(), to.coords()));
                Mat3::outer(&a, &v).sub(&Mat3::identity().scale(&av))
            }
            Perspectivity::Cut { line, .. } => Mat3::cross_matrix(&to_scalars(line.coords())).scale(&Scalar::from(-1)),
            Perspectivity::Project { vertex, .. } => {
                Mat3::cross_matrix(&to_scalars(vertex.coords())).scale(&Scalar::from(-1))
            }
        }
    }
}

/// A finite chain of perspectivities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projectivity {
    chain: Vec<Perspectivity>,
}

impl Projectivity {
    pub fn new(chain: Vec<Perspectivity>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::CarrierMismatch);
        }
        if chain.windows(2).any(|w| w[0].target() != w[1].source()) {
            return Err(Error::CarrierMismatch);
        }
        Ok(Projectivity { chain })
    }

    pub fn single(p: Perspectivity) -> Self {
        Projectivity { chain: vec![p] }
    }

    pub fn chain(&self) -> &[Perspectivity] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn source(&self) -> Carrier {
        self.chain[0].source()
    }

    pub fn target(&self) -> Carrier {
        self.chain[self.chain.len() - 1].target()
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        let mut cur = x.clone();
        for step in &self.chain {
            cur = step.apply(&cur)?;
        }
        Ok(cur)
    }

    pub fn apply_point(&self, p: &HomPoint) -> Result<Element> {
        self.apply(&Element::Point(p.clone()))
    }

    pub fn apply_line(&self, l: &HomLine) -> Result<Element> {
        self.apply(&Element::Line(l.clone()))
    }

    pub fn inverse(&self) -> Projectivity {
        Projectivity {
            chain: self.chain.iter().rev().map(Perspectivity::inverse).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Projectivity) -> Result<Projectivity> {
        let mut chain = self.chain.clone();
        chain.extend(next.chain.iter().cloned());
        Projectivity::new(chain)
    }

    pub fn dualize(&self) -> Projectivity {
        Projectivity {
            chain: self.chain.iter().map(Perspectivity::dualize).collect(),
        }
    }

    /// Product of the stage matrices, last stage leftmost.
    pub fn linear_map(&self) -> Mat3 {
        self.chain
            .iter()
            .fold(Mat3::identity(), |acc, step| &step.linear_map() * &acc)
    }
}

/// Homogeneous parameters `(α:β)` on a carrier: `X ≃ α·base0 + β·base1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeParam {
    carrier: Carrier,
    base0: Element,
    base1: Element,
}

impl RangeParam {
    pub fn new(carrier: Carrier, base0: Element, base1: Element) -> Result<Self> {
        if !carrier.contains(&base0) || !carrier.contains(&base1) {
            return Err(Error::ElementNotOnCarrier);
        }
        if base0 == base1 {
            return Err(Error::DegenerateTriple);
        }
        Ok(RangeParam { carrier, base0, base1 })
    }

    /// The first two elements of the carrier in spiral order.
    pub fn for_carrier(carrier: &Carrier) -> Self {
        let mut it = carrier.elements();
        let base0 = it.next().expect("carriers are infinite");
        let base1 = it.next().expect("carriers are infinite");
        RangeParam { carrier: carrier.clone(), base0, base1 }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn bases(&self) -> (&Element, &Element) {
        (&self.base0, &self.base1)
    }

    /// Exact `(α, β)` with `v = α·base0 + β·base1`, if `v` is in the span.
    pub fn coefficients(&self, v: &[Scalar; 3]) -> Option<[Scalar; 2]> {
        let b0 = to_scalars(self.base0.coords());
        let b1 = to_scalars(self.base1.coords());
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = &b0[i] * &b1[j] - &b0[j] * &b1[i];
            if det.is_zero() {
                continue;
            }
            let alpha = (&v[i] * &b1[j] - &v[j] * &b1[i]) / &det;
            let beta = (&b0[i] * &v[j] - &b0[j] * &v[i]) / &det;
            let ok = (0..3).all(|k| &alpha * &b0[k] + &beta * &b1[k] == v[k]);
            return ok.then_some([alpha, beta]);
        }
        unreachable!("distinct bases have a nonzero minor")
    }

    pub fn param_of(&self, x: &Element) -> Result<[Scalar; 2]> {
        if !self.carrier.contains(x) {
            return Err(Error::ElementNotOnCarrier);
        }
        Ok(self.coefficients(&to_scalars(x.coords())).expect("carrier elements lie in the span"))
    }

    pub fn element_of(&self, param: &[Scalar; 2]) -> Result<Element> {
        let b0 = to_scalars(self.base0.coords());
        let b1 = to_scalars(self.base1.coords());
        let v: [Scalar; 3] = core::array::from_fn(|k| &param[0] * &b0[k] + &param[1] * &b1[k]);
        let c = canonical_triple(&v).ok_or(Error::ZeroVector)?;
        Ok(match self.carrier {
            Carrier::Range(_) => Element::Point(HomPoint::from_vec(c)?),
            Carrier::Pencil(_) => Element::Line(HomLine::from_vec(c)?),
        })
    }
}

/// The 2×2 matrix of `pi` in the given parameters, computed from the linear
/// maps of the stages rather than from `apply`.
pub fn matrix_oracle(pi: &Projectivity, src: &RangeParam, dst: &RangeParam) -> Result<Mat2> {
    if pi.source() != src.carrier || pi.target() != dst.carrier {
        return Err(Error::CarrierMismatch);
    }
    let l = pi.linear_map();
    let col = |b: &Element| -> [Scalar; 2] {
        dst.coefficients(&l.apply_int(b.coords()))
            .expect("a perspectivity chain maps its source carrier into its target")
    };
    let c0 = col(&src.base0);
    let c1 = col(&src.base1);
    let m = Mat2::new(c0[0].clone(), c1[0].clone(), c0[1].clone(), c1[1].clone());
    debug_assert!(!m.det().is_zero());
    Ok(m)
}

/// Oracle matrix in the default parameters of both end carriers.
pub fn default_matrix(pi: &Projectivity) -> Mat2 {
    let src = RangeParam::for_carrier(&pi.source());
    let dst = RangeParam::for_carrier(&pi.target());
    matrix_oracle(pi, &src, &dst).expect("carriers match by construction")
}

/// Builds a projectivity sending `xs[i]` to `ys[i]`.
///
/// Distinct ranges take two central projections through an auxiliary line;
/// when that is degenerate (or the ranges coincide) the source is first
/// projected onto an auxiliary line, so ranges need at most three steps.
/// Pencils are handled in the dual plane; a range–pencil pair adds one
/// section.
pub fn projectivity_from_triples(
    src: &Carrier,
    xs: [&Element; 3],
    dst: &Carrier,
    ys: [&Element; 3],
) -> Result<Projectivity> {
    for (c, t) in [(src, &xs), (dst, &ys)] {
        if !t.iter().all(|e| c.contains(e)) {
            return Err(Error::ElementNotOnCarrier);
        }
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(Error::DegenerateTriple);
        }
    }
    let pi = match (src, dst) {
        (Carrier::Range(l), Carrier::Range(m)) => {
            let chain = range_triples(l, points3(xs), m, points3(ys));
            Projectivity::new(chain)?
        }
        (Carrier::Pencil(_), Carrier::Pencil(_)) => {
            let dx = xs.map(Element::dualize);
            let dy = ys.map(Element::dualize);
            projectivity_from_triples(&src.dualize(), [&dx[0], &dx[1], &dx[2]], &dst.dualize(), [&dy[0], &dy[1], &dy[2]])?
                .dualize()
        }
        (Carrier::Range(l), Carrier::Pencil(v)) => range_to_pencil(l, points3(xs), v, lines3(ys))?,
        (Carrier::Pencil(v), Carrier::Range(l)) => range_to_pencil(l, points3(ys), v, lines3(xs))?.inverse(),
    };
    debug_assert!((0..3).all(|i| pi.apply(xs[i]).as_ref() == Ok(ys[i])));
    Ok(pi)
}

fn points3(t: [&Element; 3]) -> [&HomPoint; 3] {
    t.map(|e| e.as_point().expect("range elements are points"))
}

fn lines3(t: [&Element; 3]) -> [&HomLine; 3] {
    t.map(|e| e.as_line().expect("pencil elements are lines"))
}

const SEARCH: usize = 6;

fn range_to_pencil(l: &HomLine, xs: [&HomPoint; 3], v: &HomPoint, ys: [&HomLine; 3]) -> Result<Projectivity> {
    let mut fallback = None;
    for k in spiral::lines().filter(|k| k != l && outside(v, k)).take(SEARCH) {
        let on_k = ys.map(|y| meet(y, &k).expect("k avoids the vertex"));
        let mut chain = range_triples(l, xs, &k, [&on_k[0], &on_k[1], &on_k[2]]);
        chain.push(Perspectivity::project(k.clone(), v.clone())?);
        if chain.len() <= 3 {
            return Projectivity::new(chain);
        }
        fallback.get_or_insert(chain);
    }
    Projectivity::new(fallback.expect("SEARCH > 0"))
}

fn maps_triple(chain: &[Perspectivity], xs: [&HomPoint; 3], ys: [&HomPoint; 3]) -> bool {
    (0..3).all(|i| {
        chain
            .iter()
            .try_fold(Element::Point(xs[i].clone()), |x, s| s.apply(&x))
            .is_ok_and(|y| y.as_point() == Some(ys[i]))
    })
}

/// Two central projections `l → n → m` with `n` through `P'`, or `None`
/// when every tried auxiliary choice is degenerate.
fn two_step(l: &HomLine, xs: [&HomPoint; 3], m: &HomLine, ys: [&HomPoint; 3]) -> Option<Vec<Perspectivity>> {
    let [p, q, r] = xs;
    let [p2, q2, r2] = ys;
    if l == m || p == p2 {
        return None;
    }
    let pp = join(p, p2).ok()?;
    if pp == *l {
        return None;
    }
    let ns = spiral::lines_through(p2).filter(|n| n != m && n != l && outside(p, n)).take(SEARCH);
    for n in ns.collect::<Vec<_>>() {
        for o1 in spiral::points_on(&pp).filter(|o| outside(o, l) && outside(o, &n)).take(SEARCH) {
            let first = Perspectivity::central(o1, l.clone(), n.clone()).ok()?;
            let (Ok(Element::Point(q1)), Ok(Element::Point(r1))) =
                (first.apply(&Element::Point(q.clone())), first.apply(&Element::Point(r.clone())))
            else {
                continue;
            };
            let (Ok(a), Ok(b)) = (join(&q1, q2), join(&r1, r2)) else { continue };
            let Ok(o2) = meet(&a, &b) else { continue };
            let Ok(second) = Perspectivity::central(o2, n.clone(), m.clone()) else { continue };
            let chain = vec![first, second];
            if maps_triple(&chain, xs, ys) {
                return Some(chain);
            }
        }
    }
    None
}

fn range_triples(l: &HomLine, xs: [&HomPoint; 3], m: &HomLine, ys: [&HomPoint; 3]) -> Vec<Perspectivity> {
    if let Some(chain) = two_step(l, xs, m, ys) {
        return chain;
    }
    for k in spiral::lines().filter(|k| k != l && k != m) {
        for o in spiral::points().filter(|o| outside(o, l) && outside(o, &k)).take(SEARCH) {
            let first = Perspectivity::central(o, l.clone(), k.clone()).expect("center off both lines");
            let moved = xs.map(|x| match first.apply(&Element::Point(x.clone())) {
                Ok(Element::Point(p)) => p,
                _ => unreachable!("central projections map points to points"),
            });
            if let Some(rest) = two_step(&k, [&moved[0], &moved[1], &moved[2]], m, ys) {
                let mut chain = vec![first];
                chain.extend(rest);
                return chain;
            }
        }
    }
    unreachable!("some auxiliary line admits the two-step construction")
}

/// Fixed elements of a projectivity of a carrier onto itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedElements {
    Identity,
    NoRealFixed,
    /// Two real fixed elements that are not rational.
    IrrationalPair,
    One(Element),
    Two(Element, Element),
}

fn same_carrier(pi: &Projectivity) -> Result<Carrier> {
    let c = pi.source();
    if c != pi.target() {
        return Err(Error::CarrierMismatch);
    }
    Ok(c)
}

pub fn fixed_elements(pi: &Projectivity) -> Result<FixedElements> {
    let carrier = same_carrier(pi)?;
    let param = RangeParam::for_carrier(&carrier);
    let m = matrix_oracle(pi, &param, &param)?;
    if m.is_scalar() {
        return Ok(FixedElements::Identity);
    }
    let [[a, b], [c, d]] = &m.0;
    let two = Scalar::from(2);
    let disc = (a - d) * (a - d) + Scalar::from(4) * b * c;
    let eigvec = |lambda: &Scalar| -> [Scalar; 2] {
        let v = [b.clone(), lambda - a];
        if v.iter().all(Scalar::is_zero) {
            [lambda - d, c.clone()]
        } else {
            v
        }
    };
    match disc.sign() {
        -1 => Ok(FixedElements::NoRealFixed),
        0 => {
            let lambda = (a + d) / &two;
            Ok(FixedElements::One(param.element_of(&eigvec(&lambda))?))
        }
        _ => match disc.rational_sqrt() {
            None => Ok(FixedElements::IrrationalPair),
            Some(s) => {
                let l1 = (a + d + &s) / &two;
                let l2 = (a + d - &s) / &two;
                let (e1, e2) = (param.element_of(&eigvec(&l1))?, param.element_of(&eigvec(&l2))?);
                Ok(if e1 <= e2 { FixedElements::Two(e1, e2) } else { FixedElements::Two(e2, e1) })
            }
        },
    }
}

pub fn is_involution(pi: &Projectivity) -> Result<bool> {
    let carrier = same_carrier(pi)?;
    let param = RangeParam::for_carrier(&carrier);
    let m = matrix_oracle(pi, &param, &param)?;
    Ok((&m * &m).is_scalar())
}

fn distinct_ranges(pi: &Projectivity) -> Result<(HomLine, HomLine)> {
    match (pi.source(), pi.target()) {
        (Carrier::Range(l), Carrier::Range(m)) if l != m => Ok((l, m)),
        _ => Err(Error::CarrierMismatch),
    }
}

/// Whether a map between distinct ranges fixes their common point; only
/// `O = l·m` can be fixed, so this decides "nonperspective".
pub fn fixes_common_point(pi: &Projectivity) -> Result<bool> {
    let (l, m) = distinct_ranges(pi)?;
    let o = meet(&l, &m)?;
    Ok(pi.apply_point(&o)? == Element::Point(o))
}

/// `h = UV` with `V = O^π`, `U = O^{π⁻¹}` and `O` the common point of the
/// two ranges.
pub fn axis_of_homology(pi: &Projectivity) -> Result<HomLine> {
    let (l, m) = distinct_ranges(pi)?;
    let o = Element::Point(meet(&l, &m)?);
    let v = pi.apply(&o)?;
    if v == o {
        return Err(Error::PerspectivityHasNoAxis);
    }
    let u = pi.inverse().apply(&o)?;
    let (Element::Point(u), Element::Point(v)) = (u, v) else {
        unreachable!("range maps send points to points")
    };
    Ok(join(&u, &v).expect("U is on l, V on m, and neither is O"))
}

/// The dual of the axis of homology for a map between distinct pencils.
pub fn center_of_homology(pi: &Projectivity) -> Result<HomPoint> {
    axis_of_homology(&pi.dualize()).map(|h| h.dualize())
}

/// `AB^π · BA^π`, which lies on the axis of homology.
pub fn cross_axis_point(pi: &Projectivity, a: &HomPoint, b: &HomPoint) -> Result<HomPoint> {
    let (l, m) = distinct_ranges(pi)?;
    let o = meet(&l, &m)?;
    if !incident(a, &l) || !incident(b, &l) {
        return Err(Error::ElementNotOnCarrier);
    }
    if a == b || *a == o || *b == o {
        return Err(Error::CoincidentPoints);
    }
    let h = axis_of_homology(pi)?;
    let image = |x: &HomPoint| match pi.apply_point(x) {
        Ok(Element::Point(p)) => p,
        _ => unreachable!("range maps send points to points"),
    };
    let (a2, b2) = (image(a), image(b));
    let x = meet(&join(a, &b2)?, &join(b, &a2)?).expect("AB^π and BA^π are distinct lines");
    assert!(incident(&x, &h), "cross-axis point is off the axis of homology");
    Ok(x)
}

/// For a map between distinct ranges that fixes their common point: the
/// single perspectivity it equals.
pub fn as_perspectivity(pi: &Projectivity) -> Result<Option<Perspectivity>> {
    let (l, m) = distinct_ranges(pi)?;
    if !fixes_common_point(pi)? {
        return Ok(None);
    }
    let o = meet(&l, &m)?;
    let pts: Vec<HomPoint> = spiral::points_on(&l).filter(|p| *p != o).take(2).collect();
    let (a, b) = (&pts[0], &pts[1]);
    let img = |x: &HomPoint| pi.apply_point(x).map(|e| e.as_point().cloned().expect("point"));
    let center = meet(&join(a, &img(a)?)?, &join(b, &img(b)?)?)?;
    Ok(Some(Perspectivity::central(center, l, m)?))
}

/// A projective collineation, acting on points by its matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collineation(Mat3);

impl Collineation {
    pub fn new(m: Mat3) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::DegenerateQuad);
        }
        Ok(Collineation(m))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn apply_point(&self, p: &HomPoint) -> HomPoint {
        let v = self.0.apply_int(p.coords());
        HomPoint::from_vec(canonical_triple(&v).expect("nonsingular")).expect("nonzero")
    }

    /// Lines transform by the inverse transpose; the adjugate transpose is a
    /// multiple of it.
    pub fn apply_line(&self, l: &HomLine) -> HomLine {
        let v = self.0.adjugate().transpose().apply_int(l.coords());
        HomLine::from_vec(canonical_triple(&v).expect("nonsingular")).expect("nonzero")
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_scalar()
    }

    pub fn compose(&self, then: &Collineation) -> Collineation {
        Collineation(&then.0 * &self.0)
    }
}

fn frame_matrix(q: &[HomPoint; 4]) -> Result<Mat3> {
    if !is_quadrangle(&q[0], &q[1], &q[2], &q[3]) {
        return Err(Error::DegenerateQuad);
    }
    let cols = [0, 1, 2].map(|i| to_scalars(q[i].coords()));
    let a = Mat3::from_columns(cols.clone());
    let lambda = a.inverse().ok_or(Error::DegenerateQuad)?.apply_int(q[3].coords());
    let scaled: [[Scalar; 3]; 3] = core::array::from_fn(|j| core::array::from_fn(|i| &cols[j][i] * &lambda[j]));
    Ok(Mat3::from_columns(scaled))
}

/// The collineation taking `src[i]` to `dst[i]`; both quadruples must have
/// no three collinear points.
pub fn collineation_from_quads(src: &[HomPoint; 4], dst: &[HomPoint; 4]) -> Result<Collineation> {
    let f = frame_matrix(src)?;
    let g = frame_matrix(dst)?;
    let m = &g * &f.inverse().ok_or(Error::DegenerateQuad)?;
    let c = Collineation::new(m)?;
    debug_assert!((0..4).all(|i| c.apply_point(&src[i]) == dst[i]));
    Ok(c)
}

/// Whether a collineation preserves collinearity of the given triple.
pub fn preserves_collinearity(c: &Collineation, p: &HomPoint, q: &HomPoint, r: &HomPoint) -> bool {
    collinear(p, q, r) == collinear(&c.apply_point(p), &c.apply_point(q), &c.apply_point(r))
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

    fn p(x: i64, y: i64, z: i64) -> Element {
        Element::Point(pt(x, y, z))
    }

    fn vertical() -> Projectivity {
        Projectivity::single(Perspectivity::central(pt(0, 1, 0), ln(0, 1, 0), ln(0, 1, -1)).unwrap())
    }

    /// x ↦ x + 1 on the x-axis: slide along (1,1) to y = 1, drop back vertically.
    fn translation() -> Projectivity {
        Projectivity::new(vec![
            Perspectivity::central(pt(1, 1, 0), ln(0, 1, 0), ln(0, 1, -1)).unwrap(),
            Perspectivity::central(pt(0, 1, 0), ln(0, 1, -1), ln(0, 1, 0)).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(vertical().apply(&p(2, 0, 1)), Ok(p(2, 1, 1)));
        let id = vertical().then(&vertical().inverse()).unwrap();
        assert_eq!(id.apply(&p(3, 0, 1)), Ok(p(3, 0, 1)));
        assert_eq!(vertical().apply(&p(2, 1, 1)), Err(Error::ElementNotOnCarrier));
        assert_eq!(translation().apply(&p(4, 0, 1)), Ok(p(5, 0, 1)));
    }

    #[test]
    fn chain_must_connect() {
        let a = Perspectivity::central(pt(0, 1, 0), ln(0, 1, 0), ln(0, 1, -1)).unwrap();
        assert_eq!(Projectivity::new(vec![a.clone(), a]), Err(Error::CarrierMismatch));
        assert_eq!(Projectivity::new(vec![]), Err(Error::CarrierMismatch));
        assert_eq!(Perspectivity::central(pt(0, 0, 1), ln(0, 1, 0), ln(1, 0, 0)), Err(Error::DegeneratePerspectivity));
    }

    #[test]
    fn triples_identity_and_axis_swap() {
        let l = Carrier::Range(ln(0, 1, 0));
        let xs = [p(0, 0, 1), p(1, 0, 1), p(1, 0, 0)];
        let id = projectivity_from_triples(&l, [&xs[0], &xs[1], &xs[2]], &l, [&xs[0], &xs[1], &xs[2]]).unwrap();
        assert!(id.len() <= 4);
        for x in l.elements().take(10) {
            assert_eq!(id.apply(&x), Ok(x));
        }
        // y = 0 to x = 0 matching parameters 0, 1, ∞
        let m = Carrier::Range(ln(1, 0, 0));
        let ys = [p(0, 0, 1), p(0, 1, 1), p(0, 1, 0)];
        let pi = projectivity_from_triples(&l, [&xs[0], &xs[1], &xs[2]], &m, [&ys[0], &ys[1], &ys[2]]).unwrap();
        assert_eq!(pi.apply(&p(2, 0, 1)), Ok(p(0, 2, 1)));
        assert!(pi.len() <= 4);
        assert_eq!(
            projectivity_from_triples(&l, [&xs[0], &xs[0], &xs[2]], &m, [&ys[0], &ys[1], &ys[2]]),
            Err(Error::DegenerateTriple)
        );
    }

    #[test]
    fn oracle_matches_apply_on_vertical_projection() {
        let pi = vertical();
        let src = RangeParam::for_carrier(&pi.source());
        let dst = RangeParam::for_carrier(&pi.target());
        let m = matrix_oracle(&pi, &src, &dst).unwrap();
        for x in pi.source().elements().take(20) {
            let image = pi.apply(&x).unwrap();
            let predicted = dst.element_of(&m.apply(&src.param_of(&x).unwrap())).unwrap();
            assert_eq!(image, predicted);
        }
    }

    #[test]
    fn identity_chain_has_scalar_oracle() {
        let id = vertical().then(&vertical().inverse()).unwrap();
        assert!(default_matrix(&id).is_scalar());
        assert_eq!(fixed_elements(&id), Ok(FixedElements::Identity));
        assert_eq!(is_involution(&id), Ok(true));
    }

    #[test]
    fn parabolic_and_elliptic_maps() {
        let t = translation();
        assert_eq!(fixed_elements(&t), Ok(FixedElements::One(p(1, 0, 0))));
        assert_eq!(is_involution(&t), Ok(false));

        // t ↦ −1/t: 0 ↦ ∞, ∞ ↦ 0, 1 ↦ −1
        let l = Carrier::Range(ln(0, 1, 0));
        let xs = [p(0, 0, 1), p(1, 0, 0), p(1, 0, 1)];
        let ys = [p(1, 0, 0), p(0, 0, 1), p(-1, 0, 1)];
        let inv = projectivity_from_triples(&l, [&xs[0], &xs[1], &xs[2]], &l, [&ys[0], &ys[1], &ys[2]]).unwrap();
        assert_eq!(inv.apply(&p(2, 0, 1)), Ok(p(-1, 0, 2)));
        assert_eq!(fixed_elements(&inv), Ok(FixedElements::NoRealFixed));
        assert_eq!(is_involution(&inv), Ok(true));

        // t ↦ 2t fixes 0 and ∞; t ↦ 2/t has fixed points ±√2
        let ys = [p(0, 0, 1), p(1, 0, 0), p(2, 0, 1)];
        let dil = projectivity_from_triples(&l, [&xs[0], &xs[1], &xs[2]], &l, [&ys[0], &ys[1], &ys[2]]).unwrap();
        assert_eq!(fixed_elements(&dil), Ok(FixedElements::Two(p(0, 0, 1), p(1, 0, 0))));
        let ys = [p(1, 0, 0), p(0, 0, 1), p(2, 0, 1)];
        let irr = projectivity_from_triples(&l, [&xs[0], &xs[1], &xs[2]], &l, [&ys[0], &ys[1], &ys[2]]).unwrap();
        assert_eq!(fixed_elements(&irr), Ok(FixedElements::IrrationalPair));
    }

    #[test]
    fn harmonic_involution_as_chain() {
        use crate::harmonic::harmonic;
        let (a, b, c) = (pt(0, 0, 1), pt(1, 0, 1), pt(2, 0, 1));
        let d = harmonic(&a, &b, &c).unwrap();
        let l = Carrier::Range(ln(0, 1, 0));
        let xs = [Element::Point(a.clone()), Element::Point(b.clone()), Element::Point(c)];
        let ys = [Element::Point(a.clone()), Element::Point(b.clone()), Element::Point(d)];
        let pi = projectivity_from_triples(&l, [&xs[0], &xs[1], &xs[2]], &l, [&ys[0], &ys[1], &ys[2]]).unwrap();
        assert_eq!(is_involution(&pi), Ok(true));
        for x in spiral::points_on(&ln(0, 1, 0)).take(12) {
            let h = harmonic(&a, &b, &x).unwrap();
            assert_eq!(pi.apply_point(&x), Ok(Element::Point(h)));
        }
    }

    #[test]
    fn axis_examples() {
        assert_eq!(axis_of_homology(&vertical()), Err(Error::PerspectivityHasNoAxis));
        // y = 0 → x = 0 with 0 ↦ 1, 1 ↦ 2, ∞ ↦ 0 (origin moves)
        let l = Carrier::Range(ln(0, 1, 0));
        let m = Carrier::Range(ln(1, 0, 0));
        let xs = [p(0, 0, 1), p(1, 0, 1), p(1, 0, 0)];
        let ys = [p(0, 1, 1), p(0, 2, 1), p(0, 0, 1)];
        let pi = projectivity_from_triples(&l, [&xs[0], &xs[1], &xs[2]], &m, [&ys[0], &ys[1], &ys[2]]).unwrap();
        let h = axis_of_homology(&pi).unwrap();
        // U = O^{π⁻¹} = ∞ on the x-axis, V = O^π = (0,1): h is y = 1
        assert_eq!(h, ln(0, 1, -1));
        let pts: Vec<HomPoint> = spiral::points_on(&ln(0, 1, 0)).filter(|x| *x != pt(0, 0, 1)).take(5).collect();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let x = cross_axis_point(&pi, &pts[i], &pts[j]).unwrap();
                assert!(incident(&x, &h));
            }
        }
        assert_eq!(cross_axis_point(&pi, &pt(0, 0, 1), &pt(1, 0, 1)), Err(Error::CoincidentPoints));
    }

    #[test]
    fn collineation_examples() {
        let frame = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)];
        assert!(collineation_from_quads(&frame, &frame).unwrap().is_identity());
        let permuted = [pt(0, 1, 0), pt(1, 0, 0), pt(0, 0, 1), pt(1, 1, 1)];
        let c = collineation_from_quads(&frame, &permuted).unwrap();
        let perm = Mat3::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert!(c.matrix().proportional(&perm));
        let bad = [pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(1, 1, 1)];
        assert_eq!(collineation_from_quads(&bad, &frame), Err(Error::DegenerateQuad));
        assert_eq!(c.apply_line(&ln(1, 0, 0)), ln(0, 1, 0));
    }
}
