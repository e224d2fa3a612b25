//! Harmonic conjugates and the cross ratio.
//!
//! The conjugate `h(A,B;C)` is built with a line `l` through `C` other than
//! `AB` and a point `R` off both lines:
//!
//! ```text
//! P = BR·l,  Q = AR·l,  S = AP·BQ,  D = AB·RS
//! ```
//!
//! The result does not depend on `(l, R)`. [`harmonic`] picks the first
//! admissible pair in spiral order; [`auxiliary_selections`] enumerates others
//! so the invariance can be checked. [`cross_ratio`] is computed from
//! brackets on the carrier line and shares no code with the construction.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::plane::{cross, incident, join, meet, outside, HomLine, HomPoint};
use crate::scalar::Scalar;
use crate::spiral;
use crate::{Error, Result};

/// Auxiliary line through `C` and point off `AB` and that line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxSelection {
    pub line: HomLine,
    pub point: HomPoint,
}

impl AuxSelection {
    pub fn is_valid_for(&self, base: &HomLine, c: &HomPoint) -> bool {
        incident(c, &self.line) && self.line != *base && outside(&self.point, base) && outside(&self.point, &self.line)
    }
}

fn base_line(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> Result<HomLine> {
    let ab = join(a, b)?;
    if !incident(c, &ab) {
        return Err(Error::CNotOnBaseLine);
    }
    Ok(ab)
}

/// The vertices `P, Q, S` of the construction, on top of `R`.
struct Construction {
    p: HomPoint,
    q: HomPoint,
    s: HomPoint,
    d: HomPoint,
}

fn construct(a: &HomPoint, b: &HomPoint, ab: &HomLine, aux: &AuxSelection) -> Construction {
    let r = &aux.point;
    let l = &aux.line;
    // R is off l and off AB, so BR and AR differ from l, and P, Q, S, R are
    // distinct from each other wherever a join is taken below.
    let p = meet(&join(b, r).expect("R off AB"), l).expect("BR ≠ l");
    let q = meet(&join(a, r).expect("R off AB"), l).expect("AR ≠ l");
    let s = meet(&join(a, &p).expect("P off AB"), &join(b, &q).expect("Q off AB")).expect("AP ≠ BQ");
    let d = meet(ab, &join(r, &s).expect("R ≠ S")).expect("RS ≠ AB");
    Construction { p, q, s, d }
}

/// `h(A,B;C)` with explicitly chosen auxiliary elements.
pub fn harmonic_with_aux(a: &HomPoint, b: &HomPoint, c: &HomPoint, aux: &AuxSelection) -> Result<HomPoint> {
    let ab = base_line(a, b, c)?;
    if !aux.is_valid_for(&ab, c) {
        return Err(Error::InvalidAuxiliary);
    }
    Ok(construct(a, b, &ab, aux).d)
}

/// Admissible auxiliary selections in a fixed order, all with distinct lines.
///
/// The `k`-th selection uses the `k`-th line through `C` (as joins with
/// spiral points) and the `k`-th admissible point for that line.
pub fn auxiliary_selections<'a>(
    a: &HomPoint,
    b: &HomPoint,
    c: &'a HomPoint,
) -> Result<impl Iterator<Item = AuxSelection> + 'a> {
    let ab = base_line(a, b, c)?;
    let lines = spiral::lines_through(c).filter({
        let ab = ab.clone();
        move |l| *l != ab
    });
    Ok(lines.enumerate().map(move |(k, line)| {
        let point = spiral::points()
            .filter(|r| outside(r, &ab) && outside(r, &line))
            .nth(k)
            .expect("the plane has points off two lines");
        AuxSelection { line, point }
    }))
}

/// The first admissible selection in spiral order.
pub fn default_aux(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> Result<AuxSelection> {
    let ab = base_line(a, b, c)?;
    let line = spiral::lines_through(c).find(|l| *l != ab).expect("a point has many lines");
    let point = spiral::points()
        .find(|r| outside(r, &ab) && outside(r, &line))
        .expect("the plane has points off two lines");
    Ok(AuxSelection { line, point })
}

/// `h(A,B;C)`. The base points are their own conjugates.
pub fn harmonic(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> Result<HomPoint> {
    base_line(a, b, c)?;
    if c == a || c == b {
        return Ok(c.clone());
    }
    let aux = default_aux(a, b, c)?;
    harmonic_with_aux(a, b, c, &aux)
}

/// Value of a cross ratio; `Infinity` when the denominator bracket vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossRatio {
    Finite(Scalar),
    Infinity,
}

impl core::fmt::Display for CrossRatio {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CrossRatio::Finite(s) => write!(f, "{s}"),
            CrossRatio::Infinity => f.write_str("inf"),
        }
    }
}

/// Bracket `[XY]` of two points on the line with normal `w`:
/// `X × Y = [XY]·w`.
fn bracket(x: &HomPoint, y: &HomPoint, w: &HomLine, k: usize) -> BigInt {
    let c = cross(x.coords(), y.coords());
    // exact: X × Y is a multiple of w
    &c[k] / &w.coords()[k]
}

/// `(A,B;C,D) = [AC][BD] / ([BC][AD])`; for affine parameters this is
/// `((c−a)/(c−b)) / ((d−a)/(d−b))`.
///
/// `C` may coincide with a base point; only `0/0` is rejected.
pub fn cross_ratio(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<CrossRatio> {
    if a == b {
        return Err(Error::DegenerateBasis);
    }
    let w = join(a, b)?;
    if !incident(c, &w) || !incident(d, &w) {
        return Err(Error::NotCollinear);
    }
    let k = w.coords().iter().position(|x| !x.is_zero()).expect("canonical");
    let num = bracket(a, c, &w, k) * bracket(b, d, &w, k);
    let den = bracket(b, c, &w, k) * bracket(a, d, &w, k);
    if den.is_zero() {
        if num.is_zero() {
            return Err(Error::DegenerateBasis);
        }
        return Ok(CrossRatio::Infinity);
    }
    Ok(CrossRatio::Finite(Scalar::new(num, den)?))
}

/// Vertices of a quadrangle exhibiting `D = h(A,B;C)`.
///
/// Opposite sides `QR`, `PS` pass through `A`; `PR`, `QS` through `B`;
/// `PQ` through `C` and `RS` through `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadrangle {
    pub p: HomPoint,
    pub q: HomPoint,
    pub r: HomPoint,
    pub s: HomPoint,
}

impl Quadrangle {
    pub fn vertices(&self) -> [&HomPoint; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    /// Checks the incidences that witness `D = h(A,B;C)`.
    pub fn witnesses(&self, a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> bool {
        let Ok(ab) = join(a, b) else { return false };
        let side = |x: &HomPoint, y: &HomPoint| join(x, y).ok();
        let on = |pt: &HomPoint, l: Option<HomLine>| l.is_some_and(|l| incident(pt, &l));
        let Self { p, q, r, s } = self;
        crate::plane::is_quadrangle(p, q, r, s)
            && self.vertices().iter().all(|v| outside(v, &ab))
            && on(a, side(q, r))
            && on(a, side(p, s))
            && on(b, side(p, r))
            && on(b, side(q, s))
            && on(c, side(p, q))
            && on(d, side(r, s))
    }
}

/// A verified quadrangle for `D = h(A,B;C)`, with `C` apart from both base
/// points.
pub fn quadrangle_witness(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<Quadrangle> {
    let ab = base_line(a, b, c)?;
    if c == a || c == b || harmonic(a, b, c)? != *d {
        return Err(Error::HarmonicMismatch);
    }
    let aux = default_aux(a, b, c)?;
    let Construction { p, q, s, d: d2 } = construct(a, b, &ab, &aux);
    debug_assert_eq!(&d2, d);
    let quad = Quadrangle { p, q, r: aux.point, s };
    assert!(quad.witnesses(a, b, c, d), "harmonic quadrangle incidences fail");
    Ok(quad)
}

/// `n` distinct admissible auxiliary selections.
pub fn take_selections(a: &HomPoint, b: &HomPoint, c: &HomPoint, n: usize) -> Result<Vec<AuxSelection>> {
    Ok(auxiliary_selections(a, b, c)?.take(n).collect())
}
