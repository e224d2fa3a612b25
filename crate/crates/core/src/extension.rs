//! Projective extensions of affine planes.
//!
//! Two constructions are provided over a decidable affine plane (the
//! rational plane, or `AG(2,q)` for a small prime `q`):
//!
//! * the virtual-line extension, whose points come from pencils of lines and
//!   whose lines come from virtual lines (sets of points that are a line as
//!   soon as they are inhabited);
//! * Heyting's extension, whose points and lines are literal set
//!   comprehensions over a family of lines.
//!
//! The probes at the end instantiate two counterexamples over the rational
//! plane for a given scalar: they report exactly which decision a
//! construction needs about that scalar.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::plane::{join, meet, HomLine, HomPoint};
use crate::sample::Sampler;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// The coordinate field of an affine plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(q) => write!(f, "F{q}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct APoint {
    pub x: Scalar,
    pub y: Scalar,
}

impl fmt::Display for APoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for APoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `a·x + b·y + c = 0`, scaled so the first nonzero of `(a, b)` is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ALine {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl fmt::Display for ALine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

impl fmt::Debug for ALine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An affine plane with decidable equality, incidence and parallelism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidencePlane {
    field: Field,
}

fn is_prime(q: u32) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

impl IncidencePlane {
    pub fn rational() -> Self {
        IncidencePlane { field: Field::Rational }
    }

    /// `AG(2,q)`; `q` must be a prime below 100.
    pub fn finite(q: u32) -> Result<Self> {
        if !is_prime(q) || q >= 100 {
            return Err(Error::NotInPlane);
        }
        Ok(IncidencePlane { field: Field::Prime(q) })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> Option<u32> {
        match self.field {
            Field::Rational => None,
            Field::Prime(q) => Some(q),
        }
    }

    fn norm(&self, x: Scalar) -> Scalar {
        match self.field {
            Field::Rational => x,
            Field::Prime(q) => {
                debug_assert!(x.is_integer());
                let q = Scalar::from(i64::from(q));
                let r = &x - &q * Scalar::from(x.numer().clone() / q.numer().clone());
                if r.sign() < 0 {
                    r + q
                } else {
                    r
                }
            }
        }
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a + b)
    }

    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a - b)
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a * b)
    }

    fn inv(&self, a: &Scalar) -> Scalar {
        match self.field {
            Field::Rational => a.recip().expect("nonzero"),
            Field::Prime(q) => (1..i64::from(q))
                .map(Scalar::from)
                .find(|y| self.mul(a, y) == Scalar::one())
                .expect("nonzero elements of a prime field are invertible"),
        }
    }

    fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    fn member(&self, x: &Scalar) -> bool {
        match self.field {
            Field::Rational => true,
            Field::Prime(q) => x.is_integer() && x.sign() >= 0 && *x < Scalar::from(i64::from(q)),
        }
    }

    pub fn point(&self, x: Scalar, y: Scalar) -> Result<APoint> {
        if !self.member(&x) || !self.member(&y) {
            return Err(Error::NotInPlane);
        }
        Ok(APoint { x, y })
    }

    pub fn line(&self, a: Scalar, b: Scalar, c: Scalar) -> Result<ALine> {
        if ![&a, &b, &c].iter().all(|s| self.member(s)) {
            return Err(Error::NotInPlane);
        }
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::ZeroVector);
        };
        let k = self.inv(&lead);
        Ok(ALine {
            a: self.mul(&a, &k),
            b: self.mul(&b, &k),
            c: self.mul(&c, &k),
        })
    }

    pub fn contains(&self, l: &ALine, p: &APoint) -> bool {
        let v = self.add(&self.add(&self.mul(&l.a, &p.x), &self.mul(&l.b, &p.y)), &l.c);
        v.is_zero()
    }

    pub fn join(&self, p: &APoint, q: &APoint) -> Result<ALine> {
        if p == q {
            return Err(Error::CoincidentPoints);
        }
        let a = self.sub(&p.y, &q.y);
        let b = self.sub(&q.x, &p.x);
        let c = self.sub(&self.mul(&p.x, &q.y), &self.mul(&q.x, &p.y));
        self.line(a, b, c)
    }

    pub fn parallel(&self, l: &ALine, m: &ALine) -> bool {
        l.a == m.a && l.b == m.b
    }

    /// The class representative through the origin.
    pub fn direction(&self, l: &ALine) -> ALine {
        ALine {
            a: l.a.clone(),
            b: l.b.clone(),
            c: Scalar::zero(),
        }
    }

    pub fn meet(&self, l: &ALine, m: &ALine) -> Result<APoint> {
        if l == m {
            return Err(Error::CoincidentLines);
        }
        let det = self.sub(&self.mul(&l.a, &m.b), &self.mul(&m.a, &l.b));
        if det.is_zero() {
            return Err(Error::PointOnBothLines);
        }
        let x = self.div(&self.sub(&self.mul(&l.b, &m.c), &self.mul(&m.b, &l.c)), &det);
        let y = self.div(&self.sub(&self.mul(&l.c, &m.a), &self.mul(&m.c, &l.a)), &det);
        Ok(APoint { x, y })
    }

    /// The line through `p` parallel to `l`.
    pub fn parallel_through(&self, l: &ALine, p: &APoint) -> ALine {
        let c = self.norm(-(self.add(&self.mul(&l.a, &p.x), &self.mul(&l.b, &p.y))));
        ALine { a: l.a.clone(), b: l.b.clone(), c }
    }

    fn elements(&self) -> Vec<Scalar> {
        match self.field {
            Field::Rational => Vec::new(),
            Field::Prime(q) => (0..i64::from(q)).map(Scalar::from).collect(),
        }
    }

    /// All `q²` points, or `None` over the rationals.
    pub fn points(&self) -> Option<Vec<APoint>> {
        self.order()?;
        let f = self.elements();
        Some(
            f.iter()
                .flat_map(|x| f.iter().map(move |y| APoint { x: x.clone(), y: y.clone() }))
                .collect(),
        )
    }

    /// All `q² + q` lines, or `None` over the rationals.
    pub fn lines(&self) -> Option<Vec<ALine>> {
        self.order()?;
        let f = self.elements();
        let mut out = Vec::new();
        for b in &f {
            for c in &f {
                out.push(ALine { a: Scalar::one(), b: b.clone(), c: c.clone() });
            }
        }
        for c in &f {
            out.push(ALine { a: Scalar::zero(), b: Scalar::one(), c: c.clone() });
        }
        Some(out)
    }

    /// The set `l ∩ m`, in closed form.
    pub fn intersection(&self, l: &ALine, m: &ALine) -> Intersection {
        if l == m {
            Intersection::Whole(l.clone())
        } else if self.parallel(l, m) {
            Intersection::Empty
        } else {
            Intersection::Point(self.meet(l, m).expect("not parallel"))
        }
    }

    pub fn to_hom_point(&self, p: &APoint) -> HomPoint {
        assert_eq!(self.field, Field::Rational, "only rational points embed in the rational projective plane");
        HomPoint::affine(&p.x, &p.y).expect("finite point")
    }

    pub fn to_hom_line(&self, l: &ALine) -> HomLine {
        assert_eq!(self.field, Field::Rational, "only rational lines embed in the rational projective plane");
        HomLine::from_scalars(&[l.a.clone(), l.b.clone(), l.c.clone()]).expect("a or b is nonzero")
    }
}

/// The intersection of two lines as a point set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Intersection {
    Empty,
    Point(APoint),
    Whole(ALine),
}

/// A regular pencil: the lines through a point, or a parallel class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pencil {
    PointPencil(APoint),
    /// Stored by the class representative through the origin.
    ParallelPencil(ALine),
}

impl Pencil {
    pub fn contains(&self, plane: &IncidencePlane, l: &ALine) -> bool {
        match self {
            Pencil::PointPencil(q) => plane.contains(l, q),
            Pencil::ParallelPencil(d) => plane.parallel(l, d),
        }
    }

    /// `l*`, the lines parallel to `l`.
    pub fn parallel_to(plane: &IncidencePlane, l: &ALine) -> Pencil {
        Pencil::ParallelPencil(plane.direction(l))
    }
}

impl fmt::Display for Pencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pencil::PointPencil(q) => write!(f, "{q}*"),
            Pencil::ParallelPencil(d) => write!(f, "{d}*"),
        }
    }
}

/// A decidable condition on the sign of a witness scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignCondition {
    Zero,
    NonZero,
    Positive,
    Negative,
}

impl SignCondition {
    pub fn holds(&self, c: &Scalar) -> bool {
        match self {
            SignCondition::Zero => c.is_zero(),
            SignCondition::NonZero => !c.is_zero(),
            SignCondition::Positive => c.sign() > 0,
            SignCondition::Negative => c.sign() < 0,
        }
    }
}

/// A set of points that is a line as soon as it is inhabited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VirtualLine {
    Inhabited(ALine),
    Empty,
    /// The union of the cases whose condition holds for the witness; `None`
    /// contributes no points.
    Conditional {
        cases: Vec<(SignCondition, Option<ALine>)>,
        witness: Option<Scalar>,
    },
}

impl VirtualLine {
    /// Reduces to `Inhabited` or `Empty` using the witness.
    pub fn resolve(&self) -> Result<VirtualLine> {
        match self {
            VirtualLine::Conditional { cases, witness } => {
                let c = witness.as_ref().ok_or(Error::UnresolvedStatus)?;
                let lines: BTreeSet<&ALine> =
                    cases.iter().filter(|(cond, _)| cond.holds(c)).filter_map(|(_, l)| l.as_ref()).collect();
                match lines.len() {
                    0 => Ok(VirtualLine::Empty),
                    1 => Ok(VirtualLine::Inhabited(lines.into_iter().next().expect("one").clone())),
                    _ => Err(Error::NotAVirtualLine),
                }
            }
            other => Ok(other.clone()),
        }
    }

    pub fn as_line(&self) -> Result<Option<ALine>> {
        match self.resolve()? {
            VirtualLine::Inhabited(l) => Ok(Some(l)),
            _ => Ok(None),
        }
    }
}

/// The points on some line common to both pencils.
pub fn core(plane: &IncidencePlane, alpha: &Pencil, beta: &Pencil) -> Result<VirtualLine> {
    if alpha == beta {
        return Err(Error::IdenticalPencils);
    }
    let line = match (alpha, beta) {
        (Pencil::PointPencil(p), Pencil::PointPencil(q)) => plane.join(p, q)?,
        (Pencil::PointPencil(p), Pencil::ParallelPencil(d)) | (Pencil::ParallelPencil(d), Pencil::PointPencil(p)) => {
            plane.parallel_through(d, p)
        }
        (Pencil::ParallelPencil(_), Pencil::ParallelPencil(_)) => return Ok(VirtualLine::Empty),
    };
    Ok(VirtualLine::Inhabited(line))
}

/// The horizontal class, used when neither argument is inhabited.
fn canonical_direction() -> ALine {
    ALine { a: Scalar::zero(), b: Scalar::one(), c: Scalar::zero() }
}

/// A pencil containing each argument that is a line.
///
/// For `p = q` a line, the result is the parallel class `p*`: it contains
/// `p`, and it keeps `φ(x-axis, x-axis)` apart from `φ(y-axis, y-axis)`.
pub fn phi(plane: &IncidencePlane, p: &VirtualLine, q: &VirtualLine) -> Result<Pencil> {
    let pencil = match (p.as_line()?, q.as_line()?) {
        (Some(l), Some(m)) => {
            if l == m || plane.parallel(&l, &m) {
                Pencil::parallel_to(plane, &l)
            } else {
                Pencil::PointPencil(plane.meet(&l, &m)?)
            }
        }
        (Some(l), None) | (None, Some(l)) => Pencil::parallel_to(plane, &l),
        (None, None) => Pencil::ParallelPencil(canonical_direction()),
    };
    Ok(pencil)
}

/// A point of the extension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EPoint(pub Pencil);

/// A line of the extension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ELine {
    Extended(ALine),
    LineAtInfinity,
}

impl ELine {
    pub fn from_virtual(p: &VirtualLine) -> Result<ELine> {
        Ok(match p.as_line()? {
            Some(l) => ELine::Extended(l),
            None => ELine::LineAtInfinity,
        })
    }

    pub fn to_virtual(&self) -> VirtualLine {
        match self {
            ELine::Extended(l) => VirtualLine::Inhabited(l.clone()),
            ELine::LineAtInfinity => VirtualLine::Empty,
        }
    }
}

impl fmt::Display for EPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Display for ELine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ELine::Extended(l) => write!(f, "ext{l}"),
            ELine::LineAtInfinity => f.write_str("inf"),
        }
    }
}

/// The virtual-line extension of an incidence plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveExtension {
    plane: IncidencePlane,
    points: Vec<EPoint>,
    lines: Vec<ELine>,
}

pub fn extend(plane: &IncidencePlane) -> ProjectiveExtension {
    let mut points = Vec::new();
    let mut lines = Vec::new();
    if let (Some(pts), Some(ls)) = (plane.points(), plane.lines()) {
        points.extend(pts.into_iter().map(|p| EPoint(Pencil::PointPencil(p))));
        let dirs: BTreeSet<ALine> = ls.iter().map(|l| plane.direction(l)).collect();
        points.extend(dirs.into_iter().map(|d| EPoint(Pencil::ParallelPencil(d))));
        lines.extend(ls.into_iter().map(ELine::Extended));
        lines.push(ELine::LineAtInfinity);
    }
    ProjectiveExtension { plane: *plane, points, lines }
}

impl ProjectiveExtension {
    pub fn plane(&self) -> &IncidencePlane {
        &self.plane
    }

    /// Every e-point; empty over the rationals, where the structure is lazy.
    pub fn points(&self) -> &[EPoint] {
        &self.points
    }

    pub fn lines(&self) -> &[ELine] {
        &self.lines
    }

    pub fn incident(&self, p: &EPoint, l: &ELine) -> bool {
        match (&p.0, l) {
            (Pencil::PointPencil(q), ELine::Extended(l)) => self.plane.contains(l, q),
            (Pencil::ParallelPencil(d), ELine::Extended(l)) => self.plane.parallel(l, d),
            (Pencil::PointPencil(_), ELine::LineAtInfinity) => false,
            (Pencil::ParallelPencil(_), ELine::LineAtInfinity) => true,
        }
    }

    /// The e-line of the core of the two pencils.
    pub fn join(&self, p: &EPoint, q: &EPoint) -> Result<ELine> {
        ELine::from_virtual(&core(&self.plane, &p.0, &q.0)?)
    }

    /// The e-point of `φ(p, q)`; also defined for identical e-lines.
    pub fn meet(&self, l: &ELine, m: &ELine) -> Result<EPoint> {
        Ok(EPoint(phi(&self.plane, &l.to_virtual(), &m.to_virtual())?))
    }

    /// Exhaustive check of the projective-plane properties of a finite
    /// extension.
    pub fn verify(&self) -> ExtensionReport {
        let q = self.plane.order().map(|q| q as usize);
        let mut report = ExtensionReport {
            field: self.plane.field,
            e_points: self.points.len(),
            e_lines: self.lines.len(),
            points_per_line: None,
            ..ExtensionReport::default()
        };
        let degrees: BTreeSet<usize> = self
            .lines
            .iter()
            .map(|l| self.points.iter().filter(|p| self.incident(p, l)).count())
            .collect();
        if degrees.len() == 1 {
            report.points_per_line = degrees.first().copied();
        } else {
            report.failures.push(String::from("e-lines have different numbers of e-points"));
        }
        if let Some(q) = q {
            if report.e_points != q * q + q + 1 || report.e_lines != q * q + q + 1 {
                report.failures.push(String::from("wrong number of e-points or e-lines"));
            }
        }
        for (i, p) in self.points.iter().enumerate() {
            for r in &self.points[i + 1..] {
                report.join_pairs += 1;
                let through: Vec<&ELine> =
                    self.lines.iter().filter(|l| self.incident(p, l) && self.incident(r, l)).collect();
                let joined = self.join(p, r);
                if through.len() != 1 || joined.as_ref().ok() != through.first().copied() {
                    report.failures.push(alloc::format!("join of {p} and {r}"));
                }
            }
        }
        for l in &self.lines {
            for m in &self.lines {
                report.meet_pairs += 1;
                let common = self.points.iter().filter(|p| self.incident(p, l) && self.incident(p, m)).count();
                let ok = match self.meet(l, m) {
                    Ok(p) => self.incident(&p, l) && self.incident(&p, m) && (l == m || common == 1),
                    Err(_) => false,
                };
                if !ok {
                    report.failures.push(alloc::format!("meet of {l} and {m}"));
                }
            }
        }
        for a in &self.points {
            for b in &self.points {
                if a == b {
                    continue;
                }
                for c in &self.points {
                    report.cotransitivity_triples += 1;
                    if !(c != a || c != b) {
                        report.failures.push(alloc::format!("cotransitivity at {a}, {b}, {c}"));
                    }
                }
            }
        }
        report
    }

    /// Randomized check over the rational plane against the homogeneous
    /// model: the e-point of a pencil is its vertex or the point at infinity
    /// of its class, and e-lines are the plane lines plus `[0,0,1]`.
    pub fn verify_random(&self, seed: u64, cases: usize) -> ExtensionReport {
        assert_eq!(self.plane.field, Field::Rational, "randomized checks run over the rationals");
        let mut s = Sampler::new(seed, 10);
        let mut report = ExtensionReport { field: self.plane.field, ..ExtensionReport::default() };
        while report.join_pairs < cases {
            let (p, q) = (self.random_point(&mut s), self.random_point(&mut s));
            if p == q {
                continue;
            }
            report.join_pairs += 1;
            let ok = self.join(&p, &q).is_ok_and(|l| {
                self.incident(&p, &l)
                    && self.incident(&q, &l)
                    && join(&self.hom_point(&p), &self.hom_point(&q)).ok() == Some(self.hom_line(&l))
            });
            if !ok {
                report.failures.push(alloc::format!("join of {p} and {q}"));
            }
        }
        while report.meet_pairs < cases {
            let (l, m) = (self.random_line(&mut s), self.random_line(&mut s));
            report.meet_pairs += 1;
            let ok = self.meet(&l, &m).is_ok_and(|p| {
                let on_both = self.incident(&p, &l) && self.incident(&p, &m);
                let oracle = l == m || meet(&self.hom_line(&l), &self.hom_line(&m)).ok() == Some(self.hom_point(&p));
                on_both && oracle
            });
            if !ok {
                report.failures.push(alloc::format!("meet of {l} and {m}"));
            }
        }
        report
    }

    fn random_point(&self, s: &mut Sampler) -> EPoint {
        let x = Scalar::new(s.int(), s.range(1, 5)).expect("nonzero denominator");
        let y = Scalar::new(s.int(), s.range(1, 5)).expect("nonzero denominator");
        if s.range(0, 3) == 0 {
            let l = self.random_affine_line(s);
            EPoint(Pencil::parallel_to(&self.plane, &l))
        } else {
            EPoint(Pencil::PointPencil(APoint { x, y }))
        }
    }

    fn random_affine_line(&self, s: &mut Sampler) -> ALine {
        loop {
            let (a, b, c) = (s.int(), s.int(), s.int());
            if let Ok(l) = self.plane.line(a.into(), b.into(), c.into()) {
                return l;
            }
        }
    }

    fn random_line(&self, s: &mut Sampler) -> ELine {
        if s.range(0, 7) == 0 {
            ELine::LineAtInfinity
        } else {
            ELine::Extended(self.random_affine_line(s))
        }
    }

    pub fn hom_point(&self, p: &EPoint) -> HomPoint {
        match &p.0 {
            Pencil::PointPencil(q) => self.plane.to_hom_point(q),
            Pencil::ParallelPencil(d) => {
                HomPoint::from_scalars(&[d.b.clone(), -&d.a, Scalar::zero()]).expect("a direction is nonzero")
            }
        }
    }

    pub fn hom_line(&self, l: &ELine) -> HomLine {
        match l {
            ELine::Extended(l) => self.plane.to_hom_line(l),
            ELine::LineAtInfinity => HomLine::new(0, 0, 1).expect("nonzero"),
        }
    }
}

/// Counts from a verification run; `failures` is empty when every check
/// passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionReport {
    pub field: Field,
    pub e_points: usize,
    pub e_lines: usize,
    pub points_per_line: Option<usize>,
    pub join_pairs: usize,
    pub meet_pairs: usize,
    pub cotransitivity_triples: usize,
    pub failures: Vec<String>,
}

impl Default for ExtensionReport {
    fn default() -> Self {
        ExtensionReport {
            field: Field::Rational,
            e_points: 0,
            e_lines: 0,
            points_per_line: None,
            join_pairs: 0,
            meet_pairs: 0,
            cotransitivity_triples: 0,
            failures: Vec::new(),
        }
    }
}

impl ExtensionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A projective point of Heyting's extension: a set of lines.
pub type HeytingPoint = BTreeSet<ALine>;
/// A projective line of Heyting's extension: a set of projective points.
pub type HeytingLine = BTreeSet<HeytingPoint>;

/// `{n ∈ family : n∩l = l∩m or n∩m = l∩m}`.
pub fn heyting_point(plane: &IncidencePlane, family: &[ALine], l: &ALine, m: &ALine) -> Result<HeytingPoint> {
    if l == m {
        return Err(Error::IdenticalArguments);
    }
    let lm = plane.intersection(l, m);
    Ok(family
        .iter()
        .filter(|n| plane.intersection(n, l) == lm || plane.intersection(n, m) == lm)
        .cloned()
        .collect())
}

/// `{Q ∈ family : Q∩A = A∩B or Q∩B = A∩B}`.
pub fn heyting_line(family: &[HeytingPoint], a: &HeytingPoint, b: &HeytingPoint) -> Result<HeytingLine> {
    if a == b {
        return Err(Error::IdenticalArguments);
    }
    let ab: HeytingPoint = a.intersection(b).cloned().collect();
    let meets = |x: &HeytingPoint, y: &HeytingPoint| -> HeytingPoint { x.intersection(y).cloned().collect() };
    Ok(family
        .iter()
        .filter(|q| meets(q, a) == ab || meets(q, b) == ab)
        .cloned()
        .collect())
}

/// The full Heyting extension of a finite plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeytingExtension {
    pub points: Vec<HeytingPoint>,
    pub lines: Vec<HeytingLine>,
}

pub fn heyting_extension(plane: &IncidencePlane) -> Result<HeytingExtension> {
    let family = plane.lines().ok_or(Error::NotInPlane)?;
    let mut points = BTreeSet::new();
    for (i, l) in family.iter().enumerate() {
        for m in &family[i + 1..] {
            points.insert(heyting_point(plane, &family, l, m)?);
        }
    }
    let points: Vec<HeytingPoint> = points.into_iter().collect();
    let mut lines = BTreeSet::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            lines.insert(heyting_line(&points, a, b)?);
        }
    }
    Ok(HeytingExtension { points, lines: lines.into_iter().collect() })
}

impl HeytingExtension {
    /// Pairs of distinct projective lines with no common projective point.
    pub fn cpp_failures(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                if self.lines[i].is_disjoint(&self.lines[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn cpp_pairs(&self) -> usize {
        self.lines.len() * self.lines.len().saturating_sub(1) / 2
    }
}

/// Result of the LLPO probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LlpoOutcome {
    Meet(HomPoint),
    IdenticalLines,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LlpoReport {
    pub alpha: Scalar,
    pub lambda: HomLine,
    pub mu: HomLine,
    pub outcome: LlpoOutcome,
}

/// `λ = [α⁺, 0, 1]`, `μ = [0, α⁻, 1]` and their meet when they differ. The
/// meet jumps from `⟨0,1,0⟩` to `⟨1,0,0⟩` as `α` crosses zero, so computing
/// it for every real `α` would decide the sign of `α`.
pub fn brouwerian_probe(alpha: &Scalar) -> LlpoReport {
    let lambda = HomLine::from_scalars(&[alpha.pos_part(), Scalar::zero(), Scalar::one()]).expect("z = 1");
    let mu = HomLine::from_scalars(&[Scalar::zero(), alpha.neg_part(), Scalar::one()]).expect("z = 1");
    let outcome = match meet(&lambda, &mu) {
        Ok(p) => LlpoOutcome::Meet(p),
        Err(_) => LlpoOutcome::IdenticalLines,
    };
    LlpoReport { alpha: alpha.clone(), lambda, mu, outcome }
}

/// Which e-point `γ̄` is apart from in the cotransitivity probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CotransBranch {
    /// `γ̄ ≠ l₀*`: only possible when `c ≠ 0`.
    ApartFromL0,
    /// `γ̄ ≠ m₀*`: only possible when `c = 0`.
    ApartFromM0,
}

impl fmt::Display for CotransBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CotransBranch::ApartFromL0 => f.write_str("apart from l0*"),
            CotransBranch::ApartFromM0 => f.write_str("apart from m0*"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotransReport {
    pub c: Scalar,
    pub p: ALine,
    pub gamma: Pencil,
    pub branch: CotransBranch,
}

/// The virtual line `{(t,0) : c = 0} ∪ {(0,t) : c ≠ 0}`.
pub fn cotrans_virtual_line(c: Option<Scalar>) -> VirtualLine {
    let x_axis = ALine { a: Scalar::zero(), b: Scalar::one(), c: Scalar::zero() };
    let y_axis = ALine { a: Scalar::one(), b: Scalar::zero(), c: Scalar::zero() };
    VirtualLine::Conditional {
        cases: alloc::vec![(SignCondition::Zero, Some(x_axis)), (SignCondition::NonZero, Some(y_axis))],
        witness: c,
    }
}

/// Forms `γ = φ(p, p)` for the virtual line above and decides which of the
/// axis classes `γ̄` is apart from; the branch taken is `c = 0` versus
/// `c ≠ 0`.
pub fn cotransitivity_probe(c: &Scalar) -> CotransReport {
    let plane = IncidencePlane::rational();
    let p = cotrans_virtual_line(Some(c.clone()));
    let line = p.as_line().expect("witness supplied").expect("one case always holds");
    let gamma = phi(&plane, &p, &p).expect("resolved");
    let l0 = Pencil::ParallelPencil(canonical_direction());
    let branch = if gamma != l0 { CotransBranch::ApartFromL0 } else { CotransBranch::ApartFromM0 };
    CotransReport { c: c.clone(), p: line, gamma, branch }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn rat() -> IncidencePlane {
        IncidencePlane::rational()
    }

    fn pp(x: i64, y: i64) -> Pencil {
        Pencil::PointPencil(APoint { x: q(x), y: q(y) })
    }

    fn al(a: i64, b: i64, c: i64) -> ALine {
        rat().line(q(a), q(b), q(c)).unwrap()
    }

    #[test]
    fn core_examples() {
        let plane = rat();
        assert_eq!(core(&plane, &pp(0, 0), &pp(1, 1)), Ok(VirtualLine::Inhabited(al(1, -1, 0))));
        let horizontal = Pencil::parallel_to(&plane, &al(0, 1, 0));
        let vertical = Pencil::parallel_to(&plane, &al(1, 0, 0));
        assert_eq!(core(&plane, &horizontal, &vertical), Ok(VirtualLine::Empty));
        assert_eq!(core(&plane, &pp(0, 0), &horizontal), Ok(VirtualLine::Inhabited(al(0, 1, 0))));
        assert_eq!(core(&plane, &pp(0, 0), &pp(0, 0)), Err(Error::IdenticalPencils));
    }

    #[test]
    fn phi_examples() {
        let plane = rat();
        let (x_axis, y_axis) = (VirtualLine::Inhabited(al(0, 1, 0)), VirtualLine::Inhabited(al(1, 0, 0)));
        assert_eq!(phi(&plane, &x_axis, &y_axis), Ok(pp(0, 0)));
        let y1 = VirtualLine::Inhabited(al(0, 1, -1));
        assert_eq!(phi(&plane, &x_axis, &y1), Ok(Pencil::ParallelPencil(al(0, 1, 0))));
        assert_eq!(phi(&plane, &x_axis, &x_axis), Ok(Pencil::ParallelPencil(al(0, 1, 0))));
        let unresolved = cotrans_virtual_line(None);
        assert_eq!(phi(&plane, &unresolved, &x_axis), Err(Error::UnresolvedStatus));
        let both = VirtualLine::Conditional {
            cases: alloc::vec![(SignCondition::Positive, Some(al(0, 1, 0))), (SignCondition::NonZero, Some(al(1, 0, 0)))],
            witness: Some(q(1)),
        };
        assert_eq!(both.resolve(), Err(Error::NotAVirtualLine));
    }

    #[test]
    fn finite_counts() {
        for (p, n, k) in [(3, 13, 4), (5, 31, 6)] {
            let ext = extend(&IncidencePlane::finite(p).unwrap());
            let report = ext.verify();
            assert_eq!((report.e_points, report.e_lines, report.points_per_line), (n, n, Some(k)));
            assert!(report.passed(), "{:?}", report.failures);
        }
        assert_eq!(IncidencePlane::finite(4), Err(Error::NotInPlane));
    }

    #[test]
    fn finite_arithmetic() {
        let f3 = IncidencePlane::finite(3).unwrap();
        let l = f3.join(&f3.point(q(0), q(1)).unwrap(), &f3.point(q(2), q(0)).unwrap()).unwrap();
        // over F3 the line through (0,1) and (2,0) is x + 2y + 1 = 0
        assert_eq!(l, ALine { a: q(1), b: q(2), c: q(1) });
        assert_eq!(f3.point(q(3), q(0)), Err(Error::NotInPlane));
    }

    #[test]
    fn rational_random_checks() {
        let report = extend(&rat()).verify_random(7, 200);
        assert_eq!((report.join_pairs, report.meet_pairs), (200, 200));
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn heyting_examples() {
        let f3 = IncidencePlane::finite(3).unwrap();
        let fl = |a: i64, b: i64, c: i64| f3.line(q(a), q(b), q(c)).unwrap();
        let family = f3.lines().unwrap();
        let through_origin = heyting_point(&f3, &family, &fl(1, 0, 0), &fl(0, 1, 0)).unwrap();
        assert_eq!(through_origin.len(), 4);
        let class = heyting_point(&f3, &family, &fl(0, 1, 0), &fl(0, 1, 2)).unwrap();
        assert_eq!(class.len(), 3);
        assert_eq!(heyting_point(&f3, &family, &fl(0, 1, 0), &fl(0, 1, 0)), Err(Error::IdenticalArguments));

        let ext = heyting_extension(&f3).unwrap();
        assert_eq!((ext.points.len(), ext.lines.len()), (13, 13));
        assert!(ext.cpp_failures().is_empty());

        // the Heyting line of two finite points holds the points containing their join
        let at_11 = heyting_point(&f3, &family, &fl(1, 0, 2), &fl(0, 1, 2)).unwrap();
        let diag = heyting_line(&ext.points, &through_origin, &at_11).unwrap();
        let expected: HeytingLine = ext.points.iter().filter(|p| p.contains(&fl(1, 2, 0))).cloned().collect();
        assert_eq!(diag, expected);
        assert_eq!(diag.len(), 4);
    }

    #[test]
    fn llpo_probe() {
        let small = Scalar::new(1, 1000).unwrap();
        assert_eq!(brouwerian_probe(&small).outcome, LlpoOutcome::Meet(HomPoint::new(0, 1, 0).unwrap()));
        assert_eq!(brouwerian_probe(&-&small).outcome, LlpoOutcome::Meet(HomPoint::new(1, 0, 0).unwrap()));
        assert_eq!(brouwerian_probe(&Scalar::zero()).outcome, LlpoOutcome::IdenticalLines);
    }

    #[test]
    fn cotrans_probe() {
        let zero = cotransitivity_probe(&Scalar::zero());
        assert_eq!(zero.p, al(0, 1, 0));
        assert_eq!(zero.branch, CotransBranch::ApartFromM0);
        let one = cotransitivity_probe(&q(1));
        assert_eq!(one.p, al(1, 0, 0));
        assert_eq!(one.branch, CotransBranch::ApartFromL0);
        assert_eq!(cotransitivity_probe(&Scalar::new(1, 7).unwrap()).branch, CotransBranch::ApartFromL0);
    }
}
