//! Randomized checks of the incidence and apartness axioms.
//!
//! Each property is evaluated on freshly sampled configurations, once for
//! points and lines as given and once with the roles exchanged (the dual
//! statement, suffixed `*`). Sampling rejects degenerate draws, so every
//! counted check exercised the property's hypothesis.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::plane::{apart, c7_witness, cotransitive_witness, C7Branch, HomLine, HomPoint, ProjElement, Side};
use crate::sample::Sampler;
use crate::spiral;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: String,
    pub checks: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn failures(&self) -> usize {
        self.results.iter().map(|r| r.failures).sum()
    }

    pub fn checks(&self) -> usize {
        self.results.iter().map(|r| r.checks).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

/// The properties in report order; `*` marks the dual statement.
pub const PROPERTIES: [&str; 13] = [
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "C7",
    "irreflexive",
    "symmetric",
    "cotransitive",
    "tight",
    "outside-pencil",
    "join-meet",
];

type Check<'a> = &'a mut dyn FnMut(&mut Sampler) -> bool;

/// C1: two distinct elements span an element incident with both.
fn c1<T: ProjElement>(s: &mut Sampler) -> bool {
    let (x, y) = distinct_pair::<T>(s);
    x.span(&y).is_ok_and(|l| x.lies_with(&l) && y.lies_with(&l))
}

/// C2: the spanning element is unique; spanning `x` with a third element
/// incident with `xy` gives `xy` again.
fn c2<T: ProjElement>(s: &mut Sampler) -> bool {
    let (x, y) = distinct_pair::<T>(s);
    let l = x.span(&y).expect("distinct");
    let z: T = loop {
        let z = s.incident_with::<T>(&l);
        if z != x {
            break z;
        }
    };
    x.span(&z).is_ok_and(|m| m == l)
}

/// C3: two distinct duals have a common element.
fn c3<T: ProjElement>(s: &mut Sampler) -> bool {
    let (l, m) = distinct_pair::<T::Dual>(s);
    l.span(&m).is_ok_and(|x: T| x.lies_with(&l) && x.lies_with(&m))
}

/// C4: at least three distinct elements are incident with any dual.
fn c4<T: ProjElement>(s: &mut Sampler) -> bool {
    let l: T::Dual = s.element();
    let xs: Vec<T> = spiral::incident_with::<T>(&l).take(3).collect();
    xs.len() == 3 && xs.iter().all(|x| x.lies_with(&l)) && xs[0] != xs[1] && xs[1] != xs[2] && xs[0] != xs[2]
}

/// C5: `x` on `l` and outside `m` forces `l ≠ m`.
fn c5<T: ProjElement>(s: &mut Sampler) -> bool {
    let x: T = s.element();
    let l: T::Dual = s.incident_with(&x);
    let m: T::Dual = loop {
        let m: T::Dual = s.element();
        if !x.lies_with(&m) {
            break m;
        }
    };
    apart(&l, &m)
}

/// C6: `¬(x outside l)` implies `x on l`. Outside is decided by a nonzero
/// inner product, so in this model exactly one of the two holds.
fn c6<T: ProjElement>(s: &mut Sampler) -> bool {
    let l: T::Dual = s.element();
    let x: T = if s.coin() { s.incident_with(&l) } else { s.element() };
    let outside = !dot_is_zero(x.coords(), l.coords());
    outside != x.lies_with(&l)
}

fn dot_is_zero(a: &crate::plane::Vec3, b: &crate::plane::Vec3) -> bool {
    let d: BigInt = a.iter().zip(b).map(|(x, y)| x * y).sum();
    d == BigInt::from(0)
}

/// `x` outside `l` exactly when every sampled dual through `x` is apart
/// from `l`.
fn outside_pencil<T: ProjElement>(s: &mut Sampler) -> bool {
    let l: T::Dual = s.element();
    let x: T = if s.coin() { s.incident_with(&l) } else { s.element() };
    let through: Vec<T::Dual> = spiral::incident_with::<T::Dual>(&x).take(6).collect();
    if x.lies_with(&l) {
        let other: T = loop {
            let y = s.incident_with::<T>(&l);
            if y != x {
                break y;
            }
        };
        x.span(&other).is_ok_and(|m| m == l)
    } else {
        through.iter().all(|m| apart(m, &l))
    }
}

/// `join(x,y)·l` lies on `l`, and `join(l·m, x)` passes through `x`.
fn join_meet<T: ProjElement>(s: &mut Sampler) -> bool {
    let (x, y) = distinct_pair::<T>(s);
    let (l, m) = distinct_pair::<T::Dual>(s);
    let xy = x.span(&y).expect("distinct");
    let first = xy == l || xy.span(&l).is_ok_and(|p: T| p.lies_with(&l) && p.lies_with(&xy));
    let lm: T = l.span(&m).expect("distinct");
    let second = lm == x || lm.span(&x).is_ok_and(|n| x.lies_with(&n) && lm.lies_with(&n));
    first && second
}

/// C7: for distinct `l, m` and `x ≠ l·m` the witness names a line that `x`
/// really avoids.
fn c7<T: ProjElement>(s: &mut Sampler) -> bool {
    let (l, m) = distinct_pair::<T::Dual>(s);
    let common: T = l.span(&m).expect("distinct");
    let x: T = loop {
        // bias towards elements on one of the lines so both branches occur
        let x: T = match s.range(0, 2) {
            0 => s.incident_with(&l),
            1 => s.incident_with(&m),
            _ => s.element(),
        };
        if x != common {
            break x;
        }
    };
    match c7_witness(&l, &m, &x) {
        Ok(C7Branch::OutsideL) => !x.lies_with(&l),
        Ok(C7Branch::OutsideM) => !x.lies_with(&m),
        Err(_) => false,
    }
}

fn irreflexive<T: ProjElement>(s: &mut Sampler) -> bool {
    let x: T = s.element();
    !apart(&x, &x)
}

fn symmetric<T: ProjElement>(s: &mut Sampler) -> bool {
    let (x, y): (T, T) = (s.element(), s.element());
    apart(&x, &y) == apart(&y, &x)
}

fn cotransitive<T: ProjElement>(s: &mut Sampler) -> bool {
    let (x, y) = distinct_pair::<T>(s);
    let z: T = match s.range(0, 2) {
        0 => x.clone(),
        1 => y.clone(),
        _ => s.element(),
    };
    match cotransitive_witness(&x, &y, &z) {
        Ok(Side::Left) => apart(&z, &x),
        Ok(Side::Right) => apart(&z, &y),
        Err(_) => false,
    }
}

/// Two representatives of one element are never apart, and the canonical
/// forms agree.
fn tight<T: ProjElement>(s: &mut Sampler) -> bool {
    let x: T = s.element();
    let k = loop {
        let k = s.int();
        if k != 0 {
            break BigInt::from(k);
        }
    };
    let scaled = x.coords().clone().map(|c| c * &k);
    match T::from_vec(scaled) {
        Ok(y) => !apart(&x, &y) && x == y,
        Err(_) => false,
    }
}

fn distinct_pair<T: ProjElement>(s: &mut Sampler) -> (T, T) {
    loop {
        let (x, y): (T, T) = (s.element(), s.element());
        if x != y {
            return (x, y);
        }
    }
}

fn checks_for<T: ProjElement>(i: usize) -> fn(&mut Sampler) -> bool {
    match i {
        0 => c1::<T>,
        1 => c2::<T>,
        2 => c3::<T>,
        3 => c4::<T>,
        4 => c5::<T>,
        5 => c6::<T>,
        6 => c7::<T>,
        7 => irreflexive::<T>,
        8 => symmetric::<T>,
        9 => cotransitive::<T>,
        10 => tight::<T>,
        11 => outside_pencil::<T>,
        _ => join_meet::<T>,
    }
}

fn run(name: String, trials: usize, s: &mut Sampler, check: Check<'_>) -> AxiomResult {
    let failures = (0..trials).filter(|_| !check(s)).count();
    AxiomResult { name, checks: trials, failures }
}

/// Runs every property and its dual `trials` times with coordinates in
/// `[-bound, bound]`.
pub fn run_axiom_suite(trials: usize, seed: u64, bound: i64) -> AxiomReport {
    let mut s = Sampler::new(seed, bound);
    let mut results = Vec::new();
    for (i, name) in PROPERTIES.iter().enumerate() {
        let mut direct = checks_for::<HomPoint>(i);
        results.push(run(String::from(*name), trials, &mut s, &mut direct));
        let mut dual = checks_for::<HomLine>(i);
        results.push(run(alloc::format!("{name}*"), trials, &mut s, &mut dual));
    }
    AxiomReport { trials, seed, bound, results }
}
