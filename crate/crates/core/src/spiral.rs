//! Deterministic enumeration of small canonical triples.
//!
//! Wherever a construction leaves an auxiliary choice free (a line through a
//! point, a point off two lines, a base element of a range) the first
//! admissible candidate in this order is taken, so results are reproducible.
//! Triples come ordered by max-abs coordinate, then lexicographically.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::plane::{join, meet, HomLine, HomPoint, ProjElement};

/// Canonical integer triples: max-abs 1 first, lexicographic within a shell.
pub fn triples() -> impl Iterator<Item = [i64; 3]> {
    (1i64..).flat_map(|k| {
        let mut shell = Vec::new();
        for x in 0..=k {
            for y in -k..=k {
                for z in -k..=k {
                    if x.abs().max(y.abs()).max(z.abs()) != k {
                        continue;
                    }
                    let first = [x, y, z].into_iter().find(|&c| c != 0).unwrap_or(0);
                    if first <= 0 || gcd3(x, y, z) != 1 {
                        continue;
                    }
                    shell.push([x, y, z]);
                }
            }
        }
        shell
    })
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    gcd(gcd(a, b), c)
}

pub fn elements<T: ProjElement>() -> impl Iterator<Item = T> {
    triples().map(|[a, b, c]| T::from_vec([a.into(), b.into(), c.into()]).expect("spiral triples are nonzero"))
}

pub fn points() -> impl Iterator<Item = HomPoint> {
    elements()
}

pub fn lines() -> impl Iterator<Item = HomLine> {
    elements()
}

/// Distinct lines through `p`, as joins with spiral points.
pub fn lines_through(p: &HomPoint) -> impl Iterator<Item = HomLine> + '_ {
    let mut seen = BTreeSet::new();
    points().filter_map(move |x| join(p, &x).ok()).filter(move |l| seen.insert(l.clone()))
}

/// Distinct points on `l`, as meets with spiral lines.
pub fn points_on(l: &HomLine) -> impl Iterator<Item = HomPoint> + '_ {
    let mut seen = BTreeSet::new();
    lines().filter_map(move |m| meet(l, &m).ok()).filter(move |p| seen.insert(p.clone()))
}

/// Either kind of element, dually: the elements incident with `e`.
pub fn incident_with<'a, T: ProjElement + 'a>(e: &'a T::Dual) -> impl Iterator<Item = T> + 'a {
    let mut seen = BTreeSet::new();
    elements::<T::Dual>()
        .filter_map(move |x| e.span(&x).ok())
        .filter(move |p| seen.insert(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::incident;

    #[test]
    fn first_shell() {
        let first: Vec<[i64; 3]> = triples().take(13).collect();
        assert_eq!(first[0], [0, 0, 1]);
        assert_eq!(first[1], [0, 1, -1]);
        assert_eq!(first[2], [0, 1, 0]);
        assert_eq!(first[3], [0, 1, 1]);
        assert_eq!(first[4], [1, -1, -1]);
        // shell 1 holds (27 - 1) / 2 = 13 canonical triples
        assert_eq!(first[12], [1, 1, 1]);
        assert_eq!(triples().nth(13).unwrap().iter().map(|c| c.abs()).max(), Some(2));
    }

    #[test]
    fn helpers_stay_on_carrier() {
        let p = HomPoint::new(3, -7, 2).unwrap();
        for l in lines_through(&p).take(20) {
            assert!(incident(&p, &l));
        }
        let l = HomLine::new(2, 5, -9).unwrap();
        let pts: Vec<_> = points_on(&l).take(20).collect();
        assert!(pts.iter().all(|q| incident(q, &l)));
        let distinct: BTreeSet<_> = pts.iter().collect();
        assert_eq!(distinct.len(), 20);
    }
}
