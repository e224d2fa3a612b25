use num_bigint::BigInt;
use num_integer::Integer;
use pgeo_core::plane::{
    apart, collinear, cotransitive_witness, desargues_axis, desargues_center, fano_diagonals, incident, join, meet,
    perspective_from_center, ProjElement, Side,
};
use pgeo_core::sample::Sampler;
use pgeo_core::{HomLine, HomPoint, Scalar, Triangle};
use proptest::prelude::*;

fn det(a: &[BigInt; 3], b: &[BigInt; 3], c: &[BigInt; 3]) -> BigInt {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

fn is_canonical(v: &[BigInt; 3]) -> bool {
    let g = v.iter().fold(BigInt::from(0), |g, x| g.gcd(x));
    let lead = v.iter().find(|x| **x != BigInt::from(0));
    g == BigInt::from(1) && lead.is_some_and(|x| *x > BigInt::from(0))
}

/// A triangle perspective from `o` with `t1`, by sliding each vertex along
/// its line through `o`.
fn perspective_partner(s: &mut Sampler, t1: &Triangle, o: &HomPoint) -> Option<Triangle> {
    let mut v = Vec::new();
    for a in &t1.vertices {
        let l = join(o, a).ok()?;
        let p = loop {
            let p = s.point_on(&l);
            if p != *o && p != *a {
                break p;
            }
        };
        v.push(p);
    }
    let t2 = Triangle::new(v[0].clone(), v[1].clone(), v[2].clone()).ok()?;
    perspective_from_center(t1, &t2, o).then_some(t2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn join_is_incident_and_canonical(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 12);
        let (p, q) = (s.point(), s.point());
        prop_assume!(p != q);
        let l = join(&p, &q).unwrap();
        prop_assert!(incident(&p, &l) && incident(&q, &l));
        prop_assert!(is_canonical(l.coords()));
        prop_assert_eq!(join(&q, &p).unwrap(), l);
    }

    #[test]
    fn meet_is_dual_of_join(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 12);
        let (l, m) = (s.line(), s.line());
        prop_assume!(l != m);
        let x = meet(&l, &m).unwrap();
        prop_assert!(incident(&x, &l) && incident(&x, &m));
        prop_assert_eq!(x.dualize(), join(&l.dualize(), &m.dualize()).unwrap());
    }

    #[test]
    fn collinearity_matches_determinant(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 4);
        let (a, b, c) = (s.point(), s.point(), s.point());
        let zero = det(a.coords(), b.coords(), c.coords()) == BigInt::from(0);
        prop_assert_eq!(collinear(&a, &b, &c), zero);
    }

    #[test]
    fn apartness_is_inequality(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 3);
        let (a, b, c) = (s.point(), s.point(), s.point());
        prop_assert_eq!(apart(&a, &b), a != b);
        if a != b {
            match cotransitive_witness(&a, &b, &c).unwrap() {
                Side::Left => prop_assert!(c != a),
                Side::Right => prop_assert!(c != b),
            }
        }
    }

    #[test]
    fn scalars_round_trip(seed in any::<u64>(), k in 1i64..50) {
        let mut s = Sampler::new(seed, 20);
        let p = s.point();
        let scaled = p.scalars().map(|x| x * Scalar::new(k, 7).unwrap());
        prop_assert_eq!(HomPoint::from_scalars(&scaled).unwrap(), p);
    }

    #[test]
    fn desargues_round_trip(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 8);
        let t1 = {
            let [a, b, c] = s.triangle_vertices();
            Triangle::new(a, b, c).unwrap()
        };
        let o = s.point_off(&[&t1.sides[0], &t1.sides[1], &t1.sides[2]]);
        let t2 = perspective_partner(&mut s, &t1, &o);
        prop_assume!(t2.is_some());
        let t2 = t2.unwrap();
        let axis = desargues_axis(&t1, &t2, &o).unwrap();
        for i in 0..3 {
            prop_assert!(incident(&meet(&t1.sides[i], &t2.sides[i]).unwrap(), &axis));
        }
        prop_assert_eq!(desargues_center(&t1, &t2, &axis).unwrap(), o);
    }

    #[test]
    fn fano_diagonals_are_noncollinear(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 10);
        let [a, b, c, d] = s.quadrangle();
        let [e, f, g] = fano_diagonals(&a, &b, &c, &d).unwrap();
        prop_assert!(det(e.coords(), f.coords(), g.coords()) != BigInt::from(0));
    }
}

#[test]
fn canonical_forms() {
    let p = HomPoint::from_scalars(&[Scalar::new(1, 2).unwrap(), Scalar::zero(), Scalar::new(1, 3).unwrap()]).unwrap();
    assert_eq!(p, HomPoint::new(3, 0, 2).unwrap());
    assert_eq!(HomLine::new(0, -4, 6).unwrap(), HomLine::new(0, 2, -3).unwrap());
    assert!(HomPoint::new(0, 0, 0).is_err());
}

#[test]
fn collinear_triangle_is_rejected() {
    let (a, b, c) = (HomPoint::new(0, 0, 1).unwrap(), HomPoint::new(1, 1, 1).unwrap(), HomPoint::new(2, 2, 1).unwrap());
    assert!(Triangle::new(a, b, c).is_err());
}
