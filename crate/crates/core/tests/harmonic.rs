use pgeo_core::harmonic::{
    cross_ratio, harmonic, harmonic_with_aux, quadrangle_witness, take_selections, CrossRatio,
};
use pgeo_core::plane::{incident, join};
use pgeo_core::projectivity::{Carrier, Element};
use pgeo_core::sample::Sampler;
use pgeo_core::{HomPoint, Scalar};
use proptest::prelude::*;

/// Three distinct collinear points.
fn triple(s: &mut Sampler) -> (HomPoint, HomPoint, HomPoint) {
    loop {
        let (a, b, c) = s.collinear_triple();
        if a != b && b != c && a != c {
            return (a, b, c);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn independent_of_auxiliary_choices(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 8);
        let (a, b, c) = triple(&mut s);
        let sels = take_selections(&a, &b, &c, 10).unwrap();
        let d = harmonic(&a, &b, &c).unwrap();
        for sel in &sels {
            prop_assert_eq!(&harmonic_with_aux(&a, &b, &c, sel).unwrap(), &d);
        }
        // a random selection as well
        let ab = join(&a, &b).unwrap();
        let line = loop {
            let l = s.line_through(&c);
            if l != ab {
                break l;
            }
        };
        let point = s.point_off(&[&ab, &line]);
        let sel = pgeo_core::harmonic::AuxSelection { line, point };
        prop_assert_eq!(harmonic_with_aux(&a, &b, &c, &sel).unwrap(), d);
    }

    #[test]
    fn cross_ratio_is_minus_one(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 8);
        let (a, b, c) = triple(&mut s);
        let d = harmonic(&a, &b, &c).unwrap();
        prop_assert!(d != c);
        prop_assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), CrossRatio::Finite(-Scalar::one()));
    }

    #[test]
    fn involutive_and_symmetric(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 8);
        let (a, b, c) = triple(&mut s);
        let d = harmonic(&a, &b, &c).unwrap();
        prop_assert_eq!(harmonic(&a, &b, &d).unwrap(), c.clone());
        prop_assert_eq!(harmonic(&b, &a, &c).unwrap(), d.clone());
        let q = quadrangle_witness(&a, &b, &c, &d).unwrap();
        prop_assert!(q.witnesses(&a, &b, &c, &d));
    }

    #[test]
    fn preserved_by_projectivities(seed in any::<u64>(), len in 1usize..4) {
        let mut s = Sampler::new(seed, 6);
        let (a, b, c) = triple(&mut s);
        let l = join(&a, &b).unwrap();
        let pi = s.chain(&Carrier::Range(l), len, true);
        let img = |x: &HomPoint| pi.apply_point(x).unwrap().as_point().unwrap().clone();
        let d = harmonic(&a, &b, &c).unwrap();
        prop_assert_eq!(img(&d), harmonic(&img(&a), &img(&b), &img(&c)).unwrap());
        let e = Element::Point(d);
        prop_assert!(pi.target().contains(&pi.apply(&e).unwrap()));
    }
}

#[test]
fn midpoint_conjugate_is_at_infinity() {
    let a = HomPoint::new(0, 0, 1).unwrap();
    let b = HomPoint::new(2, 0, 1).unwrap();
    let c = HomPoint::new(1, 0, 1).unwrap();
    let d = harmonic(&a, &b, &c).unwrap();
    assert_eq!(d, HomPoint::new(1, 0, 0).unwrap());
    assert!(incident(&d, &join(&a, &b).unwrap()));
}

#[test]
fn off_line_point_is_rejected() {
    let a = HomPoint::new(0, 0, 1).unwrap();
    let b = HomPoint::new(1, 0, 1).unwrap();
    let c = HomPoint::new(0, 1, 1).unwrap();
    assert!(harmonic(&a, &b, &c).is_err());
}
