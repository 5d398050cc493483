mod common;

use common::*;
use gradspec_core::{
    build_ring, AlgebraError, CombineMode, ComponentSpec, FiniteAbelianGroup, Limits, RingConstructor,
};

#[test]
fn example_rings_have_expected_components() {
    let a = r_a();
    assert_eq!(a.component(0).to_vec(), vec![0, 1, 2, 3]);
    assert_eq!(a.component(1).to_vec(), vec![0]);

    let b = r_b();
    assert_eq!(b.labels(), &["0", "1", "u", "1+u"]);
    assert_eq!(b.component(0).to_vec(), vec![0, 1]);
    assert_eq!(b.component(1).to_vec(), vec![0, 2]);
    assert_eq!(b.mul(2, 2), 0);

    let c = r_c();
    assert_eq!(c.component(1).to_vec(), vec![0, 2]);
    assert_eq!(c.mul(2, 2), 1);
    assert_eq!(c.mul(3, 3), 0);
}

#[test]
fn homogeneous_components_examples() {
    assert_eq!(r_b().homogeneous_components(3), vec![1, 2]);
    assert_eq!(r_a().homogeneous_components(3), vec![3, 0]);
    let d = r_d();
    assert_eq!(d.homogeneous_components(0), vec![0, 0]);
}

#[test]
fn decomposition_sums_back_on_every_example() {
    for r in [r_a(), r_b(), r_c(), r_d()] {
        for x in r.elements() {
            let parts = r.homogeneous_components(x);
            let total = parts.iter().fold(r.zero(), |acc, &p| r.add(acc, p));
            assert_eq!(total, x);
            for (g, &p) in parts.iter().enumerate() {
                assert!(r.component(g).contains(p));
            }
        }
    }
}

#[test]
fn ideal_generation_examples() {
    let b = r_b();
    assert_eq!(b.ideal_generated(&[2]).unwrap().to_vec(), vec![0, 2]);
    assert_eq!(b.ideal_generated(&[]).unwrap().to_vec(), vec![0]);
    assert_eq!(r_d().ideal_generated(&[2]).unwrap().to_vec(), vec![0, 2, 4]);
    assert!(matches!(b.ideal_generated(&[3]), Err(AlgebraError::NonHomogeneousGenerator(_))));
}

#[test]
fn graded_ideal_membership_examples() {
    let c = r_c();
    let s = set(&[0, 3]);
    assert!(c.is_ideal(&s));
    assert!(!c.is_graded_ideal(&s));
    assert!(r_b().is_graded_ideal(&set(&[0, 2])));
    for r in [r_a(), r_b(), r_c(), r_d()] {
        assert!(r.is_graded_ideal(&r.full()));
    }
}

#[test]
fn lattice_matches_subset_scan() {
    let limits = Limits::default();
    for r in [r_a(), r_b(), r_c(), r_d()] {
        let got: Vec<_> = r.enumerate_graded_ideals(&limits).unwrap().iter().map(|i| i.elements().clone()).collect();
        assert_eq!(got, brute_force_graded_ideals(&r));
    }
    let ideals = |r: &gradspec_core::GradedRing| -> Vec<Vec<usize>> {
        r.enumerate_graded_ideals(&limits).unwrap().iter().map(|i| i.to_vec()).collect()
    };
    assert_eq!(ideals(&r_b()), vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    assert_eq!(ideals(&r_c()), vec![vec![0], vec![0, 1, 2, 3]]);
    assert_eq!(ideals(&r_d()).len(), 4);
}

#[test]
fn ideal_combination_examples() {
    let d = r_d();
    let two = d.ideal_generated(&[2]).unwrap();
    let three = d.ideal_generated(&[3]).unwrap();
    let meet = d.ideal_combine(CombineMode::Intersection, &two, &three).unwrap();
    assert!(meet.is_zero());
    let sum = d.ideal_combine(CombineMode::Sum, &two, &d.zero_ideal()).unwrap();
    assert_eq!(sum, two);
    let b = r_b();
    let u = b.ideal_generated(&[2]).unwrap();
    assert!(b.ideal_combine(CombineMode::Product, &u, &u).unwrap().is_zero());
    assert_eq!(b.ideal_combine(CombineMode::Sum, &u, &two), Err(AlgebraError::RingMismatch));
}

#[test]
fn graded_radical_examples() {
    let b = r_b();
    assert_eq!(b.graded_radical(&b.zero_ideal()).to_vec(), vec![0, 2]);
    let c = r_c();
    assert!(c.graded_radical(&c.zero_ideal()).is_zero());
    for r in [r_a(), r_b(), r_c(), r_d()] {
        assert_eq!(r.graded_radical(&r.unit_ideal()), r.unit_ideal());
        for i in r.enumerate_graded_ideals(&Limits::default()).unwrap() {
            assert_eq!(*r.graded_radical(&i).elements(), brute_force_radical(&r, i.elements()));
        }
    }
}

#[test]
fn primality_examples() {
    let b = r_b();
    assert!(b.is_graded_prime(&b.ideal_generated(&[2]).unwrap()));
    assert!(!b.is_graded_prime(&b.zero_ideal()));
    let c = r_c();
    assert!(c.is_graded_prime(&c.zero_ideal()));
    for r in [r_a(), r_b(), r_c(), r_d()] {
        let lattice = r.ideal_lattice(&Limits::default()).unwrap();
        for i in lattice.iter() {
            let expected = brute_force_is_prime(&r, i.elements());
            assert_eq!(r.is_graded_prime(i), expected);
            assert_eq!(r.is_graded_prime_by_ideals(i, &lattice), expected);
        }
    }
}

#[test]
fn maximal_and_jacobson_examples() {
    let limits = Limits::default();
    let c = r_c();
    let lc = c.ideal_lattice(&limits).unwrap();
    let max: Vec<_> = lc.max_spectrum(&c).iter().map(|m| m.to_vec()).collect();
    assert_eq!(max, vec![vec![0]]);
    assert!(lc.graded_jacobson_radical(&c).is_zero());

    let d = r_d();
    let ld = d.ideal_lattice(&limits).unwrap();
    let max: Vec<_> = ld.max_spectrum(&d).iter().map(|m| m.to_vec()).collect();
    assert_eq!(max, vec![vec![0, 3], vec![0, 2, 4]]);
    assert!(ld.graded_jacobson_radical(&d).is_zero());

    let b = r_b();
    let lb = b.ideal_lattice(&limits).unwrap();
    let max: Vec<_> = lb.max_spectrum(&b).iter().map(|m| m.to_vec()).collect();
    assert_eq!(max, vec![vec![0, 2]]);
    assert_eq!(lb.graded_jacobson_radical(&b).to_vec(), vec![0, 2]);
    assert_eq!(b.jacobson_radical_e().to_vec(), vec![0]);

    for r in [r_a(), r_b(), r_c(), r_d()] {
        let l = r.ideal_lattice(&limits).unwrap();
        let jg = l.graded_jacobson_radical(&r);
        assert_eq!(r.jacobson_radical_e(), jg.elements().intersection(r.identity_component()));
    }
}

#[test]
fn quotient_examples() {
    let a = r_a();
    let q = a.quotient_ring(&a.ideal_generated(&[2]).unwrap()).unwrap();
    assert_eq!(q.ring.size(), 2);
    assert_eq!(q.ring.component(1).len(), 1);

    let b = r_b();
    let q = b.quotient_ring(&b.ideal_generated(&[2]).unwrap()).unwrap();
    assert_eq!(q.ring.size(), 2);
    assert_eq!(q.ring.component(1).to_vec(), vec![0]);

    let q = b.quotient_ring(&b.zero_ideal()).unwrap();
    assert_eq!(q.ring.size(), 4);
    assert_eq!(q.projection, vec![0, 1, 2, 3]);

    assert!(matches!(b.quotient_ring(&b.unit_ideal()), Err(AlgebraError::ImproperIdeal)));
}

#[test]
fn quotient_ideals_correspond_to_ideals_above_kernel() {
    let limits = Limits::default();
    for r in [r_a(), r_b(), r_c(), r_d()] {
        let lattice = r.ideal_lattice(&limits).unwrap();
        for kernel in lattice.iter().filter(|i| r.is_proper(i)) {
            let q = r.quotient_ring(kernel).unwrap();
            let above: Vec<_> = lattice.iter().filter(|j| kernel.is_subset(j)).collect();
            let q_ideals = q.ring.enumerate_graded_ideals(&limits).unwrap();
            assert_eq!(above.len(), q_ideals.len());
            for j in above {
                let image = q.image(j);
                assert!(q_ideals.contains(&image));
                assert_eq!(q.preimage(&r, &image), *j);
            }
        }
    }
}

#[test]
fn graded_field_examples() {
    let limits = Limits::default();
    assert!(r_c().is_graded_field(&limits).unwrap());
    assert!(ring(&z2(), RingConstructor::Zmod { n: 2 }).is_graded_field(&limits).unwrap());
    assert!(!r_a().is_graded_field(&limits).unwrap());
}

#[test]
fn constructor_errors() {
    let g = z2();
    let limits = Limits::default();
    // Z_2[u]/(u^3) with u in degree 1 is fine: u^2 lands in R_0.
    let cubic = RingConstructor::TruncatedPoly { p: 2, d: 3, degree: vec![1] };
    assert_eq!(build_ring(&g, &cubic, &limits).unwrap().component(0).len(), 4);
    // Z_4 is not an internal direct sum of two copies of {0, 2}.
    let z4 = |components| RingConstructor::Tables {
        size: 4,
        zero: 0,
        one: 1,
        add: (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect(),
        mul: (0..4).map(|a| (0..4).map(|b| a * b % 4).collect()).collect(),
        components,
        labels: None,
    };
    let overlapping = z4(vec![
        ComponentSpec { degree: vec![0], elements: vec![0, 2] },
        ComponentSpec { degree: vec![1], elements: vec![0, 2] },
    ]);
    assert!(matches!(build_ring(&g, &overlapping, &limits), Err(AlgebraError::InvalidGrading { .. })));
    // Z_2 x Z_2 with the unit in degree 1.
    let unit_misplaced = RingConstructor::Tables {
        size: 4,
        zero: 0,
        one: 3,
        add: (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
        mul: (0..4).map(|a| (0..4).map(|b| a & b).collect()).collect(),
        components: vec![
            ComponentSpec { degree: vec![0], elements: vec![0, 1] },
            ComponentSpec { degree: vec![1], elements: vec![0, 2] },
        ],
        labels: None,
    };
    assert!(matches!(build_ring(&g, &unit_misplaced, &limits), Err(AlgebraError::InvalidGrading { .. })));
    let big = RingConstructor::Zmod { n: 300 };
    assert!(matches!(build_ring(&g, &big, &limits), Err(AlgebraError::SizeExceeded { .. })));
    let small = Limits { max_ring_order: 8, ..Limits::default() };
    assert!(matches!(
        build_ring(&g, &RingConstructor::Zmod { n: 9 }, &small),
        Err(AlgebraError::SizeExceeded { .. })
    ));
    assert!(matches!(build_ring(&g, &RingConstructor::Zmod { n: 1 }, &limits), Err(AlgebraError::ZeroRing)));
    // Not associative: a "multiplication" that is constant 1 off zero.
    let tables = RingConstructor::Tables {
        size: 2,
        zero: 0,
        one: 1,
        add: vec![vec![0, 1], vec![1, 0]],
        mul: vec![vec![0, 0], vec![0, 0]],
        components: vec![ComponentSpec { degree: vec![0], elements: vec![0, 1] }],
        labels: None,
    };
    assert!(matches!(build_ring(&g, &tables, &limits), Err(AlgebraError::NotARing(_))));
    assert!(FiniteAbelianGroup::new(&[0]).is_err());
}

#[test]
fn products_and_quotients_build() {
    let g = z2();
    let limits = Limits::default();
    let prod = RingConstructor::Product {
        factors: vec![
            RingConstructor::TruncatedPoly { p: 2, d: 2, degree: vec![1] },
            RingConstructor::GroupAlgebra { p: 2 },
        ],
    };
    let r = build_ring(&g, &prod, &limits).unwrap();
    assert_eq!(r.size(), 16);
    assert_eq!(r.component(0).len(), 4);
    let quot = RingConstructor::Quotient { inner: Box::new(RingConstructor::Zmod { n: 12 }), generators: vec![4] };
    let q = build_ring(&g, &quot, &limits).unwrap();
    assert_eq!(q.size(), 4);
}
