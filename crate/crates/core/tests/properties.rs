mod common;

use std::sync::Arc;

use common::*;
use gradspec_core::{
    build_module, build_ring, FiniteAbelianGroup, GradedRing, Limits, ModuleConstructor, PrimeSpectrum,
    RingConstructor, SecondSpectrum,
};
use proptest::prelude::*;

fn leaf(order: usize) -> impl Strategy<Value = RingConstructor> {
    prop_oneof![
        (2usize..=12).prop_map(|n| RingConstructor::Zmod { n }),
        (prop_oneof![Just(2usize), Just(3)], 2usize..=3, 0..order)
            .prop_map(|(p, d, g)| RingConstructor::TruncatedPoly { p, d, degree: vec![g] }),
    ]
}

fn ring_strategy() -> impl Strategy<Value = (usize, RingConstructor)> {
    prop_oneof![Just(2usize), Just(3)].prop_flat_map(|order| {
        let group_algebra =
            if order == 2 { Just(RingConstructor::GroupAlgebra { p: 2 }).boxed() } else { leaf(order).boxed() };
        let base = prop_oneof![leaf(order), group_algebra];
        let product = (leaf(order), leaf(order)).prop_map(|(a, b)| RingConstructor::Product { factors: vec![a, b] });
        (Just(order), prop_oneof![3 => base, 1 => product])
    })
}

fn build((order, desc): &(usize, RingConstructor)) -> Option<Arc<GradedRing>> {
    let group = FiniteAbelianGroup::new(&[*order]).unwrap();
    let limits = Limits { max_ring_order: 64, ..Limits::default() };
    build_ring(&group, desc, &limits).ok().map(Arc::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graded_radical_is_a_closure_operator(desc in ring_strategy()) {
        let Some(r) = build(&desc) else { return Ok(()) };
        let ideals = r.enumerate_graded_ideals(&Limits::default()).unwrap();
        for i in &ideals {
            let g = r.graded_radical(i);
            prop_assert!(i.is_subset(&g));
            prop_assert_eq!(r.graded_radical(&g), g.clone());
            for j in &ideals {
                if i.is_subset(j) {
                    prop_assert!(g.is_subset(&r.graded_radical(j)));
                }
            }
        }
    }

    #[test]
    fn graded_radical_is_the_intersection_of_primes_above(desc in ring_strategy()) {
        let Some(r) = build(&desc) else { return Ok(()) };
        let s = PrimeSpectrum::new(r.clone(), &Limits::default()).unwrap();
        for i in s.lattice().iter() {
            prop_assert_eq!(s.xi(&s.variety(i)), r.graded_radical(i));
            prop_assert_eq!(r.graded_radical(i).elements().clone(), brute_force_radical(&r, i.elements()));
        }
        for p in s.points() {
            prop_assert_eq!(r.graded_radical(p), p.clone());
        }
    }

    #[test]
    fn radical_of_product_and_intersection(desc in ring_strategy()) {
        let Some(r) = build(&desc) else { return Ok(()) };
        let ideals = r.enumerate_graded_ideals(&Limits::default()).unwrap();
        for i in &ideals {
            for j in &ideals {
                let product = r.graded_radical(&r.ideal_product(i, j));
                let meet = r.graded_radical(&r.ideal_intersection(i, j));
                let both = r.ideal_intersection(&r.graded_radical(i), &r.graded_radical(j));
                prop_assert_eq!(&product, &meet);
                prop_assert_eq!(&meet, &both);
            }
        }
    }

    #[test]
    fn prime_criteria_agree(desc in ring_strategy()) {
        let Some(r) = build(&desc) else { return Ok(()) };
        let lattice = r.ideal_lattice(&Limits::default()).unwrap();
        for i in lattice.iter() {
            let element_level = r.is_graded_prime(i);
            prop_assert_eq!(element_level, r.is_graded_prime_by_ideals(i, &lattice));
            prop_assert_eq!(element_level, brute_force_is_prime(&r, i.elements()));
        }
    }

    #[test]
    fn lattice_is_complete_on_small_rings(desc in ring_strategy()) {
        let Some(r) = build(&desc) else { return Ok(()) };
        prop_assume!(r.size() <= 12);
        let got: Vec<_> = r.enumerate_graded_ideals(&Limits::default()).unwrap()
            .iter().map(|i| i.elements().clone()).collect();
        prop_assert_eq!(got, brute_force_graded_ideals(&r));
    }

    #[test]
    fn prime_topology_is_a_noetherian_topology_with_base(desc in ring_strategy()) {
        let Some(r) = build(&desc) else { return Ok(()) };
        let s = PrimeSpectrum::new(r, &Limits::default()).unwrap();
        let top = s.topology();
        prop_assert!(top.verify_axioms().is_ok());
        prop_assert!(top.is_base());
        prop_assert!(top.is_noetherian());
        prop_assert!(top.all_opens_compact());
    }

    #[test]
    fn zariski_socle_laws(desc in ring_strategy(), shift in 0usize..3, quotient in any::<bool>()) {
        let Some(r) = build(&desc) else { return Ok(()) };
        let order = r.group().order();
        let base = ModuleConstructor::RingAsModule { shift: Some(vec![shift % order]) };
        let desc = if quotient && r.size() > 2 {
            let g = r.hom_elements().iter().find(|&x| x != r.zero() && x != r.one()).unwrap();
            ModuleConstructor::Quotient { inner: Box::new(base), generators: vec![g] }
        } else {
            base
        };
        let m = Arc::new(build_module(&r, &desc, &Limits::default()).unwrap());
        let s = SecondSpectrum::new(m.clone(), &Limits::default()).unwrap();
        let subs = s.lattice().members();
        prop_assert!(s.zariski_socle(&m.zero_submodule()).is_zero());
        for n in subs {
            let z = s.zariski_socle(n);
            prop_assert_eq!(s.zariski_socle(&z), z.clone());
            prop_assert!(s.second_socle(n).is_subset(&z));
            let double = s.ann_in_module(s.ann_in_ring(n)).clone();
            prop_assert_eq!(s.v_s(n), s.v_s(&double));
            prop_assert_eq!(s.v_s(&double), s.v_s_star(&double));
            for k in subs {
                if n.is_subset(k) {
                    prop_assert!(z.is_subset(&s.zariski_socle(k)));
                }
                let sum = m.submodule_sum(n, k);
                prop_assert_eq!(
                    s.zariski_socle(&sum),
                    m.submodule_sum(&z, &s.zariski_socle(k))
                );
                prop_assert_eq!(s.v_s(n) == s.v_s(k), z == s.zariski_socle(k));
            }
        }
        prop_assert!(s.topology().verify_axioms().is_ok());
        prop_assert!(s.topology().is_base());
    }
}
