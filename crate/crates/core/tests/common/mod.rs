#![allow(dead_code)]

use std::sync::Arc;

use gradspec_core::{
    build_module, build_ring, ActionSpec, BitSet, FiniteAbelianGroup, GradedModule, GradedRing, Limits,
    ModuleConstructor, ModuleGrading, RingConstructor,
};

pub fn z2() -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(&[2]).unwrap()
}

pub fn ring(group: &FiniteAbelianGroup, desc: RingConstructor) -> Arc<GradedRing> {
    Arc::new(build_ring(group, &desc, &Limits::default()).unwrap())
}

/// Z_4, trivially graded by Z_2.
pub fn r_a() -> Arc<GradedRing> {
    ring(&z2(), RingConstructor::Zmod { n: 4 })
}

/// Z_2[u]/(u^2) with u in degree 1. Indices: 0, 1, u, 1+u.
pub fn r_b() -> Arc<GradedRing> {
    ring(&z2(), RingConstructor::TruncatedPoly { p: 2, d: 2, degree: vec![1] })
}

/// The group algebra Z_2[Z_2]. Indices: 0, 1, u, 1+u with u^2 = 1.
pub fn r_c() -> Arc<GradedRing> {
    ring(&z2(), RingConstructor::GroupAlgebra { p: 2 })
}

/// Z_6, trivially graded by Z_2.
pub fn r_d() -> Arc<GradedRing> {
    ring(&z2(), RingConstructor::Zmod { n: 6 })
}

pub fn module(ring: &Arc<GradedRing>, desc: ModuleConstructor) -> Arc<GradedModule> {
    Arc::new(build_module(ring, &desc, &Limits::default()).unwrap())
}

/// Z_2 x Z_2 over Z_4 with M_0 = {0} x Z_2 and M_1 = Z_2 x {0}.
pub fn m_a() -> Arc<GradedModule> {
    module(
        &r_a(),
        ModuleConstructor::CyclicProduct {
            factors: vec![2, 2],
            action: ActionSpec::ScalarMod,
            grading: ModuleGrading::Degrees(vec![vec![1], vec![0]]),
        },
    )
}

/// F x F over F = Z_2 with M_0 = F x {0} and M_1 = {0} x F.
pub fn m_b() -> Arc<GradedModule> {
    module(
        &ring(&z2(), RingConstructor::Zmod { n: 2 }),
        ModuleConstructor::CyclicProduct {
            factors: vec![2, 2],
            action: ActionSpec::ScalarMod,
            grading: ModuleGrading::Degrees(vec![vec![0], vec![1]]),
        },
    )
}

pub fn set(xs: &[usize]) -> BitSet {
    xs.iter().copied().collect()
}

/// Every subset of `0..n`, for small `n`.
pub fn all_subsets(n: usize) -> impl Iterator<Item = BitSet> {
    assert!(n <= 16);
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

/// Graded ideals by scanning all subsets against the raw definitions.
pub fn brute_force_graded_ideals(r: &GradedRing) -> Vec<BitSet> {
    let n = r.size();
    let mut out: Vec<BitSet> = all_subsets(n)
        .filter(|s| {
            s.contains(r.zero())
                && s.iter().all(|a| s.iter().all(|b| s.contains(r.add(a, b))))
                && s.iter().all(|a| (0..n).all(|x| s.contains(r.mul(x, a))))
                && s.iter().all(|a| (0..r.group().order()).all(|g| s.contains(r.component_of(a, g))))
        })
        .collect();
    out.sort();
    out
}

/// Primality straight from the definition over homogeneous pairs.
pub fn brute_force_is_prime(r: &GradedRing, ideal: &BitSet) -> bool {
    if ideal.len() == r.size() {
        return false;
    }
    let hom: Vec<usize> = (0..r.size()).filter(|&x| r.degree(x).is_some() || x == r.zero()).collect();
    hom.iter().all(|&a| {
        hom.iter().all(|&b| !ideal.contains(r.mul(a, b)) || ideal.contains(a) || ideal.contains(b))
    })
}

/// `Gr(I)` from the definition: every homogeneous component has a power in `I`.
pub fn brute_force_radical(r: &GradedRing, ideal: &BitSet) -> BitSet {
    let has_power = |x: usize| {
        let mut p = x;
        for _ in 0..=r.size() {
            if ideal.contains(p) {
                return true;
            }
            p = r.mul(p, x);
        }
        false
    };
    (0..r.size()).filter(|&x| (0..r.group().order()).all(|g| has_power(r.component_of(x, g)))).collect()
}
