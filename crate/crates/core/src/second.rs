//! The graded second spectrum `Spec_G^s(M)`, second and Zariski socles, the
//! natural map and the module predicates built on them.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::AlgebraError;
use crate::ideal::{GradedIdeal, QuotientRing};
use crate::module::GradedModule;
use crate::ring::{GradedRing, Limits};
use crate::spectrum::{for_each_combination, PrimeSpectrum};
use crate::submodule::{GradedSubmodule, SubmoduleLattice};
use crate::topology::{BasicOpen, SpectrumTopology};

/// A module with its submodule lattice, graded second submodules and the
/// annihilator correspondences between submodules and ring ideals.
///
/// Methods taking a `&GradedSubmodule` or `&GradedIdeal` expect a member of
/// this module's submodule lattice or its ring's ideal lattice, and panic
/// otherwise.
#[derive(Clone, Debug)]
pub struct SecondSpectrum {
    module: Arc<GradedModule>,
    ring_spectrum: PrimeSpectrum,
    lattice: SubmoduleLattice,
    /// Submodule index -> ring lattice index of `Ann_R(N)`.
    ann_r: Vec<usize>,
    /// Ring lattice index -> submodule index of `Ann_M(I)`.
    ann_m: Vec<usize>,
    /// Submodule indices of the second submodules.
    points: Vec<usize>,
    /// Ring lattice index -> points `S` with `I ⊆ Ann_R(S)`.
    vs_by_ideal: Vec<BitSet>,
    /// Ring lattice index -> submodule index of `T(vs_by_ideal)`.
    zsoc_by_ideal: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModulePredicates {
    pub is_faithful: bool,
    pub is_comultiplication: bool,
    pub is_weak_comultiplication: bool,
    pub is_secondless: bool,
}

/// `φ : Spec_G^s(M) -> Spec_G(R / Ann_R(M))`. Points of the codomain are
/// stored as the graded primes of `R` containing `Ann_R(M)`.
#[derive(Clone, Debug)]
pub struct NaturalMap {
    pub annihilator: GradedIdeal,
    pub quotient: QuotientRing,
    /// Ring spectrum point indices, in spectrum order.
    pub codomain: Vec<usize>,
    /// Second point index -> position in `codomain`.
    pub images: Vec<usize>,
}

impl NaturalMap {
    pub fn is_surjective(&self) -> bool {
        let hit: BitSet = self.images.iter().copied().collect();
        hit.len() == self.codomain.len()
    }

    /// `φ⁻¹(Y)` for a set of codomain positions.
    pub fn preimage(&self, codomain_points: &BitSet) -> BitSet {
        (0..self.images.len()).filter(|&k| codomain_points.contains(self.images[k])).collect()
    }

    /// `φ(Y)` as codomain positions.
    pub fn image(&self, points: &BitSet) -> BitSet {
        points.iter().map(|k| self.images[k]).collect()
    }
}

impl SecondSpectrum {
    pub fn new(module: Arc<GradedModule>, limits: &Limits) -> Result<Self, AlgebraError> {
        let ring_spectrum = PrimeSpectrum::new(module.ring_arc().clone(), limits)?;
        let lattice = module.submodule_lattice(limits)?;
        let ideals = ring_spectrum.lattice();
        let ann_r: Vec<usize> = lattice
            .iter()
            .map(|n| ideals.position_of(&module.ann_in_ring(n)).expect("annihilators of graded submodules are graded"))
            .collect();
        let ann_m: Vec<usize> = ideals
            .iter()
            .map(|i| lattice.position_of(&module.ann_in_module(i)).expect("annihilators of graded ideals are graded"))
            .collect();
        let points: Vec<usize> = (0..lattice.len()).filter(|&i| is_second_in(&module, lattice.get(i))).collect();
        let vs_by_ideal: Vec<BitSet> = ideals
            .iter()
            .map(|i| (0..points.len()).filter(|&k| i.is_subset(ideals.get(ann_r[points[k]]))).collect())
            .collect();
        let mut spectrum = Self {
            module,
            ring_spectrum,
            lattice,
            ann_r,
            ann_m,
            points,
            vs_by_ideal,
            zsoc_by_ideal: Vec::new(),
        };
        spectrum.zsoc_by_ideal = spectrum
            .vs_by_ideal
            .iter()
            .map(|y| spectrum.lattice.position_of(&spectrum.members_sum(y)).expect("sums of submodules are graded"))
            .collect();
        Ok(spectrum)
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn module_arc(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn ring(&self) -> &GradedRing {
        self.module.ring()
    }

    pub fn ring_spectrum(&self) -> &PrimeSpectrum {
        &self.ring_spectrum
    }

    pub fn lattice(&self) -> &SubmoduleLattice {
        &self.lattice
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, k: usize) -> &GradedSubmodule {
        self.lattice.get(self.points[k])
    }

    pub fn points(&self) -> impl Iterator<Item = &GradedSubmodule> + '_ {
        self.points.iter().map(|&i| self.lattice.get(i))
    }

    /// Lattice indices of the points.
    pub fn point_lattice_indices(&self) -> &[usize] {
        &self.points
    }

    pub fn everything(&self) -> BitSet {
        BitSet::full(self.points.len())
    }

    pub fn is_secondless(&self) -> bool {
        self.points.is_empty()
    }

    fn sub_index(&self, n: &GradedSubmodule) -> usize {
        assert_eq!(n.module_id(), self.module.id(), "submodule of another module");
        self.lattice.position_of(n).expect("graded submodule")
    }

    fn ideal_index(&self, i: &GradedIdeal) -> usize {
        assert_eq!(i.ring_id(), self.ring().id(), "ideal of another ring");
        self.ring_spectrum.lattice().position_of(i).expect("graded ideal")
    }

    /// `S ≠ 0` and `rS ∈ {S, 0}` for every homogeneous `r`.
    pub fn is_second(&self, n: &GradedSubmodule) -> bool {
        is_second_in(&self.module, n)
    }

    pub fn ann_in_ring(&self, n: &GradedSubmodule) -> &GradedIdeal {
        self.ring_spectrum.lattice().get(self.ann_r[self.sub_index(n)])
    }

    pub fn ann_in_module(&self, ideal: &GradedIdeal) -> &GradedSubmodule {
        self.lattice.get(self.ann_m[self.ideal_index(ideal)])
    }

    /// `V_G^s(I)`: points whose annihilator contains `I`.
    pub fn v_s_of_ideal(&self, ideal: &GradedIdeal) -> &BitSet {
        &self.vs_by_ideal[self.ideal_index(ideal)]
    }

    /// `V_G^s(N) = {S : Ann_R(N) ⊆ Ann_R(S)}`.
    pub fn v_s(&self, n: &GradedSubmodule) -> BitSet {
        self.vs_by_ideal[self.ann_r[self.sub_index(n)]].clone()
    }

    /// `V_G^{s*}(N) = {S : S ⊆ N}`.
    pub fn v_s_star(&self, n: &GradedSubmodule) -> BitSet {
        (0..self.points.len()).filter(|&k| self.point(k).is_subset(n)).collect()
    }

    /// `T(Y)`, the sum of the points in `Y`; `0` when `Y` is empty.
    pub fn members_sum(&self, y: &BitSet) -> GradedSubmodule {
        let m = &self.module;
        let full = m.size();
        let mut acc = m.additive().trivial_subgroup();
        for k in y.iter() {
            if acc.len() == full {
                break;
            }
            let s = self.point(k).elements();
            if !s.is_subset(&acc) {
                acc = m.additive().sum(&acc, s);
            }
        }
        self.lattice.get(self.lattice.position(&acc).expect("sums of submodules are graded")).clone()
    }

    /// `soc_G(N) = T(V_G^{s*}(N))`.
    pub fn second_socle(&self, n: &GradedSubmodule) -> GradedSubmodule {
        self.members_sum(&self.v_s_star(n))
    }

    /// `Z.soc_G(N) = T(V_G^s(N))`.
    pub fn zariski_socle(&self, n: &GradedSubmodule) -> GradedSubmodule {
        self.lattice.get(self.zsoc_by_ideal[self.ann_r[self.sub_index(n)]]).clone()
    }

    /// `Z.soc_G(Ann_M(I))`, looked up through the ideal lattice.
    pub fn zariski_socle_of_ann(&self, ideal: &GradedIdeal) -> &GradedSubmodule {
        let a = self.ann_m[self.ideal_index(ideal)];
        self.lattice.get(self.zsoc_by_ideal[self.ann_r[a]])
    }

    /// The sum of all second submodules contained in `N`, recomputed from
    /// the definition without any cache.
    pub fn second_socle_by_definition(&self, n: &GradedSubmodule) -> BitSet {
        let m = &self.module;
        self.lattice
            .iter()
            .filter(|s| s.is_subset(n) && is_second_in(m, s))
            .fold(m.additive().trivial_subgroup(), |acc, s| m.additive().sum(&acc, s.elements()))
    }

    /// The sum of all second `S` with `Ann_R(N) ⊆ Ann_R(S)`, recomputed from
    /// the definition without any cache.
    pub fn zariski_socle_by_definition(&self, n: &GradedSubmodule) -> BitSet {
        let m = &self.module;
        let ann = m.ann_in_ring(n);
        self.lattice
            .iter()
            .filter(|s| is_second_in(m, s) && ann.is_subset(&m.ann_in_ring(s)))
            .fold(m.additive().trivial_subgroup(), |acc, s| m.additive().sum(&acc, s.elements()))
    }

    pub fn natural_map(&self) -> Result<NaturalMap, AlgebraError> {
        if self.module.is_zero() {
            return Err(AlgebraError::ZeroModule);
        }
        let annihilator = self.ann_in_ring(&self.lattice.get(self.lattice.len() - 1).clone()).clone();
        let quotient = self.ring().quotient_ring(&annihilator)?;
        let codomain: Vec<usize> = self.ring_spectrum.variety(&annihilator).to_vec();
        let images = (0..self.points.len())
            .map(|k| {
                let ann = self.ring_spectrum.lattice().get(self.ann_r[self.points[k]]);
                let p = self.ring_spectrum.point_index(ann).expect("annihilators of second submodules are prime");
                codomain.iter().position(|&c| c == p).expect("Ann_R(S) contains Ann_R(M)")
            })
            .collect();
        Ok(NaturalMap { annihilator, quotient, codomain, images })
    }

    pub fn is_secondful(&self) -> Result<bool, AlgebraError> {
        Ok(self.natural_map()?.is_surjective())
    }

    /// Closed sets `V_G^s(N)`; each keeps the largest submodule defining it.
    pub fn topology(&self) -> SpectrumTopology {
        let closed = self
            .lattice
            .iter()
            .enumerate()
            .map(|(i, n)| (self.vs_by_ideal[self.ann_r[i]].clone(), i, n.len()));
        SpectrumTopology::new(self.points.len(), closed, self.basic_open_x())
    }

    /// `X_r^s = Spec_G^s(M) − V_G^s(Ann_M(r))` for `r ∈ h(R)`, one per
    /// distinct point set.
    pub fn basic_open_x(&self) -> Vec<BasicOpen> {
        let all = self.everything();
        let mut out: Vec<BasicOpen> = Vec::new();
        for r in self.ring().hom_elements() {
            let points = all.difference(&self.v_s(&self.module.ann_of_element(r)));
            if !out.iter().any(|b| b.points == points) {
                out.push(BasicOpen { points, element: r });
            }
        }
        out
    }

    /// The family `{V_G^{s*}(N)}`, deduplicated and canonically ordered.
    pub fn star_family(&self) -> Vec<BitSet> {
        let mut family: Vec<BitSet> = self.lattice.iter().map(|n| self.v_s_star(n)).collect();
        family.sort();
        family.dedup();
        family
    }

    /// Whether the `V_G^{s*}` family is closed under pairwise union.
    pub fn is_cotop(&self) -> bool {
        let family = self.star_family();
        let set: std::collections::HashSet<&BitSet> = family.iter().collect();
        family.iter().all(|a| family.iter().all(|b| set.contains(&a.union(b))))
    }

    pub fn is_noetherian_space(&self) -> bool {
        self.topology().is_noetherian()
    }

    /// Every graded submodule is `Ann_M(I)` for some graded ideal `I`.
    pub fn is_comultiplication(&self) -> bool {
        let hit: BitSet = self.ann_m.iter().copied().collect();
        hit.len() == self.lattice.len()
    }

    /// `N = Ann_M(Ann_R(N))` for every graded submodule.
    pub fn is_comultiplication_by_double_annihilator(&self) -> bool {
        (0..self.lattice.len()).all(|i| self.ann_m[self.ann_r[i]] == i)
    }

    /// Secondless, or every second submodule is `Ann_M(I)` for some `I`.
    pub fn is_weak_comultiplication(&self) -> bool {
        let hit: BitSet = self.ann_m.iter().copied().collect();
        self.points.iter().all(|&i| hit.contains(i))
    }

    /// `S = Ann_M(Ann_R(S))` for every second submodule.
    pub fn is_weak_comultiplication_by_double_annihilator(&self) -> bool {
        self.points.iter().all(|&i| self.ann_m[self.ann_r[i]] == i)
    }

    pub fn predicates(&self) -> ModulePredicates {
        ModulePredicates {
            is_faithful: self.module.is_faithful(),
            is_comultiplication: self.is_comultiplication(),
            is_weak_comultiplication: self.is_weak_comultiplication(),
            is_secondless: self.is_secondless(),
        }
    }

    /// A minimal-cardinality set of homogeneous ring elements generating an
    /// ideal `I` with `Z.soc_G(N) = Z.soc_G(Ann_M(I))`, first in canonical
    /// order among those of that size. Always found on finite modules, since
    /// the generators of `Ann_R(N)` qualify.
    pub fn rfg_star_witness(&self, n: &GradedSubmodule) -> Option<Vec<usize>> {
        let target = self.zsoc_by_ideal[self.ann_r[self.sub_index(n)]];
        let ring = self.ring();
        let mut candidates: Vec<(usize, BitSet)> = Vec::new();
        for r in ring.hom_elements() {
            if r == ring.zero() {
                continue;
            }
            let ann = self.module.ann_of_element(r).elements().clone();
            if !candidates.iter().any(|(_, a)| *a == ann) {
                candidates.push((r, ann));
            }
        }
        let full = self.module.full();
        // Candidates matching the generators of Ann_R(N) always qualify.
        let bound = self.ann_in_ring(n).hom_generators().len().min(candidates.len());
        for size in 0..=bound {
            let mut found = None;
            for_each_combination(candidates.len(), size, |picked| {
                let a = picked.iter().fold(full.clone(), |acc, &i| acc.intersection(&candidates[i].1));
                let idx = self.lattice.position(&a).expect("intersections of annihilators are graded");
                if self.zsoc_by_ideal[self.ann_r[idx]] == target {
                    let mut gens: Vec<usize> = picked.iter().map(|&i| candidates[i].0).collect();
                    gens.sort_unstable();
                    found = Some(gens);
                }
                found.is_some()
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Writes a Zariski socle submodule `N` as `Σ Ann_M(p_i)` over the
    /// minimal graded prime divisors `p_i` of `Gr(Ann_R(N))`; `[]` for `N = 0`.
    pub fn zariski_socle_decomposition(&self, n: &GradedSubmodule) -> Result<Vec<GradedSubmodule>, AlgebraError> {
        if !self.is_secondful()? {
            return Err(AlgebraError::PreconditionFailed("module is not graded secondful".into()));
        }
        if !self.is_weak_comultiplication() {
            return Err(AlgebraError::PreconditionFailed("module is not graded weak comultiplication".into()));
        }
        if self.zariski_socle(n) != *n {
            return Err(AlgebraError::PreconditionFailed("submodule is not a Zariski socle submodule".into()));
        }
        if !self.ring_spectrum.is_noetherian_space() {
            return Err(AlgebraError::PreconditionFailed("graded prime spectrum is not Noetherian".into()));
        }
        if n.is_zero() {
            return Ok(Vec::new());
        }
        let ring = self.ring();
        let rad = ring.graded_radical(self.ann_in_ring(n));
        Ok(self.ring_spectrum.minimal_prime_divisors(&rad).iter().map(|p| self.ann_in_module(p).clone()).collect())
    }
}

fn is_second_in(module: &GradedModule, n: &GradedSubmodule) -> bool {
    if n.is_zero() {
        return false;
    }
    let second = module.ring().hom_elements().iter().all(|r| {
        let image = module.scaled(r, n.elements());
        image.len() == 1 || image == *n.elements()
    });
    debug_assert!(!second || module.ring().is_graded_prime(&module.ann_in_ring(n)));
    second
}
