//! The graded prime spectrum `Spec_G(R)` with its Zariski topology.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::AlgebraError;
use crate::ideal::{GradedIdeal, IdealLattice};
use crate::ring::{GradedRing, Limits};
use crate::topology::{BasicOpen, SpectrumTopology};

/// All graded primes of a ring, canonically ordered.
pub fn graded_prime_spectrum(ring: &GradedRing, limits: &Limits) -> Result<Vec<GradedIdeal>, AlgebraError> {
    let lattice = ring.ideal_lattice(limits)?;
    Ok(lattice.iter().filter(|i| ring.is_graded_prime(i)).cloned().collect())
}

/// A ring together with its graded ideal lattice and graded primes.
///
/// Point sets are `BitSet`s of indices into [`PrimeSpectrum::points`].
#[derive(Clone, Debug)]
pub struct PrimeSpectrum {
    ring: Arc<GradedRing>,
    lattice: IdealLattice,
    points: Vec<GradedIdeal>,
    /// `V(I)` for every lattice member.
    varieties: Vec<BitSet>,
}

impl PrimeSpectrum {
    pub fn new(ring: Arc<GradedRing>, limits: &Limits) -> Result<Self, AlgebraError> {
        let lattice = ring.ideal_lattice(limits)?;
        let points: Vec<GradedIdeal> = lattice.iter().filter(|i| ring.is_graded_prime(i)).cloned().collect();
        let varieties = lattice
            .iter()
            .map(|i| (0..points.len()).filter(|&k| i.is_subset(&points[k])).collect())
            .collect();
        Ok(Self { ring, lattice, points, varieties })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    pub fn points(&self) -> &[GradedIdeal] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn everything(&self) -> BitSet {
        BitSet::full(self.points.len())
    }

    pub fn point_index(&self, prime: &GradedIdeal) -> Option<usize> {
        self.points.iter().position(|p| p == prime)
    }

    /// `V_G^R(I)`.
    pub fn variety(&self, ideal: &GradedIdeal) -> BitSet {
        match self.lattice.position_of(ideal) {
            Some(i) => self.varieties[i].clone(),
            None => (0..self.points.len()).filter(|&k| ideal.is_subset(&self.points[k])).collect(),
        }
    }

    pub fn variety_at(&self, lattice_index: usize) -> &BitSet {
        &self.varieties[lattice_index]
    }

    /// `ξ(Y)`, the intersection of the primes in `Y`; `R` when `Y` is empty.
    pub fn xi(&self, points: &BitSet) -> GradedIdeal {
        let ring = self.ring();
        points.iter().fold(ring.unit_ideal(), |acc, k| ring.ideal_intersection(&acc, &self.points[k]))
    }

    /// `Cl(Y) = V(ξ(Y))`.
    pub fn closure(&self, points: &BitSet) -> BitSet {
        self.variety(&self.xi(points))
    }

    pub fn is_irreducible(&self, points: &BitSet) -> bool {
        self.topology().is_irreducible(points)
    }

    /// Graded primes minimal over `I`.
    pub fn minimal_prime_divisors(&self, ideal: &GradedIdeal) -> Vec<GradedIdeal> {
        let over: Vec<&GradedIdeal> = self.variety(ideal).iter().map(|k| &self.points[k]).collect();
        over.iter()
            .filter(|p| !over.iter().any(|q| q.len() < p.len() && q.is_subset(p)))
            .map(|p| (*p).clone())
            .collect()
    }

    /// Irreducible components of the subspace `V(I)`, as `V(p)` for the
    /// minimal prime divisors `p`; ordered by descending cardinality, then
    /// canonically.
    pub fn irreducible_components_of_variety(&self, ideal: &GradedIdeal) -> Vec<BitSet> {
        let mut comps: Vec<BitSet> = self.minimal_prime_divisors(ideal).iter().map(|p| self.variety(p)).collect();
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        comps
    }

    /// Minimal prime divisors `p_1, .., p_n` with `∩ p_i = Gr(I)`; empty for
    /// `I = R`.
    pub fn radical_decomposition(&self, ideal: &GradedIdeal) -> Vec<GradedIdeal> {
        if !self.ring.is_proper(ideal) {
            return Vec::new();
        }
        self.minimal_prime_divisors(ideal)
    }

    /// A minimal-cardinality set `J ⊆ h(I)` with `Gr(I) = Gr(<J>)`, first in
    /// canonical order among those of that size.
    ///
    /// Candidates are pruned by which primes outside `V(I)` they avoid; each
    /// accepted witness is confirmed by computing both radicals directly.
    pub fn rfg_witness(&self, ideal: &GradedIdeal) -> Option<Vec<usize>> {
        let ring = self.ring();
        let target = ring.graded_radical(ideal);
        let outside = self.everything().difference(&self.variety(ideal));
        let mut candidates: Vec<(usize, BitSet)> = Vec::new();
        for a in ideal.elements().intersection(ring.hom_elements()).iter() {
            if a == ring.zero() {
                continue;
            }
            let avoids: BitSet = outside.iter().filter(|&k| !self.points[k].contains(a)).collect();
            if !candidates.iter().any(|(_, c)| *c == avoids) {
                candidates.push((a, avoids));
            }
        }
        let confirm = |picked: &[usize]| {
            let gens: Vec<usize> = picked.iter().map(|&i| candidates[i].0).collect();
            let generated = ring.ideal_generated(&gens).expect("homogeneous candidates");
            (ring.graded_radical(&generated) == target).then(|| {
                let mut g = gens;
                g.sort_unstable();
                g
            })
        };
        for size in 0..=candidates.len() {
            let mut found = None;
            for_each_combination(candidates.len(), size, |picked| {
                let covered = picked.iter().fold(BitSet::new(), |acc, &i| acc.union(&candidates[i].1));
                if covered == outside {
                    found = confirm(picked);
                }
                found.is_some()
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Basic opens `D_r = Spec_G(R) − V(Rr)` for `r ∈ h(R)`, one per distinct
    /// point set (first element in index order).
    pub fn basic_open_sets(&self) -> Vec<BasicOpen> {
        let ring = self.ring();
        let all = self.everything();
        let mut out: Vec<BasicOpen> = Vec::new();
        for r in ring.hom_elements() {
            let principal = ring.ideal_generated(&[r]).expect("homogeneous");
            let points = all.difference(&self.variety(&principal));
            if !out.iter().any(|b| b.points == points) {
                out.push(BasicOpen { points, element: r });
            }
        }
        out
    }

    /// Closed sets `V(I)` over all graded ideals; each keeps `ξ` of its point
    /// set (the largest defining ideal) as its representative.
    pub fn topology(&self) -> SpectrumTopology {
        let closed = self.lattice.iter().enumerate().map(|(i, ideal)| (self.varieties[i].clone(), i, ideal.len()));
        SpectrumTopology::new(self.points.len(), closed, self.basic_open_sets())
    }

    pub fn is_noetherian_space(&self) -> bool {
        self.topology().is_noetherian()
    }
}

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let i = i - 1;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
