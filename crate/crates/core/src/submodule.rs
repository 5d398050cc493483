//! Graded submodules, annihilators, the submodule lattice and quotient modules.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::error::AlgebraError;
use crate::ideal::{join_closure, GradedIdeal};
use crate::module::{GradedModule, ModuleTables};
use crate::ring::Limits;

/// A graded submodule of a particular module, with a homogeneous generator
/// witness. Identity is the owning module plus the element set.
#[derive(Clone, Debug)]
pub struct GradedSubmodule {
    module_id: u64,
    elements: BitSet,
    hom_generators: Vec<usize>,
}

impl GradedSubmodule {
    pub fn module_id(&self) -> u64 {
        self.module_id
    }

    pub fn elements(&self) -> &BitSet {
        &self.elements
    }

    pub fn hom_generators(&self) -> &[usize] {
        &self.hom_generators
    }

    pub fn contains(&self, m: usize) -> bool {
        self.elements.contains(m)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset(&self, other: &GradedSubmodule) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements.to_vec()
    }
}

impl PartialEq for GradedSubmodule {
    fn eq(&self, other: &Self) -> bool {
        self.module_id == other.module_id && self.elements == other.elements
    }
}

impl Eq for GradedSubmodule {}

impl Hash for GradedSubmodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.module_id.hash(state);
        self.elements.hash(state);
    }
}

impl Ord for GradedSubmodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements).then(self.module_id.cmp(&other.module_id))
    }
}

impl PartialOrd for GradedSubmodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl GradedModule {
    /// `R m`.
    pub fn cyclic(&self, m: usize) -> BitSet {
        self.ring().elements().map(|r| self.act(r, m)).collect()
    }

    /// `r N` for a set `N`.
    pub fn scaled(&self, r: usize, set: &BitSet) -> BitSet {
        set.iter().map(|m| self.act(r, m)).collect()
    }

    pub fn is_submodule(&self, set: &BitSet) -> bool {
        self.additive().is_subgroup(set)
            && set.iter().all(|m| self.ring().elements().all(|r| set.contains(self.act(r, m))))
    }

    pub fn is_graded_submodule(&self, set: &BitSet) -> bool {
        self.is_submodule(set)
            && set.iter().all(|m| self.ring().group().elements().all(|g| set.contains(self.component_of(m, g))))
    }

    pub(crate) fn wrap_submodule(&self, elements: BitSet) -> GradedSubmodule {
        let mut current = self.additive().trivial_subgroup();
        let mut gens = Vec::new();
        for h in elements.intersection(self.hom_elements()).iter() {
            if !current.contains(h) {
                current = self.additive().sum(&current, &self.cyclic(h));
                gens.push(h);
            }
        }
        debug_assert_eq!(current, elements);
        GradedSubmodule { module_id: self.id(), elements, hom_generators: gens }
    }

    pub fn graded_submodule(&self, set: BitSet) -> Result<GradedSubmodule, AlgebraError> {
        if let Some(m) = set.iter().find(|&m| m >= self.size()) {
            return Err(AlgebraError::ElementOutOfRange { index: m, size: self.size() });
        }
        if !self.is_submodule(&set) {
            return Err(AlgebraError::NotGradedSubmodule("not a submodule".into()));
        }
        if !self.is_graded_submodule(&set) {
            return Err(AlgebraError::NotGradedSubmodule(
                "some member has a homogeneous component outside the set".into(),
            ));
        }
        Ok(self.wrap_submodule(set))
    }

    /// Smallest submodule containing the homogeneous generators `gens`.
    pub fn submodule_generated(&self, gens: &[usize]) -> Result<GradedSubmodule, AlgebraError> {
        for &g in gens {
            self.check_element(g)?;
            if !self.is_homogeneous(g) {
                return Err(AlgebraError::NonHomogeneousGenerator(self.label(g).to_string()));
            }
        }
        let elements =
            gens.iter().fold(self.additive().trivial_subgroup(), |acc, &g| self.additive().sum(&acc, &self.cyclic(g)));
        Ok(GradedSubmodule { module_id: self.id(), elements, hom_generators: gens.to_vec() })
    }

    pub fn zero_submodule(&self) -> GradedSubmodule {
        GradedSubmodule { module_id: self.id(), elements: self.additive().trivial_subgroup(), hom_generators: vec![] }
    }

    pub fn whole(&self) -> GradedSubmodule {
        self.wrap_submodule(self.full())
    }

    fn owns(&self, sub: &GradedSubmodule) -> Result<(), AlgebraError> {
        if sub.module_id == self.id() {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn submodule_sum(&self, a: &GradedSubmodule, b: &GradedSubmodule) -> GradedSubmodule {
        let mut gens = a.hom_generators.clone();
        gens.extend(b.hom_generators.iter().filter(|g| !a.hom_generators.contains(g)));
        GradedSubmodule {
            module_id: self.id(),
            elements: self.additive().sum(&a.elements, &b.elements),
            hom_generators: gens,
        }
    }

    pub fn submodule_intersection(&self, a: &GradedSubmodule, b: &GradedSubmodule) -> GradedSubmodule {
        self.wrap_submodule(a.elements.intersection(&b.elements))
    }

    /// `{r in R : r N = 0}` for a generating set of `N`.
    fn annihilator_of(&self, gens: &[usize]) -> BitSet {
        self.ring().elements().filter(|&r| gens.iter().all(|&m| self.act(r, m) == self.zero())).collect()
    }

    /// `Ann_R(N)`, a graded ideal.
    pub fn ann_in_ring(&self, sub: &GradedSubmodule) -> GradedIdeal {
        self.ring().wrap_ideal(self.annihilator_of(&sub.hom_generators))
    }

    /// `Ann_M(I) = {m : I m = 0}`, a graded submodule.
    pub fn ann_in_module(&self, ideal: &GradedIdeal) -> GradedSubmodule {
        let set = self
            .elements()
            .filter(|&m| ideal.hom_generators().iter().all(|&r| self.act(r, m) == self.zero()))
            .collect();
        self.wrap_submodule(set)
    }

    /// `Ann_M(r) = {m : r m = 0}`.
    pub fn ann_of_element(&self, r: usize) -> GradedSubmodule {
        self.wrap_submodule(self.elements().filter(|&m| self.act(r, m) == self.zero()).collect())
    }

    /// `Ann_{h(R)}(M)`.
    pub fn ann_hom(&self) -> BitSet {
        let all = self.full();
        self.ring().hom_elements().iter().filter(|&r| self.scaled(r, &all).len() == 1).collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.ann_hom().len() == 1
    }

    /// Every graded submodule, as the join-closure of homogeneous cyclic
    /// submodules.
    pub fn submodule_lattice(&self, limits: &Limits) -> Result<SubmoduleLattice, AlgebraError> {
        let cyclics: Vec<BitSet> = {
            let mut cs: Vec<BitSet> = self.hom_elements().iter().map(|m| self.cyclic(m)).collect();
            cs.sort();
            cs.dedup();
            cs
        };
        let sets = join_closure(&self.additive().trivial_subgroup(), &cyclics, limits.max_lattice, |a, b| {
            self.additive().sum(a, b)
        })
        .ok_or(AlgebraError::SizeExceeded { what: "graded submodule lattice", limit: limits.max_lattice })?;
        Ok(SubmoduleLattice::new(sets.into_iter().map(|s| self.wrap_submodule(s)).collect()))
    }

    pub fn enumerate_graded_submodules(&self, limits: &Limits) -> Result<Vec<GradedSubmodule>, AlgebraError> {
        Ok(self.submodule_lattice(limits)?.members)
    }

    /// `M / N`, elements labelled by their minimal coset representative.
    pub fn quotient(&self, sub: &GradedSubmodule, limits: &Limits) -> Result<GradedModule, AlgebraError> {
        self.owns(sub)?;
        let reps = self.additive().coset_representatives(&sub.elements);
        let mut classes = reps.clone();
        classes.sort_unstable();
        classes.dedup();
        let mut class_of_rep = vec![usize::MAX; self.size()];
        for (i, &r) in classes.iter().enumerate() {
            class_of_rep[r] = i;
        }
        let projection: Vec<usize> = reps.iter().map(|&r| class_of_rep[r]).collect();
        let n = classes.len();
        let tables = ModuleTables {
            size: n,
            add: (0..n * n).map(|k| projection[self.add(classes[k / n], classes[k % n])] as u16).collect(),
            zero: projection[self.zero()],
            action: (0..self.ring().size() * n)
                .map(|k| projection[self.act(k / n, classes[k % n])] as u16)
                .collect(),
            components: self.components().iter().map(|c| c.iter().map(|m| projection[m]).collect()).collect(),
            labels: Some(classes.iter().map(|&r| format!("[{}]", self.label(r))).collect()),
        };
        GradedModule::from_tables(self.ring_arc().clone(), tables, limits)
    }
}

/// The canonically ordered list of all graded submodules of a module.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    members: Vec<GradedSubmodule>,
    index: HashMap<BitSet, usize>,
}

impl SubmoduleLattice {
    fn new(members: Vec<GradedSubmodule>) -> Self {
        let index = members.iter().enumerate().map(|(i, n)| (n.elements.clone(), i)).collect();
        Self { members, index }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GradedSubmodule> {
        self.members.iter()
    }

    pub fn get(&self, i: usize) -> &GradedSubmodule {
        &self.members[i]
    }

    pub fn members(&self) -> &[GradedSubmodule] {
        &self.members
    }

    pub fn position(&self, elements: &BitSet) -> Option<usize> {
        self.index.get(elements).copied()
    }

    pub fn position_of(&self, sub: &GradedSubmodule) -> Option<usize> {
        self.position(&sub.elements)
    }
}
