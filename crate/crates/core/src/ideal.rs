//! Graded ideals: generation, lattice enumeration, radicals, primality,
//! maximal ideals, Jacobson radicals and quotients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::error::AlgebraError;
use crate::ring::{GradedRing, Limits, RingTables};

/// A graded ideal of a particular ring, with a homogeneous generator witness.
///
/// Equality, hashing and ordering only look at the owning ring and the
/// element set; the generator list is a witness, not identity.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    ring_id: u64,
    elements: BitSet,
    hom_generators: Vec<usize>,
}

impl GradedIdeal {
    pub fn ring_id(&self) -> u64 {
        self.ring_id
    }

    pub fn elements(&self) -> &BitSet {
        &self.elements
    }

    pub fn hom_generators(&self) -> &[usize] {
        &self.hom_generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset(&self, other: &GradedIdeal) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements.to_vec()
    }
}

impl PartialEq for GradedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring_id == other.ring_id && self.elements == other.elements
    }
}

impl Eq for GradedIdeal {}

impl Hash for GradedIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring_id.hash(state);
        self.elements.hash(state);
    }
}

impl Ord for GradedIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements).then(self.ring_id.cmp(&other.ring_id))
    }
}

impl PartialOrd for GradedIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Product,
    Intersection,
}

impl GradedRing {
    /// `R a`, an ideal for any `a`.
    pub fn principal(&self, a: usize) -> BitSet {
        self.elements().map(|r| self.mul(r, a)).collect()
    }

    pub fn is_ideal(&self, set: &BitSet) -> bool {
        self.additive().is_subgroup(set) && set.iter().all(|x| self.elements().all(|r| set.contains(self.mul(r, x))))
    }

    pub fn is_graded_ideal(&self, set: &BitSet) -> bool {
        self.is_ideal(set)
            && set.iter().all(|x| self.group().elements().all(|g| set.contains(self.component_of(x, g))))
    }

    /// Wraps a known graded ideal, recomputing a canonical generator witness:
    /// homogeneous members in index order, kept when not already generated.
    pub(crate) fn wrap_ideal(&self, elements: BitSet) -> GradedIdeal {
        let mut current = self.additive().trivial_subgroup();
        let mut gens = Vec::new();
        for h in elements.intersection(self.hom_elements()).iter() {
            if !current.contains(h) {
                current = self.additive().sum(&current, &self.principal(h));
                gens.push(h);
            }
        }
        debug_assert_eq!(current, elements);
        GradedIdeal { ring_id: self.id(), elements, hom_generators: gens }
    }

    pub fn graded_ideal(&self, set: BitSet) -> Result<GradedIdeal, AlgebraError> {
        if let Some(x) = set.iter().find(|&x| x >= self.size()) {
            return Err(AlgebraError::ElementOutOfRange { index: x, size: self.size() });
        }
        if !self.is_ideal(&set) {
            return Err(AlgebraError::NotGradedIdeal("not an ideal".into()));
        }
        if !self.is_graded_ideal(&set) {
            return Err(AlgebraError::NotGradedIdeal(
                "some member has a homogeneous component outside the set".into(),
            ));
        }
        Ok(self.wrap_ideal(set))
    }

    /// Smallest ideal containing the homogeneous generators `gens`.
    pub fn ideal_generated(&self, gens: &[usize]) -> Result<GradedIdeal, AlgebraError> {
        for &g in gens {
            self.check_element(g)?;
            if !self.is_homogeneous(g) {
                return Err(AlgebraError::NonHomogeneousGenerator(self.label(g).to_string()));
            }
        }
        let elements = gens
            .iter()
            .fold(self.additive().trivial_subgroup(), |acc, &g| self.additive().sum(&acc, &self.principal(g)));
        Ok(GradedIdeal { ring_id: self.id(), elements, hom_generators: gens.to_vec() })
    }

    pub fn zero_ideal(&self) -> GradedIdeal {
        GradedIdeal { ring_id: self.id(), elements: self.additive().trivial_subgroup(), hom_generators: vec![] }
    }

    pub fn unit_ideal(&self) -> GradedIdeal {
        GradedIdeal { ring_id: self.id(), elements: self.full(), hom_generators: vec![self.one()] }
    }

    pub fn is_proper(&self, ideal: &GradedIdeal) -> bool {
        ideal.len() < self.size()
    }

    fn owns(&self, ideal: &GradedIdeal) -> Result<(), AlgebraError> {
        if ideal.ring_id == self.id() {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn ideal_combine(
        &self,
        mode: CombineMode,
        a: &GradedIdeal,
        b: &GradedIdeal,
    ) -> Result<GradedIdeal, AlgebraError> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(match mode {
            CombineMode::Sum => self.ideal_sum(a, b),
            CombineMode::Product => self.ideal_product(a, b),
            CombineMode::Intersection => self.ideal_intersection(a, b),
        })
    }

    pub fn ideal_sum(&self, a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
        let mut gens = a.hom_generators.clone();
        gens.extend(b.hom_generators.iter().filter(|g| !a.hom_generators.contains(g)));
        GradedIdeal {
            ring_id: self.id(),
            elements: self.additive().sum(&a.elements, &b.elements),
            hom_generators: gens,
        }
    }

    /// The ideal generated by all products `ab`; generated by products of
    /// the two generator witnesses.
    pub fn ideal_product(&self, a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
        let mut gens: Vec<usize> = Vec::new();
        for &x in &a.hom_generators {
            for &y in &b.hom_generators {
                let p = self.mul(x, y);
                if p != self.zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        self.ideal_generated(&gens).expect("products of homogeneous elements are homogeneous")
    }

    pub fn ideal_intersection(&self, a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
        self.wrap_ideal(a.elements.intersection(&b.elements))
    }

    /// Whether some positive power of `x` lies in `ideal`. Exponents up to
    /// the carrier size suffice: the power sequence is eventually periodic.
    pub fn power_in(&self, x: usize, ideal: &BitSet) -> bool {
        let mut p = x;
        for _ in 0..self.size() {
            if ideal.contains(p) {
                return true;
            }
            p = self.mul(p, x);
        }
        false
    }

    /// `r` in the ordinary radical of `ideal`, for homogeneous `r`.
    pub fn hom_in_radical(&self, r: usize, ideal: &GradedIdeal) -> bool {
        debug_assert!(self.is_homogeneous(r));
        self.power_in(r, &ideal.elements)
    }

    /// `Gr(I)`: elements all of whose homogeneous components have a power in `I`.
    pub fn graded_radical(&self, ideal: &GradedIdeal) -> GradedIdeal {
        let mut rad_hom = vec![false; self.size()];
        for h in self.hom_elements() {
            rad_hom[h] = self.power_in(h, &ideal.elements);
        }
        let elements: BitSet = self
            .elements()
            .filter(|&x| self.group().elements().all(|g| rad_hom[self.component_of(x, g)]))
            .collect();
        self.wrap_ideal(elements)
    }

    pub fn is_graded_radical(&self, ideal: &GradedIdeal) -> bool {
        self.graded_radical(ideal) == *ideal
    }

    /// Element-level test: proper, and `ab in I` implies `a in I` or `b in I`
    /// for homogeneous `a`, `b`.
    pub fn is_graded_prime(&self, ideal: &GradedIdeal) -> bool {
        if !self.is_proper(ideal) {
            return false;
        }
        let outside: Vec<usize> = self.hom_elements().difference(&ideal.elements).to_vec();
        outside.iter().all(|&a| outside.iter().all(|&b| !ideal.contains(self.mul(a, b))))
    }

    /// Ideal-level test over a lattice: proper, and `AB ⊆ I` implies
    /// `A ⊆ I` or `B ⊆ I` for graded ideals `A`, `B`.
    pub fn is_graded_prime_by_ideals(&self, ideal: &GradedIdeal, lattice: &IdealLattice) -> bool {
        if !self.is_proper(ideal) {
            return false;
        }
        let escaping: Vec<&GradedIdeal> = lattice.iter().filter(|a| !a.is_subset(ideal)).collect();
        escaping.iter().all(|a| {
            escaping.iter().all(|b| {
                !a.hom_generators
                    .iter()
                    .all(|&x| b.hom_generators.iter().all(|&y| ideal.contains(self.mul(x, y))))
            })
        })
    }

    /// Every graded ideal, as the join-closure of homogeneous principal ideals.
    pub fn ideal_lattice(&self, limits: &Limits) -> Result<IdealLattice, AlgebraError> {
        let principals: Vec<BitSet> = {
            let mut ps: Vec<BitSet> = self.hom_elements().iter().map(|a| self.principal(a)).collect();
            ps.sort();
            ps.dedup();
            ps
        };
        let sets = join_closure(&self.additive().trivial_subgroup(), &principals, limits.max_lattice, |a, b| {
            self.additive().sum(a, b)
        })
        .ok_or(AlgebraError::SizeExceeded { what: "graded ideal lattice", limit: limits.max_lattice })?;
        Ok(IdealLattice::new(sets.into_iter().map(|s| self.wrap_ideal(s)).collect()))
    }

    pub fn enumerate_graded_ideals(&self, limits: &Limits) -> Result<Vec<GradedIdeal>, AlgebraError> {
        Ok(self.ideal_lattice(limits)?.ideals)
    }

    pub fn is_graded_field(&self, limits: &Limits) -> Result<bool, AlgebraError> {
        Ok(self.ideal_lattice(limits)?.len() == 2)
    }

    /// `J(R_e)`: the intersection of the maximal ideals of the (ungraded)
    /// subring `R_e`.
    pub fn jacobson_radical_e(&self) -> BitSet {
        let re = self.identity_component();
        let principals: Vec<BitSet> = {
            let mut ps: Vec<BitSet> =
                re.iter().map(|a| re.iter().map(|r| self.mul(r, a)).collect::<BitSet>()).collect();
            ps.sort();
            ps.dedup();
            ps
        };
        let ideals = join_closure(&self.additive().trivial_subgroup(), &principals, usize::MAX, |a, b| {
            self.additive().sum(a, b)
        })
        .expect("unbounded");
        let proper: Vec<&BitSet> = ideals.iter().filter(|i| i.len() < re.len()).collect();
        proper
            .iter()
            .filter(|m| !proper.iter().any(|o| o.len() > m.len() && m.is_subset(o)))
            .fold(re.clone(), |acc, m| acc.intersection(m))
    }

    pub fn quotient_ring(&self, ideal: &GradedIdeal) -> Result<QuotientRing, AlgebraError> {
        self.owns(ideal)?;
        if !self.is_proper(ideal) {
            return Err(AlgebraError::ImproperIdeal);
        }
        let reps = self.additive().coset_representatives(&ideal.elements);
        let mut classes: Vec<usize> = reps.clone();
        classes.sort_unstable();
        classes.dedup();
        let mut class_of_rep = vec![usize::MAX; self.size()];
        for (i, &r) in classes.iter().enumerate() {
            class_of_rep[r] = i;
        }
        let projection: Vec<usize> = reps.iter().map(|&r| class_of_rep[r]).collect();
        let m = classes.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<u16> {
            (0..m * m).map(|k| projection[f(classes[k / m], classes[k % m])] as u16).collect()
        };
        let tables = RingTables {
            group: self.group().clone(),
            size: m,
            add: table(&|a, b| self.add(a, b)),
            mul: table(&|a, b| self.mul(a, b)),
            zero: projection[self.zero()],
            one: projection[self.one()],
            components: self.components().iter().map(|c| c.iter().map(|x| projection[x]).collect()).collect(),
            labels: Some(classes.iter().map(|&r| format!("[{}]", self.label(r))).collect()),
        };
        let limits = Limits { max_ring_order: self.size(), ..Limits::default() };
        let ring = GradedRing::from_tables(tables, &limits)?;
        Ok(QuotientRing { ring, projection, kernel: ideal.clone() })
    }
}

/// Closure of `{base}` under `join(-, g)` for every `g` in `gens`.
/// Returns `None` when more than `limit` sets appear.
pub(crate) fn join_closure(
    base: &BitSet,
    gens: &[BitSet],
    limit: usize,
    join: impl Fn(&BitSet, &BitSet) -> BitSet,
) -> Option<Vec<BitSet>> {
    let mut seen: std::collections::HashSet<BitSet> = std::collections::HashSet::new();
    seen.insert(base.clone());
    let mut queue = vec![base.clone()];
    while let Some(cur) = queue.pop() {
        for g in gens {
            if g.is_subset(&cur) {
                continue;
            }
            let next = join(&cur, g);
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push(next);
            }
        }
    }
    let mut out: Vec<BitSet> = seen.into_iter().collect();
    out.sort();
    Some(out)
}

/// The canonically ordered list of all graded ideals of a ring.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    ideals: Vec<GradedIdeal>,
    index: HashMap<BitSet, usize>,
}

impl IdealLattice {
    fn new(ideals: Vec<GradedIdeal>) -> Self {
        let index = ideals.iter().enumerate().map(|(i, id)| (id.elements.clone(), i)).collect();
        Self { ideals, index }
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GradedIdeal> {
        self.ideals.iter()
    }

    pub fn get(&self, i: usize) -> &GradedIdeal {
        &self.ideals[i]
    }

    pub fn ideals(&self) -> &[GradedIdeal] {
        &self.ideals
    }

    pub fn position(&self, elements: &BitSet) -> Option<usize> {
        self.index.get(elements).copied()
    }

    pub fn position_of(&self, ideal: &GradedIdeal) -> Option<usize> {
        self.position(&ideal.elements)
    }

    /// Graded maximal ideals: maximal among proper graded ideals.
    pub fn max_spectrum(&self, ring: &GradedRing) -> Vec<GradedIdeal> {
        let proper: Vec<&GradedIdeal> = self.ideals.iter().filter(|i| ring.is_proper(i)).collect();
        proper
            .iter()
            .filter(|m| !proper.iter().any(|o| o.len() > m.len() && m.is_subset(o)))
            .map(|m| (*m).clone())
            .collect()
    }

    /// `J_G(R)`, the intersection of the graded maximal ideals.
    pub fn graded_jacobson_radical(&self, ring: &GradedRing) -> GradedIdeal {
        self.max_spectrum(ring).iter().fold(ring.unit_ideal(), |acc, m| ring.ideal_intersection(&acc, m))
    }
}

/// `R / I` together with the projection `R -> R / I`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub ring: GradedRing,
    pub projection: Vec<usize>,
    pub kernel: GradedIdeal,
}

impl QuotientRing {
    /// Image of a graded ideal `J ⊇ I`.
    pub fn image(&self, ideal: &GradedIdeal) -> GradedIdeal {
        let set: BitSet = ideal.elements.iter().map(|x| self.projection[x]).collect();
        self.ring.wrap_ideal(set)
    }

    /// Preimage in `R` of a graded ideal of `R / I`.
    pub fn preimage(&self, source: &GradedRing, ideal: &GradedIdeal) -> GradedIdeal {
        let set: BitSet = source.elements().filter(|&x| ideal.contains(self.projection[x])).collect();
        source.wrap_ideal(set)
    }
}
