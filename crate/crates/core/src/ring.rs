//! Finite graded commutative rings.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::additive::AdditiveTable;
use crate::bitset::BitSet;
use crate::error::AlgebraError;
use crate::group::FiniteAbelianGroup;

/// Hard ceiling for ring and module carriers.
pub const CARRIER_LIMIT: usize = 256;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// Size bounds applied during construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_ring_order: usize,
    pub max_module_order: usize,
    /// Largest ideal or submodule lattice that enumeration will build.
    pub max_lattice: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_ring_order: CARRIER_LIMIT, max_module_order: CARRIER_LIMIT, max_lattice: 1 << 15 }
    }
}

/// Raw tables for a graded ring, before validation.
#[derive(Clone, Debug)]
pub struct RingTables {
    pub group: FiniteAbelianGroup,
    pub size: usize,
    pub add: Vec<u16>,
    pub mul: Vec<u16>,
    pub zero: usize,
    pub one: usize,
    /// One element set per group element, indexed like the group.
    pub components: Vec<BitSet>,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct GradedRing {
    id: u64,
    group: FiniteAbelianGroup,
    additive: AdditiveTable,
    mul: Vec<u16>,
    one: usize,
    components: Vec<BitSet>,
    decomposition: Vec<u16>,
    hom: BitSet,
    labels: Vec<String>,
}

impl GradedRing {
    pub fn from_tables(tables: RingTables, limits: &Limits) -> Result<Self, AlgebraError> {
        let RingTables { group, size, add, mul, zero, one, components, labels } = tables;
        let limit = limits.max_ring_order.min(CARRIER_LIMIT);
        if size > limit {
            return Err(AlgebraError::SizeExceeded { what: "ring carrier", limit });
        }
        if size == 0 {
            return Err(AlgebraError::NotARing("empty carrier".into()));
        }
        let additive = AdditiveTable::new(size, add, zero).map_err(AlgebraError::NotARing)?;
        if one >= size {
            return Err(AlgebraError::NotARing(format!("unity index {one} out of range")));
        }
        if one == zero {
            return Err(AlgebraError::ZeroRing);
        }
        check_multiplication(&additive, &mul, one)?;

        let decomposition = check_grading(&group, &additive, &components, |c| {
            format!("degree {}", group.display(c))
        })?;
        let at = |a: usize, b: usize| mul[a * size + b] as usize;
        for g in group.elements() {
            for h in group.elements() {
                let target = &components[group.op(g, h)];
                for a in &components[g] {
                    for b in &components[h] {
                        if !target.contains(at(a, b)) {
                            return Err(AlgebraError::InvalidGrading {
                                component: format!("degree {}", group.display(group.op(g, h))),
                                reason: format!(
                                    "R_{} R_{} is not contained in it: {a} * {b} = {}",
                                    group.display(g),
                                    group.display(h),
                                    at(a, b)
                                ),
                            });
                        }
                    }
                }
            }
        }
        if !components[group.identity()].contains(one) {
            return Err(AlgebraError::InvalidGrading {
                component: format!("degree {}", group.display(group.identity())),
                reason: "unity is not homogeneous of the identity degree".into(),
            });
        }
        let hom = components.iter().fold(BitSet::new(), |acc, c| acc.union(c));
        let labels = match labels {
            Some(l) if l.len() == size => l,
            _ => (0..size).map(|i| i.to_string()).collect(),
        };
        Ok(Self { id: fresh_id(), group, additive, mul, one, components, decomposition, hom, labels })
    }

    /// Identity token; objects built from this ring carry it.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.additive.size()
    }

    pub fn additive(&self) -> &AdditiveTable {
        &self.additive
    }

    pub fn zero(&self) -> usize {
        self.additive.zero()
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.additive.add(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.additive.neg(a)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b] as usize
    }

    /// `x^k` for `k >= 1`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn full(&self) -> BitSet {
        BitSet::full(self.size())
    }

    pub fn component(&self, g: usize) -> &BitSet {
        &self.components[g]
    }

    pub fn components(&self) -> &[BitSet] {
        &self.components
    }

    /// The identity-degree subring `R_e`.
    pub fn identity_component(&self) -> &BitSet {
        &self.components[self.group.identity()]
    }

    /// Homogeneous component of `x` of degree `g`.
    #[inline]
    pub fn component_of(&self, x: usize, g: usize) -> usize {
        self.decomposition[x * self.group.order() + g] as usize
    }

    /// The unique decomposition of `x`, indexed by group element.
    pub fn homogeneous_components(&self, x: usize) -> Vec<usize> {
        self.group.elements().map(|g| self.component_of(x, g)).collect()
    }

    pub fn hom_elements(&self) -> &BitSet {
        &self.hom
    }

    pub fn is_homogeneous(&self, x: usize) -> bool {
        self.hom.contains(x)
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(&self, x: usize) -> Option<usize> {
        if x == self.zero() {
            return None;
        }
        self.group.elements().find(|&g| self.components[g].contains(x))
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The raw tables, for serialization and for building derived rings.
    pub fn tables(&self) -> RingTables {
        let n = self.size();
        RingTables {
            group: self.group.clone(),
            size: n,
            add: (0..n * n).map(|k| self.add(k / n, k % n) as u16).collect(),
            mul: self.mul.clone(),
            zero: self.zero(),
            one: self.one,
            components: self.components.clone(),
            labels: Some(self.labels.clone()),
        }
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<(), AlgebraError> {
        if x < self.size() {
            Ok(())
        } else {
            Err(AlgebraError::ElementOutOfRange { index: x, size: self.size() })
        }
    }
}

fn check_multiplication(additive: &AdditiveTable, mul: &[u16], one: usize) -> Result<(), AlgebraError> {
    let n = additive.size();
    if mul.len() != n * n {
        return Err(AlgebraError::NotARing(format!(
            "multiplication table has {} entries, expected {}",
            mul.len(),
            n * n
        )));
    }
    if let Some(bad) = mul.iter().find(|&&v| v as usize >= n) {
        return Err(AlgebraError::NotARing(format!("multiplication table entry {bad} out of range")));
    }
    let at = |a: usize, b: usize| mul[a * n + b] as usize;
    for a in 0..n {
        if at(one, a) != a {
            return Err(AlgebraError::NotARing(format!("1 * {a} != {a}")));
        }
        for b in 0..a {
            if at(a, b) != at(b, a) {
                return Err(AlgebraError::NotARing(format!("multiplication not commutative at ({a}, {b})")));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            let a_plus_b = additive.add(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(AlgebraError::NotARing(format!(
                        "multiplication not associative at ({a}, {b}, {c})"
                    )));
                }
                if at(a_plus_b, c) != additive.add(at(a, c), at(b, c)) {
                    return Err(AlgebraError::NotARing(format!("distributivity fails at ({a}, {b}, {c})")));
                }
            }
        }
    }
    Ok(())
}

/// Checks that `components` are subgroups whose internal direct sum is the
/// whole carrier, returning the decomposition table (`x * |G| + g`).
pub(crate) fn check_grading(
    group: &FiniteAbelianGroup,
    additive: &AdditiveTable,
    components: &[BitSet],
    name: impl Fn(usize) -> String,
) -> Result<Vec<u16>, AlgebraError> {
    let order = group.order();
    let n = additive.size();
    let bad = |g: usize, reason: String| AlgebraError::InvalidGrading { component: name(g), reason };
    if components.len() != order {
        return Err(AlgebraError::InvalidGrading {
            component: "all".into(),
            reason: format!("{} components given for a group of order {order}", components.len()),
        });
    }
    for (g, c) in components.iter().enumerate() {
        if let Some(x) = c.iter().find(|&x| x >= n) {
            return Err(bad(g, format!("element {x} out of range")));
        }
        if !additive.is_subgroup(c) {
            return Err(bad(g, "not an additive subgroup".into()));
        }
    }
    let product = components.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()).filter(|&p| p <= n));
    if product != Some(n) {
        return Err(AlgebraError::InvalidGrading {
            component: "all".into(),
            reason: "components do not form a direct sum decomposition of the carrier".into(),
        });
    }
    let lists: Vec<Vec<usize>> = components.iter().map(|c| c.to_vec()).collect();
    let mut decomposition = vec![u16::MAX; n * order];
    let mut choice = vec![0usize; order];
    loop {
        let total = (0..order).fold(additive.zero(), |acc, g| additive.add(acc, lists[g][choice[g]]));
        if decomposition[total * order] != u16::MAX {
            return Err(AlgebraError::InvalidGrading {
                component: "all".into(),
                reason: format!("element {total} has two homogeneous decompositions"),
            });
        }
        for g in 0..order {
            decomposition[total * order + g] = lists[g][choice[g]] as u16;
        }
        // odometer over the component lists
        let mut g = 0;
        while g < order {
            choice[g] += 1;
            if choice[g] < lists[g].len() {
                break;
            }
            choice[g] = 0;
            g += 1;
        }
        if g == order {
            break;
        }
    }
    Ok(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod_tables(n: usize, group: FiniteAbelianGroup) -> RingTables {
        let mut components = vec![BitSet::singleton(0); group.order()];
        components[0] = BitSet::full(n);
        RingTables {
            group,
            size: n,
            add: (0..n * n).map(|k| ((k / n + k % n) % n) as u16).collect(),
            mul: (0..n * n).map(|k| ((k / n) * (k % n) % n) as u16).collect(),
            zero: 0,
            one: 1 % n,
            components,
            labels: None,
        }
    }

    #[test]
    fn trivial_grading_is_valid() {
        let g = FiniteAbelianGroup::new(&[2]).unwrap();
        let r = GradedRing::from_tables(zmod_tables(4, g), &Limits::default()).unwrap();
        assert_eq!(r.homogeneous_components(3), vec![3, 0]);
        assert_eq!(r.hom_elements().len(), 4);
        assert_eq!(r.degree(2), Some(0));
    }

    #[test]
    fn zero_ring_rejected() {
        let t = zmod_tables(1, FiniteAbelianGroup::trivial());
        assert_eq!(GradedRing::from_tables(t, &Limits::default()).unwrap_err(), AlgebraError::ZeroRing);
    }

    #[test]
    fn misplaced_unity_rejected() {
        // Z_4 with R_0 = {0}, R_1 = Z_4: not a valid grading.
        let g = FiniteAbelianGroup::new(&[2]).unwrap();
        let mut t = zmod_tables(4, g);
        t.components = vec![BitSet::singleton(0), BitSet::full(4)];
        let err = GradedRing::from_tables(t, &Limits::default()).unwrap_err();
        assert!(matches!(err, AlgebraError::InvalidGrading { .. }), "{err}");
    }

    #[test]
    fn non_subgroup_component_named() {
        let g = FiniteAbelianGroup::new(&[2]).unwrap();
        let mut t = zmod_tables(4, g);
        t.components = vec![[0, 1].into_iter().collect(), [0, 2].into_iter().collect()];
        match GradedRing::from_tables(t, &Limits::default()).unwrap_err() {
            AlgebraError::InvalidGrading { component, .. } => assert_eq!(component, "degree 0"),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn size_bound_enforced() {
        let t = zmod_tables(9, FiniteAbelianGroup::trivial());
        let limits = Limits { max_ring_order: 8, ..Limits::default() };
        assert!(matches!(GradedRing::from_tables(t, &limits), Err(AlgebraError::SizeExceeded { .. })));
    }

    #[test]
    fn broken_distributivity_rejected() {
        let mut t = zmod_tables(3, FiniteAbelianGroup::trivial());
        // 2 * 2 = 2 instead of 1
        t.mul[2 * 3 + 2] = 2;
        assert!(matches!(GradedRing::from_tables(t, &Limits::default()), Err(AlgebraError::NotARing(_))));
    }
}
