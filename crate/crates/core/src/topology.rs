//! Finite topologies given by their closed sets.
//!
//! Shared by the graded prime spectrum and the graded second spectrum. Points
//! are indices into the owning spectrum; closed sets remember the index of the
//! ideal or submodule that defines them.

use std::collections::{HashMap, HashSet};

use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSet {
    pub points: BitSet,
    /// Index of the defining object in its lattice.
    pub defining: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicOpen {
    pub points: BitSet,
    /// The homogeneous ring element whose basic open set this is.
    pub element: usize,
}

#[derive(Clone, Debug)]
pub struct SpectrumTopology {
    num_points: usize,
    closed: Vec<ClosedSet>,
    index: HashSet<BitSet>,
    basis: Vec<BasicOpen>,
}

impl SpectrumTopology {
    /// `closed` may contain duplicates; for each point set the candidate
    /// with the largest `weight` is kept. Basic opens are deduplicated,
    /// keeping the first element listed.
    pub fn new(
        num_points: usize,
        closed: impl IntoIterator<Item = (BitSet, usize, usize)>,
        basis: impl IntoIterator<Item = BasicOpen>,
    ) -> Self {
        let mut best: HashMap<BitSet, (usize, usize)> = HashMap::new();
        for (points, defining, weight) in closed {
            let slot = best.entry(points).or_insert((defining, weight));
            if weight > slot.1 {
                *slot = (defining, weight);
            }
        }
        let mut closed: Vec<ClosedSet> =
            best.into_iter().map(|(points, (defining, _))| ClosedSet { points, defining }).collect();
        closed.sort_by(|a, b| a.points.cmp(&b.points));
        let index = closed.iter().map(|c| c.points.clone()).collect();
        let mut seen = HashSet::new();
        let basis = basis.into_iter().filter(|b| seen.insert(b.points.clone())).collect();
        Self { num_points, closed, index, basis }
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn everything(&self) -> BitSet {
        BitSet::full(self.num_points)
    }

    pub fn closed_sets(&self) -> &[ClosedSet] {
        &self.closed
    }

    pub fn basis(&self) -> &[BasicOpen] {
        &self.basis
    }

    pub fn is_closed(&self, set: &BitSet) -> bool {
        self.index.contains(set)
    }

    pub fn open_sets(&self) -> Vec<BitSet> {
        let all = self.everything();
        self.closed.iter().map(|c| all.difference(&c.points)).collect()
    }

    /// Checks the closed-set axioms: contains the empty set and the whole
    /// space, closed under pairwise union and intersection.
    pub fn verify_axioms(&self) -> Result<(), String> {
        if !self.is_closed(&BitSet::new()) {
            return Err("the empty set is not closed".into());
        }
        if !self.is_closed(&self.everything()) {
            return Err("the whole space is not closed".into());
        }
        for a in &self.closed {
            for b in &self.closed {
                if !self.is_closed(&a.points.union(&b.points)) {
                    return Err(format!("union of {:?} and {:?} is not closed", a.points, b.points));
                }
                if !self.is_closed(&a.points.intersection(&b.points)) {
                    return Err(format!("intersection of {:?} and {:?} is not closed", a.points, b.points));
                }
            }
        }
        Ok(())
    }

    /// Smallest closed superset, by intersecting all closed supersets.
    pub fn closure(&self, set: &BitSet) -> BitSet {
        self.closed
            .iter()
            .filter(|c| set.is_subset(&c.points))
            .fold(self.everything(), |acc, c| acc.intersection(&c.points))
    }

    fn relative_closed(&self, subspace: &BitSet) -> Vec<BitSet> {
        let mut rel: Vec<BitSet> = self.closed.iter().map(|c| c.points.intersection(subspace)).collect();
        rel.sort();
        rel.dedup();
        rel
    }

    /// Nonempty, and not the union of two proper relatively closed subsets.
    pub fn is_irreducible(&self, subspace: &BitSet) -> bool {
        if subspace.is_empty() {
            return false;
        }
        let proper: Vec<BitSet> = self.relative_closed(subspace).into_iter().filter(|c| c != subspace).collect();
        !proper.iter().any(|a| proper.iter().any(|b| a.union(b) == *subspace))
    }

    /// Maximal irreducible subsets of `subspace`, found among its relatively
    /// closed subsets (components are always relatively closed). Ordered by
    /// descending cardinality, then canonically.
    pub fn irreducible_components(&self, subspace: &BitSet) -> Vec<BitSet> {
        let irreducible: Vec<BitSet> =
            self.relative_closed(subspace).into_iter().filter(|c| self.is_irreducible(c)).collect();
        let mut maximal: Vec<BitSet> = irreducible
            .iter()
            .filter(|c| !irreducible.iter().any(|o| o.len() > c.len() && c.is_subset(o)))
            .cloned()
            .collect();
        maximal.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        maximal
    }

    /// Every basic open is open and every open set is the union of the basic
    /// opens it contains.
    pub fn is_base(&self) -> bool {
        let opens = self.open_sets();
        self.basis.iter().all(|b| opens.contains(&b.points))
            && opens.iter().all(|u| {
                self.basis
                    .iter()
                    .filter(|b| b.points.is_subset(u))
                    .fold(BitSet::new(), |acc, b| acc.union(&b.points))
                    == *u
            })
    }

    /// A finite subcover of `open` by basic opens contained in it, chosen
    /// greedily; at most `basis.len()` members.
    pub fn finite_subcover(&self, open: &BitSet) -> Option<Vec<usize>> {
        let mut covered = BitSet::new();
        let mut chosen = Vec::new();
        let inside: Vec<usize> = (0..self.basis.len()).filter(|&i| self.basis[i].points.is_subset(open)).collect();
        while covered != *open {
            let next = inside
                .iter()
                .copied()
                .max_by_key(|&i| (self.basis[i].points.difference(&covered).len(), std::cmp::Reverse(i)))?;
            if self.basis[next].points.is_subset(&covered) {
                return None;
            }
            covered.union_with(&self.basis[next].points);
            chosen.push(next);
        }
        Some(chosen)
    }

    pub fn all_opens_compact(&self) -> bool {
        self.open_sets().iter().all(|u| self.finite_subcover(u).is_some())
    }

    /// Length of the longest strictly descending chain of closed sets, or
    /// `None` if strict inclusion has a cycle.
    pub fn descending_chain_bound(&self) -> Option<usize> {
        let family: Vec<BitSet> = self.closed.iter().map(|c| c.points.clone()).collect();
        chain_bound(&family)
    }

    /// Descending chain condition on closed sets.
    pub fn is_noetherian(&self) -> bool {
        self.descending_chain_bound().is_some()
    }
}

/// Longest chain under strict inclusion in `family` (counted in members),
/// or `None` if the strict-inclusion relation has a cycle, i.e. an infinite
/// strictly monotone chain exists. Works for ascending and descending chains
/// alike since a finite family has one iff it has the other.
pub fn chain_bound(family: &[BitSet]) -> Option<usize> {
    let n = family.len();
    let below: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && family[j] != family[i] && family[j].is_subset(&family[i])).collect())
        .collect();
    // Kahn's algorithm on edges j -> i (j strictly inside i).
    let mut indegree: Vec<usize> = below.iter().map(|b| b.len()).collect();
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, b) in below.iter().enumerate() {
        for &j in b {
            above[j].push(i);
        }
    }
    let mut longest = vec![1usize; n];
    let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut done = 0;
    while let Some(j) = ready.pop() {
        done += 1;
        for &i in &above[j] {
            longest[i] = longest[i].max(longest[j] + 1);
            indegree[i] -= 1;
            if indegree[i] == 0 {
                ready.push(i);
            }
        }
    }
    (done == n).then(|| longest.into_iter().max().unwrap_or(0))
}
