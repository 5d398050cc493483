//! Finite abelian groups given by an explicit addition table.
//!
//! Shared by rings and modules: subgroup closure, sums, and coset
//! representatives all live here.

use crate::bitset::BitSet;

#[derive(Clone, Debug)]
pub struct AdditiveTable {
    size: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
}

impl AdditiveTable {
    /// Checks the abelian group axioms exhaustively.
    pub fn new(size: usize, add: Vec<u16>, zero: usize) -> Result<Self, String> {
        if add.len() != size * size {
            return Err(format!("addition table has {} entries, expected {}", add.len(), size * size));
        }
        if zero >= size {
            return Err(format!("zero index {zero} out of range"));
        }
        if let Some(bad) = add.iter().find(|&&v| v as usize >= size) {
            return Err(format!("addition table entry {bad} out of range"));
        }
        let at = |a: usize, b: usize| add[a * size + b] as usize;
        let mut neg = vec![0u16; size];
        for a in 0..size {
            if at(zero, a) != a {
                return Err(format!("0 + {a} != {a}"));
            }
            match (0..size).find(|&b| at(a, b) == zero) {
                Some(b) => neg[a] = b as u16,
                None => return Err(format!("element {a} has no additive inverse")),
            }
            for b in 0..a {
                if at(a, b) != at(b, a) {
                    return Err(format!("addition is not commutative at ({a}, {b})"));
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                let ab = at(a, b);
                for c in 0..size {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(format!("addition is not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(Self { size, add, neg, zero })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k`-fold sum of `a`.
    pub fn times(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut t = a;
        while t != self.zero {
            t = self.add(t, a);
            k += 1;
        }
        k
    }

    pub fn trivial_subgroup(&self) -> BitSet {
        BitSet::singleton(self.zero)
    }

    pub fn is_subgroup(&self, set: &BitSet) -> bool {
        set.contains(self.zero) && set.iter().all(|a| set.iter().all(|b| set.contains(self.add(a, b))))
    }

    /// `subgroup + <y>`; `subgroup` must already be a subgroup.
    pub fn adjoin(&self, subgroup: &BitSet, y: usize) -> BitSet {
        let mut out = subgroup.clone();
        let mut t = y;
        while !subgroup.contains(t) {
            out.extend(subgroup.iter().map(|h| self.add(h, t)));
            t = self.add(t, y);
        }
        out
    }

    /// Smallest subgroup containing `gens`.
    pub fn span<I: IntoIterator<Item = usize>>(&self, gens: I) -> BitSet {
        gens.into_iter().fold(self.trivial_subgroup(), |acc, g| {
            if acc.contains(g) {
                acc
            } else {
                self.adjoin(&acc, g)
            }
        })
    }

    /// Sum of two subgroups.
    pub fn sum(&self, a: &BitSet, b: &BitSet) -> BitSet {
        let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut acc = big.clone();
        for y in small {
            if !acc.contains(y) {
                acc = self.adjoin(&acc, y);
            }
        }
        acc
    }

    /// For each element, the smallest index in its coset modulo `subgroup`.
    pub fn coset_representatives(&self, subgroup: &BitSet) -> Vec<usize> {
        let mut rep = vec![usize::MAX; self.size];
        for x in 0..self.size {
            if rep[x] == usize::MAX {
                for h in subgroup {
                    rep[self.add(x, h)] = x;
                }
            }
        }
        rep
    }
}
