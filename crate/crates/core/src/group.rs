//! Finite abelian grading groups `Z_{n1} x .. x Z_{nk}`.
//!
//! Group elements are addressed by their index in lexicographic tuple order
//! (first factor most significant). The identity is always index 0. The group
//! operation is written additively here; it is the multiplicative `gh` of the
//! grading conditions.

use std::fmt;

use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    factors: Vec<usize>,
    order: usize,
    add: Vec<u8>,
    neg: Vec<u8>,
}

/// Largest supported grading group.
pub const MAX_GROUP_ORDER: usize = 16;

impl FiniteAbelianGroup {
    pub fn new(cyclic_factors: &[usize]) -> Result<Self, AlgebraError> {
        if cyclic_factors.contains(&0) {
            return Err(AlgebraError::InvalidGroup("cyclic factor 0 is not allowed".into()));
        }
        let order = cyclic_factors.iter().try_fold(1usize, |acc, &n| {
            acc.checked_mul(n).filter(|&o| o <= MAX_GROUP_ORDER)
        });
        let order = order.ok_or(AlgebraError::SizeExceeded {
            what: "grading group",
            limit: MAX_GROUP_ORDER,
        })?;
        let mut g = Self { factors: cyclic_factors.to_vec(), order, add: Vec::new(), neg: Vec::new() };
        g.add = (0..order * order)
            .map(|k| {
                let (a, b) = (g.tuple(k / order), g.tuple(k % order));
                let sum: Vec<usize> =
                    a.iter().zip(&b).zip(&g.factors).map(|((x, y), n)| (x + y) % n).collect();
                g.index_of(&sum) as u8
            })
            .collect();
        g.neg = (0..order)
            .map(|a| {
                let t: Vec<usize> =
                    g.tuple(a).iter().zip(&g.factors).map(|(x, n)| (n - x) % n).collect();
                g.index_of(&t) as u8
            })
            .collect();
        Ok(g)
    }

    pub fn trivial() -> Self {
        Self::new(&[]).expect("trivial group")
    }

    pub fn cyclic_factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// `k`-fold power of `a` (additively, `k * a`).
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.op(acc, a))
    }

    pub fn tuple(&self, index: usize) -> Vec<usize> {
        let mut rest = index;
        let mut out = vec![0; self.factors.len()];
        for (slot, &n) in out.iter_mut().zip(&self.factors).rev() {
            *slot = rest % n;
            rest /= n;
        }
        out
    }

    /// Index of a tuple; entries are reduced modulo their factor.
    pub fn index_of(&self, tuple: &[usize]) -> usize {
        tuple.iter().zip(&self.factors).fold(0, |acc, (x, n)| acc * n + x % n)
    }

    /// Parses a tuple that must have one entry per factor.
    pub fn element(&self, tuple: &[usize]) -> Result<usize, AlgebraError> {
        if tuple.len() != self.factors.len() {
            return Err(AlgebraError::InvalidGroup(format!(
                "degree {:?} has {} entries, group has {} cyclic factors",
                tuple,
                tuple.len(),
                self.factors.len()
            )));
        }
        Ok(self.index_of(tuple))
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn display(&self, g: usize) -> String {
        let t = self.tuple(g);
        match t.len() {
            0 => "e".to_string(),
            1 => t[0].to_string(),
            _ => format!("({})", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
        }
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z_{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axioms_hold(g: &FiniteAbelianGroup) {
        for a in g.elements() {
            assert_eq!(g.op(g.identity(), a), a);
            assert_eq!(g.op(a, g.inverse(a)), g.identity());
            for b in g.elements() {
                assert_eq!(g.op(a, b), g.op(b, a));
                for c in g.elements() {
                    assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
                }
            }
        }
    }

    #[test]
    fn group_axioms_exhaustive() {
        for factors in [vec![], vec![2], vec![3], vec![2, 2], vec![4, 2], vec![2, 2, 2], vec![16]] {
            axioms_hold(&FiniteAbelianGroup::new(&factors).unwrap());
        }
    }

    #[test]
    fn tuple_round_trip_and_order() {
        let g = FiniteAbelianGroup::new(&[2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.tuple(0), vec![0, 0]);
        assert_eq!(g.tuple(1), vec![0, 1]);
        assert_eq!(g.tuple(3), vec![1, 0]);
        for i in g.elements() {
            assert_eq!(g.index_of(&g.tuple(i)), i);
        }
        assert_eq!(g.pow(1, 3), 0);
    }

    #[test]
    fn rejects_oversized_and_zero_factors() {
        assert!(matches!(
            FiniteAbelianGroup::new(&[4, 5]),
            Err(AlgebraError::SizeExceeded { .. })
        ));
        assert!(FiniteAbelianGroup::new(&[0]).is_err());
        assert!(FiniteAbelianGroup::new(&[2]).unwrap().element(&[1, 0]).is_err());
    }
}
