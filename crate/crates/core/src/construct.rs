//! Ring constructors: the description trees accepted in instance files.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::AlgebraError;
use crate::group::FiniteAbelianGroup;
use crate::ring::{GradedRing, Limits, RingTables, CARRIER_LIMIT};

/// Elements of one homogeneous component in a raw table description.
/// Degrees that are not listed have the zero component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub degree: Vec<usize>,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingConstructor {
    /// `Z_n`, trivially graded (a unity in `R_e` forces `R = R_e`).
    Zmod { n: usize },
    /// `Z_p[G]` with `R_g = Z_p g`.
    GroupAlgebra { p: usize },
    /// `Z_p[u] / (u^d)` with `u` homogeneous of the given degree.
    TruncatedPoly { p: usize, d: usize, degree: Vec<usize> },
    /// Direct product, graded componentwise.
    Product { factors: Vec<RingConstructor> },
    /// Raw tables.
    Tables {
        size: usize,
        zero: usize,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        components: Vec<ComponentSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    /// Quotient by the graded ideal generated by homogeneous elements
    /// (indices into the inner ring).
    Quotient { inner: Box<RingConstructor>, generators: Vec<usize> },
}

impl RingConstructor {
    /// Upper bound on the carrier size, if it fits in `limit`. Quotients
    /// count at the size of the ring they are taken from.
    pub fn predicted_size(&self, group: &FiniteAbelianGroup, limit: usize) -> Option<usize> {
        let pow = |base: usize, exp: usize| {
            (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base).filter(|&v| v <= limit))
        };
        match self {
            Self::Zmod { n } => Some(*n).filter(|&n| n <= limit),
            Self::GroupAlgebra { p } => pow(*p, group.order()),
            Self::TruncatedPoly { p, d, .. } => pow(*p, *d),
            Self::Product { factors } => factors.iter().try_fold(1usize, |acc, f| {
                acc.checked_mul(f.predicted_size(group, limit)?).filter(|&v| v <= limit)
            }),
            Self::Tables { size, .. } => Some(*size).filter(|&s| s <= limit),
            Self::Quotient { inner, .. } => inner.predicted_size(group, limit),
        }
    }
}

pub fn build_ring(
    group: &FiniteAbelianGroup,
    desc: &RingConstructor,
    limits: &Limits,
) -> Result<GradedRing, AlgebraError> {
    let limit = limits.max_ring_order.min(CARRIER_LIMIT);
    let too_big = || AlgebraError::SizeExceeded { what: "ring carrier", limit };
    // Products are checked on the actual factor sizes, since a quotient
    // factor can be much smaller than its bound.
    if !matches!(desc, RingConstructor::Product { .. }) && desc.predicted_size(group, limit).is_none() {
        return Err(too_big());
    }
    match desc {
        RingConstructor::Zmod { n } => zmod(group, *n, limits),
        RingConstructor::GroupAlgebra { p } => group_algebra(group, *p, limits),
        RingConstructor::TruncatedPoly { p, d, degree } => {
            truncated_poly(group, *p, *d, group.element(degree)?, limits)
        }
        RingConstructor::Product { factors } => {
            let rings = factors
                .iter()
                .map(|f| build_ring(group, f, limits))
                .collect::<Result<Vec<_>, _>>()?;
            rings.iter().try_fold(1usize, |acc, r| acc.checked_mul(r.size()).filter(|&v| v <= limit)).ok_or_else(too_big)?;
            product(group, &rings, limits)
        }
        RingConstructor::Tables { size, zero, one, add, mul, components, labels } => {
            let flat = |t: &Vec<Vec<usize>>, what: &str| -> Result<Vec<u16>, AlgebraError> {
                if t.len() != *size || t.iter().any(|row| row.len() != *size) {
                    return Err(AlgebraError::NotARing(format!("{what} table is not {size} x {size}")));
                }
                t.iter()
                    .flatten()
                    .map(|&v| {
                        if v < *size {
                            Ok(v as u16)
                        } else {
                            Err(AlgebraError::ElementOutOfRange { index: v, size: *size })
                        }
                    })
                    .collect()
            };
            let mut comps = vec![BitSet::singleton(*zero); group.order()];
            for spec in components {
                let g = group.element(&spec.degree)?;
                comps[g] = spec.elements.iter().copied().collect();
                comps[g].insert(*zero);
            }
            let tables = RingTables {
                group: group.clone(),
                size: *size,
                add: flat(add, "addition")?,
                mul: flat(mul, "multiplication")?,
                zero: *zero,
                one: *one,
                components: comps,
                labels: labels.clone(),
            };
            GradedRing::from_tables(tables, limits)
        }
        RingConstructor::Quotient { inner, generators } => {
            let ring = build_ring(group, inner, limits)?;
            let ideal = ring.ideal_generated(generators)?;
            Ok(ring.quotient_ring(&ideal)?.ring)
        }
    }
}

fn cyclic_tables(n: usize) -> (Vec<u16>, Vec<u16>) {
    let add = (0..n * n).map(|k| ((k / n + k % n) % n) as u16).collect();
    let mul = (0..n * n).map(|k| ((k / n) * (k % n) % n) as u16).collect();
    (add, mul)
}

fn zmod(group: &FiniteAbelianGroup, n: usize, limits: &Limits) -> Result<GradedRing, AlgebraError> {
    if n == 1 {
        return Err(AlgebraError::ZeroRing);
    }
    if n == 0 {
        return Err(AlgebraError::NotARing("Z_0 is infinite".into()));
    }
    let (add, mul) = cyclic_tables(n);
    let mut components = vec![BitSet::singleton(0); group.order()];
    components[group.identity()] = BitSet::full(n);
    GradedRing::from_tables(
        RingTables { group: group.clone(), size: n, add, mul, zero: 0, one: 1, components, labels: None },
        limits,
    )
}

/// Coefficient vectors over `Z_p` of length `len`, coordinate 0 least
/// significant in the index.
struct CoefficientSpace {
    p: usize,
    len: usize,
    size: usize,
}

impl CoefficientSpace {
    fn new(p: usize, len: usize) -> Self {
        Self { p, len, size: p.pow(len as u32) }
    }

    fn coeffs(&self, mut index: usize) -> Vec<usize> {
        (0..self.len)
            .map(|_| {
                let c = index % self.p;
                index /= self.p;
                c
            })
            .collect()
    }

    fn index(&self, coeffs: &[usize]) -> usize {
        coeffs.iter().rev().fold(0, |acc, c| acc * self.p + c % self.p)
    }

    fn add_table(&self) -> Vec<u16> {
        let n = self.size;
        (0..n * n)
            .map(|k| {
                let (a, b) = (self.coeffs(k / n), self.coeffs(k % n));
                let s: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                self.index(&s) as u16
            })
            .collect()
    }

    /// Elements supported on the coordinates selected by `keep`.
    fn supported_on(&self, keep: impl Fn(usize) -> bool) -> BitSet {
        (0..self.size).filter(|&i| self.coeffs(i).iter().enumerate().all(|(k, &c)| c == 0 || keep(k))).collect()
    }

    fn labels(&self, basis: impl Fn(usize) -> String) -> Vec<String> {
        (0..self.size)
            .map(|i| {
                let terms: Vec<String> = self
                    .coeffs(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| {
                        let b = basis(k);
                        match (c, b.as_str()) {
                            (_, "1") => c.to_string(),
                            (1, _) => b,
                            _ => format!("{c}{b}"),
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            })
            .collect()
    }
}

fn power_label(k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => "u".into(),
        _ => format!("u^{k}"),
    }
}

fn group_algebra(group: &FiniteAbelianGroup, p: usize, limits: &Limits) -> Result<GradedRing, AlgebraError> {
    if p < 2 {
        return Err(AlgebraError::NotARing(format!("coefficient ring Z_{p} is not allowed")));
    }
    let order = group.order();
    let space = CoefficientSpace::new(p, order);
    let n = space.size;
    let mul = (0..n * n)
        .map(|k| {
            let (a, b) = (space.coeffs(k / n), space.coeffs(k % n));
            let mut c = vec![0usize; order];
            for g in 0..order {
                for h in 0..order {
                    let gh = group.op(g, h);
                    c[gh] = (c[gh] + a[g] * b[h]) % p;
                }
            }
            space.index(&c) as u16
        })
        .collect();
    let components = group.elements().map(|g| space.supported_on(|k| k == g)).collect();
    let mut unit = vec![0; order];
    unit[group.identity()] = 1;
    let labels = space.labels(|g| {
        if g == group.identity() {
            "1".into()
        } else if group.cyclic_factors().len() == 1 {
            power_label(g)
        } else {
            format!("u^{}", group.display(g))
        }
    });
    GradedRing::from_tables(
        RingTables {
            group: group.clone(),
            size: n,
            add: space.add_table(),
            mul,
            zero: 0,
            one: space.index(&unit),
            components,
            labels: Some(labels),
        },
        limits,
    )
}

fn truncated_poly(
    group: &FiniteAbelianGroup,
    p: usize,
    d: usize,
    degree: usize,
    limits: &Limits,
) -> Result<GradedRing, AlgebraError> {
    if p < 2 {
        return Err(AlgebraError::NotARing(format!("coefficient ring Z_{p} is not allowed")));
    }
    if d == 0 {
        return Err(AlgebraError::ZeroRing);
    }
    let space = CoefficientSpace::new(p, d);
    let n = space.size;
    let mul = (0..n * n)
        .map(|k| {
            let (a, b) = (space.coeffs(k / n), space.coeffs(k % n));
            let mut c = vec![0usize; d];
            for i in 0..d {
                for j in 0..d - i {
                    c[i + j] = (c[i + j] + a[i] * b[j]) % p;
                }
            }
            space.index(&c) as u16
        })
        .collect();
    let components = group.elements().map(|h| space.supported_on(|k| group.pow(degree, k) == h)).collect();
    let mut unit = vec![0; d];
    unit[0] = 1;
    GradedRing::from_tables(
        RingTables {
            group: group.clone(),
            size: n,
            add: space.add_table(),
            mul,
            zero: 0,
            one: space.index(&unit),
            components,
            labels: Some(space.labels(power_label)),
        },
        limits,
    )
}

fn product(group: &FiniteAbelianGroup, rings: &[GradedRing], limits: &Limits) -> Result<GradedRing, AlgebraError> {
    if rings.is_empty() {
        return Err(AlgebraError::ZeroRing);
    }
    let sizes: Vec<usize> = rings.iter().map(|r| r.size()).collect();
    let n: usize = sizes.iter().product();
    let split = |mut i: usize| -> Vec<usize> {
        let mut out = vec![0; sizes.len()];
        for (slot, s) in out.iter_mut().zip(&sizes).rev() {
            *slot = i % s;
            i /= s;
        }
        out
    };
    let join = |parts: &[usize]| parts.iter().zip(&sizes).fold(0, |acc, (x, s)| acc * s + x);
    let table = |f: &dyn Fn(&GradedRing, usize, usize) -> usize| -> Vec<u16> {
        (0..n * n)
            .map(|k| {
                let (a, b) = (split(k / n), split(k % n));
                let parts: Vec<usize> = rings.iter().enumerate().map(|(i, r)| f(r, a[i], b[i])).collect();
                join(&parts) as u16
            })
            .collect()
    };
    let components = group
        .elements()
        .map(|g| (0..n).filter(|&x| split(x).iter().zip(rings).all(|(&c, r)| r.component(g).contains(c))).collect())
        .collect();
    let labels = (0..n)
        .map(|x| {
            let parts: Vec<&str> = split(x).iter().zip(rings).map(|(&c, r)| r.label(c)).collect();
            format!("({})", parts.join(", "))
        })
        .collect();
    let zero = join(&rings.iter().map(|r| r.zero()).collect::<Vec<_>>());
    let one = join(&rings.iter().map(|r| r.one()).collect::<Vec<_>>());
    GradedRing::from_tables(
        RingTables {
            group: group.clone(),
            size: n,
            add: table(&|r, a, b| r.add(a, b)),
            mul: table(&|r, a, b| r.mul(a, b)),
            zero,
            one,
            components,
            labels: Some(labels),
        },
        limits,
    )
}

/// Converts a validated ring back into a raw table description.
pub fn tables_constructor(ring: &GradedRing) -> RingConstructor {
    let n = ring.size();
    let group = ring.group();
    RingConstructor::Tables {
        size: n,
        zero: ring.zero(),
        one: ring.one(),
        add: (0..n).map(|a| (0..n).map(|b| ring.add(a, b)).collect()).collect(),
        mul: (0..n).map(|a| (0..n).map(|b| ring.mul(a, b)).collect()).collect(),
        components: group
            .elements()
            .filter(|&g| ring.component(g).len() > 1)
            .map(|g| ComponentSpec { degree: group.tuple(g), elements: ring.component(g).to_vec() })
            .collect(),
        labels: Some(ring.labels().to_vec()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(&[2]).unwrap()
    }

    fn build(desc: RingConstructor) -> GradedRing {
        build_ring(&z2(), &desc, &Limits::default()).unwrap()
    }

    #[test]
    fn zmod4_trivially_graded() {
        let r = build(RingConstructor::Zmod { n: 4 });
        assert_eq!(r.component(0).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(r.component(1).to_vec(), vec![0]);
        assert_eq!(r.homogeneous_components(3), vec![3, 0]);
    }

    #[test]
    fn truncated_poly_dual_numbers() {
        let r = build(RingConstructor::TruncatedPoly { p: 2, d: 2, degree: vec![1] });
        assert_eq!(r.labels(), &["0", "1", "u", "1+u"]);
        assert_eq!(r.component(0).to_vec(), vec![0, 1]);
        assert_eq!(r.component(1).to_vec(), vec![0, 2]);
        assert_eq!(r.mul(2, 2), 0);
        assert_eq!(r.homogeneous_components(3), vec![1, 2]);
    }

    #[test]
    fn group_algebra_of_z2() {
        let r = build(RingConstructor::GroupAlgebra { p: 2 });
        assert_eq!(r.labels(), &["0", "1", "u", "1+u"]);
        assert_eq!(r.mul(2, 2), 1);
        assert_eq!(r.mul(3, 3), 0);
        assert_eq!(r.component(1).to_vec(), vec![0, 2]);
    }

    #[test]
    fn products_and_quotients() {
        let r = build(RingConstructor::Product {
            factors: vec![RingConstructor::Zmod { n: 2 }, RingConstructor::Zmod { n: 3 }],
        });
        assert_eq!(r.size(), 6);
        assert_eq!(r.label(r.one()), "(1, 1)");
        let q = build(RingConstructor::Quotient { inner: Box::new(RingConstructor::Zmod { n: 4 }), generators: vec![2] });
        assert_eq!(q.size(), 2);
        let bad = build_ring(
            &z2(),
            &RingConstructor::Quotient {
                inner: Box::new(RingConstructor::GroupAlgebra { p: 2 }),
                generators: vec![3],
            },
            &Limits::default(),
        );
        assert!(matches!(bad, Err(AlgebraError::NonHomogeneousGenerator(_))));
    }

    #[test]
    fn tables_round_trip() {
        let r = build(RingConstructor::TruncatedPoly { p: 3, d: 2, degree: vec![1] });
        let again = build(tables_constructor(&r));
        assert_eq!(again.tables().mul, r.tables().mul);
        assert_eq!(again.components(), r.components());
    }

    #[test]
    fn size_prediction_rejects_early() {
        let g = FiniteAbelianGroup::new(&[2, 2, 2]).unwrap();
        let err = build_ring(&g, &RingConstructor::GroupAlgebra { p: 3 }, &Limits::default()).unwrap_err();
        assert!(matches!(err, AlgebraError::SizeExceeded { .. }));
        assert!(matches!(
            build_ring(&z2(), &RingConstructor::Zmod { n: 1 }, &Limits::default()),
            Err(AlgebraError::ZeroRing)
        ));
    }
}
