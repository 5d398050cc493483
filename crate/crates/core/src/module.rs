//! Finite graded modules over finite graded rings.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::additive::AdditiveTable;
use crate::bitset::BitSet;
use crate::construct::ComponentSpec;
use crate::error::AlgebraError;
use crate::ring::{check_grading, fresh_id, GradedRing, Limits, CARRIER_LIMIT};

/// Raw tables for a graded module, before validation.
#[derive(Clone, Debug)]
pub struct ModuleTables {
    pub size: usize,
    pub add: Vec<u16>,
    pub zero: usize,
    /// `action[r * size + m] = r m`.
    pub action: Vec<u16>,
    pub components: Vec<BitSet>,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct GradedModule {
    id: u64,
    ring: Arc<GradedRing>,
    additive: AdditiveTable,
    action: Vec<u16>,
    components: Vec<BitSet>,
    decomposition: Vec<u16>,
    hom: BitSet,
    labels: Vec<String>,
}

impl GradedModule {
    pub fn from_tables(ring: Arc<GradedRing>, tables: ModuleTables, limits: &Limits) -> Result<Self, AlgebraError> {
        let ModuleTables { size, add, zero, action, components, labels } = tables;
        let limit = limits.max_module_order.min(CARRIER_LIMIT);
        if size > limit {
            return Err(AlgebraError::SizeExceeded { what: "module carrier", limit });
        }
        if size == 0 {
            return Err(AlgebraError::NotAModule("empty carrier".into()));
        }
        let additive = AdditiveTable::new(size, add, zero).map_err(AlgebraError::NotAModule)?;
        let rn = ring.size();
        if action.len() != rn * size {
            return Err(AlgebraError::NotAModule(format!(
                "action table has {} entries, expected {}",
                action.len(),
                rn * size
            )));
        }
        if let Some(bad) = action.iter().find(|&&v| v as usize >= size) {
            return Err(AlgebraError::NotAModule(format!("action table entry {bad} out of range")));
        }
        let act = |r: usize, m: usize| action[r * size + m] as usize;
        for m in 0..size {
            if act(ring.one(), m) != m {
                return Err(AlgebraError::NotAModule(format!("1 * {m} != {m}")));
            }
        }
        for r in 0..rn {
            for m in 0..size {
                let rm = act(r, m);
                for n in 0..size {
                    if act(r, additive.add(m, n)) != additive.add(rm, act(r, n)) {
                        return Err(AlgebraError::NotAModule(format!("r(m + n) != rm + rn at ({r}, {m}, {n})")));
                    }
                }
                for s in 0..rn {
                    if act(ring.add(r, s), m) != additive.add(rm, act(s, m)) {
                        return Err(AlgebraError::NotAModule(format!("(r + s)m != rm + sm at ({r}, {s}, {m})")));
                    }
                    if act(ring.mul(r, s), m) != act(r, act(s, m)) {
                        return Err(AlgebraError::NotAModule(format!("(rs)m != r(sm) at ({r}, {s}, {m})")));
                    }
                }
            }
        }
        let group = ring.group();
        let decomposition =
            check_grading(group, &additive, &components, |g| format!("module degree {}", group.display(g)))?;
        for g in group.elements() {
            for h in group.elements() {
                let target = &components[group.op(g, h)];
                for r in ring.component(g) {
                    for m in &components[h] {
                        if !target.contains(act(r, m)) {
                            return Err(AlgebraError::InvalidGrading {
                                component: format!("module degree {}", group.display(group.op(g, h))),
                                reason: format!(
                                    "R_{} M_{} is not contained in it: {} * {m} = {}",
                                    group.display(g),
                                    group.display(h),
                                    ring.label(r),
                                    act(r, m)
                                ),
                            });
                        }
                    }
                }
            }
        }
        let hom = components.iter().fold(BitSet::new(), |acc, c| acc.union(c));
        let labels = match labels {
            Some(l) if l.len() == size => l,
            _ => (0..size).map(|i| i.to_string()).collect(),
        };
        Ok(Self { id: fresh_id(), ring, additive, action, components, decomposition, hom, labels })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<GradedRing> {
        &self.ring
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

    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.additive.add(a, b)
    }

    /// `r m`.
    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.size() + m] as usize
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

    pub fn component_of(&self, m: usize, g: usize) -> usize {
        self.decomposition[m * self.ring.group().order() + g] as usize
    }

    pub fn homogeneous_components(&self, m: usize) -> Vec<usize> {
        self.ring.group().elements().map(|g| self.component_of(m, g)).collect()
    }

    pub fn hom_elements(&self) -> &BitSet {
        &self.hom
    }

    pub fn is_homogeneous(&self, m: usize) -> bool {
        self.hom.contains(m)
    }

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub(crate) fn check_element(&self, m: usize) -> Result<(), AlgebraError> {
        if m < self.size() {
            Ok(())
        } else {
            Err(AlgebraError::ElementOutOfRange { index: m, size: self.size() })
        }
    }

    pub fn tables(&self) -> ModuleTables {
        let n = self.size();
        ModuleTables {
            size: n,
            add: (0..n * n).map(|k| self.add(k / n, k % n) as u16).collect(),
            zero: self.zero(),
            action: self.action.clone(),
            components: self.components.clone(),
            labels: Some(self.labels.clone()),
        }
    }
}

/// How a ring acts on a product of cyclic groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionSpec {
    /// The ring must be `Z_n` additively generated by 1; `k * 1` acts as
    /// multiplication by the integer `k`.
    ScalarMod,
    /// Explicit table, `table[r][m] = r m`.
    Table(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleGrading {
    /// Degree of the standard generator of each cyclic factor.
    Degrees(Vec<Vec<usize>>),
    /// Explicit component element lists; unlisted degrees are zero.
    Components(Vec<ComponentSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleConstructor {
    /// `R` over itself, with `M_g = R_{g + shift}`.
    RingAsModule {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shift: Option<Vec<usize>>,
    },
    /// `Z_{n1} x .. x Z_{nk}` with an explicit or scalar action.
    CyclicProduct { factors: Vec<usize>, action: ActionSpec, grading: ModuleGrading },
    /// Direct sum, graded componentwise.
    DirectSum { summands: Vec<ModuleConstructor> },
    /// Quotient by the graded submodule generated by homogeneous elements.
    Quotient { inner: Box<ModuleConstructor>, generators: Vec<usize> },
    /// Explicit tables; `action[r][m] = r m`. Degrees not listed get `{0}`.
    Tables {
        size: usize,
        zero: usize,
        add: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
        components: Vec<ComponentSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl ModuleConstructor {
    /// Upper bound on the carrier size, if it fits in `limit`. Quotients
    /// count at the size of the module they are taken from.
    pub fn predicted_size(&self, ring: &GradedRing, limit: usize) -> Option<usize> {
        match self {
            Self::RingAsModule { .. } => Some(ring.size()).filter(|&s| s <= limit),
            Self::CyclicProduct { factors, .. } => {
                factors.iter().try_fold(1usize, |acc, &f| acc.checked_mul(f).filter(|&v| v <= limit))
            }
            Self::DirectSum { summands } => summands.iter().try_fold(1usize, |acc, s| {
                acc.checked_mul(s.predicted_size(ring, limit)?).filter(|&v| v <= limit)
            }),
            Self::Quotient { inner, .. } => inner.predicted_size(ring, limit),
            Self::Tables { size, .. } => Some(*size).filter(|&s| s <= limit),
        }
    }
}

pub fn build_module(
    ring: &Arc<GradedRing>,
    desc: &ModuleConstructor,
    limits: &Limits,
) -> Result<GradedModule, AlgebraError> {
    let limit = limits.max_module_order.min(CARRIER_LIMIT);
    let too_big = || AlgebraError::SizeExceeded { what: "module carrier", limit };
    // Direct sums are checked on the actual summand sizes below, since a
    // quotient summand can be much smaller than its bound.
    if !matches!(desc, ModuleConstructor::DirectSum { .. }) && desc.predicted_size(ring, limit).is_none() {
        return Err(too_big());
    }
    let group = ring.group();
    match desc {
        ModuleConstructor::RingAsModule { shift } => {
            let s = match shift {
                Some(t) => group.element(t)?,
                None => group.identity(),
            };
            let n = ring.size();
            let tables = ModuleTables {
                size: n,
                add: (0..n * n).map(|k| ring.add(k / n, k % n) as u16).collect(),
                zero: ring.zero(),
                action: (0..n * n).map(|k| ring.mul(k / n, k % n) as u16).collect(),
                components: group.elements().map(|g| ring.component(group.op(g, s)).clone()).collect(),
                labels: Some(ring.labels().to_vec()),
            };
            GradedModule::from_tables(ring.clone(), tables, limits)
        }
        ModuleConstructor::CyclicProduct { factors, action, grading } => {
            cyclic_product(ring, factors, action, grading, limits)
        }
        ModuleConstructor::DirectSum { summands } => {
            let parts =
                summands.iter().map(|s| build_module(ring, s, limits)).collect::<Result<Vec<_>, _>>()?;
            parts.iter().try_fold(1usize, |acc, m| acc.checked_mul(m.size()).filter(|&v| v <= limit)).ok_or_else(too_big)?;
            direct_sum(ring, &parts, limits)
        }
        ModuleConstructor::Quotient { inner, generators } => {
            let module = build_module(ring, inner, limits)?;
            let sub = module.submodule_generated(generators)?;
            module.quotient(&sub, limits)
        }
        ModuleConstructor::Tables { size, zero, add, action, components, labels } => {
            let n = *size;
            let flat = |t: &Vec<Vec<usize>>, rows: usize, what: &str| -> Result<Vec<u16>, AlgebraError> {
                if t.len() != rows || t.iter().any(|row| row.len() != n) {
                    return Err(AlgebraError::NotAModule(format!("{what} table is not {rows} x {n}")));
                }
                t.iter()
                    .flatten()
                    .map(|&v| if v < n { Ok(v as u16) } else { Err(AlgebraError::ElementOutOfRange { index: v, size: n }) })
                    .collect()
            };
            if *zero >= n {
                return Err(AlgebraError::ElementOutOfRange { index: *zero, size: n });
            }
            let mut comps = vec![BitSet::singleton(*zero); group.order()];
            for spec in components {
                let g = group.element(&spec.degree)?;
                for &e in &spec.elements {
                    if e >= n {
                        return Err(AlgebraError::ElementOutOfRange { index: e, size: n });
                    }
                }
                comps[g] = spec.elements.iter().copied().collect();
                comps[g].insert(*zero);
            }
            let tables = ModuleTables {
                size: n,
                add: flat(add, n, "addition")?,
                zero: *zero,
                action: flat(action, ring.size(), "action")?,
                components: comps,
                labels: labels.clone(),
            };
            GradedModule::from_tables(ring.clone(), tables, limits)
        }
    }
}

/// Explicit-table description of `module`, usable after relabelling.
pub fn module_tables_constructor(module: &GradedModule) -> ModuleConstructor {
    let n = module.size();
    let ring = module.ring();
    let group = ring.group();
    ModuleConstructor::Tables {
        size: n,
        zero: module.zero(),
        add: (0..n).map(|a| (0..n).map(|b| module.add(a, b)).collect()).collect(),
        action: (0..ring.size()).map(|r| (0..n).map(|m| module.act(r, m)).collect()).collect(),
        components: group
            .elements()
            .filter(|&g| module.component(g).len() > 1)
            .map(|g| ComponentSpec { degree: group.tuple(g), elements: module.component(g).to_vec() })
            .collect(),
        labels: Some(module.labels().to_vec()),
    }
}

fn mixed_radix(sizes: &[usize]) -> (impl Fn(usize) -> Vec<usize> + '_, impl Fn(&[usize]) -> usize + '_) {
    let split = move |mut i: usize| {
        let mut out = vec![0; sizes.len()];
        for (slot, s) in out.iter_mut().zip(sizes).rev() {
            *slot = i % s;
            i /= s;
        }
        out
    };
    let join = move |parts: &[usize]| parts.iter().zip(sizes).fold(0, |acc, (x, s)| acc * s + x % s);
    (split, join)
}

fn cyclic_product(
    ring: &Arc<GradedRing>,
    factors: &[usize],
    action: &ActionSpec,
    grading: &ModuleGrading,
    limits: &Limits,
) -> Result<GradedModule, AlgebraError> {
    if factors.contains(&0) {
        return Err(AlgebraError::NotAModule("cyclic factor 0 is not allowed".into()));
    }
    let group = ring.group();
    let n: usize = factors.iter().product();
    let (split, join) = mixed_radix(factors);
    let add: Vec<u16> = (0..n * n)
        .map(|k| {
            let (a, b) = (split(k / n), split(k % n));
            let s: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            join(&s) as u16
        })
        .collect();
    let rn = ring.size();
    let action: Vec<u16> = match action {
        ActionSpec::ScalarMod => {
            let mut multiple = vec![usize::MAX; rn];
            let mut t = ring.zero();
            for k in 0..rn {
                if multiple[t] != usize::MAX {
                    break;
                }
                multiple[t] = k;
                t = ring.add(t, ring.one());
            }
            if multiple.contains(&usize::MAX) {
                return Err(AlgebraError::NotAModule(
                    "scalar_mod action needs a ring additively generated by 1".into(),
                ));
            }
            (0..rn * n)
                .map(|k| {
                    let (r, m) = (k / n, k % n);
                    let scaled: Vec<usize> = split(m).iter().map(|&c| c * multiple[r]).collect();
                    join(&scaled) as u16
                })
                .collect()
        }
        ActionSpec::Table(rows) => {
            if rows.len() != rn || rows.iter().any(|r| r.len() != n) {
                return Err(AlgebraError::NotAModule(format!("action table is not {rn} x {n}")));
            }
            rows.iter()
                .flatten()
                .map(|&v| if v < n { Ok(v as u16) } else { Err(AlgebraError::ElementOutOfRange { index: v, size: n }) })
                .collect::<Result<_, _>>()?
        }
    };
    let components: Vec<BitSet> = match grading {
        ModuleGrading::Degrees(degrees) => {
            if degrees.len() != factors.len() {
                return Err(AlgebraError::InvalidGrading {
                    component: "all".into(),
                    reason: format!("{} degrees for {} cyclic factors", degrees.len(), factors.len()),
                });
            }
            let degs = degrees.iter().map(|d| group.element(d)).collect::<Result<Vec<_>, _>>()?;
            group
                .elements()
                .map(|g| (0..n).filter(|&m| split(m).iter().zip(&degs).all(|(&c, &d)| c == 0 || d == g)).collect())
                .collect()
        }
        ModuleGrading::Components(specs) => {
            let mut comps = vec![BitSet::singleton(0); group.order()];
            for spec in specs {
                let g = group.element(&spec.degree)?;
                comps[g] = spec.elements.iter().copied().collect();
                comps[g].insert(0);
            }
            comps
        }
    };
    let labels = (0..n)
        .map(|m| {
            let t = split(m);
            if t.len() == 1 {
                t[0].to_string()
            } else {
                format!("({})", t.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
            }
        })
        .collect();
    GradedModule::from_tables(
        ring.clone(),
        ModuleTables { size: n, add, zero: 0, action, components, labels: Some(labels) },
        limits,
    )
}

fn direct_sum(ring: &Arc<GradedRing>, parts: &[GradedModule], limits: &Limits) -> Result<GradedModule, AlgebraError> {
    if parts.is_empty() {
        return Err(AlgebraError::NotAModule("empty direct sum".into()));
    }
    let sizes: Vec<usize> = parts.iter().map(|p| p.size()).collect();
    let (split, join) = mixed_radix(&sizes);
    let n: usize = sizes.iter().product();
    let add = (0..n * n)
        .map(|k| {
            let (a, b) = (split(k / n), split(k % n));
            let s: Vec<usize> = parts.iter().enumerate().map(|(i, p)| p.add(a[i], b[i])).collect();
            join(&s) as u16
        })
        .collect();
    let action = (0..ring.size() * n)
        .map(|k| {
            let (r, m) = (k / n, split(k % n));
            let s: Vec<usize> = parts.iter().enumerate().map(|(i, p)| p.act(r, m[i])).collect();
            join(&s) as u16
        })
        .collect();
    let components = ring
        .group()
        .elements()
        .map(|g| (0..n).filter(|&m| split(m).iter().zip(parts).all(|(&c, p)| p.component(g).contains(c))).collect())
        .collect();
    let labels = (0..n)
        .map(|m| {
            let t: Vec<&str> = split(m).iter().zip(parts).map(|(&c, p)| p.label(c)).collect();
            format!("({})", t.join(", "))
        })
        .collect();
    let zero = join(&parts.iter().map(|p| p.zero()).collect::<Vec<_>>());
    GradedModule::from_tables(
        ring.clone(),
        ModuleTables { size: n, add, zero, action, components, labels: Some(labels) },
        limits,
    )
}
