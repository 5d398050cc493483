//! Deterministic corpus generation.
//!
//! The corpus is the curated fixtures, then every `Z_n` within bounds, then a
//! seeded sample from a systematic pool of ring families. Each sampled ring
//! gets one module picked from [`module_variants`]; some are rewritten as
//! relabelled raw tables, occasionally with one corrupted entry so that the
//! validator has something to reject.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use gradspec_core::{
    build_module, build_ring, module_tables_constructor, tables_constructor, ActionSpec, ComponentSpec,
    FiniteAbelianGroup, GradedModule, GradedRing, Limits, ModuleConstructor, ModuleGrading, RingConstructor,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::HarnessError;
use crate::fixtures;
use crate::instance::{GroupSpec, Instance, InstanceFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub ring: usize,
    pub module: usize,
    pub group: usize,
    pub count: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { ring: 32, module: 64, group: 4, count: 110 }
    }
}

impl Bounds {
    pub fn limits(&self) -> Limits {
        Limits { max_ring_order: self.ring, max_module_order: self.module, ..Limits::default() }
    }
}

/// `ring=32,module=64,group=4,count=110`; omitted keys keep their defaults.
impl FromStr for Bounds {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut b = Bounds::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| HarnessError::Usage(format!("bounds entry `{part}` is not key=value")))?;
            let value: usize =
                value.trim().parse().map_err(|_| HarnessError::Usage(format!("bounds value `{value}` is not a number")))?;
            match key.trim() {
                "ring" => b.ring = value,
                "module" => b.module = value,
                "group" => b.group = value,
                "count" => b.count = value,
                other => return Err(HarnessError::Usage(format!("unknown bounds key `{other}`"))),
            }
        }
        if b.ring > gradspec_core::ring::CARRIER_LIMIT || b.module > gradspec_core::ring::CARRIER_LIMIT {
            return Err(HarnessError::Usage(format!("carrier bounds are capped at {}", gradspec_core::ring::CARRIER_LIMIT)));
        }
        if b.group == 0 {
            return Err(HarnessError::Usage("group bound must be at least 1".into()));
        }
        Ok(b)
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring={},module={},group={},count={}", self.ring, self.module, self.group, self.count)
    }
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub bounds: Bounds,
    pub seed: u64,
    pub instances: Vec<Instance>,
    /// Candidates rejected by validation or by the bounds.
    pub discarded: usize,
    pub note: Option<String>,
}

#[derive(Serialize)]
struct CorpusDocument<'a> {
    bounds: String,
    seed: u64,
    discarded: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: &'a Option<String>,
    instances: Vec<&'a InstanceFile>,
}

impl Corpus {
    pub fn to_json(&self) -> String {
        let doc = CorpusDocument {
            bounds: self.bounds.to_string(),
            seed: self.seed,
            discarded: self.discarded,
            note: &self.note,
            instances: self.instances.iter().map(|i| &i.file).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("corpus serializes")
    }
}

/// Grading groups of order at most `bound` in invariant factor form.
pub fn groups(bound: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, order: usize, bound: usize, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        let start = prefix.last().copied().unwrap_or(2);
        for f in start..=bound / order {
            if prefix.last().is_none_or(|&l| f % l == 0) {
                prefix.push(f);
                extend(prefix, order * f, bound, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, bound, &mut out);
    out.sort_by_key(|g| (g.iter().product::<usize>(), g.clone()));
    out
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// A candidate ring description with the group it is graded by.
#[derive(Clone, Debug)]
pub struct RingCandidate {
    pub group: Vec<usize>,
    pub ring: RingConstructor,
    pub description: String,
}

/// `Z_n` for every `n` within bounds, cycling through the grading groups.
pub fn zmod_family(bounds: &Bounds) -> Vec<RingCandidate> {
    let gs = groups(bounds.group);
    (2..=bounds.ring)
        .map(|n| {
            let group = gs[n % gs.len()].clone();
            RingCandidate { description: format!("Z_{n} graded by {group:?}"), group, ring: RingConstructor::Zmod { n } }
        })
        .collect()
}

/// Truncated polynomial rings, group algebras, products and quotients.
pub fn ring_pool(bounds: &Bounds) -> Vec<RingCandidate> {
    let mut out = Vec::new();
    let primes: Vec<usize> = (2..=bounds.ring).filter(|&p| is_prime(p)).collect();
    for gf in groups(bounds.group) {
        let group = FiniteAbelianGroup::new(&gf).expect("generated groups are valid");
        let order = group.order();
        let degrees: Vec<Vec<usize>> = group.elements().map(|g| group.tuple(g)).collect();
        let mut push = |ring: RingConstructor, description: String| {
            out.push(RingCandidate { group: gf.clone(), ring, description })
        };
        let mut small: Vec<(RingConstructor, usize, String)> = Vec::new();
        for &p in &primes {
            let mut size = p * p;
            for d in 2.. {
                if size > bounds.ring {
                    break;
                }
                for deg in &degrees {
                    let ring = RingConstructor::TruncatedPoly { p, d, degree: deg.clone() };
                    push(ring.clone(), format!("Z_{p}[u]/(u^{d}), deg u = {deg:?}"));
                    if size <= bounds.ring / 2 {
                        small.push((ring.clone(), size, format!("Z_{p}[u]/(u^{d})")));
                    }
                    for k in 1..d {
                        push(
                            RingConstructor::Quotient { inner: Box::new(ring.clone()), generators: vec![p.pow(k as u32)] },
                            format!("Z_{p}[u]/(u^{d}) mod u^{k}, deg u = {deg:?}"),
                        );
                    }
                }
                size *= p;
            }
            if order >= 2 && (1..=order).try_fold(1usize, |acc, _| acc.checked_mul(p)).is_some_and(|s| s <= bounds.ring) {
                let size = p.pow(order as u32);
                push(RingConstructor::GroupAlgebra { p }, format!("Z_{p}[G]"));
                if size <= bounds.ring / 2 {
                    small.push((RingConstructor::GroupAlgebra { p }, size, format!("Z_{p}[G]")));
                }
            }
        }
        for n in 2..=bounds.ring.min(8) {
            if n <= bounds.ring / 2 {
                small.push((RingConstructor::Zmod { n }, n, format!("Z_{n}")));
            }
            for d in (2..n).filter(|d| n % d == 0) {
                push(
                    RingConstructor::Quotient { inner: Box::new(RingConstructor::Zmod { n }), generators: vec![d] },
                    format!("Z_{n} mod {d}"),
                );
            }
        }
        for i in 0..small.len() {
            for j in i..small.len() {
                if small[i].1 * small[j].1 <= bounds.ring {
                    push(
                        RingConstructor::Product { factors: vec![small[i].0.clone(), small[j].0.clone()] },
                        format!("{} x {}", small[i].2, small[j].2),
                    );
                }
            }
        }
    }
    out
}

fn zero_module(ring: &GradedRing, is_zmod: bool) -> ModuleConstructor {
    let action = if is_zmod { ActionSpec::ScalarMod } else { ActionSpec::Table(vec![vec![0]; ring.size()]) };
    ModuleConstructor::CyclicProduct { factors: vec![], action, grading: ModuleGrading::Degrees(vec![]) }
}

fn divisors(n: usize) -> Vec<usize> {
    (2..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Module descriptions over `ring` within `module_bound`, in a fixed order.
pub fn module_variants(ring: &GradedRing, desc: &RingConstructor, module_bound: usize) -> Vec<ModuleConstructor> {
    let group = ring.group();
    let n = ring.size();
    let mut out = vec![zero_module(ring, matches!(desc, RingConstructor::Zmod { .. }))];
    if n > module_bound {
        return out;
    }
    let degrees: Vec<Vec<usize>> = group.elements().map(|g| group.tuple(g)).collect();
    for (g, deg) in degrees.iter().enumerate() {
        let shift = (g != group.identity()).then(|| deg.clone());
        out.push(ModuleConstructor::RingAsModule { shift });
    }
    let mut seen = Vec::new();
    let mut quotients = Vec::new();
    for x in ring.hom_elements().iter() {
        let Ok(ideal) = ring.ideal_generated(&[x]) else { continue };
        if ideal.is_zero() || !ring.is_proper(&ideal) || seen.contains(ideal.elements()) {
            continue;
        }
        seen.push(ideal.elements().clone());
        let q = ModuleConstructor::Quotient {
            inner: Box::new(ModuleConstructor::RingAsModule { shift: None }),
            generators: vec![x],
        };
        out.push(q.clone());
        quotients.push((q, n / ideal.len()));
    }
    if n * n <= module_bound {
        let r = ModuleConstructor::RingAsModule { shift: None };
        out.push(ModuleConstructor::DirectSum { summands: vec![r.clone(), r] });
    }
    for (q, size) in &quotients {
        if n * size <= module_bound {
            out.push(ModuleConstructor::DirectSum {
                summands: vec![ModuleConstructor::RingAsModule { shift: None }, q.clone()],
            });
        }
    }
    if let RingConstructor::Zmod { n } = desc {
        let ds = divisors(*n);
        let mut lists: Vec<Vec<usize>> = ds.iter().map(|&d| vec![d]).collect();
        for &a in &ds {
            for &b in ds.iter().filter(|&&b| b >= a && a * b <= module_bound) {
                lists.push(vec![a, b]);
                for &c in ds.iter().filter(|&&c| c >= b && a * b * c <= module_bound) {
                    lists.push(vec![a, b, c]);
                }
            }
        }
        for factors in lists {
            // Degree assignments, capped so large groups do not dominate.
            let k = factors.len();
            let total = degrees.len().pow(k as u32);
            for code in 0..total.min(16) {
                let mut c = code;
                let assign: Vec<Vec<usize>> = (0..k)
                    .map(|_| {
                        let d = degrees[c % degrees.len()].clone();
                        c /= degrees.len();
                        d
                    })
                    .collect();
                out.push(ModuleConstructor::CyclicProduct {
                    factors: factors.clone(),
                    action: ActionSpec::ScalarMod,
                    grading: ModuleGrading::Degrees(assign),
                });
            }
        }
    }
    out
}

/// A random permutation of `0..n`.
fn permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn relabel_components(components: &[ComponentSpec], perm: &[usize]) -> Vec<ComponentSpec> {
    components
        .iter()
        .map(|c| {
            let mut elements: Vec<usize> = c.elements.iter().map(|&e| perm[e]).collect();
            elements.sort_unstable();
            ComponentSpec { degree: c.degree.clone(), elements }
        })
        .collect()
}

fn relabel_labels(labels: &Option<Vec<String>>, perm: &[usize]) -> Option<Vec<String>> {
    labels.as_ref().map(|old| {
        let mut new = old.clone();
        for (i, l) in old.iter().enumerate() {
            new[perm[i]] = l.clone();
        }
        new
    })
}

/// `table'[p(a)][q(b)] = r(table[a][b])`.
fn relabel_table(table: &[Vec<usize>], rows: &[usize], cols: &[usize], vals: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; cols.len()]; rows.len()];
    for (a, row) in table.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            out[rows[a]][cols[b]] = vals[v];
        }
    }
    out
}

fn corrupt(table: &mut [Vec<usize>], modulus: usize, rng: &mut ChaCha8Rng) {
    let r = rng.gen_range(0..table.len());
    let c = rng.gen_range(0..table[r].len());
    table[r][c] = (table[r][c] + rng.gen_range(1..modulus.max(2))) % modulus;
}

/// Rewrites ring and module as relabelled tables; with `broken`, one entry
/// of the module action (or the ring product, for ring-only instances) is
/// changed.
fn as_tables(ring: &GradedRing, module: Option<&GradedModule>, broken: bool, rng: &mut ChaCha8Rng) -> (RingConstructor, Option<ModuleConstructor>) {
    let n = ring.size();
    let pi = permutation(n, rng);
    let RingConstructor::Tables { zero, one, add, mul, components, labels, .. } = tables_constructor(ring) else {
        unreachable!("tables_constructor returns tables")
    };
    let mut mul = relabel_table(&mul, &pi, &pi, &pi);
    if broken && module.is_none() {
        corrupt(&mut mul, n, rng);
    }
    let ring_desc = RingConstructor::Tables {
        size: n,
        zero: pi[zero],
        one: pi[one],
        add: relabel_table(&add, &pi, &pi, &pi),
        mul,
        components: relabel_components(&components, &pi),
        labels: relabel_labels(&labels, &pi),
    };
    let module_desc = module.map(|m| {
        let size = m.size();
        let sigma = permutation(size, rng);
        let ModuleConstructor::Tables { zero, add, action, components, labels, .. } = module_tables_constructor(m) else {
            unreachable!("module_tables_constructor returns tables")
        };
        let mut action = relabel_table(&action, &pi, &sigma, &sigma);
        if broken {
            corrupt(&mut action, size, rng);
        }
        ModuleConstructor::Tables {
            size,
            zero: sigma[zero],
            add: relabel_table(&add, &sigma, &sigma, &sigma),
            action,
            components: relabel_components(&components, &sigma),
            labels: relabel_labels(&labels, &sigma),
        }
    });
    (ring_desc, module_desc)
}

/// Probability that a sampled instance is rewritten as raw tables.
const TABLE_RATE: f64 = 0.2;
/// Probability that a table instance gets a corrupted entry.
const CORRUPT_RATE: f64 = 0.3;

pub fn generate_corpus(bounds: &Bounds, seed: u64) -> Corpus {
    let limits = bounds.limits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances: Vec<Instance> = fixtures::curated()
        .into_iter()
        .map(|f| f.validate(&Limits::default()).expect("shipped fixtures validate"))
        .collect();
    let mut discarded = 0;
    let mut pool = ring_pool(bounds);
    pool.shuffle(&mut rng);
    let candidates: Vec<RingCandidate> = zmod_family(bounds).into_iter().chain(pool).collect();
    let available = candidates.len();
    for (k, cand) in candidates.into_iter().enumerate() {
        if instances.len() >= bounds.count {
            break;
        }
        let Ok(group) = FiniteAbelianGroup::new(&cand.group) else {
            discarded += 1;
            continue;
        };
        let Ok(ring) = build_ring(&group, &cand.ring, &limits) else {
            discarded += 1;
            continue;
        };
        let ring = Arc::new(ring);
        let variants = module_variants(&ring, &cand.ring, bounds.module);
        let mut module_desc = variants.choose(&mut rng).cloned();
        let mut ring_desc = cand.ring.clone();
        let mut description = cand.description.clone();
        if rng.gen_bool(TABLE_RATE) {
            let module = match &module_desc {
                Some(d) => match build_module(&ring, d, &limits) {
                    Ok(m) => Some(m),
                    Err(_) => {
                        discarded += 1;
                        continue;
                    }
                },
                None => None,
            };
            let broken = rng.gen_bool(CORRUPT_RATE);
            (ring_desc, module_desc) = as_tables(&ring, module.as_ref(), broken, &mut rng);
            description.push_str(", relabelled tables");
        }
        let file = InstanceFile {
            name: format!("gen-{seed}-{k:03}"),
            group: GroupSpec { cyclic_factors: cand.group.clone() },
            ring: ring_desc,
            module: module_desc,
            notes: Some(description),
        };
        match file.validate(&limits) {
            Ok(instance) => instances.push(instance),
            Err(_) => discarded += 1,
        }
    }
    let note = (instances.len() < bounds.count).then(|| {
        format!(
            "shortfall: {} instances requested, {} produced from {} candidates ({} discarded)",
            bounds.count,
            instances.len(),
            available,
            discarded
        )
    });
    Corpus { bounds: *bounds, seed, instances, discarded, note }
}
