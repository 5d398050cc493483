//! Property suites, one per numbered statement, plus a few structural
//! invariants.
//!
//! Every suite evaluates its hypotheses first: unmet hypotheses give
//! `precondition-skipped`, a hypothesis that can never be met on the
//! instance gives `vacuous`. Biconditionals are evaluated on both sides
//! independently. Quantification over large lattices uses an evenly spaced
//! sample, recorded in the row note.

use std::time::Instant;

use gradspec_core::{chain_bound, BitSet, GradedIdeal, GradedSubmodule, SpectrumTopology};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::context::{Analysis, ModuleAnalysis};
use crate::error::HarnessError;
use crate::report::{Status, SuiteResult};

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub counterexample: Option<Value>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Self { status: Status::Pass, counterexample: None, note: None }
    }

    pub fn fail(counterexample: Value) -> Self {
        Self { status: Status::Fail, counterexample: Some(counterexample), note: None }
    }

    pub fn vacuous(note: impl Into<String>) -> Self {
        Self { status: Status::Vacuous, counterexample: None, note: Some(note.into()) }
    }

    pub fn skipped(note: impl Into<String>) -> Self {
        Self { status: Status::PreconditionSkipped, counterexample: None, note: Some(note.into()) }
    }

    fn with_note(mut self, note: Option<String>) -> Self {
        if let Some(n) = note {
            self.note = Some(match self.note.take() {
                Some(old) => format!("{old}; {n}"),
                None => n,
            });
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Ring,
    Module,
}

pub struct Suite {
    pub id: &'static str,
    pub side: Side,
    pub run: fn(&Analysis) -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($payload:tt)+) => {
        if !$cond {
            return Outcome::fail(json!($($payload)+));
        }
    };
}

macro_rules! gate {
    ($check:expr) => {
        if let Some(outcome) = $check {
            return outcome;
        }
    };
}

const SINGLE_CAP: usize = 256;
const PAIR_CAP: usize = 40;
/// Spaces with at most this many points get every subset checked.
const SUBSET_POINTS: usize = 10;

/// Evenly spaced indices, always including the first and last.
fn sample(total: usize, cap: usize) -> Vec<usize> {
    if total <= cap {
        (0..total).collect()
    } else {
        let mut v: Vec<usize> = (0..cap).map(|i| i * (total - 1) / (cap - 1)).collect();
        v.dedup();
        v
    }
}

fn coverage(what: &str, total: usize, cap: usize) -> Option<String> {
    (total > cap).then(|| format!("{what}: evenly spaced sample of {cap} of {total}"))
}

fn js(set: &BitSet) -> Value {
    json!(set.to_vec())
}

fn ideal_js(i: &GradedIdeal) -> Value {
    json!(i.to_vec())
}

fn sub_js(n: &GradedSubmodule) -> Value {
    json!(n.to_vec())
}

/// All subsets for small spaces; otherwise singletons, pairs from a sample,
/// closed sets and their complements.
fn point_subsets(n: usize, topology: &SpectrumTopology) -> (Vec<BitSet>, Option<String>) {
    if n <= SUBSET_POINTS {
        let all = (0u32..1 << n).map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect()).collect();
        return (all, None);
    }
    let mut out: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
    let picked = sample(n, PAIR_CAP);
    for (x, &i) in picked.iter().enumerate() {
        for &j in &picked[x + 1..] {
            out.push([i, j].into_iter().collect());
        }
    }
    let all = topology.everything();
    for c in topology.closed_sets() {
        out.push(c.points.clone());
        out.push(all.difference(&c.points));
    }
    out.sort();
    out.dedup();
    (out, Some(format!("{n} points: singletons, sampled pairs, closed sets and complements")))
}

fn no_module() -> Outcome {
    Outcome::skipped("ring-only instance")
}

fn need_secondful(m: &ModuleAnalysis) -> Option<Outcome> {
    match m.secondful() {
        None => Some(Outcome::skipped("zero module: R/Ann_R(M) is the zero ring and secondful is not evaluated")),
        Some(false) => Some(Outcome::skipped("module is not graded secondful")),
        Some(true) => None,
    }
}

fn need_faithful(m: &ModuleAnalysis) -> Option<Outcome> {
    (!m.second.module().is_faithful()).then(|| Outcome::skipped("module is not graded faithful"))
}

// ---------------------------------------------------------------- ring side

fn lemma_2_1_1(a: &Analysis) -> Outcome {
    let (subsets, note) = point_subsets(a.spectrum.num_points(), &a.topology);
    for y in &subsets {
        let cl = a.topology.closure(y);
        let v = a.spectrum.closure(y);
        ensure!(cl == v, {"points": js(y), "closure": js(&cl), "v_of_xi": js(&v)});
    }
    Outcome::pass().with_note(note)
}

fn lemma_2_1_2(a: &Analysis) -> Outcome {
    for (i, ideal) in a.ideals().iter().enumerate() {
        let xi = a.spectrum.xi(a.spectrum.variety_at(i));
        ensure!(xi == *a.gr(i), {"ideal": ideal_js(ideal), "xi_of_v": ideal_js(&xi), "graded_radical": ideal_js(a.gr(i))});
    }
    Outcome::pass()
}

fn lemma_2_1_3(a: &Analysis) -> Outcome {
    let n = a.ideals().len();
    let picked = sample(n, PAIR_CAP);
    for &i in &picked {
        for &j in &picked {
            let same_gr = a.radical[i] == a.radical[j];
            let same_v = a.spectrum.variety_at(i) == a.spectrum.variety_at(j);
            ensure!(same_gr == same_v, {"I": ideal_js(a.ideal(i)), "J": ideal_js(a.ideal(j)), "equal_radicals": same_gr, "equal_varieties": same_v});
        }
    }
    Outcome::pass().with_note(coverage("ideals", n, PAIR_CAP))
}

fn lemma_2_1_4(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let noetherian = a.is_noetherian();
    let proper: Vec<usize> = (0..a.ideals().len()).filter(|&i| ring.is_proper(a.ideal(i))).collect();
    let picked = sample(proper.len(), 32);
    for &x in &picked {
        let ideal = a.ideal(proper[x]);
        let quotient = match ring.quotient_ring(ideal) {
            Ok(q) => q,
            Err(e) => return Outcome::fail(json!({"ideal": ideal_js(ideal), "error": e.to_string()})),
        };
        let qs = match gradspec_core::PrimeSpectrum::new(std::sync::Arc::new(quotient.ring.clone()), &a.limits) {
            Ok(s) => s,
            Err(e) => return Outcome::fail(json!({"ideal": ideal_js(ideal), "error": e.to_string()})),
        };
        // Primes of R/I correspond to the primes of R over I.
        let pulled: BitSet = qs
            .points()
            .iter()
            .filter_map(|q| a.spectrum.point_index(&quotient.preimage(ring, q)))
            .collect();
        let over = a.spectrum.variety_at(proper[x]);
        ensure!(pulled == *over && pulled.len() == qs.num_points(),
            {"ideal": ideal_js(ideal), "pulled_back_primes": js(&pulled), "primes_over_ideal": js(over)});
        if noetherian {
            ensure!(qs.is_noetherian_space(), {"ideal": ideal_js(ideal), "quotient_noetherian": false});
        }
    }
    if !noetherian {
        return Outcome::vacuous("Spec_G(R) is not Noetherian");
    }
    Outcome::pass().with_note(coverage("proper ideals", proper.len(), 32))
}

fn radical_indices(a: &Analysis) -> Vec<usize> {
    (0..a.ideals().len()).filter(|&i| a.radical[i] == i).collect()
}

fn prop_2_2_a(a: &Analysis) -> Outcome {
    let lhs = a.is_noetherian();
    let radicals: Vec<BitSet> = radical_indices(a).into_iter().map(|i| a.ideal(i).elements().clone()).collect();
    let rhs = chain_bound(&radicals).is_some();
    ensure!(lhs == rhs, {"noetherian_spectrum": lhs, "acc_on_graded_radical_ideals": rhs});
    Outcome::pass().with_note((!lhs).then(|| "both sides false".to_string()))
}

fn prop_2_2_b(a: &Analysis) -> Outcome {
    let all: Vec<BitSet> = a.ideals().iter().map(|i| i.elements().clone()).collect();
    if chain_bound(&all).is_none() {
        return Outcome::vacuous("R is not graded Noetherian");
    }
    ensure!(a.is_noetherian(), {"graded_noetherian_ring": true, "noetherian_spectrum": false});
    Outcome::pass()
}

fn thm_2_3(a: &Analysis) -> Outcome {
    let s = &a.spectrum;
    for c in a.topology.closed_sets() {
        let irreducible = a.topology.is_irreducible(&c.points);
        let of_prime = (0..s.num_points()).find(|&k| s.variety(&s.points()[k]) == c.points);
        ensure!(irreducible == of_prime.is_some(), {"closed_set": js(&c.points), "irreducible": irreducible, "prime": of_prime.map(|k| ideal_js(&s.points()[k]))});
    }
    Outcome::pass()
}

fn thm_2_5_1(a: &Analysis) -> Outcome {
    let n = a.ideals().len();
    for i in sample(n, SINGLE_CAP) {
        let v = a.spectrum.variety_at(i);
        let topological = a.topology.irreducible_components(v);
        let algebraic = a.spectrum.irreducible_components_of_variety(a.ideal(i));
        ensure!(topological == algebraic, {"ideal": ideal_js(a.ideal(i)),
            "components": topological.iter().map(js).collect::<Vec<_>>(),
            "varieties_of_minimal_divisors": algebraic.iter().map(js).collect::<Vec<_>>()});
    }
    Outcome::pass().with_note(coverage("ideals", n, SINGLE_CAP))
}

fn thm_2_5_2(a: &Analysis) -> Outcome {
    let n = a.ideals().len();
    for i in sample(n, SINGLE_CAP) {
        let v = a.spectrum.variety_at(i);
        let mut relative: Vec<BitSet> = a.topology.closed_sets().iter().map(|c| c.points.intersection(v)).collect();
        relative.sort();
        relative.dedup();
        if chain_bound(&relative).is_none() {
            return Outcome::vacuous("a subspace V(I) is not Noetherian");
        }
        let divisors = a.spectrum.minimal_prime_divisors(a.ideal(i));
        let components = a.topology.irreducible_components(v);
        ensure!(divisors.len() == components.len() && divisors.len() <= a.spectrum.num_points(),
            {"ideal": ideal_js(a.ideal(i)), "minimal_divisors": divisors.len(), "components": components.len()});
    }
    Outcome::pass().with_note(coverage("ideals", n, SINGLE_CAP))
}

fn cor_2_6(a: &Analysis) -> Outcome {
    let zero = a.ring().zero_ideal();
    let topological = a.topology.irreducible_components(&a.spectrum.everything());
    let algebraic = a.spectrum.irreducible_components_of_variety(&zero);
    ensure!(topological == algebraic, {"components": topological.iter().map(js).collect::<Vec<_>>(),
        "varieties_of_minimal_primes": algebraic.iter().map(js).collect::<Vec<_>>()});
    if a.is_noetherian() {
        let minimal = a.spectrum.minimal_prime_divisors(&zero);
        ensure!(!minimal.is_empty() && minimal.len() <= a.spectrum.num_points(), {"minimal_primes": minimal.len()});
    }
    Outcome::pass()
}

fn thm_2_7(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let s = &a.spectrum;
    for i in radical_indices(a) {
        let ideal = a.ideal(i);
        let parts = s.radical_decomposition(ideal);
        if !ring.is_proper(ideal) {
            ensure!(parts.is_empty(), {"ideal": ideal_js(ideal), "decomposition": parts.iter().map(ideal_js).collect::<Vec<_>>()});
            continue;
        }
        ensure!(!parts.is_empty(), {"ideal": ideal_js(ideal), "decomposition": []});
        for p in &parts {
            let minimal = !s.points().iter().any(|q| ideal.is_subset(q) && q.is_subset(p) && q != p);
            ensure!(ring.is_graded_prime(p) && ideal.is_subset(p) && minimal,
                {"ideal": ideal_js(ideal), "not_a_minimal_prime_divisor": ideal_js(p)});
        }
        let meet = parts.iter().fold(ring.unit_ideal(), |acc, p| ring.ideal_intersection(&acc, p));
        ensure!(meet == *ideal, {"ideal": ideal_js(ideal), "intersection": ideal_js(&meet)});
    }
    Outcome::pass()
}

fn generated(a: &Analysis, gens: &[usize]) -> GradedIdeal {
    a.ring().ideal_generated(gens).expect("witnesses are homogeneous")
}

fn prop_2_9_1(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let n = a.ideals().len();
    let picked = sample(n, 24);
    for &i in &picked {
        for &j in &picked {
            let (x, y) = (a.ideal(i), a.ideal(j));
            let (Some(wi), Some(wj)) = (a.rfg(i), a.rfg(j)) else {
                return Outcome::fail(json!({"I": ideal_js(x), "J": ideal_js(y), "missing_witness": true}));
            };
            let product = ring.ideal_product(x, y);
            let meet = ring.ideal_intersection(x, y);
            let products: Vec<usize> = wi.iter().flat_map(|&x| wj.iter().map(move |&y| ring.mul(x, y))).collect();
            let built = ring.graded_radical(&generated(a, &products));
            let gp = ring.graded_radical(&product);
            let gm = ring.graded_radical(&meet);
            ensure!(built == gp && gp == gm, {"I": ideal_js(x), "J": ideal_js(y), "witness_I": wi, "witness_J": wj,
                "radical_of_witness_products": ideal_js(&built), "radical_of_IJ": ideal_js(&gp), "radical_of_meet": ideal_js(&gm)});
        }
    }
    Outcome::pass().with_note(coverage("ideals", n, 24))
}

fn prop_2_9_2(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let n = a.ideals().len();
    for i in sample(n, SINGLE_CAP) {
        let ideal = a.ideal(i);
        let Some(w) = a.rfg(i) else {
            return Outcome::fail(json!({"ideal": ideal_js(ideal), "missing_witness": true}));
        };
        ensure!(w.iter().all(|&x| ideal.contains(x) && ring.is_homogeneous(x)), {"ideal": ideal_js(ideal), "witness_outside_h_of_ideal": w});
        let built = ring.graded_radical(&generated(a, w));
        ensure!(built == *a.gr(i), {"ideal": ideal_js(ideal), "witness": w, "radical_of_witness": ideal_js(&built)});
    }
    Outcome::pass().with_note(coverage("ideals", n, SINGLE_CAP))
}

fn lemma_2_10(a: &Analysis) -> Outcome {
    let lhs = a.is_noetherian();
    let rhs = a.topology.all_opens_compact();
    ensure!(lhs == rhs, {"noetherian": lhs, "every_open_compact": rhs});
    Outcome::pass().with_note((!lhs).then(|| "both sides false".to_string()))
}

fn thm_2_11(a: &Analysis) -> Outcome {
    let lhs = a.is_noetherian();
    let missing = (0..a.ideals().len()).find(|&i| a.rfg(i).is_none());
    ensure!(lhs == missing.is_none(), {"noetherian": lhs, "property_rfg": missing.is_none(), "non_rfg_ideal": missing.map(|i| ideal_js(a.ideal(i)))});
    Outcome::pass()
}

fn prop_2_12(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let upsilon: Vec<usize> = (0..a.ideals().len()).filter(|&i| a.rfg(i).is_none()).collect();
    if upsilon.is_empty() {
        return Outcome::vacuous("every graded ideal is RFG_g, so there is no maximal non-RFG_g ideal");
    }
    for &i in &upsilon {
        let maximal = !upsilon.iter().any(|&j| j != i && a.ideal(i).is_subset(a.ideal(j)));
        ensure!(!maximal || ring.is_graded_prime(a.ideal(i)), {"maximal_non_rfg_ideal": ideal_js(a.ideal(i))});
    }
    Outcome::pass()
}

fn cor_2_13(a: &Analysis) -> Outcome {
    let lhs = a.is_noetherian();
    let missing = a.spectrum.points().iter().find(|p| a.rfg(a.ideal_index(p)).is_none());
    ensure!(lhs == missing.is_none(), {"noetherian": lhs, "every_prime_rfg": missing.is_none(), "non_rfg_prime": missing.map(ideal_js)});
    Outcome::pass()
}

fn gr_closure(a: &Analysis) -> Outcome {
    let n = a.ideals().len();
    for i in 0..n {
        ensure!(a.ideal(i).is_subset(a.gr(i)) && a.radical[a.radical[i]] == a.radical[i], {"ideal": ideal_js(a.ideal(i)), "radical": ideal_js(a.gr(i))});
    }
    for p in a.spectrum.points() {
        let i = a.ideal_index(p);
        ensure!(a.radical[i] == i, {"prime": ideal_js(p), "radical": ideal_js(a.gr(i))});
    }
    let picked = sample(n, PAIR_CAP);
    for &i in &picked {
        for &j in &picked {
            if a.ideal(i).is_subset(a.ideal(j)) {
                ensure!(a.gr(i).is_subset(a.gr(j)), {"I": ideal_js(a.ideal(i)), "J": ideal_js(a.ideal(j)), "monotone": false});
            }
        }
    }
    Outcome::pass().with_note(coverage("ideal pairs", n, PAIR_CAP))
}

fn gr_homogeneous(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let n = a.ideals().len();
    for i in sample(n, SINGLE_CAP) {
        for r in ring.hom_elements().iter() {
            let power = ring.hom_in_radical(r, a.ideal(i));
            ensure!(power == a.gr(i).contains(r), {"ideal": ideal_js(a.ideal(i)), "element": r, "some_power_inside": power, "in_graded_radical": !power});
        }
    }
    let picked = sample(n, PAIR_CAP);
    for &i in &picked {
        for &j in &picked {
            let (x, y) = (a.ideal(i), a.ideal(j));
            let gp = ring.graded_radical(&ring.ideal_product(x, y));
            let gm = ring.graded_radical(&ring.ideal_intersection(x, y));
            let both = ring.ideal_intersection(a.gr(i), a.gr(j));
            ensure!(gp == gm && gm == both, {"I": ideal_js(x), "J": ideal_js(y), "radical_of_product": ideal_js(&gp), "radical_of_meet": ideal_js(&gm), "meet_of_radicals": ideal_js(&both)});
        }
    }
    Outcome::pass().with_note(coverage("ideals", n, PAIR_CAP))
}

fn prime_criteria(a: &Analysis) -> Outcome {
    let ring = a.ring();
    for ideal in a.ideals().iter() {
        let by_elements = ring.is_graded_prime(ideal);
        let by_ideals = ring.is_graded_prime_by_ideals(ideal, a.ideals());
        ensure!(by_elements == by_ideals, {"ideal": ideal_js(ideal), "homogeneous_element_test": by_elements, "graded_ideal_test": by_ideals});
    }
    Outcome::pass()
}

fn jacobson_e(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let je = ring.jacobson_radical_e();
    let jg = a.ideals().graded_jacobson_radical(ring);
    let restricted = jg.elements().intersection(ring.identity_component());
    ensure!(je == restricted, {"jacobson_of_identity_component": js(&je), "graded_jacobson_meet_identity_component": js(&restricted)});
    Outcome::pass()
}

fn base_d(a: &Analysis) -> Outcome {
    if let Err(e) = a.topology.verify_axioms() {
        return Outcome::fail(json!({"axioms": e}));
    }
    ensure!(a.topology.is_base(), {"basic_opens_form_a_base": false});
    Outcome::pass()
}

// -------------------------------------------------------------- module side

fn prop_3_3_1(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    let ss = &m.second;
    let ann_m = &ss.module().whole();
    let ann_of_module = ss.ann_in_ring(ann_m);
    for i in radical_indices(a) {
        let ideal = a.ideal(i);
        let double = ss.ann_in_ring(ss.ann_in_module(ideal));
        let lhs = double == ideal;
        let rhs = ann_of_module.is_subset(ideal);
        ensure!(lhs == rhs, {"ideal": ideal_js(ideal), "double_annihilator": ideal_js(double), "equal": lhs, "contains_ann_m": rhs});
    }
    Outcome::pass()
}

fn prop_3_3_2(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    let ring = a.ring();
    let module = m.second.module();
    let mut applicable = 0;
    for p in a.ideals().max_spectrum(ring) {
        if !m.second.ann_in_module(&p).is_zero() {
            continue;
        }
        applicable += 1;
        let found = p
            .elements()
            .intersection(ring.identity_component())
            .iter()
            .find(|&x| {
                let u = ring.add(ring.one(), x);
                module.elements().all(|e| module.act(u, e) == module.zero())
            });
        ensure!(found.is_some(), {"maximal_ideal": ideal_js(&p), "no_x_with_1_plus_x_killing_m": true});
    }
    if applicable == 0 {
        return Outcome::vacuous("no graded maximal p with Ann_M(p) = 0");
    }
    Outcome::pass()
}

fn radical_inside_with_zero_ann(a: &Analysis, m: &ModuleAnalysis, bound: &BitSet, which: &str) -> Outcome {
    for i in radical_indices(a) {
        let ideal = a.ideal(i);
        if ideal.elements().is_subset(bound) && m.second.ann_in_module(ideal).is_zero() {
            ensure!(m.is_zero(), {"ideal": ideal_js(ideal), "inside": which, "ann_m_is_zero": true, "module_is_zero": false});
        }
    }
    Outcome::vacuous(format!("M is nonzero and no graded radical ideal inside {which} has Ann_M(I) = 0"))
}

fn prop_3_3_3(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    let jg = a.ideals().graded_jacobson_radical(a.ring());
    radical_inside_with_zero_ann(a, m, jg.elements(), "J_G(R)")
}

fn prop_3_3_4(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    radical_inside_with_zero_ann(a, m, &a.ring().jacobson_radical_e(), "J(R_e)")
}

fn prop_3_4_1(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let n = m.lattice().len();
    for i in sample(n, SINGLE_CAP) {
        let sub = m.sub(i);
        let t = m.second.second_socle(sub);
        let def = m.second.second_socle_by_definition(sub);
        ensure!(*t.elements() == def, {"submodule": sub_js(sub), "sum_of_v_star": sub_js(&t), "second_socle": js(&def)});
    }
    Outcome::pass().with_note(coverage("submodules", n, SINGLE_CAP))
}

fn prop_3_4_2(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let n = m.lattice().len();
    for i in sample(n, SINGLE_CAP) {
        let sub = m.sub(i);
        let t = m.second.zariski_socle(sub);
        let def = m.second.zariski_socle_by_definition(sub);
        ensure!(*t.elements() == def, {"submodule": sub_js(sub), "sum_of_v_s": sub_js(&t), "zariski_socle": js(&def)});
    }
    Outcome::pass().with_note(coverage("submodules", n, SINGLE_CAP))
}

fn prop_3_4_3(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let (subsets, note) = point_subsets(ss.num_points(), &m.topology);
    for y in &subsets {
        let cl = m.topology.closure(y);
        let t = ss.members_sum(y);
        let v = ss.v_s(&t);
        ensure!(cl == v, {"points": js(y), "closure": js(&cl), "v_s_of_sum": js(&v)});
    }
    let n = m.lattice().len();
    for i in sample(n, SINGLE_CAP) {
        let sub = m.sub(i);
        let z = ss.zariski_socle(sub);
        ensure!(ss.v_s(&z) == ss.v_s(sub), {"submodule": sub_js(sub), "zariski_socle": sub_js(&z)});
    }
    Outcome::pass().with_note(note).with_note(coverage("submodules", n, SINGLE_CAP))
}

fn lemma_3_5_1(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    for (i, ideal) in a.ideals().iter().enumerate() {
        let x = ss.ann_in_module(ideal);
        let y = ss.ann_in_module(a.gr(i));
        let sets = [ss.v_s(x), ss.v_s(y), ss.v_s_star(x), ss.v_s_star(y)];
        ensure!(sets.iter().all(|s| *s == sets[0]), {"ideal": ideal_js(ideal), "sets": sets.iter().map(js).collect::<Vec<_>>()});
    }
    Outcome::pass()
}

fn lemma_3_5_2(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let n = m.lattice().len();
    for i in sample(n, SINGLE_CAP) {
        let sub = m.sub(i);
        let ann = m.ann[i];
        let x = ss.ann_in_module(a.ideal(ann));
        let y = ss.ann_in_module(a.gr(ann));
        let sets = [ss.v_s(sub), ss.v_s(x), ss.v_s(y), ss.v_s_star(x), ss.v_s_star(y)];
        ensure!(sets.iter().all(|s| *s == sets[0]), {"submodule": sub_js(sub), "sets": sets.iter().map(js).collect::<Vec<_>>()});
    }
    Outcome::pass().with_note(coverage("submodules", n, SINGLE_CAP))
}

fn prop_3_6_1(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    for (i, ideal) in a.ideals().iter().enumerate() {
        let x = ss.ann_in_module(ideal);
        let y = ss.ann_in_module(a.gr(i));
        let subs = [ss.zariski_socle(x), ss.zariski_socle(y), ss.second_socle(x), ss.second_socle(y)];
        ensure!(subs.iter().all(|s| *s == subs[0]), {"ideal": ideal_js(ideal), "submodules": subs.iter().map(sub_js).collect::<Vec<_>>()});
    }
    Outcome::pass()
}

fn prop_3_6_2(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let n = m.lattice().len();
    for i in sample(n, SINGLE_CAP) {
        let sub = m.sub(i);
        let ann = m.ann[i];
        let x = ss.ann_in_module(a.ideal(ann));
        let y = ss.ann_in_module(a.gr(ann));
        let subs =
            [ss.zariski_socle(sub), ss.zariski_socle(x), ss.zariski_socle(y), ss.second_socle(x), ss.second_socle(y)];
        ensure!(subs.iter().all(|s| *s == subs[0]), {"submodule": sub_js(sub), "submodules": subs.iter().map(sub_js).collect::<Vec<_>>()});
    }
    Outcome::pass().with_note(coverage("submodules", n, SINGLE_CAP))
}

fn prop_3_6_3(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let comultiplication = ss.is_comultiplication();
    let n = m.lattice().len();
    for i in sample(n, SINGLE_CAP) {
        let sub = m.sub(i);
        let soc = ss.second_socle(sub);
        let zsoc = ss.zariski_socle(sub);
        ensure!(soc.is_subset(&zsoc), {"submodule": sub_js(sub), "second_socle": sub_js(&soc), "zariski_socle": sub_js(&zsoc)});
        if comultiplication {
            ensure!(soc == zsoc, {"submodule": sub_js(sub), "comultiplication": true, "second_socle": sub_js(&soc), "zariski_socle": sub_js(&zsoc)});
        }
    }
    let note = (!comultiplication).then(|| "not comultiplication: inclusion only".to_string());
    Outcome::pass().with_note(note).with_note(coverage("submodules", n, SINGLE_CAP))
}

/// Runs `check` on pairs from a sample of the submodule lattice.
fn submodule_pairs(m: &ModuleAnalysis, mut check: impl FnMut(usize, usize) -> Option<Value>) -> Outcome {
    let n = m.lattice().len();
    let picked = sample(n, PAIR_CAP);
    for &i in &picked {
        for &j in &picked {
            if let Some(payload) = check(i, j) {
                return Outcome::fail(payload);
            }
        }
    }
    Outcome::pass().with_note(coverage("submodules", n, PAIR_CAP))
}

fn prop_3_6_4(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    submodule_pairs(m, |i, j| {
        let (x, y) = (m.sub(i), m.sub(j));
        (ss.v_s(x).is_subset(&ss.v_s(y)) && !ss.zariski_socle(x).is_subset(&ss.zariski_socle(y)))
            .then(|| json!({"N": sub_js(x), "N_prime": sub_js(y)}))
    })
}

fn prop_3_6_5(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    submodule_pairs(m, |i, j| {
        let (x, y) = (m.sub(i), m.sub(j));
        let same_v = ss.v_s(x) == ss.v_s(y);
        let same_z = ss.zariski_socle(x) == ss.zariski_socle(y);
        (same_v != same_z).then(|| json!({"N": sub_js(x), "N_prime": sub_js(y), "equal_v_s": same_v, "equal_zariski_socles": same_z}))
    })
}

fn prop_3_8_a(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let zero = m.second.module().zero_submodule();
    let z = m.second.zariski_socle(&zero);
    ensure!(z.is_zero(), {"zariski_socle_of_zero": sub_js(&z)});
    Outcome::pass()
}

fn prop_3_8_b(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    submodule_pairs(m, |i, j| {
        let (x, y) = (m.sub(i), m.sub(j));
        (x.is_subset(y) && !ss.zariski_socle(x).is_subset(&ss.zariski_socle(y)))
            .then(|| json!({"N": sub_js(x), "N_prime": sub_js(y)}))
    })
}

fn prop_3_8_c(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    for sub in m.lattice().iter() {
        let z = ss.zariski_socle(sub);
        let zz = ss.zariski_socle(&z);
        ensure!(z == zz, {"submodule": sub_js(sub), "zariski_socle": sub_js(&z), "twice": sub_js(&zz)});
    }
    Outcome::pass()
}

fn prop_3_8_d(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let module = ss.module();
    submodule_pairs(m, |i, j| {
        let (x, y) = (m.sub(i), m.sub(j));
        let lhs = ss.zariski_socle(&module.submodule_sum(x, y));
        let rhs = module.submodule_sum(&ss.zariski_socle(x), &ss.zariski_socle(y));
        (lhs != rhs).then(|| json!({"N": sub_js(x), "N_prime": sub_js(y), "socle_of_sum": sub_js(&lhs), "sum_of_socles": sub_js(&rhs)}))
    })
}

fn prop_3_8_e(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    let ss = &m.second;
    for sub in m.lattice().iter() {
        let facts = [!sub.is_zero(), !ss.v_s(sub).is_empty(), !ss.zariski_socle(sub).is_zero()];
        ensure!(facts[0] == facts[1] && facts[1] == facts[2], {"submodule": sub_js(sub), "nonzero": facts[0], "v_s_nonempty": facts[1], "zariski_socle_nonzero": facts[2]});
    }
    Outcome::pass()
}

fn prop_3_8_f(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let secondful = m.secondful() == Some(true);
    for (i, sub) in m.lattice().iter().enumerate() {
        let gr = a.gr(m.ann[i]);
        let z = ss.zariski_socle(sub);
        let ann_z = ss.ann_in_ring(&z);
        ensure!(gr.is_subset(ann_z), {"submodule": sub_js(sub), "radical_of_ann": ideal_js(gr), "ann_of_zariski_socle": ideal_js(ann_z)});
        if secondful {
            ensure!(gr == ann_z, {"submodule": sub_js(sub), "secondful": true, "radical_of_ann": ideal_js(gr), "ann_of_zariski_socle": ideal_js(ann_z)});
        }
    }
    Outcome::pass().with_note((!secondful).then(|| "not secondful: inclusion only".to_string()))
}

fn zariski_socle_family(m: &ModuleAnalysis) -> Vec<BitSet> {
    let mut family: Vec<BitSet> =
        m.lattice().iter().map(|n| m.second.zariski_socle(n).elements().clone()).collect();
    family.sort();
    family.dedup();
    family
}

fn thm_4_1(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let lhs = m.topology.is_noetherian();
    let rhs = chain_bound(&zariski_socle_family(m)).is_some();
    ensure!(lhs == rhs, {"noetherian_second_spectrum": lhs, "dcc_on_zariski_socle_submodules": rhs});
    Outcome::pass().with_note((!lhs).then(|| "both sides false".to_string()))
}

fn lemma_4_3_1(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let Some(phi) = &m.phi else {
        return Outcome::skipped("zero module: R/Ann_R(M) is the zero ring");
    };
    let ss = &m.second;
    let ann_m = &phi.map.annihilator;
    let over: Vec<usize> = (0..a.ideals().len()).filter(|&i| ann_m.is_subset(a.ideal(i))).collect();
    for x in sample(over.len(), SINGLE_CAP) {
        let ideal = a.ideal(over[x]);
        let v = match phi.variety_of_image(ideal) {
            Ok(v) => v,
            Err(q) => return Outcome::fail(json!({"ideal": ideal_js(ideal), "quotient_prime_without_preimage_point": q})),
        };
        let lhs = phi.map.preimage(&v);
        let rhs = ss.v_s(ss.ann_in_module(ideal));
        ensure!(lhs == rhs, {"ideal": ideal_js(ideal), "preimage": js(&lhs), "v_s_of_ann": js(&rhs)});
    }
    Outcome::pass().with_note(coverage("ideals over Ann_R(M)", over.len(), SINGLE_CAP))
}

fn lemma_4_3_2(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    let phi = m.phi.as_ref().expect("secondful modules are nonzero");
    let ss = &m.second;
    let n = m.lattice().len();
    for i in sample(n, SINGLE_CAP) {
        let sub = m.sub(i);
        let lhs = phi.map.image(&ss.v_s(sub));
        let rhs = match phi.variety_of_image(a.ideal(m.ann[i])) {
            Ok(v) => v,
            Err(q) => return Outcome::fail(json!({"submodule": sub_js(sub), "quotient_prime_without_preimage_point": q})),
        };
        ensure!(lhs == rhs, {"submodule": sub_js(sub), "image": js(&lhs), "variety_of_ann": js(&rhs)});
    }
    Outcome::pass().with_note(coverage("submodules", n, SINGLE_CAP))
}

fn lemma_4_4(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    let phi = m.phi.as_ref().expect("secondful modules are nonzero");
    let ss = &m.second;
    for ideal in a.ideals().iter().filter(|i| phi.map.annihilator.is_subset(i)) {
        let double = ss.ann_in_ring(ss.ann_in_module(ideal));
        let lhs = phi.variety_of_image(double);
        let rhs = phi.variety_of_image(ideal);
        ensure!(lhs.is_ok() && lhs == rhs, {"ideal": ideal_js(ideal), "double_annihilator": ideal_js(double),
            "variety_of_double": lhs.as_ref().map(js).ok(), "variety_of_ideal": rhs.as_ref().map(js).ok()});
    }
    Outcome::pass()
}

fn thm_4_5(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    let phi = m.phi.as_ref().expect("secondful modules are nonzero");
    let lhs = m.topology.is_noetherian();
    let rhs = phi.quotient.topology().is_noetherian();
    ensure!(lhs == rhs, {"noetherian_second_spectrum": lhs, "noetherian_spectrum_of_quotient": rhs});
    Outcome::pass().with_note((!lhs).then(|| "both sides false".to_string()))
}

fn lemma_4_7(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let ring = a.ring();
    let module = ss.module();
    let n = a.ideals().len();
    let picked = sample(n, PAIR_CAP);
    for &i in &picked {
        for &j in &picked {
            let (x, y) = (a.ideal(i), a.ideal(j));
            let lhs = ss.second_socle(ss.ann_in_module(&ring.ideal_product(x, y)));
            let rhs = module.submodule_sum(&ss.second_socle(ss.ann_in_module(x)), &ss.second_socle(ss.ann_in_module(y)));
            ensure!(lhs == rhs, {"I1": ideal_js(x), "I2": ideal_js(y), "socle_of_product": sub_js(&lhs), "sum_of_socles": sub_js(&rhs)});
        }
    }
    Outcome::pass().with_note(coverage("ideals", n, PAIR_CAP))
}

fn decomposition_hypotheses(a: &Analysis, m: &ModuleAnalysis) -> Option<Outcome> {
    if !a.is_noetherian() {
        return Some(Outcome::skipped("Spec_G(R) is not Noetherian"));
    }
    if m.is_zero() {
        return Some(Outcome::skipped("zero module"));
    }
    gate_option(need_secondful(m))
        .or_else(|| (!m.second.is_weak_comultiplication()).then(|| Outcome::skipped("module is not graded weak comultiplication")))
}

fn gate_option(o: Option<Outcome>) -> Option<Outcome> {
    o
}

fn thm_4_8_1(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(decomposition_hypotheses(a, m));
    let ss = &m.second;
    let module = ss.module();
    let mut checked = 0;
    for sub in m.lattice().iter() {
        if ss.zariski_socle(sub) != *sub {
            continue;
        }
        checked += 1;
        let parts = match ss.zariski_socle_decomposition(sub) {
            Ok(p) => p,
            Err(e) => return Outcome::fail(json!({"submodule": sub_js(sub), "error": e.to_string()})),
        };
        ensure!(parts.iter().all(|s| ss.is_second(s)), {"submodule": sub_js(sub), "non_second_part": parts.iter().find(|s| !ss.is_second(s)).map(sub_js)});
        let sum = parts.iter().fold(module.zero_submodule(), |acc, s| module.submodule_sum(&acc, s));
        ensure!(sum == *sub, {"submodule": sub_js(sub), "parts": parts.iter().map(sub_js).collect::<Vec<_>>(), "sum": sub_js(&sum)});
    }
    Outcome::pass().with_note(Some(format!("{checked} Zariski socle submodules decomposed")))
}

fn thm_4_8_2(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(decomposition_hypotheses(a, m));
    let ss = &m.second;
    let module = ss.module();
    let n = m.lattice().len();
    for i in sample(n, SINGLE_CAP) {
        let sub = m.sub(i);
        let lhs = ss.zariski_socle(sub) == *sub;
        // N is a sum of some Ann_M(p) with p over Ann_R(N) iff it is the sum
        // of all such Ann_M(p) that lie inside N.
        let inside: Vec<&GradedSubmodule> = a
            .spectrum
            .variety_at(m.ann[i])
            .iter()
            .map(|k| ss.ann_in_module(&a.spectrum.points()[k]))
            .filter(|x| x.is_subset(sub))
            .collect();
        let sum = inside.iter().fold(module.zero_submodule(), |acc, x| module.submodule_sum(&acc, x));
        let rhs = sub.is_zero() || (!inside.is_empty() && sum == *sub);
        ensure!(lhs == rhs, {"submodule": sub_js(sub), "zariski_socle_submodule": lhs, "sum_of_ann_of_primes": rhs});
    }
    Outcome::pass().with_note(coverage("submodules", n, SINGLE_CAP))
}

fn zsoc_of_generated(a: &Analysis, m: &ModuleAnalysis, gens: &[usize]) -> GradedSubmodule {
    m.second.zariski_socle_of_ann(&generated(a, gens)).clone()
}

fn thm_4_10(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    let lhs = m.topology.is_noetherian();
    let n = m.lattice().len();
    let mut rhs = true;
    for i in sample(n, SINGLE_CAP) {
        match m.rfg_star(i) {
            Some(w) => {
                let z = zsoc_of_generated(a, m, w);
                ensure!(z == m.second.zariski_socle(m.sub(i)), {"submodule": sub_js(m.sub(i)), "witness": w, "zariski_socle_of_ann": sub_js(&z)});
            }
            None => rhs = false,
        }
    }
    ensure!(lhs == rhs, {"noetherian_second_spectrum": lhs, "property_rfg_star": rhs});
    Outcome::pass().with_note(coverage("submodules", n, SINGLE_CAP))
}

fn lemma_4_11(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    gate!(need_faithful(m));
    let ring = a.ring();
    let n = m.lattice().len();
    for i in sample(n, 128) {
        let sub = m.sub(i);
        let star = m.rfg_star(i);
        let plain = a.rfg(m.ann[i]);
        ensure!(star.is_some() == plain.is_some(), {"submodule": sub_js(sub), "rfg_star": star.is_some(), "ann_rfg": plain.is_some()});
        if let (Some(ws), Some(wr)) = (star, plain) {
            // Forward: the RFG* ideal has the radical of Ann_R(N).
            let gi = ring.graded_radical(&generated(a, ws));
            ensure!(gi == *a.gr(m.ann[i]), {"submodule": sub_js(sub), "rfg_star_witness": ws, "radical_of_witness": ideal_js(&gi), "radical_of_ann": ideal_js(a.gr(m.ann[i]))});
            // Backward: the RFG witness of Ann_R(N) is an RFG* witness of N.
            let z = zsoc_of_generated(a, m, wr);
            ensure!(z == m.second.zariski_socle(sub), {"submodule": sub_js(sub), "rfg_witness_of_ann": wr, "zariski_socle_of_ann": sub_js(&z)});
        }
    }
    Outcome::pass().with_note(coverage("submodules", n, 128))
}

fn cor_4_12_1(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    gate!(need_faithful(m));
    let lhs = m.topology.is_noetherian();
    let missing = m.second.point_lattice_indices().iter().find(|&&i| m.rfg_star(i).is_none());
    ensure!(lhs == missing.is_none(), {"noetherian_second_spectrum": lhs, "every_second_rfg_star": missing.is_none(), "non_rfg_star_second": missing.map(|&i| sub_js(m.sub(i)))});
    Outcome::pass()
}

fn cor_4_12_2(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    gate!(need_secondful(m));
    gate!(need_faithful(m));
    let ring = a.ring();
    let ss = &m.second;
    let module = ss.module();
    let n = m.lattice().len();
    let picked = sample(n, 24);
    for &i in &picked {
        for &j in &picked {
            let (x, y) = (m.sub(i), m.sub(j));
            let (Some(wx), Some(wy)) = (a.rfg(m.ann[i]), a.rfg(m.ann[j])) else {
                return Outcome::fail(json!({"N1": sub_js(x), "N2": sub_js(y), "missing_witness": true}));
            };
            let sum = module.submodule_sum(x, y);
            let products: Vec<usize> = wx.iter().flat_map(|&r| wy.iter().map(move |&s| ring.mul(r, s))).collect();
            let z = zsoc_of_generated(a, m, &products);
            ensure!(z == ss.zariski_socle(&sum), {"N1": sub_js(x), "N2": sub_js(y), "witness_products": products, "zariski_socle_of_ann": sub_js(&z), "zariski_socle_of_sum": sub_js(&ss.zariski_socle(&sum))});
            ensure!(m.rfg_star(m.index(&sum)).is_some(), {"N1": sub_js(x), "N2": sub_js(y), "sum_not_rfg_star": true});
        }
    }
    Outcome::pass().with_note(coverage("submodules", n, 24))
}

fn second_points(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let module = ss.module();
    let ring = a.ring();
    let points: BitSet = ss.point_lattice_indices().iter().copied().collect();
    for (i, sub) in m.lattice().iter().enumerate() {
        let second = !sub.is_zero()
            && ring.hom_elements().iter().all(|r| {
                let image: BitSet = sub.elements().iter().map(|e| module.act(r, e)).collect();
                image.len() == 1 || image == *sub.elements()
            });
        ensure!(second == points.contains(i), {"submodule": sub_js(sub), "second_by_definition": second, "listed_as_point": points.contains(i)});
        if second {
            ensure!(ring.is_graded_prime(a.ideal(m.ann[i])), {"second_submodule": sub_js(sub), "annihilator_not_prime": ideal_js(a.ideal(m.ann[i]))});
        }
    }
    Outcome::pass()
}

fn natural_map(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let Some(phi) = &m.phi else {
        return Outcome::skipped("zero module: R/Ann_R(M) is the zero ring");
    };
    let hit: Vec<usize> = phi.quotient_to_codomain.iter().flatten().copied().collect();
    let mut sorted = hit.clone();
    sorted.sort_unstable();
    sorted.dedup();
    ensure!(hit.len() == phi.quotient_to_codomain.len() && sorted == (0..phi.map.codomain.len()).collect::<Vec<_>>(),
        {"codomain_primes": phi.map.codomain, "quotient_primes_pulled_back": phi.quotient_to_codomain});
    for (k, &c) in phi.map.images.iter().enumerate() {
        let s = m.second.point(k);
        let p = a.spectrum.point_index(m.second.ann_in_ring(s));
        ensure!(p == Some(phi.map.codomain[c]), {"second_submodule": sub_js(s), "image_position": c});
    }
    Outcome::pass()
}

fn base_x(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    if let Err(e) = m.topology.verify_axioms() {
        return Outcome::fail(json!({"axioms": e}));
    }
    ensure!(m.topology.is_base(), {"basic_opens_form_a_base": false});
    Outcome::pass()
}

fn comultiplication(a: &Analysis) -> Outcome {
    let Some(m) = &a.module else { return no_module() };
    let ss = &m.second;
    let (c, cd) = (ss.is_comultiplication(), ss.is_comultiplication_by_double_annihilator());
    let (w, wd) = (ss.is_weak_comultiplication(), ss.is_weak_comultiplication_by_double_annihilator());
    ensure!(c == cd && w == wd && (!c || w), {"comultiplication": c, "by_double_annihilator": cd, "weak": w, "weak_by_double_annihilator": wd});
    Outcome::pass()
}

pub static CATALOG: &[Suite] = &[
    Suite { id: "Lemma-2.1.1", side: Side::Ring, run: lemma_2_1_1 },
    Suite { id: "Lemma-2.1.2", side: Side::Ring, run: lemma_2_1_2 },
    Suite { id: "Lemma-2.1.3", side: Side::Ring, run: lemma_2_1_3 },
    Suite { id: "Lemma-2.1.4", side: Side::Ring, run: lemma_2_1_4 },
    Suite { id: "Prop-2.2.a", side: Side::Ring, run: prop_2_2_a },
    Suite { id: "Prop-2.2.b", side: Side::Ring, run: prop_2_2_b },
    Suite { id: "Thm-2.3", side: Side::Ring, run: thm_2_3 },
    Suite { id: "Thm-2.5.1", side: Side::Ring, run: thm_2_5_1 },
    Suite { id: "Thm-2.5.2", side: Side::Ring, run: thm_2_5_2 },
    Suite { id: "Cor-2.6", side: Side::Ring, run: cor_2_6 },
    Suite { id: "Thm-2.7", side: Side::Ring, run: thm_2_7 },
    Suite { id: "Prop-2.9.1", side: Side::Ring, run: prop_2_9_1 },
    Suite { id: "Prop-2.9.2", side: Side::Ring, run: prop_2_9_2 },
    Suite { id: "Lemma-2.10", side: Side::Ring, run: lemma_2_10 },
    Suite { id: "Thm-2.11", side: Side::Ring, run: thm_2_11 },
    Suite { id: "Prop-2.12", side: Side::Ring, run: prop_2_12 },
    Suite { id: "Cor-2.13", side: Side::Ring, run: cor_2_13 },
    Suite { id: "Inv-Gr-closure", side: Side::Ring, run: gr_closure },
    Suite { id: "Inv-Gr-homogeneous", side: Side::Ring, run: gr_homogeneous },
    Suite { id: "Inv-prime-criteria", side: Side::Ring, run: prime_criteria },
    Suite { id: "Inv-Jacobson-e", side: Side::Ring, run: jacobson_e },
    Suite { id: "Inv-base-D", side: Side::Ring, run: base_d },
    Suite { id: "Prop-3.3.1", side: Side::Module, run: prop_3_3_1 },
    Suite { id: "Prop-3.3.2", side: Side::Module, run: prop_3_3_2 },
    Suite { id: "Prop-3.3.3", side: Side::Module, run: prop_3_3_3 },
    Suite { id: "Prop-3.3.4", side: Side::Module, run: prop_3_3_4 },
    Suite { id: "Prop-3.4.1", side: Side::Module, run: prop_3_4_1 },
    Suite { id: "Prop-3.4.2", side: Side::Module, run: prop_3_4_2 },
    Suite { id: "Prop-3.4.3", side: Side::Module, run: prop_3_4_3 },
    Suite { id: "Lemma-3.5.1", side: Side::Module, run: lemma_3_5_1 },
    Suite { id: "Lemma-3.5.2", side: Side::Module, run: lemma_3_5_2 },
    Suite { id: "Prop-3.6.1", side: Side::Module, run: prop_3_6_1 },
    Suite { id: "Prop-3.6.2", side: Side::Module, run: prop_3_6_2 },
    Suite { id: "Prop-3.6.3", side: Side::Module, run: prop_3_6_3 },
    Suite { id: "Prop-3.6.4", side: Side::Module, run: prop_3_6_4 },
    Suite { id: "Prop-3.6.5", side: Side::Module, run: prop_3_6_5 },
    Suite { id: "Prop-3.8.a", side: Side::Module, run: prop_3_8_a },
    Suite { id: "Prop-3.8.b", side: Side::Module, run: prop_3_8_b },
    Suite { id: "Prop-3.8.c", side: Side::Module, run: prop_3_8_c },
    Suite { id: "Prop-3.8.d", side: Side::Module, run: prop_3_8_d },
    Suite { id: "Prop-3.8.e", side: Side::Module, run: prop_3_8_e },
    Suite { id: "Prop-3.8.f", side: Side::Module, run: prop_3_8_f },
    Suite { id: "Thm-4.1", side: Side::Module, run: thm_4_1 },
    Suite { id: "Lemma-4.3.1", side: Side::Module, run: lemma_4_3_1 },
    Suite { id: "Lemma-4.3.2", side: Side::Module, run: lemma_4_3_2 },
    Suite { id: "Lemma-4.4", side: Side::Module, run: lemma_4_4 },
    Suite { id: "Thm-4.5", side: Side::Module, run: thm_4_5 },
    Suite { id: "Lemma-4.7", side: Side::Module, run: lemma_4_7 },
    Suite { id: "Thm-4.8.1", side: Side::Module, run: thm_4_8_1 },
    Suite { id: "Thm-4.8.2", side: Side::Module, run: thm_4_8_2 },
    Suite { id: "Thm-4.10", side: Side::Module, run: thm_4_10 },
    Suite { id: "Lemma-4.11", side: Side::Module, run: lemma_4_11 },
    Suite { id: "Cor-4.12.1", side: Side::Module, run: cor_4_12_1 },
    Suite { id: "Cor-4.12.2", side: Side::Module, run: cor_4_12_2 },
    Suite { id: "Inv-second-points", side: Side::Module, run: second_points },
    Suite { id: "Inv-natural-map", side: Side::Module, run: natural_map },
    Suite { id: "Inv-base-X", side: Side::Module, run: base_x },
    Suite { id: "Inv-comultiplication", side: Side::Module, run: comultiplication },
];

/// Suites matching a comma-separated filter. An entry matches an id exactly
/// or as a dotted prefix, so `Thm-4.8` selects `Thm-4.8.1` and `Thm-4.8.2`
/// but `Lemma-2.1` does not select `Lemma-2.10`.
pub fn select(filter: Option<&str>) -> Result<Vec<&'static Suite>, HarnessError> {
    let Some(filter) = filter else {
        return Ok(CATALOG.iter().collect());
    };
    let wanted: Vec<&str> = filter.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let mut out = Vec::new();
    for w in &wanted {
        let before = out.len();
        for s in CATALOG {
            let hit = s.id == *w || s.id.strip_prefix(w).is_some_and(|rest| rest.starts_with('.'));
            if hit && !out.iter().any(|o: &&Suite| o.id == s.id) {
                out.push(s);
            }
        }
        if out.len() == before && !out.iter().any(|o| o.id == *w) {
            return Err(HarnessError::Usage(format!("no suite matches `{w}`")));
        }
    }
    out.sort_by_key(|s| CATALOG.iter().position(|c| c.id == s.id));
    Ok(out)
}

/// Runs every selected suite on every analysis. Rows come out in instance
/// order, then catalogue order, whatever the scheduling.
pub fn run_suites(analyses: &[Analysis], suites: &[&'static Suite], timing: bool) -> Vec<SuiteResult> {
    let grid: Vec<(usize, usize)> =
        (0..analyses.len()).flat_map(|a| (0..suites.len()).map(move |s| (a, s))).collect();
    grid.par_iter()
        .map(|&(ai, si)| {
            let start = Instant::now();
            let outcome = (suites[si].run)(&analyses[ai]);
            let millis = if timing { start.elapsed().as_millis() as u64 } else { 0 };
            SuiteResult {
                suite: suites[si].id.to_string(),
                instance: analyses[ai].name().to_string(),
                status: outcome.status,
                counterexample: outcome.counterexample,
                note: outcome.note,
                millis,
            }
        })
        .collect()
}
