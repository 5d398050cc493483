//! JSON dumps behind the `spec`, `sspec` and `socle` subcommands. Element
//! sets are sorted index arrays, with the element labels alongside.

use gradspec_core::{BitSet, GradedSubmodule, SpectrumTopology};
use serde_json::{json, Value};

use crate::context::{Analysis, ModuleAnalysis};
use crate::error::HarnessError;

fn labelled(indices: &[usize], labels: &[String]) -> Value {
    json!({"elements": indices, "labels": indices.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>()})
}

fn topology(t: &SpectrumTopology) -> Value {
    json!({
        "closed_sets": t.closed_sets().iter().map(|c| c.points.to_vec()).collect::<Vec<_>>(),
        "irreducible_components": t.irreducible_components(&t.everything()).iter().map(BitSet::to_vec).collect::<Vec<_>>(),
        "basis_is_base": t.is_base(),
        "all_opens_compact": t.all_opens_compact(),
        "noetherian": t.is_noetherian(),
    })
}

/// Prime spectrum with its Zariski topology.
pub fn spec(a: &Analysis) -> Value {
    let ring = a.ring();
    let labels = ring.labels();
    let mut out = json!({
        "instance": a.name(),
        "group": ring.group().cyclic_factors(),
        "ring_order": ring.size(),
        "graded_ideals": a.ideals().len(),
        "points": a.spectrum.points().iter().map(|p| labelled(&p.to_vec(), labels)).collect::<Vec<_>>(),
        "basis": a.topology.basis().iter().map(|b| json!({"element": b.element, "label": ring.label(b.element), "points": b.points.to_vec()})).collect::<Vec<_>>(),
    });
    out["topology"] = topology(&a.topology);
    out
}

/// Second spectrum, the natural map and the module predicates.
pub fn sspec(a: &Analysis) -> Result<Value, HarnessError> {
    let m = module_of(a)?;
    let ss = &m.second;
    let module = ss.module();
    let ring_labels = a.ring().labels();
    let ann = ss.ann_in_ring(&module.whole());
    let predicates = ss.predicates();
    let quotient = m.phi.as_ref().map(|phi| {
        json!({
            "points": phi.quotient.points().iter().map(|q| labelled(&q.to_vec(), phi.quotient.ring().labels())).collect::<Vec<_>>(),
            "codomain": phi.map.codomain,
            "images": phi.map.images,
        })
    });
    let mut out = json!({
        "instance": a.name(),
        "module_order": module.size(),
        "graded_submodules": m.lattice().len(),
        "second_submodules": ss.points().map(|s| {
            let mut v = labelled(&s.to_vec(), module.labels());
            v["annihilator"] = labelled(&ss.ann_in_ring(s).to_vec(), ring_labels);
            v
        }).collect::<Vec<_>>(),
        "annihilator": labelled(&ann.to_vec(), ring_labels),
        "natural_map": quotient,
        "secondful": m.secondful(),
        "secondless": predicates.is_secondless,
        "faithful": predicates.is_faithful,
        "comultiplication": predicates.is_comultiplication,
        "weak_comultiplication": predicates.is_weak_comultiplication,
        "cotop": ss.is_cotop(),
    });
    out["topology"] = topology(&m.topology);
    Ok(out)
}

/// Second socle and Zariski socle of the submodule with exactly `elements`.
pub fn socle(a: &Analysis, elements: &[usize]) -> Result<Value, HarnessError> {
    let m = module_of(a)?;
    let ss = &m.second;
    let module = ss.module();
    let usage = |msg: String| HarnessError::Usage(format!("{}: {msg}", a.name()));
    if let Some(&bad) = elements.iter().find(|&&e| e >= module.size()) {
        return Err(usage(format!("element {bad} is out of range (module has {} elements)", module.size())));
    }
    let sub: GradedSubmodule = module
        .graded_submodule(elements.iter().copied().collect())
        .map_err(|e| usage(format!("{elements:?} is not a graded submodule: {e}")))?;
    let soc = ss.second_socle(&sub);
    let zsoc = ss.zariski_socle(&sub);
    Ok(json!({
        "instance": a.name(),
        "submodule": labelled(&sub.to_vec(), module.labels()),
        "annihilator": labelled(&ss.ann_in_ring(&sub).to_vec(), a.ring().labels()),
        "v_s": ss.v_s(&sub).to_vec(),
        "second_socle": labelled(&soc.to_vec(), module.labels()),
        "zariski_socle": labelled(&zsoc.to_vec(), module.labels()),
        "strict": soc != zsoc,
    }))
}

fn module_of(a: &Analysis) -> Result<&ModuleAnalysis, HarnessError> {
    a.module.as_ref().ok_or_else(|| HarnessError::Usage(format!("{}: instance has no module", a.name())))
}

/// Indented `key: value` rendering for the text mode.
pub fn to_text(value: &Value) -> String {
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = " ".repeat(indent);
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    if x.is_object() || x.as_array().is_some_and(|a| a.iter().any(Value::is_object)) {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(x, indent + 2, out);
                    } else {
                        out.push_str(&format!("{pad}{k}: {x}\n"));
                    }
                }
            }
            Value::Array(items) => {
                for (i, x) in items.iter().enumerate() {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    walk(x, indent + 2, out);
                }
            }
            other => out.push_str(&format!("{pad}{other}\n")),
        }
    }
    let mut out = String::new();
    walk(value, 0, &mut out);
    out
}
