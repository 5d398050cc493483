//! Instance files, corpus generation, property suites, counterexample search
//! and reports on top of `gradspec-core`.

pub mod context;
pub mod corpus;
pub mod dump;
pub mod error;
pub mod fixtures;
pub mod instance;
pub mod report;
pub mod search;
pub mod suites;

use gradspec_core::Limits;
use rayon::prelude::*;

use crate::context::Analysis;
use crate::error::HarnessError;
use crate::instance::Instance;
use crate::report::Report;

/// Builds the shared analysis of every instance, keeping input order.
pub fn analyze(instances: Vec<Instance>, limits: &Limits) -> Result<Vec<Analysis>, HarnessError> {
    instances
        .into_par_iter()
        .map(|instance| {
            let name = instance.name().to_string();
            Analysis::new(instance, limits)
                .map_err(|error| HarnessError::Validation { source_name: name, location: "analysis", error })
        })
        .collect()
}

/// Runs the suites selected by `filter` on `instances`.
pub fn verify(
    instances: Vec<Instance>,
    limits: &Limits,
    filter: Option<&str>,
    seed: Option<u64>,
    timing: bool,
) -> Result<Report, HarnessError> {
    let suites = suites::select(filter)?;
    let analyses = analyze(instances, limits)?;
    Ok(Report::new(seed, suites::run_suites(&analyses, &suites, timing)))
}

/// The curated fixtures, validated under the default limits.
pub fn fixture_instances() -> Vec<Instance> {
    fixtures::curated()
        .into_iter()
        .map(|f| f.validate(&Limits::default()).expect("shipped fixtures validate"))
        .collect()
}
