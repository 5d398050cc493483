//! Report rows, totals and the text/JSON renderings.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    PreconditionSkipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::PreconditionSkipped => "precondition-skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub results: Vec<SuiteResult>,
    pub totals: Totals,
}

impl Report {
    pub fn new(seed: Option<u64>, results: Vec<SuiteResult>) -> Self {
        let mut totals = Totals::default();
        for r in &results {
            match r.status {
                Status::Pass => totals.pass += 1,
                Status::Fail => totals.fail += 1,
                Status::Vacuous => totals.vacuous += 1,
                Status::PreconditionSkipped => totals.skipped += 1,
            }
        }
        Self { version: 1, seed, results, totals }
    }

    pub fn has_failures(&self) -> bool {
        self.totals.fail > 0
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failures())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Aligned table, then one line per counterexample, then totals.
    pub fn to_text(&self) -> String {
        let headers = ["suite", "instance", "status", "ms", "note"];
        let rows: Vec<[String; 5]> = self
            .results
            .iter()
            .map(|r| {
                [
                    r.suite.clone(),
                    r.instance.clone(),
                    r.status.as_str().to_string(),
                    r.millis.to_string(),
                    r.note.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let mut width = headers.map(str::len);
        for row in &rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: [&str; 5]| {
            let mut s = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i == 4 {
                    s.push_str(cell);
                } else {
                    s.push_str(&format!("{cell:<w$}  ", w = width[i]));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(headers);
        for row in &rows {
            out.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
        }
        for r in self.results.iter().filter(|r| r.counterexample.is_some()) {
            out.push_str(&format!(
                "counterexample {} on {}: {}\n",
                r.suite,
                r.instance,
                serde_json::to_string(r.counterexample.as_ref().unwrap()).unwrap()
            ));
        }
        let t = self.totals;
        out.push_str(&format!(
            "totals: pass {}, fail {}, vacuous {}, precondition-skipped {}\n",
            t.pass, t.fail, t.vacuous, t.skipped
        ));
        out
    }
}
