//! Report types shared by all checkers, with a stable JSON schema and an
//! aligned-text rendering.
//!
//! Reports never carry timing, so a rerun with the same inputs and seed is
//! byte-identical.

use serde::Serialize;

/// How a reported value was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    /// Proven by an exact solve (certificate available).
    Exact,
    /// A certified one-sided bound from a budget-limited solve.
    Bound,
    /// A by-construction claim, not solver-verified.
    Claim,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Exact => write!(f, "EXACT"),
            Provenance::Bound => write!(f, "BOUND"),
            Provenance::Claim => write!(f, "CLAIM"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValueRecord {
    pub name: String,
    pub value: u64,
    pub provenance: Provenance,
}

impl ValueRecord {
    pub fn exact(name: &str, value: u64) -> Self {
        ValueRecord {
            name: name.into(),
            value,
            provenance: Provenance::Exact,
        }
    }

    pub fn new(name: &str, value: u64, provenance: Provenance) -> Self {
        ValueRecord {
            name: name.into(),
            value,
            provenance,
        }
    }
}

/// One checker's verdict. `pass == false` with `inconclusive == true` means
/// the budget ran out before the property could be decided; with
/// `inconclusive == false` it means the property actually failed.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    /// Stable machine id, e.g. "block-observation".
    pub check: String,
    /// The property being checked, in words.
    pub claim: String,
    pub inputs: serde_json::Value,
    pub values: Vec<ValueRecord>,
    pub pass: bool,
    pub inconclusive: bool,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str, claim: &str, inputs: serde_json::Value) -> Self {
        CheckReport {
            check: check.into(),
            claim: claim.into(),
            inputs,
            values: Vec::new(),
            pass: true,
            inconclusive: false,
            notes: Vec::new(),
        }
    }

    pub fn value(&self, name: &str) -> Option<&ValueRecord> {
        self.values.iter().find(|v| v.name == name)
    }

    pub fn fail(&mut self, note: String) {
        self.pass = false;
        self.notes.push(note);
    }

    pub fn undecided(&mut self, note: String) {
        self.pass = false;
        self.inconclusive = true;
        self.notes.push(note);
    }
}

/// Aggregated outcome of a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub checks: Vec<CheckReport>,
    pub pass: bool,
    pub inconclusive: bool,
    /// Sampling seed used anywhere randomness was involved.
    pub seed: u64,
}

impl Summary {
    pub fn from_checks(checks: Vec<CheckReport>, seed: u64) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        let inconclusive = checks.iter().any(|c| c.inconclusive);
        Summary {
            checks,
            pass,
            inconclusive,
            seed,
        }
    }

    /// Exit code convention: 0 pass, 1 violated, 3 inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else if self.checks.iter().any(|c| !c.pass && !c.inconclusive) {
            1
        } else {
            3
        }
    }
}

/// Render reports as aligned text, one section per check.
pub fn render_table(summary: &Summary) -> String {
    let mut out = String::new();
    for report in &summary.checks {
        let verdict = if report.pass {
            "PASS"
        } else if report.inconclusive {
            "INCONCLUSIVE"
        } else {
            "FAIL"
        };
        out.push_str(&format!("[{verdict}] {}\n", report.check));
        out.push_str(&format!("    claim:  {}\n", report.claim));
        if !report.inputs.is_null() {
            out.push_str(&format!("    inputs: {}\n", compact(&report.inputs)));
        }
        let width = report
            .values
            .iter()
            .map(|v| v.name.len())
            .max()
            .unwrap_or(0);
        for v in &report.values {
            out.push_str(&format!(
                "    {:width$}  = {:>8}  [{}]\n",
                v.name, v.value, v.provenance
            ));
        }
        for note in &report.notes {
            out.push_str(&format!("    note:   {note}\n"));
        }
    }
    out.push_str(&format!(
        "summary: {} (seed {})\n",
        if summary.pass {
            "all checks passed"
        } else if summary.inconclusive {
            "inconclusive"
        } else {
            "some checks FAILED"
        },
        summary.seed
    ));
    out
}

fn compact(v: &serde_json::Value) -> String {
    serde_json::to_string(v).unwrap_or_else(|_| "{}".into())
}
