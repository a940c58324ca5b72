//! Machine-readable verification reports: one JSON object per line,
//! sorted by obligation id so reports are byte-stable for fixed inputs.

use crate::constructions::{MorphismReport, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub verdict: String,
    pub steps: u64,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn push(&mut self, id: impl Into<String>, verdict: &str, steps: u64, detail: impl Into<String>) {
        self.records.push(Record {
            id: id.into(),
            verdict: verdict.into(),
            steps,
            detail: detail.into(),
            trace: None,
        });
    }

    pub fn push_ok(&mut self, id: impl Into<String>) {
        self.push(id, "yes", 0, "");
    }

    pub fn extend_morphism(&mut self, m: &MorphismReport) {
        for ob in &m.obligations {
            self.records.push(Record {
                id: ob.id.clone(),
                verdict: ob.verdict.word().into(),
                steps: ob.steps,
                detail: ob.detail.clone(),
                trace: None,
            });
        }
    }

    /// Exit status: 0 when everything holds, 1 on any failure, 2 when the
    /// only blemishes are exhausted budgets.
    pub fn exit_code(&self) -> i32 {
        let mut unknown = false;
        for r in &self.records {
            match r.verdict.as_str() {
                "yes" => {}
                "unknown" => unknown = true,
                _ => return 1,
            }
        }
        if unknown {
            2
        } else {
            0
        }
    }

    pub fn ok(&self) -> bool {
        self.exit_code() == 0
    }

    /// Canonical JSON-lines rendering, sorted by id.
    pub fn to_jsonl(&self) -> String {
        let mut sorted = self.records.clone();
        sorted.sort_by(|a, b| a.id.cmp(&b.id));
        let mut out = String::new();
        for r in sorted {
            out.push_str(&serde_json::to_string(&r).expect("record serializes"));
            out.push('\n');
        }
        out
    }
}

impl From<&MorphismReport> for Report {
    fn from(m: &MorphismReport) -> Report {
        let mut r = Report::default();
        r.extend_morphism(m);
        r
    }
}

pub fn verdict_word_of(v: &Verdict) -> &'static str {
    v.word()
}
