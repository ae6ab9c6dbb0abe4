//! JSON-lines records and the small tab-separated formats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use deptypes_core::lexicon::Lexicon;
use deptypes_core::transforms::Diagnostic;
use deptypes_core::typelang::MergeTable;
use deptypes_core::types::{print_type, Notation};

/// One extracted sample. `types` are polish strings, one per word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub id: String,
    pub words: Vec<String>,
    pub types: Vec<String>,
    pub skipped: bool,
    #[serde(default)]
    pub reason: Option<String>,
}

impl SampleRecord {
    pub fn skipped(id: &str, words: Vec<String>, reason: String) -> Self {
        SampleRecord {
            id: id.to_string(),
            words,
            types: Vec::new(),
            skipped: true,
            reason: Some(reason),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticRecord {
    pub sample: String,
    pub stage: String,
    pub reason: String,
}

impl From<Diagnostic> for DiagnosticRecord {
    fn from(d: Diagnostic) -> Self {
        DiagnosticRecord {
            sample: d.sample,
            stage: d.stage,
            reason: d.reason,
        }
    }
}

/// Output of `parse` for one sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseRecord {
    pub id: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub term: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub proof: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

#[derive(Debug, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

/// Parse JSON-lines, skipping blank lines. Line numbers are 1-based.
pub fn read_jsonl<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>, LineError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(line).map_err(|e| LineError {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

pub fn write_jsonl<T: Serialize>(records: &[T]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub fn write_merge_table(m: &MergeTable) -> String {
    m.merges
        .iter()
        .map(|(l, r)| format!("{l}\t{r}\n"))
        .collect()
}

pub fn read_merge_table(text: &str) -> Result<MergeTable, LineError> {
    let mut merges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        match line.split('\t').collect::<Vec<_>>().as_slice() {
            [l, r] if !l.is_empty() && !r.is_empty() => merges.push((l.to_string(), r.to_string())),
            _ => {
                return Err(LineError {
                    line: i + 1,
                    message: "expected LEFT<TAB>RIGHT".into(),
                })
            }
        }
    }
    Ok(MergeTable { merges })
}

/// `word<TAB>infix type<TAB>count`, sorted by word then type.
pub fn write_lexicon(l: &Lexicon) -> String {
    let mut rows: BTreeMap<(&str, String), u64> = BTreeMap::new();
    for (w, t, c) in l.rows() {
        rows.insert((w, print_type(t, Notation::Infix)), c);
    }
    rows.into_iter()
        .map(|((w, t), c)| format!("{w}\t{t}\t{c}\n"))
        .collect()
}
