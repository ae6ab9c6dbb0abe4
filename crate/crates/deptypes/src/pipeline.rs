//! Per-sample extraction and parsing drivers. Each sample is an
//! independent map step; batches run on a rayon pool and come back in
//! input order.

use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use deptypes_core::dag::Dag;
use deptypes_core::extraction::{annotate_dag, to_sequences};
use deptypes_core::parser::{parse, BruteForce, ParseError, ParserConfig, Premise};
use deptypes_core::proofs::{check, term_of};
use deptypes_core::transforms::run_pipeline;
use deptypes_core::types::{parse_type, print_type, Notation, Vocabulary};

use crate::alpino::load_alpino;
use crate::config::Settings;
use crate::records::{DiagnosticRecord, ParseRecord, SampleRecord};
use crate::sexpr::write_proof;

/// Records and diagnostics produced by one input document.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub records: Vec<SampleRecord>,
    pub diagnostics: Vec<DiagnosticRecord>,
}

impl Outcome {
    pub fn succeeded(&self) -> usize {
        self.records.iter().filter(|r| !r.skipped).count()
    }

    pub fn failed(&self) -> bool {
        !self.diagnostics.is_empty()
    }
}

fn diag(sample: &str, stage: &str, reason: impl ToString) -> DiagnosticRecord {
    DiagnosticRecord {
        sample: sample.to_string(),
        stage: stage.to_string(),
        reason: reason.to_string(),
    }
}

/// Transform, annotate and project one raw DAG.
pub fn extract_dag(raw: &Dag, s: &Settings) -> Outcome {
    let mut out = Outcome::default();
    let dags = match run_pipeline(raw, &s.passes, &s.transform) {
        Ok(d) => d,
        Err(d) => {
            out.records.push(SampleRecord::skipped(
                &raw.id,
                raw.sentence.clone(),
                format!("{}: {}", d.stage, d.reason),
            ));
            out.diagnostics.push(d.into());
            return out;
        }
    };
    for d in dags {
        let result = annotate_dag(&d, &s.extraction).and_then(|dict| to_sequences(&d, &dict));
        match result {
            Ok((words, types)) => out.records.push(SampleRecord {
                id: d.id.clone(),
                words,
                types: types
                    .iter()
                    .map(|t| print_type(t, Notation::Polish))
                    .collect(),
                skipped: false,
                reason: None,
            }),
            Err(e) => {
                let words = d
                    .leaves()
                    .iter()
                    .filter_map(|n| d.node(*n).word.clone())
                    .collect();
                out.records
                    .push(SampleRecord::skipped(&d.id, words, format!("extract: {e}")));
                out.diagnostics.push(diag(&d.id, "extract", e));
            }
        }
    }
    out
}

/// Load and extract one XML document. `name` is used when the document
/// carries no id.
pub fn extract_document(text: &str, name: &str, s: &Settings) -> Outcome {
    match load_alpino(text, name) {
        Ok(d) => extract_dag(&d, s),
        Err(e) => Outcome {
            records: vec![SampleRecord::skipped(
                name,
                Vec::new(),
                format!("load: {e}"),
            )],
            diagnostics: vec![diag(name, "load", e)],
        },
    }
}

/// Expand directories to their `.xml` files; the result is sorted.
pub fn collect_inputs(paths: &[PathBuf]) -> io::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            for entry in std::fs::read_dir(p)? {
                let path = entry?.path();
                if path.extension().is_some_and(|e| e == "xml") {
                    out.push(path);
                }
            }
        } else if p.exists() {
            out.push(p.clone());
        } else {
            return Err(io::Error::new(
                io::ErrorKind::NotFound,
                format!("{}: no such file", p.display()),
            ));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn stem(p: &Path) -> String {
    p.file_stem().map_or_else(
        || p.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

/// Read every file up front, then extract on `jobs` threads. With
/// `fail_fast` the output stops after the first failing document.
pub fn extract_files(
    paths: &[PathBuf],
    s: &Settings,
    jobs: usize,
    fail_fast: bool,
) -> io::Result<Vec<Outcome>> {
    let docs = paths
        .iter()
        .map(|p| std::fs::read_to_string(p).map(|t| (stem(p), t)))
        .collect::<io::Result<Vec<_>>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let mut outcomes: Vec<Outcome> = pool.install(|| {
        docs.par_iter()
            .map(|(name, text)| extract_document(text, name, s))
            .collect()
    });
    if fail_fast {
        if let Some(i) = outcomes.iter().position(Outcome::failed) {
            outcomes.truncate(i + 1);
        }
    }
    Ok(outcomes)
}

/// Parse one extracted sample with the brute-force oracle. The proof is
/// re-checked before it is reported.
pub fn parse_record(r: &SampleRecord, vocab: &Vocabulary, cfg: &ParserConfig) -> ParseRecord {
    let fail = |reason: String| ParseRecord {
        id: r.id.clone(),
        ok: false,
        term: None,
        proof: None,
        reason: Some(reason),
    };
    if r.skipped {
        return fail(format!("skipped: {}", r.reason.as_deref().unwrap_or("")));
    }
    if r.words.len() != r.types.len() {
        return fail(format!(
            "{} words but {} types",
            r.words.len(),
            r.types.len()
        ));
    }
    let mut premises = Vec::with_capacity(r.words.len());
    for (w, t) in r.words.iter().zip(&r.types) {
        match parse_type(t, Notation::Polish, vocab) {
            Ok(ty) => premises.push(Premise::lexical(w, ty)),
            Err(e) => return fail(format!("type `{t}`: {e}")),
        }
    }
    match parse(&premises, &BruteForce::new(), cfg) {
        Ok(p) => match check(&p) {
            Ok(()) => ParseRecord {
                id: r.id.clone(),
                ok: true,
                term: Some(term_of(&p).to_string()),
                proof: Some(write_proof(&p)),
                reason: None,
            },
            Err(e) => fail(format!("proof rejected: {e}")),
        },
        Err(e) => fail(e.to_string()),
    }
}

pub fn is_unsupported(r: &ParseRecord) -> bool {
    r.reason
        .as_deref()
        .is_some_and(|s| s.starts_with(&ParseError::Unsupported(String::new()).to_string()))
}

pub fn parse_records(
    records: &[SampleRecord],
    vocab: &Vocabulary,
    cfg: &ParserConfig,
    jobs: usize,
) -> Vec<ParseRecord> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        records
            .par_iter()
            .map(|r| parse_record(r, vocab, cfg))
            .collect()
    })
}
