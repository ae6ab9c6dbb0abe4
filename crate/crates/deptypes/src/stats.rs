//! Lexicon aggregation over extracted records and the statistics report.

use rayon::prelude::*;
use serde::Serialize;

use deptypes_core::lexicon::{ambiguity_histogram, sparsity_curve, Lexicon, AMBIGUITY_BIN_LABELS};
use deptypes_core::types::{parse_type, Notation, Type, TypeError, Vocabulary};

use crate::records::SampleRecord;

pub const DEFAULT_THRESHOLDS: [u64; 5] = [2, 3, 5, 10, 100];

/// Typed samples: skipped records dropped, polish strings parsed.
pub fn typed_samples(
    records: &[SampleRecord],
    vocab: &Vocabulary,
) -> Result<Vec<(Vec<String>, Vec<Type>)>, (String, TypeError)> {
    records
        .iter()
        .filter(|r| !r.skipped)
        .map(|r| {
            let types = r
                .types
                .iter()
                .map(|t| parse_type(t, Notation::Polish, vocab))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| (r.id.clone(), e))?;
            Ok((r.words.clone(), types))
        })
        .collect()
}

fn count(samples: &[(Vec<String>, Vec<Type>)]) -> Lexicon {
    let mut l = Lexicon::default();
    for (words, types) in samples {
        for (w, t) in words.iter().zip(types) {
            l.add(w, t, 1);
        }
    }
    l
}

/// Count on a pool of `jobs` threads, merging partial lexicons.
pub fn aggregate_parallel(samples: &[(Vec<String>, Vec<Type>)], jobs: usize) -> Lexicon {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        samples
            .par_chunks(1)
            .map(count)
            .reduce(Lexicon::default, Lexicon::merge)
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AmbiguityReport {
    pub bins: Vec<(String, u64)>,
    pub mean: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SparsityRow {
    pub threshold: u64,
    pub type_share: f64,
    pub sample_share: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatsReport {
    pub samples: usize,
    pub tokens: u64,
    pub words: usize,
    pub types: usize,
    pub ambiguity: AmbiguityReport,
    pub sparsity: Vec<SparsityRow>,
}

pub fn report(
    l: &Lexicon,
    samples: &[(Vec<String>, Vec<Type>)],
    thresholds: &[u64],
) -> StatsReport {
    let h = ambiguity_histogram(l);
    let types: Vec<Vec<Type>> = samples.iter().map(|(_, t)| t.clone()).collect();
    let freqs = l.type_frequencies();
    StatsReport {
        samples: samples.len(),
        tokens: freqs.values().sum(),
        words: l.vocabulary_size(),
        types: freqs.len(),
        ambiguity: AmbiguityReport {
            bins: AMBIGUITY_BIN_LABELS
                .iter()
                .map(|s| s.to_string())
                .zip(h.bins)
                .collect(),
            mean: h.mean,
        },
        sparsity: sparsity_curve(l, &types, thresholds)
            .into_iter()
            .map(|p| SparsityRow {
                threshold: p.threshold,
                type_share: p.type_share,
                sample_share: p.sample_share,
            })
            .collect(),
    }
}

pub fn report_json(r: &StatsReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

/// Sparsity curve as CSV for plotting.
pub fn sparsity_csv(r: &StatsReport) -> String {
    let mut out = String::from("threshold,type_share,sample_share\n");
    for row in &r.sparsity {
        out.push_str(&format!(
            "{},{},{}\n",
            row.threshold, row.type_share, row.sample_share
        ));
    }
    out
}
