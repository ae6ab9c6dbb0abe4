//! Word/type occurrence counts and the ambiguity and sparsity statistics
//! derived from them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::types::Type;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lexicon {
    pub entries: BTreeMap<String, BTreeMap<Type, u64>>,
}

impl Lexicon {
    pub fn add(&mut self, word: &str, t: &Type, count: u64) {
        if count == 0 {
            return;
        }
        *self
            .entries
            .entry(word.into())
            .or_default()
            .entry(t.clone())
            .or_insert(0) += count;
    }

    /// Pointwise sum.
    pub fn merge(mut self, other: Lexicon) -> Lexicon {
        for (w, ts) in other.entries {
            let slot = self.entries.entry(w).or_default();
            for (t, c) in ts {
                *slot.entry(t).or_insert(0) += c;
            }
        }
        self
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vocabulary_size(&self) -> usize {
        self.entries.len()
    }

    /// Relative frequencies of a word's types; sums to 1.
    pub fn distribution(&self, word: &str) -> Vec<(Type, f64)> {
        let Some(ts) = self.entries.get(word) else {
            return Vec::new();
        };
        let total: u64 = ts.values().sum();
        ts.iter()
            .map(|(t, c)| (t.clone(), *c as f64 / total as f64))
            .collect()
    }

    /// Corpus frequency of each type.
    pub fn type_frequencies(&self) -> BTreeMap<Type, u64> {
        let mut out = BTreeMap::new();
        for ts in self.entries.values() {
            for (t, c) in ts {
                *out.entry(t.clone()).or_insert(0) += c;
            }
        }
        out
    }

    /// Flat rows `(word, type, count)` sorted by word then type.
    pub fn rows(&self) -> impl Iterator<Item = (&str, &Type, u64)> {
        self.entries
            .iter()
            .flat_map(|(w, ts)| ts.iter().map(move |(t, c)| (w.as_str(), t, *c)))
    }
}

pub fn aggregate<'a, I>(samples: I) -> Lexicon
where
    I: IntoIterator<Item = (&'a [String], &'a [Type])>,
{
    let mut lex = Lexicon::default();
    for (words, types) in samples {
        for (w, t) in words.iter().zip(types) {
            lex.add(w, t, 1);
        }
    }
    lex
}

/// Words per number of unique types: 1, 2–10, 11–100, over 100.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbiguityHistogram {
    pub bins: [u64; 4],
    pub mean: f64,
}

pub const AMBIGUITY_BIN_LABELS: [&str; 4] = ["1", "2-10", "11-100", ">100"];

pub fn ambiguity_histogram(l: &Lexicon) -> AmbiguityHistogram {
    let mut bins = [0u64; 4];
    let mut total = 0usize;
    for ts in l.entries.values() {
        let k = ts.len();
        total += k;
        let bin = match k {
            0 | 1 => 0,
            2..=10 => 1,
            11..=100 => 2,
            _ => 3,
        };
        bins[bin] += 1;
    }
    let mean = if l.entries.is_empty() {
        0.0
    } else {
        total as f64 / l.entries.len() as f64
    };
    AmbiguityHistogram { bins, mean }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparsityPoint {
    pub threshold: u64,
    /// Share of distinct types occurring fewer than `threshold` times.
    pub type_share: f64,
    /// Share of samples with at least one such type.
    pub sample_share: f64,
}

pub fn sparsity_curve(
    l: &Lexicon,
    samples: &[Vec<Type>],
    thresholds: &[u64],
) -> Vec<SparsityPoint> {
    let freqs = l.type_frequencies();
    let ntypes = freqs.len();
    thresholds
        .iter()
        .map(|&k| {
            let rare: BTreeSet<&Type> = freqs
                .iter()
                .filter(|(_, c)| **c < k)
                .map(|(t, _)| t)
                .collect();
            let hit = samples
                .iter()
                .filter(|s| s.iter().any(|t| rare.contains(t)))
                .count();
            SparsityPoint {
                threshold: k,
                type_share: share(rare.len(), ntypes),
                sample_share: share(hit, samples.len()),
            }
        })
        .collect()
}

fn share(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}
