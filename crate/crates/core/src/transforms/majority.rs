//! Biased majority voting over tags and types.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityConfig {
    /// Tie-break groups over tags, highest priority first.
    pub tag_bias: Vec<Vec<String>>,
    /// The same groups over atomic type names.
    pub type_bias: Vec<Vec<String>>,
    /// Any of these among mwu parts makes the unit nominal.
    pub mwu_nominal: Vec<String>,
    pub mwu_nominal_cat: String,
    /// Part-of-speech to phrasal category for a winning mwu tag.
    pub mwu_promotion: BTreeMap<String, String>,
}

fn group(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

impl Default for MajorityConfig {
    fn default() -> Self {
        MajorityConfig {
            tag_bias: alloc::vec![
                group(&["smain", "ssub", "sv1", "whq", "whsub", "whrel", "svan", "cp", "rel"]),
                group(&["np", "n", "spec", "vnw"]),
                group(&["ap", "adj", "ppart", "ppres"]),
            ],
            type_bias: alloc::vec![
                group(&["S_MAIN", "S_SUB", "SV1", "WHQ", "WHSUB", "WHREL", "SVAN", "CP", "REL"]),
                group(&["NP", "N", "SPEC", "VNW"]),
                group(&["AP", "ADJ", "PPART", "PPRES"]),
            ],
            mwu_nominal: group(&["n", "spec"]),
            mwu_nominal_cat: "np".to_string(),
            mwu_promotion: [("adj", "ap"), ("bw", "advp"), ("vz", "pp"), ("vnw", "np")]
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }
}

/// The most frequent item; a tie goes to the first bias group holding one of
/// the tied items, then to first occurrence.
pub fn vote<'a>(items: &[&'a str], bias: &[Vec<String>]) -> Option<&'a str> {
    let mut counts: Vec<(&str, usize)> = Vec::new();
    for &it in items {
        match counts.iter_mut().find(|(k, _)| *k == it) {
            Some((_, c)) => *c += 1,
            None => counts.push((it, 1)),
        }
    }
    let top = counts.iter().map(|(_, c)| *c).max()?;
    let tied: Vec<&str> = counts
        .iter()
        .filter(|(_, c)| *c == top)
        .map(|(k, _)| *k)
        .collect();
    if tied.len() == 1 {
        return Some(tied[0]);
    }
    for g in bias {
        if let Some(&w) = tied.iter().find(|t| g.iter().any(|m| m == *t)) {
            return Some(w);
        }
    }
    Some(tied[0])
}

/// Tag for a collapsed multi-word unit, and whether it is a phrasal
/// category (`true`) or stays a part of speech.
pub fn mwu_vote(tags: &[&str], cfg: &MajorityConfig) -> Option<(String, bool)> {
    if tags.iter().any(|t| cfg.mwu_nominal.iter().any(|n| n == t)) {
        return Some((cfg.mwu_nominal_cat.clone(), true));
    }
    let winner = vote(tags, &cfg.tag_bias)?;
    Some(match cfg.mwu_promotion.get(winner) {
        Some(cat) => (cat.clone(), true),
        None => (winner.to_string(), false),
    })
}
