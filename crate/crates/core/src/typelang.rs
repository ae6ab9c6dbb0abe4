//! The context-free language of types in polish notation, and digram merges
//! over symbol sequences.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::types::{Label, Type};

/// Separates types in a sentence-level sequence.
pub const SEPARATOR: &str = "#";

pub type SymbolSeq = Vec<String>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeatomizeError {
    #[error("sequence ends before the type is complete (at {pos})")]
    Incomplete { pos: usize },
    #[error("trailing symbol at {pos}")]
    Trailing { pos: usize },
    #[error("symbol at {pos} is not part of the type alphabet")]
    BadSymbol { pos: usize },
}

pub fn atomize(t: &Type) -> SymbolSeq {
    let mut out = Vec::new();
    crate::types::syntax_tokens(t, &mut out);
    out
}

/// Types of a sentence, each followed by the separator.
pub fn sentence_seq(types: &[Type]) -> SymbolSeq {
    let mut out = Vec::new();
    for t in types {
        out.extend(atomize(t));
        out.push(SEPARATOR.to_string());
    }
    out
}

/// Split a sentence-level sequence at separators. A trailing separator does
/// not produce an empty final chunk.
pub fn split_sentence(s: &[String]) -> Vec<&[String]> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, tok) in s.iter().enumerate() {
        if tok == SEPARATOR {
            out.push(&s[start..i]);
            start = i + 1;
        }
    }
    if start < s.len() {
        out.push(&s[start..]);
    }
    out
}

enum Sym<'a> {
    Arrow(Label),
    Star,
    Diamond(&'a str),
    Atom(&'a str),
    Opaque,
}

fn classify(tok: &str) -> Sym<'_> {
    if tok == SEPARATOR || tok.starts_with('⟨') || tok.is_empty() {
        Sym::Opaque
    } else if let Some(rest) = tok.strip_prefix('→').or_else(|| tok.strip_prefix("->")) {
        if rest.is_empty() {
            Sym::Arrow(Label::Plain)
        } else {
            Sym::Arrow(Label::dep(rest))
        }
    } else if tok == "★" {
        Sym::Star
    } else if let Some(rest) = tok.strip_prefix('◇') {
        if rest.is_empty() {
            Sym::Opaque
        } else {
            Sym::Diamond(rest)
        }
    } else {
        Sym::Atom(tok)
    }
}

pub fn deatomize(s: &[String]) -> Result<Type, DeatomizeError> {
    fn go(s: &[String], i: &mut usize) -> Result<Type, DeatomizeError> {
        let pos = *i;
        let tok = s.get(pos).ok_or(DeatomizeError::Incomplete { pos })?;
        *i += 1;
        match classify(tok) {
            Sym::Opaque => Err(DeatomizeError::BadSymbol { pos }),
            Sym::Atom(a) => Ok(Type::atom(a)),
            Sym::Star => Ok(Type::star(go(s, i)?)),
            Sym::Diamond(d) => Ok(Type::diamond(d, go(s, i)?)),
            Sym::Arrow(l) => {
                let arg = go(s, i)?;
                let res = go(s, i)?;
                Ok(Type::arrow(arg, l, res))
            }
        }
    }
    let mut i = 0;
    let t = go(s, &mut i)?;
    if i < s.len() {
        return Err(DeatomizeError::Trailing { pos: i });
    }
    Ok(t)
}

/// Membership in the type language `S ⟹ a | d S S` (plus unary `★`, `◇d`).
pub fn recognize(s: &[String]) -> bool {
    // Recursive descent; the balance counter lives in the test oracles.
    fn derive(s: &[String], i: usize) -> Option<usize> {
        let arity = match classify(s.get(i)?) {
            Sym::Opaque => return None,
            Sym::Atom(_) => 0,
            Sym::Star | Sym::Diamond(_) => 1,
            Sym::Arrow(_) => 2,
        };
        let mut next = i + 1;
        for _ in 0..arity {
            next = derive(s, next)?;
        }
        Some(next)
    }
    derive(s, 0) == Some(s.len())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MergeTable {
    pub merges: Vec<(String, String)>,
}

impl MergeTable {
    pub fn len(&self) -> usize {
        self.merges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.merges.is_empty()
    }
}

pub fn merged_token(l: &str, r: &str) -> String {
    format!("⟨{l}·{r}⟩")
}

fn merge_pair(s: &[String], l: &str, r: &str, merged: &str) -> SymbolSeq {
    let mut out = Vec::with_capacity(s.len());
    let mut i = 0;
    while i < s.len() {
        if i + 1 < s.len() && s[i] == l && s[i + 1] == r {
            out.push(merged.to_string());
            i += 2;
        } else {
            out.push(s[i].clone());
            i += 1;
        }
    }
    out
}

pub fn apply_merges(s: &[String], m: &MergeTable) -> SymbolSeq {
    let mut cur: SymbolSeq = s.to_vec();
    for (l, r) in &m.merges {
        if l == SEPARATOR || r == SEPARATOR {
            continue;
        }
        cur = merge_pair(&cur, l, r, &merged_token(l, r));
    }
    cur
}

pub fn revert_merges(s: &[String], m: &MergeTable) -> SymbolSeq {
    let mut cur: SymbolSeq = s.to_vec();
    for (l, r) in m.merges.iter().rev() {
        if l == SEPARATOR || r == SEPARATOR {
            continue;
        }
        let merged = merged_token(l, r);
        if !cur.contains(&merged) {
            continue;
        }
        let mut out = Vec::with_capacity(cur.len() + 1);
        for tok in cur {
            if tok == merged {
                out.push(l.clone());
                out.push(r.clone());
            } else {
                out.push(tok);
            }
        }
        cur = out;
    }
    cur
}

/// Adjacent intra-type digram counts.
pub fn digram_counts(corpus: &[SymbolSeq]) -> BTreeMap<(String, String), u64> {
    let mut counts = BTreeMap::new();
    for s in corpus {
        for w in s.windows(2) {
            if w[0] == SEPARATOR || w[1] == SEPARATOR {
                continue;
            }
            *counts.entry((w[0].clone(), w[1].clone())).or_insert(0) += 1;
        }
    }
    counts
}

/// Greedy digram merging, at most `n` rounds. Equal counts go to the pair
/// whose printed form `LEFT RIGHT` sorts last.
pub fn learn_merges(corpus: &[SymbolSeq], n: usize) -> MergeTable {
    let mut cur: Vec<SymbolSeq> = corpus.to_vec();
    let mut table = MergeTable::default();
    while table.len() < n {
        let counts = digram_counts(&cur);
        let best = counts.into_iter().max_by(|(a, ca), (b, cb)| {
            ca.cmp(cb)
                .then_with(|| format!("{} {}", a.0, a.1).cmp(&format!("{} {}", b.0, b.1)))
        });
        let Some(((l, r), _)) = best else { break };
        let merged = merged_token(&l, &r);
        for s in cur.iter_mut() {
            *s = merge_pair(s, &l, &r, &merged);
        }
        table.merges.push((l, r));
    }
    table
}
