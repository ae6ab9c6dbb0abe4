use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::{
    count_vector, functor_candidates, saturate, split_state, sum, Origin, ParseError, ParseState,
    ParserConfig,
};
use crate::types::{Label, Type};

/// An elimination decision: premise indices forming the argument side,
/// and optionally the argument type and arrow label being eliminated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub left: Vec<usize>,
    pub argument: Option<(Type, Label)>,
}

/// Chooses how to split the premises of a state for one elimination.
/// Must be deterministic.
pub trait EliminationOracle {
    fn split(&self, state: &ParseState, cfg: &ParserConfig) -> Result<Split, ParseError>;
}

/// Non-empty proper subsets of `0..n` as ascending index lists, in
/// lexicographic order: `[0], [0,1], [0,1,2], …, [0,2], …, [n-1]`.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..n {
            cur.push(i);
            if cur.len() < n {
                out.push(cur.clone());
                go(n, i + 1, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::new(), &mut out);
    out
}

type Key = (Vec<Type>, Type, Option<Type>);

/// Exhaustive oracle: the lexicographically first argument side (see
/// [`subsets`]) that leaves both halves derivable.
#[derive(Default)]
pub struct BruteForce {
    memo: RefCell<BTreeMap<Key, bool>>,
}

impl BruteForce {
    pub fn new() -> Self {
        Self::default()
    }

    fn first_valid(&self, state: &ParseState, cfg: &ParserConfig) -> Option<Split> {
        let n = state.premises.len();
        for left in subsets(n) {
            let right = (0..n)
                .filter(|i| !left.contains(i))
                .map(|i| &state.premises[i]);
            let Ok(counts) = sum(left.iter().map(|&i| &state.premises[i].ty)) else {
                continue;
            };
            for c in functor_candidates(right, &state.goal) {
                if count_vector(&c.0).ok().as_ref() != Some(&counts) {
                    continue;
                }
                let split = Split {
                    left: left.clone(),
                    argument: Some(c),
                };
                let Ok((l, r)) = split_state(state, &split) else {
                    continue;
                };
                if self.derivable(l, cfg) && self.derivable(r, cfg) {
                    return Some(split);
                }
            }
        }
        None
    }

    /// Whether the search can close this state under some sequence of
    /// splits.
    pub fn derivable(&self, state: ParseState, cfg: &ParserConfig) -> bool {
        let state = saturate(state, cfg, &mut || String::from("_"));
        let mut types: Vec<Type> = state.premises.iter().map(|p| p.ty.clone()).collect();
        types.sort();
        let key = (types, state.goal.clone(), state.last_eliminated.clone());
        if let Some(&v) = self.memo.borrow().get(&key) {
            return v;
        }
        let v = if state.premises.len() == 1 {
            state.premises[0].ty == state.goal
        } else {
            self.first_valid(&state, cfg).is_some()
        };
        self.memo.borrow_mut().insert(key, v);
        v
    }
}

impl EliminationOracle for BruteForce {
    fn split(&self, state: &ParseState, cfg: &ParserConfig) -> Result<Split, ParseError> {
        self.first_valid(state, cfg).ok_or(ParseError::NoSplit)
    }
}

/// Fixed decisions for tests and demonstrations: each entry names the
/// premises (by word or hypothesis name) that form the argument side. The
/// first entry fully present in the state and leaving something on the
/// functor side is used.
#[derive(Clone, Debug, Default)]
pub struct Scripted {
    pub rules: Vec<Vec<String>>,
}

impl EliminationOracle for Scripted {
    fn split(&self, state: &ParseState, _cfg: &ParserConfig) -> Result<Split, ParseError> {
        let names: Vec<&str> = state
            .premises
            .iter()
            .map(|p| match &p.origin {
                Origin::Lexical => p.word.as_deref().unwrap_or(""),
                Origin::Hypothetical(x) => x.as_str(),
            })
            .collect();
        for rule in &self.rules {
            if rule.len() >= names.len() {
                continue;
            }
            let mut left = Vec::new();
            for w in rule {
                match names
                    .iter()
                    .enumerate()
                    .position(|(i, n)| n == w && !left.contains(&i))
                {
                    Some(i) => left.push(i),
                    None => break,
                }
            }
            if left.len() == rule.len() {
                left.sort();
                return Ok(Split {
                    left,
                    argument: None,
                });
            }
        }
        Err(ParseError::NoSplit)
    }
}
