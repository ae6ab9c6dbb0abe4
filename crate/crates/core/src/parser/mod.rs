//! Backward proof search: infer the goal by count invariance, introduce
//! while possible, then let an oracle split the premises for an
//! elimination, recursively.

mod count;
mod oracle;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::proofs::Proof;
use crate::types::{Label, Type};

pub use count::{count_vector, CountVector};
pub use oracle::{subsets, BruteForce, EliminationOracle, Scripted, Split};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    Lexical,
    /// Introduced during search under the given name.
    Hypothetical(String),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Premise {
    pub word: Option<String>,
    pub ty: Type,
    pub origin: Origin,
}

impl Premise {
    pub fn lexical(word: &str, ty: Type) -> Self {
        Premise {
            word: Some(word.to_string()),
            ty,
            origin: Origin::Lexical,
        }
    }

    pub fn hypothesis(name: &str, ty: Type) -> Self {
        Premise {
            word: None,
            ty,
            origin: Origin::Hypothetical(name.to_string()),
        }
    }

    fn leaf(&self) -> Proof {
        match &self.origin {
            Origin::Lexical => Proof::lex(self.word.as_deref().unwrap_or(""), self.ty.clone()),
            Origin::Hypothetical(x) => Proof::ax(x, self.ty.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("no premises")]
    Empty,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("goal is ambiguous")]
    Ambiguous { candidate: Option<Type> },
    #[error("no premise ends in an implication towards {0}")]
    NoFunctor(Type),
    #[error("atom counts do not balance")]
    Unbalanced,
    #[error("split leaves one side empty")]
    EmptySide,
    #[error("split index {0} out of range")]
    BadIndex(usize),
    #[error("no valid split")]
    NoSplit,
    #[error("premise {found} does not prove {expected}")]
    LeafMismatch { expected: Type, found: Type },
    #[error("more than {0} eliminations")]
    DepthExceeded(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParserConfig {
    pub modifier_labels: Vec<String>,
    /// Largest accepted type order.
    pub max_order: usize,
}

impl Default for ParserConfig {
    fn default() -> Self {
        ParserConfig {
            modifier_labels: ["mod", "app", "predm"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            max_order: 2,
        }
    }
}

impl ParserConfig {
    pub fn is_modifier(&self, label: &Label) -> bool {
        label
            .name()
            .is_some_and(|d| self.modifier_labels.iter().any(|m| m == d))
    }

    fn spine_has_modifier(&self, t: &Type) -> bool {
        let mut cur = t;
        while let Type::Arrow { label, res, .. } = cur {
            if self.is_modifier(label) {
                return true;
            }
            cur = res;
        }
        false
    }

    fn contains_modifier(&self, t: &Type) -> bool {
        match t {
            Type::Arrow { arg, label, res } => {
                self.is_modifier(label)
                    || self.contains_modifier(arg)
                    || self.contains_modifier(res)
            }
            _ => false,
        }
    }

    /// Reject types outside the fragment the search handles.
    pub fn supported(&self, t: &Type) -> Result<(), ParseError> {
        if t.contains_star() {
            return Err(ParseError::Unsupported(alloc::format!(
                "coordinator type {t}"
            )));
        }
        if t.contains_diamond() {
            return Err(ParseError::Unsupported(alloc::format!("diamond in {t}")));
        }
        if t.order() > self.max_order {
            return Err(ParseError::Unsupported(alloc::format!(
                "{t} has order {}",
                t.order()
            )));
        }
        let mut cur = t;
        while let Type::Arrow { arg, res, .. } = cur {
            if self.contains_modifier(arg) {
                return Err(ParseError::Unsupported(alloc::format!(
                    "higher-order modifier argument in {t}"
                )));
            }
            cur = res;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseState {
    pub premises: Vec<Premise>,
    pub goal: Type,
    pub last_eliminated: Option<Type>,
    /// Introductions applied at this step, outermost first.
    pub introduced: Vec<(String, Type, Label)>,
}

impl ParseState {
    pub fn new(premises: Vec<Premise>, goal: Type) -> Self {
        ParseState {
            premises,
            goal,
            last_eliminated: None,
            introduced: Vec::new(),
        }
    }
}

pub(crate) fn sum<'a>(
    types: impl IntoIterator<Item = &'a Type>,
) -> Result<CountVector<'a>, ParseError> {
    let mut total = CountVector::default();
    for t in types {
        count::accumulate(t, &mut total)?;
    }
    Ok(total)
}

/// Result positions along the spine of `t` where the remaining type is
/// `arg →d goal`.
fn spine_suffix<'a>(t: &'a Type, goal: &Type) -> Option<(&'a Type, &'a Label)> {
    let mut cur = t;
    while let Type::Arrow { arg, label, res } = cur {
        if **res == *goal {
            return Some((arg, label));
        }
        cur = res;
    }
    None
}

/// Goal inference. Without `prior`, sum the count vectors and read off a
/// single atom. With `prior = (goal, eliminated)`, find the functor whose
/// spine ends in `eliminated →d goal`.
pub fn infer_goal<'a>(
    premises: impl IntoIterator<Item = &'a Premise>,
    prior: Option<(&Type, &Type)>,
    cfg: &ParserConfig,
) -> Result<Type, ParseError> {
    let premises: Vec<&Premise> = premises.into_iter().collect();
    if premises.is_empty() {
        return Err(ParseError::Empty);
    }
    for p in &premises {
        cfg.supported(&p.ty)?;
    }
    match prior {
        None => {
            let net = sum(premises.iter().map(|p| &p.ty))?;
            let candidate = net.single_atom().map(Type::atom);
            if candidate.is_none() || premises.iter().any(|p| cfg.spine_has_modifier(&p.ty)) {
                return Err(ParseError::Ambiguous { candidate });
            }
            Ok(candidate.unwrap())
        }
        Some((goal, eliminated)) => {
            let want = count_vector(goal)?.minus(&count_vector(eliminated)?);
            if sum(premises.iter().map(|p| &p.ty))? != want {
                return Err(ParseError::Unbalanced);
            }
            premises
                .iter()
                .find_map(|p| match spine_suffix(&p.ty, goal) {
                    Some((a, d)) if a == eliminated => {
                        Some(Type::arrow(a.clone(), d.clone(), goal.clone()))
                    }
                    _ => None,
                })
                .ok_or_else(|| ParseError::NoFunctor(goal.clone()))
        }
    }
}

/// An arrow goal can be introduced unless it is modifier-shaped (a
/// modifier label, or an unlabelled `X → X`) or its argument was just
/// eliminated.
pub fn can_introduce(state: &ParseState, cfg: &ParserConfig) -> bool {
    match &state.goal {
        Type::Arrow { arg, label, res } => {
            let modifier = cfg.is_modifier(label) || (*label == Label::Plain && arg == res);
            !modifier && state.last_eliminated.as_ref() != Some(&**arg)
        }
        _ => false,
    }
}

/// Move the goal's argument into the premises as hypothesis `name`.
pub fn apply_intro(mut state: ParseState, name: &str) -> ParseState {
    if let Type::Arrow { arg, label, res } = state.goal.clone() {
        state
            .premises
            .push(Premise::hypothesis(name, (*arg).clone()));
        state.introduced.push((name.to_string(), *arg, label));
        state.goal = *res;
        state.last_eliminated = None;
    }
    state
}

/// Argument types `(A, d)` such that some premise ends in `A →d goal`,
/// in premise order without repeats.
pub fn functor_candidates<'a>(
    premises: impl IntoIterator<Item = &'a Premise>,
    goal: &Type,
) -> Vec<(Type, Label)> {
    let mut out: Vec<(Type, Label)> = Vec::new();
    for p in premises {
        if let Some((a, d)) = spine_suffix(&p.ty, goal) {
            let c = (a.clone(), d.clone());
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

/// Split `state` into argument and functor sub-states. Without an explicit
/// argument in `split`, the first count-consistent candidate is taken.
pub fn split_state(
    state: &ParseState,
    split: &Split,
) -> Result<(ParseState, ParseState), ParseError> {
    let n = state.premises.len();
    let mut on_left = alloc::vec![false; n];
    for &i in &split.left {
        if i >= n {
            return Err(ParseError::BadIndex(i));
        }
        on_left[i] = true;
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (p, &l) in state.premises.iter().zip(&on_left) {
        if l {
            left.push(p);
        } else {
            right.push(p);
        }
    }
    if left.is_empty() || right.is_empty() {
        return Err(ParseError::EmptySide);
    }
    let left_counts = sum(left.iter().map(|p| &p.ty))?;
    let right_counts = sum(right.iter().map(|p| &p.ty))?;
    let goal_counts = count_vector(&state.goal)?;
    let fits = |a: &Type| -> Result<bool, ParseError> {
        let ca = count_vector(a)?;
        Ok(ca == left_counts && goal_counts.minus(&ca) == right_counts)
    };
    let candidates = functor_candidates(right.iter().copied(), &state.goal);
    let chosen = match &split.argument {
        Some(c) => {
            if !candidates.contains(c) {
                return Err(ParseError::NoFunctor(state.goal.clone()));
            }
            if !fits(&c.0)? {
                return Err(ParseError::Unbalanced);
            }
            c.clone()
        }
        None => {
            if candidates.is_empty() {
                return Err(ParseError::NoFunctor(state.goal.clone()));
            }
            let mut found = None;
            for c in candidates {
                if fits(&c.0)? {
                    found = Some(c);
                    break;
                }
            }
            found.ok_or(ParseError::Unbalanced)?
        }
    };
    let (a, d) = chosen;
    let functor_goal = Type::arrow(a.clone(), d, state.goal.clone());
    let l = ParseState {
        premises: left.into_iter().cloned().collect(),
        goal: a.clone(),
        last_eliminated: Some(a.clone()),
        introduced: Vec::new(),
    };
    let r = ParseState {
        premises: right.into_iter().cloned().collect(),
        goal: functor_goal,
        last_eliminated: Some(a),
        introduced: Vec::new(),
    };
    Ok((l, r))
}

/// Ask the oracle for a split and apply it.
pub fn apply_elim(
    state: &ParseState,
    oracle: &dyn EliminationOracle,
    cfg: &ParserConfig,
) -> Result<(ParseState, ParseState), ParseError> {
    if state.premises.len() < 2 {
        return Err(ParseError::EmptySide);
    }
    let split = oracle.split(state, cfg)?;
    split_state(state, &split)
}

/// Introduce while possible, naming hypotheses with `fresh`.
pub(crate) fn saturate(
    mut state: ParseState,
    cfg: &ParserConfig,
    fresh: &mut dyn FnMut() -> String,
) -> ParseState {
    while can_introduce(&state, cfg) {
        let name = fresh();
        state = apply_intro(state, &name);
    }
    state
}

pub(crate) fn hypothesis_name(i: usize) -> String {
    const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    match NAMES.get(i) {
        Some(n) => n.to_string(),
        None => alloc::format!("x{}", i - NAMES.len() + 1),
    }
}

struct Search<'a> {
    oracle: &'a dyn EliminationOracle,
    cfg: &'a ParserConfig,
    names: usize,
    eliminations: usize,
    budget: usize,
}

impl Search<'_> {
    fn prove(&mut self, state: ParseState) -> Result<Proof, ParseError> {
        let mut names = self.names;
        let state = saturate(state, self.cfg, &mut || {
            names += 1;
            hypothesis_name(names - 1)
        });
        self.names = names;
        let mut proof = if state.premises.len() == 1 {
            let p = &state.premises[0];
            if p.ty != state.goal {
                return Err(ParseError::LeafMismatch {
                    expected: state.goal.clone(),
                    found: p.ty.clone(),
                });
            }
            p.leaf()
        } else {
            self.eliminations += 1;
            if self.eliminations > self.budget {
                return Err(ParseError::DepthExceeded(self.budget));
            }
            let (left, right) = apply_elim(&state, self.oracle, self.cfg)?;
            let argument = self.prove(left)?;
            let function = self.prove(right)?;
            Proof::elim(function, argument)
        };
        for (x, a, d) in state.introduced.into_iter().rev() {
            proof = Proof::intro(&x, a, d, proof);
        }
        Ok(proof)
    }
}

/// Parse with the goal inferred by count invariance. At the root a
/// modifier-induced ambiguity resolves to the single-atom candidate.
pub fn parse(
    premises: &[Premise],
    oracle: &dyn EliminationOracle,
    cfg: &ParserConfig,
) -> Result<Proof, ParseError> {
    let goal = match infer_goal(premises, None, cfg) {
        Ok(g) => g,
        Err(ParseError::Ambiguous { candidate: Some(g) }) => g,
        Err(e) => return Err(e),
    };
    parse_with_goal(premises, goal, oracle, cfg)
}

pub fn parse_with_goal(
    premises: &[Premise],
    goal: Type,
    oracle: &dyn EliminationOracle,
    cfg: &ParserConfig,
) -> Result<Proof, ParseError> {
    if premises.is_empty() {
        return Err(ParseError::Empty);
    }
    for p in premises {
        cfg.supported(&p.ty)?;
    }
    cfg.supported(&goal)?;
    if sum(premises.iter().map(|p| &p.ty))? != count_vector(&goal)? {
        return Err(ParseError::Unbalanced);
    }
    let mut search = Search {
        oracle,
        cfg,
        names: 0,
        eliminations: 0,
        budget: 2 * premises.len(),
    };
    search
        .prove(ParseState::new(premises.to_vec(), goal))
        .map(eta_reduce)
}

/// Contract `λx.(M x)` to `M` when the types agree, so introductions the
/// search made only to expose an atomic goal do not survive.
pub fn eta_reduce(p: Proof) -> Proof {
    let Proof {
        conclusion,
        rule,
        premises,
        binder,
    } = p;
    let premises: Vec<Proof> = premises.into_iter().map(eta_reduce).collect();
    if rule == crate::proofs::Rule::ArrowIntro {
        if let (Some(x), [body]) = (&binder, premises.as_slice()) {
            if body.rule == crate::proofs::Rule::ArrowElim {
                let arg = &body.premises[1];
                let fun = &body.premises[0];
                let is_x = arg.rule == crate::proofs::Rule::Ax
                    && arg.conclusion.antecedent.canonical()
                        == [crate::proofs::Item::Leaf(
                            crate::proofs::PremiseId::Hyp(x.clone()),
                            arg.conclusion.succedent.clone(),
                        )];
                if is_x && fun.conclusion.succedent == conclusion.succedent {
                    return fun.clone();
                }
            }
        }
    }
    Proof {
        conclusion,
        rule,
        premises,
        binder,
    }
}
