//! Functor binarisation along the obliqueness ordering, and coordinator
//! meta-types.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{print_type, Label, Notation, Type, TypeError};
use crate::transforms::{vote, MajorityConfig};

/// Label ranks, outermost argument first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObliquenessPoset {
    ranks: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("label `{0}` appears in more than one rank")]
pub struct DuplicateRank(pub String);

impl ObliquenessPoset {
    pub fn new(ranks: Vec<Vec<String>>) -> Result<Self, DuplicateRank> {
        let mut seen = alloc::collections::BTreeSet::new();
        for l in ranks.iter().flatten() {
            if !seen.insert(l.as_str()) {
                return Err(DuplicateRank(l.clone()));
            }
        }
        Ok(ObliquenessPoset { ranks })
    }

    pub fn rank_of(&self, label: &str) -> Option<usize> {
        self.ranks.iter().position(|r| r.iter().any(|l| l == label))
    }

    pub fn ranks(&self) -> &[Vec<String>] {
        &self.ranks
    }
}

impl Default for ObliquenessPoset {
    fn default() -> Self {
        let ranks: [&[&str]; 10] = [
            &["cnj"],
            &["invdet"],
            &["su"],
            &["pobj1"],
            &["obj1"],
            &["predc", "obj2", "se", "pc", "hdf"],
            &["ld", "me", "vc"],
            &["svp"],
            &["whd_body", "rhd_body", "body"],
            &["app", "predm", "mod"],
        ];
        let ranks = ranks
            .iter()
            .map(|r| r.iter().map(|l| l.to_string()).collect())
            .collect();
        ObliquenessPoset { ranks }
    }
}

/// Sort `args` outermost-first and fold them over `result`.
///
/// Unlabelled arguments come before every ranked label. Within a rank the
/// label name decides, then the printed argument.
pub fn make_complex(
    args: &[(Type, Label)],
    result: Type,
    poset: &ObliquenessPoset,
) -> Result<Type, TypeError> {
    let mut keyed = Vec::with_capacity(args.len());
    for (t, l) in args {
        let rank = match l {
            Label::Plain => 0,
            Label::Dep(d) => {
                1 + poset
                    .rank_of(d)
                    .ok_or_else(|| TypeError::Unranked(d.clone()))?
            }
        };
        let name = l.name().unwrap_or("").to_string();
        keyed.push(((rank, name, print_type(t, Notation::Infix)), t, l));
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let mut acc = result;
    for (_, t, l) in keyed.into_iter().rev() {
        acc = Type::arrow(t.clone(), l.clone(), acc);
    }
    Ok(acc)
}

/// Peel `arity` arguments off a functor. Stops early at a non-arrow.
pub fn decompose(t: &Type, arity: usize) -> (Vec<(Type, Label)>, Type) {
    let mut args = Vec::new();
    let mut cur = t;
    while args.len() < arity {
        match cur {
            Type::Arrow { arg, label, res } => {
                args.push(((**arg).clone(), label.clone()));
                cur = res;
            }
            _ => break,
        }
    }
    (args, cur.clone())
}

/// `★t →cnj t` for uniform conjuncts, otherwise `★x₁ →cnj … ★xₖ →cnj y`
/// over the distinct types in first-occurrence order. `y` is `preferred`
/// when it is one of them, else the biased vote.
pub fn instantiate_coordinator(
    conjuncts: &[Type],
    preferred: Option<&Type>,
    cfg: &MajorityConfig,
) -> Result<Type, TypeError> {
    if conjuncts.len() < 2 {
        return Err(TypeError::TooFewConjuncts(conjuncts.len()));
    }
    let mut distinct: Vec<&Type> = Vec::new();
    for t in conjuncts {
        if !distinct.contains(&t) {
            distinct.push(t);
        }
    }
    let result = match preferred {
        Some(p) if distinct.contains(&p) => p.clone(),
        _ => {
            let names: Vec<String> = conjuncts
                .iter()
                .map(|t| print_type(t, Notation::Infix))
                .collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let winner = vote(&refs, &cfg.type_bias).unwrap_or(refs[0]);
            let idx = names.iter().position(|n| n == winner).unwrap_or(0);
            conjuncts[idx].clone()
        }
    };
    let mut acc = result;
    for t in distinct.into_iter().rev() {
        acc = Type::dep_arrow(Type::star(t.clone()), "cnj", acc);
    }
    Ok(acc)
}
