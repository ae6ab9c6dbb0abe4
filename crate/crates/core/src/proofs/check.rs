//! Rule-by-rule verification with linearity of hypotheses.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Item, PremiseId, Proof, Rule};
use crate::types::{Label, Type};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckErrorKind {
    TypeMismatch { expected: Type, found: Type },
    LabelMismatch { expected: String, found: String },
    BracketMismatch,
    StructureMismatch,
    UnusedHypothesis(String),
    DuplicatedHypothesis(String),
    Arity { expected: usize, found: usize },
    MissingBinder,
    NotAnArrow(Type),
    NotADiamond(Type),
    BadLeaf,
}

/// Failure at a node. `path` lists child indices from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckError {
    pub path: Vec<usize>,
    pub kind: CheckErrorKind,
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("at root")?;
        for i in &self.path {
            write!(f, ".{i}")?;
        }
        f.write_str(": ")?;
        match &self.kind {
            CheckErrorKind::TypeMismatch { expected, found } => {
                write!(f, "expected {expected}, found {found}")
            }
            CheckErrorKind::LabelMismatch { expected, found } => {
                write!(f, "label mismatch: expected {expected}, found {found}")
            }
            CheckErrorKind::BracketMismatch => f.write_str("bracket mismatch"),
            CheckErrorKind::StructureMismatch => f.write_str("antecedent does not match premises"),
            CheckErrorKind::UnusedHypothesis(x) => write!(f, "hypothesis {x} is not used"),
            CheckErrorKind::DuplicatedHypothesis(x) => {
                write!(f, "hypothesis {x} is used more than once")
            }
            CheckErrorKind::Arity { expected, found } => {
                write!(f, "expected {expected} premises, found {found}")
            }
            CheckErrorKind::MissingBinder => f.write_str("missing binder"),
            CheckErrorKind::NotAnArrow(t) => write!(f, "{t} is not an implication"),
            CheckErrorKind::NotADiamond(t) => write!(f, "{t} is not a diamond"),
            CheckErrorKind::BadLeaf => f.write_str("leaf antecedent must be the single premise"),
        }
    }
}

impl core::error::Error for CheckError {}

/// Erase arrow and diamond labels.
fn skeleton(t: &Type) -> Type {
    match t {
        Type::Atom(_) => t.clone(),
        Type::Arrow { arg, res, .. } => Type::plain_arrow(skeleton(arg), skeleton(res)),
        Type::Star(i) => Type::star(skeleton(i)),
        Type::Diamond(_, i) => Type::diamond("_", skeleton(i)),
    }
}

fn mismatch(expected: &Type, found: &Type) -> CheckErrorKind {
    if skeleton(expected) == skeleton(found) {
        CheckErrorKind::LabelMismatch {
            expected: alloc::format!("{expected}"),
            found: alloc::format!("{found}"),
        }
    } else {
        CheckErrorKind::TypeMismatch {
            expected: expected.clone(),
            found: found.clone(),
        }
    }
}

pub fn check(p: &Proof) -> Result<(), CheckError> {
    let mut path = Vec::new();
    let mut axioms = BTreeSet::new();
    let mut binders = BTreeSet::new();
    node(p, &mut path, &mut axioms, &mut binders)
}

fn err(path: &[usize], kind: CheckErrorKind) -> CheckError {
    CheckError {
        path: path.to_vec(),
        kind,
    }
}

fn node(
    p: &Proof,
    path: &mut Vec<usize>,
    axioms: &mut BTreeSet<String>,
    binders: &mut BTreeSet<String>,
) -> Result<(), CheckError> {
    let arity = match p.rule {
        Rule::Ax | Rule::Lex => 0,
        Rule::ArrowIntro | Rule::DiamondIntro(_) => 1,
        Rule::ArrowElim | Rule::DiamondElim(_) => 2,
    };
    if p.premises.len() != arity {
        return Err(err(
            path,
            CheckErrorKind::Arity {
                expected: arity,
                found: p.premises.len(),
            },
        ));
    }
    if let Some(b) = &p.binder {
        if !binders.insert(b.clone()) {
            return Err(err(path, CheckErrorKind::DuplicatedHypothesis(b.clone())));
        }
    }
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        node(q, path, axioms, binders)?;
        path.pop();
    }
    local(p, path, axioms)
}

fn local(p: &Proof, path: &[usize], axioms: &mut BTreeSet<String>) -> Result<(), CheckError> {
    let concl = &p.conclusion;
    let ant = concl.antecedent.canonical();
    let e = |k| Err(err(path, k));
    match &p.rule {
        Rule::Ax | Rule::Lex => {
            let [Item::Leaf(id, t)] = ant.as_slice() else {
                return e(CheckErrorKind::BadLeaf);
            };
            match (id, &p.rule) {
                (PremiseId::Hyp(x), Rule::Ax) => {
                    if !axioms.insert(x.clone()) {
                        return e(CheckErrorKind::DuplicatedHypothesis(x.clone()));
                    }
                }
                (PremiseId::Word(_), Rule::Lex) => {}
                _ => return e(CheckErrorKind::BadLeaf),
            }
            if *t != concl.succedent {
                return e(mismatch(t, &concl.succedent));
            }
        }
        Rule::ArrowElim => {
            let (f, a) = (&p.premises[0].conclusion, &p.premises[1].conclusion);
            let Type::Arrow { arg, res, .. } = &f.succedent else {
                return e(CheckErrorKind::NotAnArrow(f.succedent.clone()));
            };
            if **arg != a.succedent {
                return e(mismatch(arg, &a.succedent));
            }
            if **res != concl.succedent {
                return e(mismatch(res, &concl.succedent));
            }
            let mut union = f.antecedent.canonical();
            union.extend(a.antecedent.canonical());
            union.sort();
            if union != ant {
                return e(CheckErrorKind::StructureMismatch);
            }
        }
        Rule::ArrowIntro => {
            let body = &p.premises[0].conclusion;
            let Some(x) = &p.binder else {
                return e(CheckErrorKind::MissingBinder);
            };
            let Type::Arrow { arg, res, .. } = &concl.succedent else {
                return e(CheckErrorKind::NotAnArrow(concl.succedent.clone()));
            };
            if **res != body.succedent {
                return e(mismatch(res, &body.succedent));
            }
            let mut items = body.antecedent.canonical();
            let Some(i) = items
                .iter()
                .position(|it| matches!(it, Item::Leaf(PremiseId::Hyp(h), _) if h == x))
            else {
                return e(CheckErrorKind::UnusedHypothesis(x.clone()));
            };
            let Item::Leaf(_, ht) = items.remove(i) else {
                unreachable!()
            };
            if ht != **arg {
                return e(mismatch(arg, &ht));
            }
            if items != ant {
                return e(CheckErrorKind::StructureMismatch);
            }
        }
        Rule::DiamondIntro(d) => {
            let body = &p.premises[0].conclusion;
            match &concl.succedent {
                Type::Diamond(l, inner) => {
                    if l != d {
                        return e(CheckErrorKind::LabelMismatch {
                            expected: d.clone(),
                            found: l.clone(),
                        });
                    }
                    if **inner != body.succedent {
                        return e(mismatch(inner, &body.succedent));
                    }
                }
                other => return e(CheckErrorKind::NotADiamond(other.clone())),
            }
            match ant.as_slice() {
                [Item::Bracket(l, inner)] if l == d => {
                    if *inner != body.antecedent.canonical() {
                        return e(CheckErrorKind::StructureMismatch);
                    }
                }
                _ => return e(CheckErrorKind::BracketMismatch),
            }
        }
        Rule::DiamondElim(d) => {
            let (delta, gamma) = (&p.premises[0].conclusion, &p.premises[1].conclusion);
            let Some(y) = &p.binder else {
                return e(CheckErrorKind::MissingBinder);
            };
            let inner_type = match &delta.succedent {
                Type::Diamond(l, inner) if l == d => (**inner).clone(),
                Type::Diamond(l, _) => {
                    return e(CheckErrorKind::LabelMismatch {
                        expected: d.clone(),
                        found: l.clone(),
                    })
                }
                other => return e(CheckErrorKind::NotADiamond(other.clone())),
            };
            if gamma.succedent != concl.succedent {
                return e(mismatch(&gamma.succedent, &concl.succedent));
            }
            let mut items = gamma.antecedent.canonical();
            let replacement = delta.antecedent.canonical();
            match substitute(&mut items, d, y, &inner_type, &replacement) {
                Found::No => return e(CheckErrorKind::UnusedHypothesis(y.clone())),
                Found::WrongBracket => return e(CheckErrorKind::BracketMismatch),
                Found::WrongType(t) => return e(mismatch(&inner_type, &t)),
                Found::Yes => {}
            }
            if items != ant {
                return e(CheckErrorKind::StructureMismatch);
            }
        }
    }
    let _ = Label::Plain;
    Ok(())
}

enum Found {
    Yes,
    No,
    WrongBracket,
    WrongType(Type),
}

/// Replace the bracket `⟨y : A⟩ᵈ` somewhere in `items` by `replacement`.
fn substitute(items: &mut Vec<Item>, d: &str, y: &str, a: &Type, replacement: &[Item]) -> Found {
    for i in 0..items.len() {
        if let Item::Bracket(l, inner) = &items[i] {
            if let [Item::Leaf(PremiseId::Hyp(h), t)] = inner.as_slice() {
                if h == y {
                    if l != d {
                        return Found::WrongBracket;
                    }
                    if t != a {
                        return Found::WrongType(t.clone());
                    }
                    items.remove(i);
                    items.extend_from_slice(replacement);
                    items.sort();
                    return Found::Yes;
                }
            }
        }
    }
    for it in items.iter_mut() {
        if let Item::Bracket(_, inner) = it {
            match substitute(inner, d, y, a, replacement) {
                Found::No => {}
                other => {
                    inner.sort();
                    return other;
                }
            }
        }
    }
    items.sort();
    Found::No
}
