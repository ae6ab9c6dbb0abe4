//! Type AST: atoms, dependency-labelled implications, the coordinator star
//! and dependency diamonds.

mod construct;
mod syntax;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

pub use construct::{decompose, instantiate_coordinator, make_complex, ObliquenessPoset};
pub(crate) use syntax::polish_tokens as syntax_tokens;
pub use syntax::{parse_type, print_type};

/// Label on an implication. `Plain` prints as a bare arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Plain,
    Dep(String),
}

impl Label {
    pub fn dep(name: &str) -> Self {
        Label::Dep(name.to_string())
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Label::Plain => None,
            Label::Dep(d) => Some(d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Type {
    Atom(String),
    Arrow {
        arg: Box<Type>,
        label: Label,
        res: Box<Type>,
    },
    Star(Box<Type>),
    Diamond(String, Box<Type>),
}

impl Type {
    pub fn atom(name: &str) -> Self {
        Type::Atom(name.to_string())
    }

    pub fn arrow(arg: Type, label: Label, res: Type) -> Self {
        Type::Arrow {
            arg: Box::new(arg),
            label,
            res: Box::new(res),
        }
    }

    /// `arg →dep res`
    pub fn dep_arrow(arg: Type, dep: &str, res: Type) -> Self {
        Type::arrow(arg, Label::dep(dep), res)
    }

    /// `arg → res`
    pub fn plain_arrow(arg: Type, res: Type) -> Self {
        Type::arrow(arg, Label::Plain, res)
    }

    pub fn star(inner: Type) -> Self {
        Type::Star(Box::new(inner))
    }

    pub fn diamond(label: &str, inner: Type) -> Self {
        Type::Diamond(label.to_string(), Box::new(inner))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Type::Atom(_))
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Type::Atom(a) => Some(a),
            _ => None,
        }
    }

    /// Implication order. Star and diamond are transparent.
    pub fn order(&self) -> usize {
        match self {
            Type::Atom(_) => 0,
            Type::Arrow { arg, res, .. } => core::cmp::max(arg.order() + 1, res.order()),
            Type::Star(t) | Type::Diamond(_, t) => t.order(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Type::Atom(_) => 0,
            Type::Arrow { arg, res, .. } => 1 + core::cmp::max(arg.depth(), res.depth()),
            Type::Star(t) | Type::Diamond(_, t) => 1 + t.depth(),
        }
    }

    pub fn contains_star(&self) -> bool {
        match self {
            Type::Atom(_) => false,
            Type::Star(_) => true,
            Type::Arrow { arg, res, .. } => arg.contains_star() || res.contains_star(),
            Type::Diamond(_, t) => t.contains_star(),
        }
    }

    pub fn contains_diamond(&self) -> bool {
        match self {
            Type::Atom(_) => false,
            Type::Diamond(..) => true,
            Type::Arrow { arg, res, .. } => arg.contains_diamond() || res.contains_diamond(),
            Type::Star(t) => t.contains_diamond(),
        }
    }

    /// All atom names, left to right.
    pub fn atoms(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Type::Atom(a) => out.push(a),
            Type::Arrow { arg, res, .. } => {
                arg.collect_atoms(out);
                res.collect_atoms(out);
            }
            Type::Star(t) | Type::Diamond(_, t) => t.collect_atoms(out),
        }
    }

    /// Is this `X →d X` with `d` among `mod_labels`?
    pub fn is_modifier(&self, mod_labels: &[&str]) -> bool {
        match self {
            Type::Arrow {
                arg,
                label: Label::Dep(d),
                res,
            } => arg == res && mod_labels.contains(&d.as_str()),
            _ => false,
        }
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_type(self, Notation::Infix))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    Infix,
    Polish,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error("empty type string")]
    Empty,
    #[error("unknown atom `{name}` at {pos}")]
    UnknownAtom { name: String, pos: usize },
    #[error("unknown label `{name}` at {pos}")]
    UnknownLabel { name: String, pos: usize },
    #[error("unexpected `{found}` at {pos}")]
    Unexpected { found: String, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("trailing input at {pos}")]
    Trailing { pos: usize },
    #[error("label `{0}` has no obliqueness rank")]
    Unranked(String),
    #[error("coordinator needs at least two conjuncts, got {0}")]
    TooFewConjuncts(usize),
}

/// Atom and label names accepted by the parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vocabulary {
    atoms: BTreeSet<String>,
    labels: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{0}` is both an atom and a label")]
pub struct OverlapError(pub String);

impl Vocabulary {
    pub fn new<A, L>(atoms: A, labels: L) -> Result<Self, OverlapError>
    where
        A: IntoIterator,
        A::Item: Into<String>,
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let atoms: BTreeSet<String> = atoms.into_iter().map(Into::into).collect();
        let labels: BTreeSet<String> = labels.into_iter().map(Into::into).collect();
        if let Some(x) = atoms.intersection(&labels).next() {
            return Err(OverlapError(x.clone()));
        }
        Ok(Vocabulary { atoms, labels })
    }

    pub fn is_atom(&self, name: &str) -> bool {
        self.atoms.contains(name)
    }

    pub fn is_label(&self, name: &str) -> bool {
        self.labels.contains(name)
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.atoms.iter().map(String::as_str)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }
}

/// Atoms of the default translation tables plus `S` and the placeholder
/// tokens; labels of the default dependency table plus `det` and `obj`.
impl Default for Vocabulary {
    fn default() -> Self {
        let tables = crate::extraction::Tables::default();
        let mut atoms: BTreeSet<String> = tables.atoms().map(String::from).collect();
        for extra in ["S", DET_ATOM, CRD_ATOM] {
            atoms.insert(extra.to_string());
        }
        let mut labels: BTreeSet<String> = tables.labels().map(String::from).collect();
        for extra in ["det", "obj"] {
            labels.insert(extra.to_string());
        }
        Vocabulary { atoms, labels }
    }
}

pub const DET_ATOM: &str = "_DET";
pub const CRD_ATOM: &str = "_CRD";
