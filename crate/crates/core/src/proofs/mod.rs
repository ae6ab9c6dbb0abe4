//! Natural-deduction proofs for MILL with dependency diamonds.

mod check;
mod term;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::types::{Label, Type};

pub use check::{check, CheckError, CheckErrorKind};
pub use term::{is_linear, parse_term, term_of, LambdaTerm, TermParseError};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PremiseId {
    Word(String),
    Hyp(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Leaf(PremiseId, Type),
    Multiset(Vec<Structure>),
    Bracket(String, Box<Structure>),
}

/// Canonical antecedent item: nested multisets flattened, siblings sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Item {
    Leaf(PremiseId, Type),
    Bracket(String, Vec<Item>),
}

impl Structure {
    pub fn word(w: &str, t: Type) -> Self {
        Structure::Leaf(PremiseId::Word(w.to_string()), t)
    }

    pub fn hyp(x: &str, t: Type) -> Self {
        Structure::Leaf(PremiseId::Hyp(x.to_string()), t)
    }

    pub fn bracket(d: &str, inner: Structure) -> Self {
        Structure::Bracket(d.to_string(), Box::new(inner))
    }

    pub fn canonical(&self) -> Vec<Item> {
        let mut out = Vec::new();
        self.flatten_into(&mut out);
        out.sort();
        out
    }

    fn flatten_into(&self, out: &mut Vec<Item>) {
        match self {
            Structure::Leaf(id, t) => out.push(Item::Leaf(id.clone(), t.clone())),
            Structure::Multiset(xs) => xs.iter().for_each(|x| x.flatten_into(out)),
            Structure::Bracket(d, inner) => out.push(Item::Bracket(d.clone(), inner.canonical())),
        }
    }

    /// Multiset union of two structures.
    pub fn union(a: Structure, b: Structure) -> Structure {
        let mut xs = Vec::new();
        for s in [a, b] {
            match s {
                Structure::Multiset(inner) => xs.extend(inner),
                other => xs.push(other),
            }
        }
        Structure::Multiset(xs)
    }

    pub fn from_items(items: &[Item]) -> Structure {
        let conv = |i: &Item| match i {
            Item::Leaf(id, t) => Structure::Leaf(id.clone(), t.clone()),
            Item::Bracket(d, inner) => {
                Structure::Bracket(d.clone(), Box::new(Structure::from_items(inner)))
            }
        };
        if items.len() == 1 {
            conv(&items[0])
        } else {
            Structure::Multiset(items.iter().map(conv).collect())
        }
    }

    /// Lexical leaves with their types, in canonical order.
    pub fn words(&self) -> Vec<(String, Type)> {
        fn go(items: &[Item], out: &mut Vec<(String, Type)>) {
            for i in items {
                match i {
                    Item::Leaf(PremiseId::Word(w), t) => out.push((w.clone(), t.clone())),
                    Item::Leaf(..) => {}
                    Item::Bracket(_, inner) => go(inner, out),
                }
            }
        }
        let mut out = Vec::new();
        go(&self.canonical(), &mut out);
        out
    }
}

impl PartialEq<Vec<Item>> for Structure {
    fn eq(&self, other: &Vec<Item>) -> bool {
        self.canonical() == *other
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Judgement {
    pub antecedent: Structure,
    pub succedent: Type,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    Ax,
    Lex,
    ArrowElim,
    ArrowIntro,
    DiamondIntro(String),
    DiamondElim(String),
}

impl Rule {
    pub fn name(&self) -> String {
        match self {
            Rule::Ax => "ax".into(),
            Rule::Lex => "lex".into(),
            Rule::ArrowElim => "->e".into(),
            Rule::ArrowIntro => "->i".into(),
            Rule::DiamondIntro(d) => alloc::format!("<>i:{d}"),
            Rule::DiamondElim(d) => alloc::format!("<>e:{d}"),
        }
    }

    pub fn from_name(s: &str) -> Option<Rule> {
        Some(match s {
            "ax" => Rule::Ax,
            "lex" => Rule::Lex,
            "->e" => Rule::ArrowElim,
            "->i" => Rule::ArrowIntro,
            _ => {
                if let Some(d) = s.strip_prefix("<>i:") {
                    Rule::DiamondIntro(d.to_string())
                } else if let Some(d) = s.strip_prefix("<>e:") {
                    Rule::DiamondElim(d.to_string())
                } else {
                    return None;
                }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub conclusion: Judgement,
    pub rule: Rule,
    pub premises: Vec<Proof>,
    /// Discharged hypothesis for `→I` and `◇E`.
    pub binder: Option<String>,
}

impl Proof {
    pub fn lex(word: &str, t: Type) -> Proof {
        Proof {
            conclusion: Judgement {
                antecedent: Structure::word(word, t.clone()),
                succedent: t,
            },
            rule: Rule::Lex,
            premises: Vec::new(),
            binder: None,
        }
    }

    pub fn ax(x: &str, t: Type) -> Proof {
        Proof {
            conclusion: Judgement {
                antecedent: Structure::hyp(x, t.clone()),
                succedent: t,
            },
            rule: Rule::Ax,
            premises: Vec::new(),
            binder: None,
        }
    }

    /// `→E` with the conclusion computed from the premises. The result
    /// type is the functor's result, or the functor itself if it is not an
    /// arrow (the checker reports that).
    pub fn elim(function: Proof, argument: Proof) -> Proof {
        let succedent = match &function.conclusion.succedent {
            Type::Arrow { res, .. } => (**res).clone(),
            other => other.clone(),
        };
        let antecedent = Structure::union(
            function.conclusion.antecedent.clone(),
            argument.conclusion.antecedent.clone(),
        );
        Proof {
            conclusion: Judgement {
                antecedent,
                succedent,
            },
            rule: Rule::ArrowElim,
            premises: vec![function, argument],
            binder: None,
        }
    }

    /// `→I` discharging `x : arg` with the given arrow label.
    pub fn intro(x: &str, arg: Type, label: Label, body: Proof) -> Proof {
        let items: Vec<Item> = body
            .conclusion
            .antecedent
            .canonical()
            .into_iter()
            .filter(|i| !matches!(i, Item::Leaf(PremiseId::Hyp(h), t) if h == x && *t == arg))
            .collect();
        Proof {
            conclusion: Judgement {
                antecedent: Structure::from_items(&items),
                succedent: Type::arrow(arg, label, body.conclusion.succedent.clone()),
            },
            rule: Rule::ArrowIntro,
            premises: vec![body],
            binder: Some(x.to_string()),
        }
    }

    /// `◇ᵈI`.
    pub fn diamond_intro(d: &str, body: Proof) -> Proof {
        Proof {
            conclusion: Judgement {
                antecedent: Structure::bracket(d, body.conclusion.antecedent.clone()),
                succedent: Type::diamond(d, body.conclusion.succedent.clone()),
            },
            rule: Rule::DiamondIntro(d.to_string()),
            premises: vec![body],
            binder: None,
        }
    }

    /// `◇ᵈE`: replace the bracket `⟨y⟩ᵈ` in `minor` by the antecedent of
    /// `major`.
    pub fn diamond_elim(d: &str, y: &str, major: Proof, minor: Proof) -> Proof {
        fn splice(items: &[Item], d: &str, y: &str, with: &[Item]) -> Vec<Item> {
            let mut out = Vec::new();
            for it in items {
                match it {
                    Item::Bracket(l, inner)
                        if l == d
                            && matches!(inner.as_slice(), [Item::Leaf(PremiseId::Hyp(h), _)] if h == y) =>
                    {
                        out.extend_from_slice(with)
                    }
                    Item::Bracket(l, inner) => {
                        out.push(Item::Bracket(l.clone(), splice(inner, d, y, with)))
                    }
                    leaf => out.push(leaf.clone()),
                }
            }
            out.sort();
            out
        }
        let items = splice(
            &minor.conclusion.antecedent.canonical(),
            d,
            y,
            &major.conclusion.antecedent.canonical(),
        );
        Proof {
            conclusion: Judgement {
                antecedent: Structure::from_items(&items),
                succedent: minor.conclusion.succedent.clone(),
            },
            rule: Rule::DiamondElim(d.to_string()),
            premises: vec![major, minor],
            binder: Some(y.to_string()),
        }
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Proof::size).sum::<usize>()
    }
}

/// Embed dependency-labelled arrows as diamonds: `A →d B` becomes
/// `◇ᵈA → B`; plain arrows stay plain.
pub fn to_modal(t: &Type) -> Type {
    match t {
        Type::Atom(_) => t.clone(),
        Type::Arrow { arg, label, res } => {
            let a = to_modal(arg);
            let a = match label {
                Label::Plain => a,
                Label::Dep(d) => Type::diamond(d, a),
            };
            Type::plain_arrow(a, to_modal(res))
        }
        Type::Star(inner) => Type::star(to_modal(inner)),
        Type::Diamond(d, inner) => Type::diamond(d, to_modal(inner)),
    }
}
