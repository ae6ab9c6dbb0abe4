//! Indented s-expression serialization of proofs.
//!
//! ```text
//! (->e
//!   (sequent (multiset (word "at" "NP → NP → S") (hyp x "NP")) "NP → S")
//!   (lex (sequent (word "at" "NP → NP → S") "NP → NP → S"))
//!   (ax (sequent (hyp x "NP") "NP")))
//! ```
//!
//! A node is `(RULE [BINDER] SEQUENT CHILD*)`; the binder is present for
//! `->i` and `<>e:d`. Types are written in infix notation.

use std::fmt::Write;

use deptypes_core::proofs::{Judgement, PremiseId, Proof, Rule, Structure};
use deptypes_core::types::{parse_type, print_type, Notation, Vocabulary};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("offset {pos}: {message}")]
pub struct SexprError {
    pub pos: usize,
    pub message: String,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, SexprError> {
    Err(SexprError {
        pos,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Sx {
    Atom(usize, String),
    Str(usize, String),
    List(usize, Vec<Sx>),
}

impl Sx {
    fn pos(&self) -> usize {
        match self {
            Sx::Atom(p, _) | Sx::Str(p, _) | Sx::List(p, _) => *p,
        }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn ty(t: &deptypes_core::Type) -> String {
    quote(&print_type(t, Notation::Infix))
}

fn structure(s: &Structure, out: &mut String) {
    match s {
        Structure::Leaf(PremiseId::Word(w), t) => {
            write!(out, "(word {} {})", quote(w), ty(t)).unwrap()
        }
        Structure::Leaf(PremiseId::Hyp(x), t) => write!(out, "(hyp {x} {})", ty(t)).unwrap(),
        Structure::Multiset(xs) => {
            out.push_str("(multiset");
            for x in xs {
                out.push(' ');
                structure(x, out);
            }
            out.push(')');
        }
        Structure::Bracket(d, inner) => {
            write!(out, "(bracket {d} ").unwrap();
            structure(inner, out);
            out.push(')');
        }
    }
}

pub fn write_proof(p: &Proof) -> String {
    let mut out = String::new();
    node(p, 0, &mut out);
    out.push('\n');
    out
}

fn node(p: &Proof, depth: usize, out: &mut String) {
    out.push('(');
    out.push_str(&p.rule.name());
    if let Some(b) = &p.binder {
        write!(out, " {b}").unwrap();
    }
    out.push(' ');
    out.push_str("(sequent ");
    structure(&p.conclusion.antecedent, out);
    write!(out, " {})", ty(&p.conclusion.succedent)).unwrap();
    for c in &p.premises {
        out.push('\n');
        out.push_str(&"  ".repeat(depth + 1));
        node(c, depth + 1, out);
    }
    out.push(')');
}

fn tokenize(text: &str) -> Result<Vec<Sx>, SexprError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let mut stack: Vec<(usize, Vec<Sx>)> = vec![(0, Vec::new())];
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            ';' => {
                while i < chars.len() && chars[i].1 != '\n' {
                    i += 1;
                }
                continue;
            }
            c if c.is_whitespace() => {}
            '(' => stack.push((pos, Vec::new())),
            ')' => {
                if stack.len() == 1 {
                    return err(pos, "unbalanced `)`");
                }
                let (start, items) = stack.pop().expect("checked");
                stack
                    .last_mut()
                    .expect("checked")
                    .1
                    .push(Sx::List(start, items));
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => return err(pos, "unterminated string"),
                        Some((_, '"')) => break,
                        Some((_, '\\')) => {
                            i += 1;
                            match chars.get(i) {
                                Some((_, c)) => s.push(*c),
                                None => return err(pos, "unterminated string"),
                            }
                        }
                        Some((_, c)) => s.push(*c),
                    }
                    i += 1;
                }
                stack.last_mut().expect("checked").1.push(Sx::Str(pos, s));
            }
            _ => {
                let mut s = String::new();
                while i < chars.len()
                    && !chars[i].1.is_whitespace()
                    && !"()\";".contains(chars[i].1)
                {
                    s.push(chars[i].1);
                    i += 1;
                }
                stack.last_mut().expect("checked").1.push(Sx::Atom(pos, s));
                continue;
            }
        }
        i += 1;
    }
    if stack.len() != 1 {
        return err(stack.last().expect("non-empty").0, "unclosed `(`");
    }
    Ok(stack.pop().expect("non-empty").1)
}

/// Read every proof in `text`.
pub fn read_proofs(text: &str, vocab: &Vocabulary) -> Result<Vec<Proof>, SexprError> {
    tokenize(text)?
        .iter()
        .map(|sx| read_node(sx, vocab))
        .collect()
}

fn read_type(sx: &Sx, vocab: &Vocabulary) -> Result<deptypes_core::Type, SexprError> {
    match sx {
        Sx::Str(p, s) => parse_type(s, Notation::Infix, vocab).map_err(|e| SexprError {
            pos: *p,
            message: e.to_string(),
        }),
        other => err(other.pos(), "expected a quoted type"),
    }
}

fn atom(sx: &Sx) -> Result<&str, SexprError> {
    match sx {
        Sx::Atom(_, a) => Ok(a),
        other => err(other.pos(), "expected a symbol"),
    }
}

fn read_structure(sx: &Sx, vocab: &Vocabulary) -> Result<Structure, SexprError> {
    let Sx::List(pos, items) = sx else {
        return err(sx.pos(), "expected a structure");
    };
    let Some(head) = items.first() else {
        return err(*pos, "empty structure");
    };
    match (atom(head)?, &items[1..]) {
        ("word", [Sx::Str(_, w), t]) => Ok(Structure::word(w, read_type(t, vocab)?)),
        ("hyp", [x, t]) => Ok(Structure::hyp(atom(x)?, read_type(t, vocab)?)),
        ("bracket", [d, inner]) => Ok(Structure::bracket(atom(d)?, read_structure(inner, vocab)?)),
        ("multiset", xs) => Ok(Structure::Multiset(
            xs.iter()
                .map(|x| read_structure(x, vocab))
                .collect::<Result<_, _>>()?,
        )),
        (other, _) => err(*pos, format!("malformed structure `{other}`")),
    }
}

fn read_node(sx: &Sx, vocab: &Vocabulary) -> Result<Proof, SexprError> {
    let Sx::List(pos, items) = sx else {
        return err(sx.pos(), "expected a proof node");
    };
    let Some(head) = items.first() else {
        return err(*pos, "empty proof node");
    };
    let name = atom(head)?;
    let rule = Rule::from_name(name).ok_or_else(|| SexprError {
        pos: head.pos(),
        message: format!("unknown rule `{name}`"),
    })?;
    let mut rest = &items[1..];
    let binder = match (&rule, rest.first()) {
        (Rule::ArrowIntro | Rule::DiamondElim(_), Some(b)) => {
            rest = &rest[1..];
            Some(atom(b)?.to_string())
        }
        _ => None,
    };
    let Some(sequent) = rest.first() else {
        return err(*pos, "missing sequent");
    };
    let conclusion = match sequent {
        Sx::List(p, xs) => match xs.as_slice() {
            [h, ante, succ] if atom(h)? == "sequent" => Judgement {
                antecedent: read_structure(ante, vocab)?,
                succedent: read_type(succ, vocab)?,
            },
            _ => return err(*p, "expected (sequent STRUCTURE \"TYPE\")"),
        },
        other => return err(other.pos(), "expected a sequent"),
    };
    let premises = rest[1..]
        .iter()
        .map(|c| read_node(c, vocab))
        .collect::<Result<_, _>>()?;
    Ok(Proof {
        conclusion,
        rule,
        premises,
        binder,
    })
}
