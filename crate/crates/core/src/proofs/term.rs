//! Linear λ-terms read off proofs.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{Proof, Rule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaTerm {
    Var(String),
    Const(String),
    App(Box<LambdaTerm>, Box<LambdaTerm>),
    Abs(String, Box<LambdaTerm>),
    ModalIntro(String, Box<LambdaTerm>),
    /// `let ◇d var = term in body`
    ModalElim {
        label: String,
        var: String,
        term: Box<LambdaTerm>,
        body: Box<LambdaTerm>,
    },
}

impl LambdaTerm {
    pub fn app(f: LambdaTerm, a: LambdaTerm) -> Self {
        LambdaTerm::App(Box::new(f), Box::new(a))
    }

    pub fn abs(x: &str, body: LambdaTerm) -> Self {
        LambdaTerm::Abs(x.to_string(), Box::new(body))
    }

    fn is_simple(&self) -> bool {
        matches!(
            self,
            LambdaTerm::Var(_) | LambdaTerm::Const(_) | LambdaTerm::ModalIntro(..)
        )
    }
}

impl fmt::Display for LambdaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaTerm::Var(x) | LambdaTerm::Const(x) => f.write_str(x),
            LambdaTerm::App(g, a) => {
                if g.is_simple() {
                    write!(f, "{g}")?;
                } else {
                    write!(f, "({g})")?;
                }
                if a.is_simple() && !matches!(**a, LambdaTerm::ModalIntro(..)) {
                    write!(f, " {a}")
                } else {
                    write!(f, "({a})")
                }
            }
            LambdaTerm::Abs(x, body) => {
                if matches!(**body, LambdaTerm::App(..)) {
                    write!(f, "λ{x}.({body})")
                } else {
                    write!(f, "λ{x}.{body}")
                }
            }
            LambdaTerm::ModalIntro(d, t) => write!(f, "◇{d}({t})"),
            LambdaTerm::ModalElim {
                label,
                var,
                term,
                body,
            } => {
                write!(f, "let ◇{label} {var} = {term} in {body}")
            }
        }
    }
}

/// Homomorphic reading of a proof: leaves become constants or variables,
/// eliminations applications, introductions abstractions.
pub fn term_of(p: &Proof) -> LambdaTerm {
    let sub = |i: usize| Box::new(term_of(&p.premises[i]));
    let binder = || p.binder.clone().unwrap_or_default();
    match &p.rule {
        Rule::Lex => match p.conclusion.antecedent.words().first() {
            Some((w, _)) => LambdaTerm::Const(w.clone()),
            None => LambdaTerm::Const(String::new()),
        },
        Rule::Ax => {
            let items = p.conclusion.antecedent.canonical();
            match items.first() {
                Some(super::Item::Leaf(super::PremiseId::Hyp(x), _)) => LambdaTerm::Var(x.clone()),
                _ => LambdaTerm::Var(String::new()),
            }
        }
        Rule::ArrowElim => LambdaTerm::App(sub(0), sub(1)),
        Rule::ArrowIntro => LambdaTerm::Abs(binder(), sub(0)),
        Rule::DiamondIntro(d) => LambdaTerm::ModalIntro(d.clone(), sub(0)),
        Rule::DiamondElim(d) => LambdaTerm::ModalElim {
            label: d.clone(),
            var: binder(),
            term: sub(0),
            body: sub(1),
        },
    }
}

/// Each bound variable occurs exactly once in its scope and each free
/// variable exactly once overall.
pub fn is_linear(t: &LambdaTerm) -> bool {
    fn go(t: &LambdaTerm, counts: &mut BTreeMap<String, usize>) -> bool {
        match t {
            LambdaTerm::Var(x) => {
                *counts.entry(x.clone()).or_default() += 1;
                true
            }
            LambdaTerm::Const(_) => true,
            LambdaTerm::App(f, a) => go(f, counts) && go(a, counts),
            LambdaTerm::ModalIntro(_, t) => go(t, counts),
            LambdaTerm::Abs(x, body) => bound(x, body, counts),
            LambdaTerm::ModalElim {
                var, term, body, ..
            } => go(term, counts) && bound(var, body, counts),
        }
    }
    fn bound(x: &str, body: &LambdaTerm, counts: &mut BTreeMap<String, usize>) -> bool {
        let outer = counts.remove(x);
        let ok = go(body, counts) && counts.get(x) == Some(&1);
        counts.remove(x);
        if let Some(n) = outer {
            counts.insert(x.to_string(), n);
        }
        ok
    }
    let mut counts = BTreeMap::new();
    go(t, &mut counts) && counts.values().all(|&n| n == 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for TermParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "term syntax error at {}: {}", self.pos, self.message)
    }
}

impl core::error::Error for TermParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Open,
    Close,
    Lambda,
    Dot,
    Diamond,
    Eq,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, TermParseError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '(' => Tok::Open,
            ')' => Tok::Close,
            'λ' | '\\' => Tok::Lambda,
            '.' => Tok::Dot,
            '◇' => Tok::Diamond,
            '=' => Tok::Eq,
            c if is_ident(c) => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if !is_ident(c) {
                        break;
                    }
                    name.push(c);
                    chars.next();
                }
                out.push((i, Tok::Ident(name)));
                continue;
            }
            other => {
                return Err(TermParseError {
                    pos: i,
                    message: alloc::format!("unexpected {other:?}"),
                })
            }
        };
        chars.next();
        out.push((i, tok));
    }
    Ok(out)
}

fn is_ident(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '\'')
}

struct TermParser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    scope: Vec<String>,
}

impl TermParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(i, _)| *i)
    }

    fn fail<T>(&self, message: &str) -> Result<T, TermParseError> {
        Err(TermParseError {
            pos: self.offset(),
            message: message.to_string(),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<(), TermParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&alloc::format!("expected {t:?}"))
        }
    }

    fn ident(&mut self) -> Result<String, TermParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) => {
                let x = x.clone();
                self.pos += 1;
                Ok(x)
            }
            _ => self.fail("expected identifier"),
        }
    }

    fn term(&mut self) -> Result<LambdaTerm, TermParseError> {
        match self.peek() {
            Some(Tok::Lambda) => {
                self.pos += 1;
                let x = self.ident()?;
                self.expect(Tok::Dot)?;
                self.scope.push(x.clone());
                let body = self.term();
                self.scope.pop();
                Ok(LambdaTerm::Abs(x, Box::new(body?)))
            }
            Some(Tok::Ident(k)) if k == "let" => {
                self.pos += 1;
                self.expect(Tok::Diamond)?;
                let label = self.ident()?;
                let var = self.ident()?;
                self.expect(Tok::Eq)?;
                let term = self.term()?;
                match self.peek() {
                    Some(Tok::Ident(k)) if k == "in" => self.pos += 1,
                    _ => return self.fail("expected in"),
                }
                self.scope.push(var.clone());
                let body = self.term();
                self.scope.pop();
                Ok(LambdaTerm::ModalElim {
                    label,
                    var,
                    term: Box::new(term),
                    body: Box::new(body?),
                })
            }
            _ => {
                let mut t = self.atom()?;
                while self.starts_atom() {
                    let a = self.atom()?;
                    t = LambdaTerm::app(t, a);
                }
                Ok(t)
            }
        }
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some(Tok::Ident(k)) => k != "in",
            Some(Tok::Open | Tok::Diamond) => true,
            _ => false,
        }
    }

    fn atom(&mut self) -> Result<LambdaTerm, TermParseError> {
        match self.peek() {
            Some(Tok::Open) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(Tok::Close)?;
                Ok(t)
            }
            Some(Tok::Diamond) => {
                self.pos += 1;
                let d = self.ident()?;
                self.expect(Tok::Open)?;
                let t = self.term()?;
                self.expect(Tok::Close)?;
                Ok(LambdaTerm::ModalIntro(d, Box::new(t)))
            }
            Some(Tok::Ident(_)) => {
                let x = self.ident()?;
                if self.scope.contains(&x) {
                    Ok(LambdaTerm::Var(x))
                } else {
                    Ok(LambdaTerm::Const(x))
                }
            }
            _ => self.fail("expected term"),
        }
    }
}

/// Read a term in the printed application style. Identifiers bound by an
/// enclosing λ or `let` are variables; all others are constants.
pub fn parse_term(s: &str) -> Result<LambdaTerm, TermParseError> {
    let toks = lex(s)?;
    let mut p = TermParser {
        toks,
        pos: 0,
        end: s.len(),
        scope: Vec::new(),
    };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return p.fail("trailing input");
    }
    Ok(t)
}
