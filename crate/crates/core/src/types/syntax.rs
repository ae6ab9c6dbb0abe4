//! Infix and polish text syntax for types.
//!
//! Infix: `NP →su NP →obj1 S_MAIN`, right-associative, `★X`, `◇d X`,
//! `->` accepted for `→`. Polish: space-separated prefix tokens such as
//! `→su NP S_MAIN`, with `★` and `◇d` unary.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Label, Notation, Type, TypeError, Vocabulary};

pub fn print_type(t: &Type, notation: Notation) -> String {
    let mut out = String::new();
    match notation {
        Notation::Infix => infix(t, &mut out),
        Notation::Polish => {
            let mut toks = Vec::new();
            polish_tokens(t, &mut toks);
            out = toks.join(" ");
        }
    }
    out
}

pub fn parse_type(text: &str, notation: Notation, vocab: &Vocabulary) -> Result<Type, TypeError> {
    if text.trim().is_empty() {
        return Err(TypeError::Empty);
    }
    match notation {
        Notation::Infix => {
            let toks = lex_infix(text, vocab)?;
            let mut p = InfixParser { toks, i: 0 };
            let t = p.arrow()?;
            if let Some((pos, _)) = p.toks.get(p.i) {
                return Err(TypeError::Trailing { pos: *pos });
            }
            Ok(t)
        }
        Notation::Polish => {
            let toks: Vec<(usize, &str)> = split_ws(text);
            let mut i = 0;
            let t = polish(&toks, &mut i, vocab)?;
            if i < toks.len() {
                return Err(TypeError::Trailing { pos: toks[i].0 });
            }
            Ok(t)
        }
    }
}

fn wrapped(t: &Type, out: &mut String) {
    if matches!(t, Type::Arrow { .. }) {
        out.push('(');
        infix(t, out);
        out.push(')');
    } else {
        infix(t, out);
    }
}

fn infix(t: &Type, out: &mut String) {
    match t {
        Type::Atom(a) => out.push_str(a),
        Type::Arrow { arg, label, res } => {
            wrapped(arg, out);
            out.push_str(" →");
            if let Label::Dep(d) = label {
                out.push_str(d);
            }
            out.push(' ');
            infix(res, out);
        }
        Type::Star(inner) => {
            out.push('★');
            wrapped(inner, out);
        }
        Type::Diamond(d, inner) => {
            out.push('◇');
            out.push_str(d);
            out.push(' ');
            wrapped(inner, out);
        }
    }
}

/// Prefix token stream; also the symbol alphabet of the type language.
pub(crate) fn polish_tokens(t: &Type, out: &mut Vec<String>) {
    match t {
        Type::Atom(a) => out.push(a.clone()),
        Type::Arrow { arg, label, res } => {
            let mut tok = String::from("→");
            if let Label::Dep(d) = label {
                tok.push_str(d);
            }
            out.push(tok);
            polish_tokens(arg, out);
            polish_tokens(res, out);
        }
        Type::Star(inner) => {
            out.push("★".to_string());
            polish_tokens(inner, out);
        }
        Type::Diamond(d, inner) => {
            let mut tok = String::from("◇");
            tok.push_str(d);
            out.push(tok);
            polish_tokens(inner, out);
        }
    }
}

fn split_ws(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

fn is_ident(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn polish(toks: &[(usize, &str)], i: &mut usize, vocab: &Vocabulary) -> Result<Type, TypeError> {
    let &(pos, tok) = toks.get(*i).ok_or(TypeError::UnexpectedEnd)?;
    *i += 1;
    if let Some(rest) = tok.strip_prefix('→').or_else(|| tok.strip_prefix("->")) {
        let label = label_of(rest, pos, vocab)?;
        let arg = polish(toks, i, vocab)?;
        let res = polish(toks, i, vocab)?;
        return Ok(Type::arrow(arg, label, res));
    }
    if tok == "★" {
        return Ok(Type::star(polish(toks, i, vocab)?));
    }
    if let Some(rest) = tok.strip_prefix('◇') {
        if !vocab.is_label(rest) {
            return Err(TypeError::UnknownLabel {
                name: rest.to_string(),
                pos,
            });
        }
        return Ok(Type::diamond(rest, polish(toks, i, vocab)?));
    }
    if vocab.is_atom(tok) {
        Ok(Type::atom(tok))
    } else if tok.chars().all(is_ident) {
        Err(TypeError::UnknownAtom {
            name: tok.to_string(),
            pos,
        })
    } else {
        Err(TypeError::Unexpected {
            found: tok.to_string(),
            pos,
        })
    }
}

fn label_of(name: &str, pos: usize, vocab: &Vocabulary) -> Result<Label, TypeError> {
    if name.is_empty() {
        Ok(Label::Plain)
    } else if vocab.is_label(name) {
        Ok(Label::Dep(name.to_string()))
    } else {
        Err(TypeError::UnknownLabel {
            name: name.to_string(),
            pos,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Arrow(Label),
    Star,
    Diamond(String),
    Atom(String),
}

fn lex_infix(text: &str, vocab: &Vocabulary) -> Result<Vec<(usize, Tok)>, TypeError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    let ident = |it: &mut core::iter::Peekable<core::str::CharIndices<'_>>| {
        let mut s = String::new();
        while let Some(&(_, c)) = it.peek() {
            if !is_ident(c) {
                break;
            }
            s.push(c);
            it.next();
        }
        s
    };
    while let Some(&(pos, c)) = it.peek() {
        match c {
            c if c.is_whitespace() => {
                it.next();
            }
            '(' => {
                it.next();
                out.push((pos, Tok::Open));
            }
            ')' => {
                it.next();
                out.push((pos, Tok::Close));
            }
            '★' => {
                it.next();
                out.push((pos, Tok::Star));
            }
            '→' | '-' => {
                it.next();
                if c == '-' {
                    match it.next() {
                        Some((_, '>')) => {}
                        _ => {
                            return Err(TypeError::Unexpected {
                                found: "-".to_string(),
                                pos,
                            })
                        }
                    }
                }
                let name = ident(&mut it);
                if name.is_empty() || vocab.is_label(&name) {
                    out.push((pos, Tok::Arrow(label_of(&name, pos, vocab)?)));
                } else if vocab.is_atom(&name) {
                    out.push((pos, Tok::Arrow(Label::Plain)));
                    out.push((pos, Tok::Atom(name)));
                } else {
                    return Err(TypeError::UnknownLabel { name, pos });
                }
            }
            '◇' => {
                it.next();
                let name = ident(&mut it);
                if !vocab.is_label(&name) {
                    return Err(TypeError::UnknownLabel { name, pos });
                }
                out.push((pos, Tok::Diamond(name)));
            }
            c if is_ident(c) => {
                let name = ident(&mut it);
                if !vocab.is_atom(&name) {
                    return Err(TypeError::UnknownAtom { name, pos });
                }
                out.push((pos, Tok::Atom(name)));
            }
            other => {
                return Err(TypeError::Unexpected {
                    found: other.to_string(),
                    pos,
                });
            }
        }
    }
    Ok(out)
}

struct InfixParser {
    toks: Vec<(usize, Tok)>,
    i: usize,
}

impl InfixParser {
    fn next(&mut self) -> Result<(usize, Tok), TypeError> {
        let t = self
            .toks
            .get(self.i)
            .cloned()
            .ok_or(TypeError::UnexpectedEnd)?;
        self.i += 1;
        Ok(t)
    }

    fn arrow(&mut self) -> Result<Type, TypeError> {
        let left = self.unary()?;
        if let Some((_, Tok::Arrow(label))) = self.toks.get(self.i).cloned() {
            self.i += 1;
            let right = self.arrow()?;
            return Ok(Type::arrow(left, label, right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Type, TypeError> {
        let (pos, tok) = self.next()?;
        match tok {
            Tok::Atom(a) => Ok(Type::Atom(a)),
            Tok::Star => Ok(Type::star(self.unary()?)),
            Tok::Diamond(d) => Ok(Type::Diamond(d, alloc::boxed::Box::new(self.unary()?))),
            Tok::Open => {
                let t = self.arrow()?;
                match self.next()? {
                    (_, Tok::Close) => Ok(t),
                    (pos, _) => Err(TypeError::Unexpected {
                        found: "token".to_string(),
                        pos,
                    }),
                }
            }
            Tok::Close => Err(TypeError::Unexpected {
                found: ")".to_string(),
                pos,
            }),
            Tok::Arrow(_) => Err(TypeError::Unexpected {
                found: "→".to_string(),
                pos,
            }),
        }
    }
}
