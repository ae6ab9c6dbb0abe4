use alloc::collections::BTreeMap;

use super::ParseError;
use crate::types::Type;

/// Net atom occurrences: results count positive, arguments negative.
/// Zero entries are never stored, so equality is vector equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountVector<'a>(BTreeMap<&'a str, i64>);

impl<'a> CountVector<'a> {
    pub fn get(&self, atom: &str) -> i64 {
        self.0.get(atom).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&'a str, i64)> + '_ {
        self.0.iter().map(|(k, v)| (*k, *v))
    }

    fn bump(&mut self, atom: &'a str, by: i64) {
        let e = self.0.entry(atom).or_insert(0);
        *e += by;
        if *e == 0 {
            self.0.remove(atom);
        }
    }

    pub fn add(&mut self, other: &CountVector<'a>) {
        for (&k, v) in &other.0 {
            self.bump(k, *v);
        }
    }

    pub fn minus(&self, other: &CountVector<'a>) -> CountVector<'a> {
        let mut out = self.clone();
        for (&k, v) in &other.0 {
            out.bump(k, -v);
        }
        out
    }

    /// The atom if this vector is exactly `{a: +1}`.
    pub fn single_atom(&self) -> Option<&'a str> {
        match self.0.iter().next() {
            Some((a, 1)) if self.0.len() == 1 => Some(*a),
            _ => None,
        }
    }
}

pub fn count_vector(t: &Type) -> Result<CountVector<'_>, ParseError> {
    let mut out = CountVector::default();
    accumulate(t, &mut out)?;
    Ok(out)
}

/// Add the counts of `t` into `out`.
pub(crate) fn accumulate<'a>(t: &'a Type, out: &mut CountVector<'a>) -> Result<(), ParseError> {
    fn go<'a>(t: &'a Type, sign: i64, out: &mut CountVector<'a>) -> Result<(), ParseError> {
        match t {
            Type::Atom(a) => {
                out.bump(a, sign);
                Ok(())
            }
            Type::Arrow { arg, res, .. } => {
                go(res, sign, out)?;
                go(arg, -sign, out)
            }
            Type::Star(_) | Type::Diamond(..) => Err(ParseError::Unsupported(alloc::format!(
                "no count vector for {t}"
            ))),
        }
    }
    go(t, 1, out)
}
