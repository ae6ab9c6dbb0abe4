//! Tag and dependency translation tables.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ExtractError;
use crate::dag::Node;
use crate::types::{Label, Type};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub pos_table: BTreeMap<String, String>,
    pub cat_table: BTreeMap<String, String>,
    pub dep_table: BTreeMap<String, String>,
    pub mod_labels: Vec<String>,
}

fn table(rows: &[(&str, &str)]) -> BTreeMap<String, String> {
    rows.iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

impl Default for Tables {
    fn default() -> Self {
        let pos_table = table(&[
            ("adj", "ADJ"),
            ("bw", "BW"),
            ("let", "LET"),
            ("lid", "LID"),
            ("n", "N"),
            ("spec", "SPEC"),
            ("tsw", "TSW"),
            ("tw", "TW"),
            ("vg", "VG"),
            ("vnw", "VNW"),
            ("vz", "VZ"),
            ("ww", "WW"),
        ]);
        let cat_table = table(&[
            ("advp", "ADV"),
            ("ahi", "AHI"),
            ("ap", "AP"),
            ("cp", "CP"),
            ("detp", "DETP"),
            ("inf", "INF"),
            ("np", "NP"),
            ("oti", "OTI"),
            ("pp", "PP"),
            ("ppart", "PPART"),
            ("ppres", "PPRES"),
            ("rel", "REL"),
            ("smain", "S_MAIN"),
            ("ssub", "S_SUB"),
            ("sv1", "SV1"),
            ("svan", "SVAN"),
            ("ti", "TI"),
            ("whq", "WHQ"),
            ("whrel", "WHREL"),
            ("whsub", "WHSUB"),
        ]);
        let labels = [
            "app", "whd_body", "rhd_body", "body", "cmp", "cnj", "crd", "invdet", "hdf", "ld",
            "me", "mod", "obcomp", "obj1", "obj2", "pc", "pobj1", "predc", "predm", "se", "su",
            "sup", "svp", "vc", "tag",
        ];
        let dep_table = labels
            .iter()
            .map(|l| (l.to_string(), l.to_string()))
            .collect();
        Tables {
            pos_table,
            cat_table,
            dep_table,
            mod_labels: ["mod", "app", "predm"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }
}

impl Tables {
    /// Co-domain of the tag tables.
    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.pos_table
            .values()
            .chain(self.cat_table.values())
            .map(String::as_str)
    }

    /// Co-domain of the dependency table.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.dep_table.values().map(String::as_str)
    }

    pub fn is_modifier(&self, dep: &str) -> bool {
        self.mod_labels.iter().any(|m| m == dep)
    }

    pub fn label(&self, dep: &str) -> Result<Label, ExtractError> {
        self.dep_table
            .get(dep)
            .map(|l| Label::Dep(l.clone()))
            .ok_or_else(|| ExtractError::UnmappedLabel(dep.to_string()))
    }
}

/// Context-free translation of a node to its atomic type.
///
/// Leaves translate their part of speech, phrases their category. Either
/// falls back to the other table, for collapsed units and conjunctions
/// voted to a part of speech.
pub fn trans(n: &Node, terminal: bool, t: &Tables) -> Result<Type, ExtractError> {
    let (first, second, tag) = match (terminal, n.pos.as_deref(), n.cat.as_deref()) {
        (true, Some(p), _) => (&t.pos_table, &t.cat_table, p),
        (_, _, Some(c)) => (&t.cat_table, &t.pos_table, c),
        (false, Some(p), None) => (&t.pos_table, &t.cat_table, p),
        _ => return Err(ExtractError::Untagged(n.id)),
    };
    first
        .get(tag)
        .or_else(|| second.get(tag))
        .map(|a| Type::atom(a))
        .ok_or_else(|| ExtractError::UnmappedTag(tag.to_string()))
}

/// `P →d P` for modifiers, otherwise [`trans`].
pub fn type_assign(
    n: &Node,
    terminal: bool,
    dep: &str,
    parent: &Type,
    t: &Tables,
) -> Result<Type, ExtractError> {
    if t.is_modifier(dep) {
        Ok(Type::arrow(parent.clone(), t.label(dep)?, parent.clone()))
    } else {
        trans(n, terminal, t)
    }
}
