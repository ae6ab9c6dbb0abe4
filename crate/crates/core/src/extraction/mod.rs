//! Type assignment over transformed DAGs.

mod assign;
mod tables;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::dag::{Dag, NodeId};
use crate::transforms::{MajorityConfig, CRD_PLACEHOLDER, DET_PLACEHOLDER};
use crate::types::{ObliquenessPoset, Type, TypeError, CRD_ATOM, DET_ATOM};

pub use assign::{annotate_dag, recursive_assignment};
pub use tables::{trans, type_assign, Tables};

pub type TypeDict = BTreeMap<NodeId, Type>;

/// Everything extraction needs besides the DAG.
#[derive(Clone, Debug)]
pub struct ExtractionConfig {
    pub tables: Tables,
    pub poset: ObliquenessPoset,
    pub majority: MajorityConfig,
    pub head_labels: Vec<String>,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        ExtractionConfig {
            tables: Tables::default(),
            poset: ObliquenessPoset::default(),
            majority: MajorityConfig::default(),
            head_labels: ["hd", "rhd", "whd", "cmp", "crd"]
                .iter()
                .map(|s| String::from(*s))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtractError {
    #[error("no type for tag `{0}`")]
    UnmappedTag(String),
    #[error("node {0} has neither pos nor cat")]
    Untagged(NodeId),
    #[error("no implication label for dependency `{0}`")]
    UnmappedLabel(String),
    #[error("node {0} has no head daughter")]
    NoHead(NodeId),
    #[error("node {0} has {1} head daughters")]
    MultipleHeads(NodeId, usize),
    #[error("non-polymorphic ellipsis under node {0}")]
    NonPolymorphic(NodeId),
    #[error("unsupported daughter `{dep}` under coordination {node}")]
    CoordinationDaughter { node: NodeId, dep: String },
    #[error("leaf {0} has no type")]
    Untyped(NodeId),
    #[error(transparent)]
    Type(#[from] TypeError),
}

pub(crate) fn placeholder_type(dep: &str) -> Option<Type> {
    match dep {
        DET_PLACEHOLDER => Some(Type::atom(DET_ATOM)),
        CRD_PLACEHOLDER => Some(Type::atom(CRD_ATOM)),
        _ => None,
    }
}

/// Leaves in span order with their types. A `_DET` leaf merges into its
/// left neighbour; a `_CRD` leaf takes its partner coordinator's type.
pub fn to_sequences(d: &Dag, dict: &TypeDict) -> Result<(Vec<String>, Vec<Type>), ExtractError> {
    let mut words: Vec<String> = Vec::new();
    let mut types: Vec<Type> = Vec::new();
    for leaf in d.leaves() {
        let word = d.node(leaf).word.clone().unwrap_or_default();
        let t = dict.get(&leaf).ok_or(ExtractError::Untyped(leaf))?;
        match t.as_atom() {
            Some(DET_ATOM) if !words.is_empty() => {
                let last = words.last_mut().expect("non-empty");
                last.push(' ');
                last.push_str(&word);
            }
            Some(CRD_ATOM) => {
                let partner = d
                    .in_edges(leaf)
                    .into_iter()
                    .find(|e| e.dep == CRD_PLACEHOLDER)
                    .and_then(|e| d.out_edges(e.parent).into_iter().find(|s| s.dep == "crd"))
                    .and_then(|s| dict.get(&s.child));
                words.push(word);
                types.push(partner.cloned().unwrap_or_else(|| t.clone()));
            }
            _ => {
                words.push(word);
                types.push(t.clone());
            }
        }
    }
    Ok((words, types))
}
