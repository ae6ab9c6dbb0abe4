//! Corpus transformations that make a raw DAG suitable for type extraction.

mod coordination;
mod majority;
mod structure;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::dag::{collapse_phantoms, Dag, DagError};

pub(crate) use coordination::shared_material as shared_material_of;
pub use coordination::{detach_shared_modifiers, relabel_conjunction_category, split_unheaded};
pub use majority::{mwu_vote, vote, MajorityConfig};
pub use structure::{
    collapse_mwu, collapse_single_daughters, refine_body_labels, relabel_numeral_determiners,
    remove_abstract_arguments, swap_np_heads,
};

/// Placeholder label for the second member of a determiner pair.
pub const DET_PLACEHOLDER: &str = "_det";
/// Placeholder label for the second member of a coordinator pair.
pub const CRD_PLACEHOLDER: &str = "_crd";

/// Labels and tags the passes key on.
#[derive(Clone, Debug)]
pub struct TransformConfig {
    pub majority: MajorityConfig,
    /// Incoming labels that mark a daughter as head.
    pub head_labels: Vec<String>,
    /// Edge labels marking discourse structure without a head.
    pub unheaded_labels: Vec<String>,
    /// Categories that are always unheaded.
    pub unheaded_cats: Vec<String>,
    pub modifier_labels: Vec<String>,
    pub numeral_pos: Vec<String>,
    pub punctuation_pos: Vec<String>,
    /// Participial and infinitival categories whose subject/object links can
    /// be abstract.
    pub abstract_cats: Vec<String>,
    pub abstract_labels: Vec<String>,
    pub np_cats: Vec<String>,
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

impl Default for TransformConfig {
    fn default() -> Self {
        TransformConfig {
            majority: MajorityConfig::default(),
            head_labels: strings(&["hd", "rhd", "whd", "cmp", "crd"]),
            unheaded_labels: strings(&["dp", "nucl", "sat", "dlink", "--"]),
            unheaded_cats: strings(&["du"]),
            modifier_labels: strings(&["mod", "app", "predm"]),
            numeral_pos: strings(&["tw"]),
            punctuation_pos: strings(&["let"]),
            abstract_cats: strings(&["ppart", "inf", "ti", "oti"]),
            abstract_labels: strings(&["su", "obj1", "obj2"]),
            np_cats: strings(&["np"]),
        }
    }
}

impl TransformConfig {
    pub fn is_head(&self, dep: &str) -> bool {
        self.head_labels.iter().any(|h| h == dep)
    }

    pub fn is_modifier(&self, dep: &str) -> bool {
        self.modifier_labels.iter().any(|h| h == dep)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PassError {
    #[error(transparent)]
    Dag(#[from] DagError),
    #[error("non-polymorphic ellipsis under node {0}")]
    NonPolymorphic(u32),
    #[error("{0}")]
    Other(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pass {
    CollapsePhantoms,
    RemoveAbstractArguments,
    SwapNpHeads,
    RelabelNumeralDeterminers,
    RefineBodyLabels,
    CollapseMwu,
    RelabelConjunctionCategory,
    DetachSharedModifiers,
    SplitUnheaded,
    CollapseSingleDaughters,
}

impl Pass {
    pub const ALL: [Pass; 10] = [
        Pass::CollapsePhantoms,
        Pass::RemoveAbstractArguments,
        Pass::SwapNpHeads,
        Pass::RelabelNumeralDeterminers,
        Pass::RefineBodyLabels,
        Pass::CollapseMwu,
        Pass::RelabelConjunctionCategory,
        Pass::DetachSharedModifiers,
        Pass::SplitUnheaded,
        Pass::CollapseSingleDaughters,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pass::CollapsePhantoms => "collapse_phantoms",
            Pass::RemoveAbstractArguments => "remove_abstract_arguments",
            Pass::SwapNpHeads => "swap_np_heads",
            Pass::RelabelNumeralDeterminers => "relabel_numeral_determiners",
            Pass::RefineBodyLabels => "refine_body_labels",
            Pass::CollapseMwu => "collapse_mwu",
            Pass::RelabelConjunctionCategory => "relabel_conjunction_category",
            Pass::DetachSharedModifiers => "detach_shared_modifiers",
            Pass::SplitUnheaded => "split_unheaded",
            Pass::CollapseSingleDaughters => "collapse_single_daughters",
        }
    }

    pub fn from_name(name: &str) -> Option<Pass> {
        Pass::ALL.into_iter().find(|p| p.name() == name)
    }

    pub fn apply(self, d: &Dag, cfg: &TransformConfig) -> Result<Vec<Dag>, PassError> {
        let one = |r: Result<Dag, PassError>| r.map(|d| vec![d]);
        match self {
            Pass::CollapsePhantoms => one(collapse_phantoms(d).map_err(PassError::from)),
            Pass::RemoveAbstractArguments => one(Ok(remove_abstract_arguments(d, cfg))),
            Pass::SwapNpHeads => one(Ok(swap_np_heads(d, cfg))),
            Pass::RelabelNumeralDeterminers => one(Ok(relabel_numeral_determiners(d, cfg))),
            Pass::RefineBodyLabels => one(Ok(refine_body_labels(d))),
            Pass::CollapseMwu => one(Ok(collapse_mwu(d, cfg))),
            Pass::RelabelConjunctionCategory => one(Ok(relabel_conjunction_category(d, cfg))),
            Pass::DetachSharedModifiers => one(detach_shared_modifiers(d, cfg)),
            Pass::SplitUnheaded => Ok(split_unheaded(d, cfg)),
            Pass::CollapseSingleDaughters => one(Ok(collapse_single_daughters(d))),
        }
    }
}

/// Default pass order. Conjunction categories are voted last, once shared
/// modifiers are detached and unary chains fused, so the vote sees the
/// conjuncts as they will be typed.
pub fn default_passes() -> Vec<Pass> {
    vec![
        Pass::CollapsePhantoms,
        Pass::RemoveAbstractArguments,
        Pass::SwapNpHeads,
        Pass::RelabelNumeralDeterminers,
        Pass::RefineBodyLabels,
        Pass::CollapseMwu,
        Pass::DetachSharedModifiers,
        Pass::SplitUnheaded,
        Pass::CollapseSingleDaughters,
        Pass::RelabelConjunctionCategory,
    ]
}

/// Why a sample produced no output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub sample: String,
    pub stage: String,
    pub reason: String,
}

pub fn run_pipeline(
    d: &Dag,
    passes: &[Pass],
    cfg: &TransformConfig,
) -> Result<Vec<Dag>, Diagnostic> {
    let mut current = vec![d.clone()];
    for &pass in passes {
        let mut next = Vec::with_capacity(current.len());
        for dag in &current {
            match pass.apply(dag, cfg) {
                Ok(out) => next.extend(out),
                Err(e) => {
                    return Err(Diagnostic {
                        sample: d.id.clone(),
                        stage: pass.name().to_string(),
                        reason: e.to_string(),
                    })
                }
            }
        }
        current = next;
    }
    Ok(current)
}
