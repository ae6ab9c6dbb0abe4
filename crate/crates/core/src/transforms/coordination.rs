//! Conjunctions and unheaded structure.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{vote, PassError, TransformConfig, CRD_PLACEHOLDER};
use crate::dag::{Dag, Edge, EdgeRank, NodeId};

/// Nodes with at least two primary `cnj` daughters, with those daughters.
pub(crate) fn conjunctions(d: &Dag) -> Vec<(NodeId, Vec<NodeId>)> {
    d.nodes
        .keys()
        .filter_map(|&n| {
            let cnj: Vec<NodeId> = d
                .primary_out(n)
                .iter()
                .filter(|e| e.dep == "cnj")
                .map(|e| e.child)
                .collect();
            (cnj.len() >= 2).then_some((n, cnj))
        })
        .collect()
}

/// For every node hanging directly under some conjunct, the conjuncts and
/// labels it hangs under.
pub(crate) fn shared_material(
    d: &Dag,
    conjuncts: &[NodeId],
) -> BTreeMap<NodeId, Vec<(NodeId, Edge)>> {
    let mut by_child: BTreeMap<NodeId, Vec<(NodeId, Edge)>> = BTreeMap::new();
    for &k in conjuncts {
        for e in d.out_edges(k) {
            let slot = by_child.entry(e.child).or_default();
            if !slot.iter().any(|(kk, _)| *kk == k) {
                slot.push((k, e.clone()));
            }
        }
    }
    by_child
}

/// A modifier attached to every conjunct moves up to the conjunction.
///
/// Material shared by only some conjuncts, or under different labels, is a
/// non-polymorphic ellipsis and rejects the sample.
pub fn detach_shared_modifiers(d: &Dag, cfg: &TransformConfig) -> Result<Dag, PassError> {
    let mut out = d.clone();
    for (c, conjuncts) in conjunctions(d) {
        for (x, hits) in shared_material(&out, &conjuncts) {
            if hits.len() < 2 {
                continue;
            }
            let dep = &hits[0].1.dep;
            let uniform = hits.iter().all(|(_, e)| &e.dep == dep);
            if hits.len() < conjuncts.len() || !uniform {
                return Err(PassError::NonPolymorphic(c));
            }
            if !cfg.is_modifier(dep) {
                continue;
            }
            let was_primary = hits.iter().any(|(_, e)| e.is_primary());
            out.edges
                .retain(|e| !(e.child == x && conjuncts.contains(&e.parent)));
            out.edges.push(Edge {
                parent: c,
                child: x,
                dep: dep.clone(),
                rank: if was_primary {
                    EdgeRank::Primary
                } else {
                    EdgeRank::Secondary
                },
            });
        }
    }
    out.normalize();
    Ok(out)
}

/// Conjunction category by biased vote over the conjuncts; every
/// coordinator after the first becomes the `_crd` placeholder.
pub fn relabel_conjunction_category(d: &Dag, cfg: &TransformConfig) -> Dag {
    let mut out = d.clone();
    for (c, conjuncts) in conjunctions(d) {
        let tags: Vec<&str> = conjuncts.iter().filter_map(|&k| d.node(k).tag()).collect();
        if let Some(w) = vote(&tags, &cfg.majority.tag_bias) {
            out.node_mut(c).cat = Some(w.to_string());
        }
        let crds: Vec<NodeId> = d
            .primary_out(c)
            .iter()
            .filter(|e| e.dep == "crd")
            .map(|e| e.child)
            .collect();
        for &k in crds.iter().skip(1) {
            for e in out.edges.iter_mut() {
                if e.parent == c && e.child == k && e.dep == "crd" {
                    e.dep = CRD_PLACEHOLDER.to_string();
                }
            }
        }
    }
    out
}

fn unheaded(d: &Dag, n: NodeId, cfg: &TransformConfig) -> bool {
    if d.is_terminal(n) {
        return false;
    }
    let node = d.node(n);
    let outs = d.out_edges(n);
    node.cat
        .as_deref()
        .is_some_and(|c| cfg.unheaded_cats.iter().any(|u| u == c))
        || !outs.iter().any(|e| cfg.is_head(&e.dep))
        || outs
            .iter()
            .any(|e| e.is_primary() && cfg.unheaded_labels.iter().any(|u| *u == e.dep))
}

fn clean(d: &Dag, n: NodeId, cfg: &TransformConfig) -> bool {
    !unheaded(d, n, cfg) && d.primary_out(n).iter().all(|e| clean(d, e.child, cfg))
}

fn sample_roots(d: &Dag, n: NodeId, cfg: &TransformConfig, out: &mut Vec<NodeId>) {
    if clean(d, n, cfg) {
        out.push(n);
    } else {
        for e in d.primary_out(n) {
            sample_roots(d, e.child, cfg, out);
        }
    }
}

/// Discard unheaded branchings and everything above them; each maximal
/// fully headed sub-DAG below becomes its own sample. Lone punctuation is
/// dropped.
pub fn split_unheaded(d: &Dag, cfg: &TransformConfig) -> Vec<Dag> {
    let mut roots = Vec::new();
    sample_roots(d, d.root, cfg, &mut roots);
    if roots == [d.root] {
        return alloc::vec![d.clone()];
    }
    roots
        .into_iter()
        .filter(|&r| {
            let n = d.node(r);
            !(d.is_terminal(r)
                && n.pos
                    .as_deref()
                    .is_some_and(|p| cfg.punctuation_pos.iter().any(|x| x == p)))
        })
        .map(|r| d.subdag(r))
        .collect()
}
