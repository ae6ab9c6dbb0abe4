//! Local rewrites: abstract arguments, noun-phrase heads, head-body labels,
//! multi-word units and unary chains.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{mwu_vote, TransformConfig, DET_PLACEHOLDER};
use crate::dag::{Dag, NodeId};

fn has(xs: &[String], x: &str) -> bool {
    xs.iter().any(|y| y == x)
}

fn cat_is(d: &Dag, n: NodeId, cats: &[String]) -> bool {
    d.node(n).cat.as_deref().is_some_and(|c| has(cats, c))
}

/// Drop secondary subject/object links from participles and infinitives
/// when the same node already fills a subject/object role higher up.
pub fn remove_abstract_arguments(d: &Dag, cfg: &TransformConfig) -> Dag {
    let mut out = d.clone();
    out.edges.retain(|e| {
        if e.is_primary()
            || !has(&cfg.abstract_labels, &e.dep)
            || !cat_is(d, e.parent, &cfg.abstract_cats)
        {
            return true;
        }
        let Some(prim) = d.primary_parent(e.child) else {
            return true;
        };
        let bound_above =
            has(&cfg.abstract_labels, &prim.dep) && d.is_ancestor(prim.parent, e.parent);
        !bound_above
    });
    out
}

fn is_numeral(d: &Dag, n: NodeId, cfg: &TransformConfig) -> bool {
    d.node(n)
        .pos
        .as_deref()
        .is_some_and(|p| has(&cfg.numeral_pos, p))
}

fn np_nodes(d: &Dag, cfg: &TransformConfig) -> Vec<NodeId> {
    d.nodes
        .keys()
        .copied()
        .filter(|&n| cat_is(d, n, &cfg.np_cats))
        .collect()
}

fn edge_index(d: &Dag, parent: NodeId, child: NodeId, dep: &str) -> Option<usize> {
    d.edges
        .iter()
        .position(|e| e.parent == parent && e.child == child && e.dep == dep && e.is_primary())
}

/// In noun phrases the determiner becomes the head and the noun its
/// `invdet` argument. A numeral only takes over when it is the sole kind of
/// determiner.
pub fn swap_np_heads(d: &Dag, cfg: &TransformConfig) -> Dag {
    let mut out = d.clone();
    for np in np_nodes(d, cfg) {
        let kids = d.primary_out(np);
        let dets: Vec<NodeId> = kids
            .iter()
            .filter(|e| e.dep == "det")
            .map(|e| e.child)
            .collect();
        let Some(head) = kids.iter().find(|e| e.dep == "hd").map(|e| e.child) else {
            continue;
        };
        let chosen = dets
            .iter()
            .copied()
            .find(|&c| !is_numeral(d, c, cfg))
            .or_else(|| dets.first().copied());
        let Some(det) = chosen else { continue };
        if let Some(i) = edge_index(&out, np, det, "det") {
            out.edges[i].dep = "hd".to_string();
        }
        if let Some(i) = edge_index(&out, np, head, "hd") {
            out.edges[i].dep = "invdet".to_string();
        }
    }
    out.normalize();
    out
}

/// Leftover determiners in a noun phrase: numerals become modifiers, a
/// second non-numeral determiner becomes the `_det` placeholder.
pub fn relabel_numeral_determiners(d: &Dag, cfg: &TransformConfig) -> Dag {
    let mut out = d.clone();
    for np in np_nodes(d, cfg) {
        let kids = d.primary_out(np);
        let swapped = kids.iter().any(|e| e.dep == "invdet");
        let dets: Vec<NodeId> = kids
            .iter()
            .filter(|e| e.dep == "det")
            .map(|e| e.child)
            .collect();
        let nonnum: Vec<NodeId> = dets
            .iter()
            .copied()
            .filter(|&c| !is_numeral(d, c, cfg))
            .collect();
        for &c in &dets {
            let label = if is_numeral(d, c, cfg) {
                (swapped || !nonnum.is_empty()).then_some("mod")
            } else {
                (swapped || nonnum.first() != Some(&c)).then_some(DET_PLACEHOLDER)
            };
            if let (Some(l), Some(i)) = (label, edge_index(&out, np, c, "det")) {
                out.edges[i].dep = l.to_string();
            }
        }
    }
    out.normalize();
    out
}

/// `body` next to an `rhd`/`whd` head becomes `rhd_body`/`whd_body`.
pub fn refine_body_labels(d: &Dag) -> Dag {
    let mut out = d.clone();
    for &n in d.nodes.keys() {
        let kids = d.out_edges(n);
        let refined = if kids.iter().any(|e| e.dep == "rhd") {
            "rhd_body"
        } else if kids.iter().any(|e| e.dep == "whd") {
            "whd_body"
        } else {
            continue;
        };
        for e in out
            .edges
            .iter_mut()
            .filter(|e| e.parent == n && e.dep == "body")
        {
            e.dep = refined.to_string();
        }
    }
    out
}

/// Replace each `mwu` node by a leaf spanning its words.
pub fn collapse_mwu(d: &Dag, cfg: &TransformConfig) -> Dag {
    let mut out = d.clone();
    let mwus: Vec<NodeId> = d
        .nodes
        .values()
        .filter(|n| n.cat.as_deref() == Some("mwu"))
        .map(|n| n.id)
        .collect();
    for m in mwus {
        if !out.nodes.contains_key(&m) {
            continue;
        }
        let below: Vec<NodeId> = out.primary_subtree(m).into_iter().skip(1).collect();
        let mut leaves: Vec<NodeId> = below
            .iter()
            .copied()
            .filter(|&n| out.is_terminal(n))
            .collect();
        leaves.sort_by_key(|&n| (out.node(n).begin, n));
        let words: Vec<&str> = leaves
            .iter()
            .filter_map(|&n| out.node(n).word.as_deref())
            .collect();
        let word = words.join(" ");
        let tags: Vec<&str> = out
            .primary_out(m)
            .iter()
            .filter_map(|e| out.node(e.child).tag())
            .collect();
        let verdict = mwu_vote(&tags, &cfg.majority);
        let gone: BTreeSet<NodeId> = below.into_iter().collect();
        for n in &gone {
            out.nodes.remove(n);
        }
        out.edges
            .retain(|e| !gone.contains(&e.parent) && !gone.contains(&e.child));
        let node = out.node_mut(m);
        node.word = Some(word);
        node.pos = None;
        node.cat = None;
        match verdict {
            Some((tag, true)) => node.cat = Some(tag),
            Some((tag, false)) => node.pos = Some(tag),
            None => node.cat = Some("mwu".to_string()),
        }
    }
    out.normalize();
    out
}

/// Fuse every non-terminal that has a single outgoing edge with its
/// daughter. The daughter survives and takes over the parent's incoming
/// edges.
pub fn collapse_single_daughters(d: &Dag) -> Dag {
    let mut out = d.clone();
    loop {
        // deepest first so chains fuse bottom-up
        let mut cands: Vec<(usize, NodeId)> = out
            .nodes
            .keys()
            .copied()
            .filter(|&n| {
                let outs = out.out_edges(n);
                outs.len() == 1 && outs[0].is_primary()
            })
            .map(|n| (out.depth(n), n))
            .collect();
        cands.sort_by(|a, b| b.cmp(a));
        let Some(&(_, p)) = cands.first() else { break };
        let child = out.out_edges(p)[0].child;
        out.edges.retain(|e| e.parent != p);
        for e in out.edges.iter_mut().filter(|e| e.child == p) {
            e.child = child;
        }
        out.nodes.remove(&p);
        if out.root == p {
            out.root = child;
        }
        out.normalize();
    }
    out
}
