//! Dependency DAGs with primary and secondary edges.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub type NodeId = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: NodeId,
    pub begin: u32,
    pub end: u32,
    pub word: Option<String>,
    pub pos: Option<String>,
    pub cat: Option<String>,
    pub index: Option<u32>,
}

impl Node {
    pub fn is_phantom(&self) -> bool {
        self.index.is_some() && self.word.is_none() && self.pos.is_none() && self.cat.is_none()
    }

    /// The tag used for translation: `pos` for leaves, else `cat`.
    pub fn tag(&self) -> Option<&str> {
        self.pos.as_deref().or(self.cat.as_deref())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeRank {
    Primary,
    Secondary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub parent: NodeId,
    pub child: NodeId,
    pub dep: String,
    pub rank: EdgeRank,
}

impl Edge {
    pub fn is_primary(&self) -> bool {
        self.rank == EdgeRank::Primary
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DagError {
    #[error("index {0} has no material node")]
    NoMaterial(u32),
    #[error("index {0} is carried by more than one material node")]
    SharedMaterial(u32),
    #[error("node {0} is unknown")]
    UnknownNode(NodeId),
    #[error("cycle through node {0}")]
    Cycle(NodeId),
    #[error("node {0} has {1} primary parents")]
    PrimaryParents(NodeId, usize),
    #[error("node {0} is not reachable from the root")]
    Unreachable(NodeId),
    #[error("root {0} has incoming edges")]
    RootHasParent(NodeId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    /// Sample identifier; split samples extend it with `.node`.
    pub id: String,
    pub nodes: BTreeMap<NodeId, Node>,
    pub edges: Vec<Edge>,
    pub root: NodeId,
    pub sentence: Vec<String>,
}

impl Dag {
    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[&id]
    }

    pub fn node_mut(&mut self, id: NodeId) -> &mut Node {
        self.nodes.get_mut(&id).expect("node exists")
    }

    /// Outgoing edges ordered by the child's span start, then id.
    pub fn out_edges(&self, id: NodeId) -> Vec<&Edge> {
        let mut out: Vec<&Edge> = self.edges.iter().filter(|e| e.parent == id).collect();
        out.sort_by_key(|e| {
            (
                self.nodes.get(&e.child).map_or(0, |n| n.begin),
                e.child,
                e.rank,
            )
        });
        out
    }

    pub fn primary_out(&self, id: NodeId) -> Vec<&Edge> {
        self.out_edges(id)
            .into_iter()
            .filter(|e| e.is_primary())
            .collect()
    }

    pub fn in_edges(&self, id: NodeId) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.child == id).collect()
    }

    pub fn primary_parent(&self, id: NodeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.child == id && e.is_primary())
    }

    pub fn is_terminal(&self, id: NodeId) -> bool {
        !self.edges.iter().any(|e| e.parent == id)
    }

    /// Primary-edge distance from the root.
    pub fn depth(&self, id: NodeId) -> usize {
        let mut d = 0;
        let mut cur = id;
        while let Some(e) = self.primary_parent(cur) {
            d += 1;
            cur = e.parent;
            if d > self.nodes.len() {
                break;
            }
        }
        d
    }

    /// `id` and everything below it along primary edges, pre-order.
    pub fn primary_subtree(&self, id: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![id];
        while let Some(n) = stack.pop() {
            out.push(n);
            let kids = self.primary_out(n);
            for e in kids.into_iter().rev() {
                stack.push(e.child);
            }
        }
        out
    }

    /// Is `anc` a proper primary ancestor of `id`?
    pub fn is_ancestor(&self, anc: NodeId, id: NodeId) -> bool {
        let mut cur = id;
        let mut steps = 0;
        while let Some(e) = self.primary_parent(cur) {
            if e.parent == anc {
                return true;
            }
            cur = e.parent;
            steps += 1;
            if steps > self.nodes.len() {
                return false;
            }
        }
        false
    }

    /// Leaves in span order.
    pub fn leaves(&self) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = self
            .nodes
            .keys()
            .copied()
            .filter(|&n| self.is_terminal(n))
            .collect();
        out.sort_by_key(|&n| (self.node(n).begin, n));
        out
    }

    pub fn next_id(&self) -> NodeId {
        self.nodes.keys().next_back().map_or(0, |k| k + 1)
    }

    /// Drop a node together with every edge touching it.
    pub fn remove_node(&mut self, id: NodeId) {
        self.nodes.remove(&id);
        self.edges.retain(|e| e.parent != id && e.child != id);
    }

    /// Canonical edge order: parent, then child position, then dependency.
    pub fn normalize(&mut self) {
        let nodes = &self.nodes;
        self.edges.sort_by(|a, b| {
            let key = |e: &Edge| {
                (
                    e.parent,
                    nodes.get(&e.child).map_or(0, |n| n.begin),
                    e.child,
                    e.rank,
                    e.dep.clone(),
                )
            };
            key(a).cmp(&key(b))
        });
        self.edges.dedup();
    }

    /// Structural invariants: rooted, acyclic, one primary parent per
    /// non-root node, all nodes reachable along primary edges.
    pub fn validate(&self) -> Result<(), DagError> {
        for e in &self.edges {
            for n in [e.parent, e.child] {
                if !self.nodes.contains_key(&n) {
                    return Err(DagError::UnknownNode(n));
                }
            }
        }
        if !self.in_edges(self.root).is_empty() {
            return Err(DagError::RootHasParent(self.root));
        }
        for &n in self.nodes.keys() {
            if n == self.root {
                continue;
            }
            let k = self
                .edges
                .iter()
                .filter(|e| e.child == n && e.is_primary())
                .count();
            if k != 1 {
                return Err(DagError::PrimaryParents(n, k));
            }
        }
        self.check_acyclic()?;
        let reach: BTreeSet<NodeId> = self.primary_subtree(self.root).into_iter().collect();
        if let Some(&n) = self.nodes.keys().find(|n| !reach.contains(n)) {
            return Err(DagError::Unreachable(n));
        }
        Ok(())
    }

    fn check_acyclic(&self) -> Result<(), DagError> {
        // Kahn's algorithm over all edges.
        let mut indeg: BTreeMap<NodeId, usize> = self.nodes.keys().map(|&n| (n, 0)).collect();
        for e in &self.edges {
            *indeg.get_mut(&e.child).expect("validated") += 1;
        }
        let mut ready: Vec<NodeId> = indeg
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&n, _)| n)
            .collect();
        let mut seen = 0;
        while let Some(n) = ready.pop() {
            seen += 1;
            for e in self.edges.iter().filter(|e| e.parent == n) {
                let d = indeg.get_mut(&e.child).expect("validated");
                *d -= 1;
                if *d == 0 {
                    ready.push(e.child);
                }
            }
        }
        if seen == self.nodes.len() {
            Ok(())
        } else {
            let n = indeg
                .iter()
                .find(|(_, &d)| d > 0)
                .map_or(self.root, |(&n, _)| n);
            Err(DagError::Cycle(n))
        }
    }

    /// The sub-DAG under `root` along primary edges. Edges leaving it are
    /// dropped.
    pub fn subdag(&self, root: NodeId) -> Dag {
        let keep: BTreeSet<NodeId> = self.primary_subtree(root).into_iter().collect();
        let nodes = self
            .nodes
            .iter()
            .filter(|(k, _)| keep.contains(k))
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| keep.contains(&e.parent) && keep.contains(&e.child))
            .cloned()
            .collect();
        Dag {
            id: format!("{}.{}", self.id, root),
            nodes,
            edges,
            root,
            sentence: self.sentence.clone(),
        }
    }
}

/// Unify phantom leaves with the material node sharing their index.
///
/// The occurrence closest to the root keeps the primary edge; ties go to
/// the parent with the smallest `begin`.
pub fn collapse_phantoms(d: &Dag) -> Result<Dag, DagError> {
    let mut groups: BTreeMap<u32, (Vec<NodeId>, Vec<NodeId>)> = BTreeMap::new();
    for n in d.nodes.values() {
        if let Some(ix) = n.index {
            let g = groups.entry(ix).or_default();
            if n.is_phantom() && d.is_terminal(n.id) {
                g.1.push(n.id);
            } else {
                g.0.push(n.id);
            }
        }
    }
    let mut out = d.clone();
    for (ix, (material, phantoms)) in groups {
        if phantoms.is_empty() {
            continue;
        }
        let m = match material.as_slice() {
            [m] => *m,
            [] => return Err(DagError::NoMaterial(ix)),
            _ => return Err(DagError::SharedMaterial(ix)),
        };
        let mut occurrences: Vec<(usize, u32, NodeId, NodeId)> = Vec::new();
        for &occ in core::iter::once(&m).chain(phantoms.iter()) {
            if let Some(e) = d.primary_parent(occ) {
                occurrences.push((d.depth(occ), d.node(e.parent).begin, e.parent, occ));
            }
        }
        let chosen = occurrences.iter().min().map(|o| o.3);
        for e in out.edges.iter_mut() {
            let target = e.child;
            if target == m || phantoms.contains(&target) {
                e.rank = if Some(target) == chosen {
                    EdgeRank::Primary
                } else {
                    EdgeRank::Secondary
                };
                e.child = m;
            }
        }
        for p in phantoms {
            out.nodes.remove(&p);
        }
    }
    out.normalize();
    out.validate()?;
    Ok(out)
}
