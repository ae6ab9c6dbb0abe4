//! Depth-first type assignment with embedded arguments and coordination.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{placeholder_type, trans, type_assign, ExtractError, ExtractionConfig, TypeDict};
use crate::dag::{Dag, Edge, NodeId};
use crate::transforms::CRD_PLACEHOLDER;
use crate::types::{instantiate_coordinator, make_complex, Label, Type};

pub fn annotate_dag(d: &Dag, cfg: &ExtractionConfig) -> Result<TypeDict, ExtractError> {
    let mut dict = TypeDict::new();
    let root_type = trans(d.node(d.root), d.is_terminal(d.root), &cfg.tables)?;
    dict.insert(d.root, root_type.clone());
    recursive_assignment(d, d.root, &root_type, &mut dict, cfg)?;
    Ok(dict)
}

pub fn recursive_assignment(
    d: &Dag,
    n: NodeId,
    node_type: &Type,
    dict: &mut TypeDict,
    cfg: &ExtractionConfig,
) -> Result<(), ExtractError> {
    Assigner { d, cfg }
        .assign(n, node_type, dict, &BTreeSet::new())
        .map(|_| ())
}

struct Assigner<'a> {
    d: &'a Dag,
    cfg: &'a ExtractionConfig,
}

fn insert_new(dict: &mut TypeDict, n: NodeId, t: Type) {
    dict.entry(n).or_insert(t);
}

impl Assigner<'_> {
    fn head_edge(&self, n: NodeId) -> Result<Edge, ExtractError> {
        let heads: Vec<&Edge> = self
            .d
            .out_edges(n)
            .into_iter()
            .filter(|e| self.cfg.head_labels.iter().any(|h| *h == e.dep))
            .collect();
        match heads.as_slice() {
            [h] => Ok((*h).clone()),
            [] => Err(ExtractError::NoHead(n)),
            hs => Err(ExtractError::MultipleHeads(n, hs.len())),
        }
    }

    fn type_of(&self, child: NodeId, dep: &str, parent: &Type) -> Result<Type, ExtractError> {
        type_assign(
            self.d.node(child),
            self.d.is_terminal(child),
            dep,
            parent,
            &self.cfg.tables,
        )
    }

    /// Occurrences of `head` below `daughter`, one per distinct inner
    /// dependency, as embedded (hypothetical) arguments.
    fn embedded(
        &self,
        daughter: NodeId,
        head: NodeId,
        daughter_type: &Type,
    ) -> Result<Vec<(Type, Label)>, ExtractError> {
        let mut seen: Vec<&str> = Vec::new();
        let mut out = Vec::new();
        for p in self.d.primary_subtree(daughter) {
            for e in self.d.out_edges(p) {
                if e.child == head && !seen.contains(&e.dep.as_str()) {
                    seen.push(&e.dep);
                    let t = self.type_of(head, &e.dep, daughter_type)?;
                    out.push((t, self.cfg.tables.label(&e.dep)?));
                }
            }
        }
        Ok(out)
    }

    /// Types the structure under `n` and returns the head's type. Daughters
    /// in `shared` are typed but not taken as arguments.
    fn assign(
        &self,
        n: NodeId,
        node_type: &Type,
        dict: &mut TypeDict,
        shared: &BTreeSet<NodeId>,
    ) -> Result<Option<Type>, ExtractError> {
        if self.d.is_terminal(n) {
            return Ok(None);
        }
        let head = self.head_edge(n)?;
        if head.dep == "crd" {
            return self.coordination(n, node_type, &head, dict).map(Some);
        }
        let mut args = Vec::new();
        for e in self.d.out_edges(n) {
            if *e == head {
                continue;
            }
            if let Some(t) = placeholder_type(&e.dep) {
                insert_new(dict, e.child, t);
                continue;
            }
            let mut dt = self.type_of(e.child, &e.dep, node_type)?;
            let emb = self.embedded(e.child, head.child, &dt)?;
            if e.is_primary() {
                insert_new(dict, e.child, dt.clone());
                self.assign(e.child, &dt, dict, &BTreeSet::new())?;
            }
            dt = make_complex(&emb, dt, &self.cfg.poset)?;
            if !self.cfg.tables.is_modifier(&e.dep) && !shared.contains(&e.child) {
                args.push((dt, self.cfg.tables.label(&e.dep)?));
            }
        }
        let head_type = make_complex(&args, node_type.clone(), &self.cfg.poset)?;
        if head.is_primary() {
            insert_new(dict, head.child, head_type.clone());
        }
        Ok(Some(head_type))
    }

    fn coordination(
        &self,
        n: NodeId,
        node_type: &Type,
        crd: &Edge,
        dict: &mut TypeDict,
    ) -> Result<Type, ExtractError> {
        let conjuncts: Vec<NodeId> = self
            .d
            .primary_out(n)
            .iter()
            .filter(|e| e.dep == "cnj")
            .map(|e| e.child)
            .collect();
        for e in self.d.out_edges(n) {
            if *e == *crd || (e.dep == "cnj" && e.is_primary()) {
                continue;
            }
            if e.dep == CRD_PLACEHOLDER {
                insert_new(
                    dict,
                    e.child,
                    placeholder_type(&e.dep).expect("placeholder"),
                );
            } else if self.cfg.tables.is_modifier(&e.dep) {
                let dt = self.type_of(e.child, &e.dep, node_type)?;
                if e.is_primary() {
                    insert_new(dict, e.child, dt.clone());
                    self.assign(e.child, &dt, dict, &BTreeSet::new())?;
                }
            } else {
                return Err(ExtractError::CoordinationDaughter {
                    node: n,
                    dep: e.dep.clone(),
                });
            }
        }
        let sharing = crate::transforms::shared_material_of(self.d, &conjuncts);
        let mut shared_heads: Option<Type> = None;
        let mut xs = Vec::with_capacity(conjuncts.len());
        for &k in &conjuncts {
            let pk = self.type_of(k, "cnj", node_type)?;
            insert_new(dict, k, pk.clone());
            if self.d.is_terminal(k) {
                xs.push(pk);
                continue;
            }
            let mut shared = BTreeSet::new();
            let mut shared_args = Vec::new();
            let mut head_shared = false;
            let head = self.head_edge(k)?;
            for (x, hits) in &sharing {
                let Some((_, e)) = hits.iter().find(|(kk, _)| *kk == k) else {
                    continue;
                };
                if hits.len() < 2 {
                    continue;
                }
                if hits.len() < conjuncts.len() || hits.iter().any(|(_, h)| h.dep != e.dep) {
                    return Err(ExtractError::NonPolymorphic(n));
                }
                if *x == head.child {
                    head_shared = true;
                } else if !self.cfg.tables.is_modifier(&e.dep) {
                    shared.insert(*x);
                    shared_args.push((
                        self.type_of(*x, &e.dep, &pk)?,
                        self.cfg.tables.label(&e.dep)?,
                    ));
                }
            }
            let c = make_complex(&shared_args, pk, &self.cfg.poset)?;
            let y = self
                .assign(k, &c, dict, &shared)?
                .ok_or(ExtractError::NoHead(k))?;
            if head_shared {
                match &shared_heads {
                    Some(prev) if *prev != y => return Err(ExtractError::NonPolymorphic(n)),
                    _ => shared_heads = Some(y.clone()),
                }
                insert_new(dict, head.child, y.clone());
                xs.push(Type::plain_arrow(y, c));
            } else {
                xs.push(c);
            }
        }
        let coord = instantiate_coordinator(&xs, Some(node_type), &self.cfg.majority)?;
        if crd.is_primary() {
            insert_new(dict, crd.child, coord.clone());
        }
        Ok(coord)
    }
}
