mod common;

use common::dag::*;
use deptypes_core::dag::*;

#[test]
fn phantom_becomes_secondary_edge() {
    let d = collapse_phantoms(&passive()).unwrap();
    assert_eq!(d.nodes.len(), 7);
    let into_np: Vec<_> = d
        .in_edges(1)
        .into_iter()
        .map(|e| (e.parent, e.dep.as_str(), e.rank))
        .collect();
    assert_eq!(
        into_np,
        vec![
            (0, "su", EdgeRank::Primary),
            (5, "obj1", EdgeRank::Secondary)
        ]
    );
}

#[test]
fn no_indices_identity() {
    let mut d = passive();
    d.remove_node(6);
    d.node_mut(1).index = None;
    assert_eq!(collapse_phantoms(&d).unwrap(), d);
}

#[test]
fn two_phantoms_one_material() {
    let mut d = passive();
    d.nodes.insert(8, phantom(8, 3, 1));
    d.edges.push(edge(5, 8, "obj2"));
    d.normalize();
    let c = collapse_phantoms(&d).unwrap();
    let sec = c
        .in_edges(1)
        .into_iter()
        .filter(|e| !e.is_primary())
        .count();
    assert_eq!(sec, 2);
    assert_eq!(c.nodes.len(), d.nodes.len() - 2);
}

#[test]
fn deeper_material_yields_primary_to_phantom_site() {
    // material under ppart (depth 2), phantom under smain (depth 1)
    let mut d = passive();
    d.node_mut(1).index = None;
    d.node_mut(6).index = None;
    d.node_mut(6).cat = Some("x".into());
    let mut material = leaf(9, 3, "ze", "vnw");
    material.index = Some(2);
    d.nodes.insert(9, material);
    d.nodes.insert(10, phantom(10, 2, 2));
    d.edges.push(edge(5, 9, "su"));
    d.edges.push(edge(0, 10, "su"));
    d.normalize();
    let c = collapse_phantoms(&d).unwrap();
    let prim = c.primary_parent(9).unwrap();
    assert_eq!((prim.parent, prim.dep.as_str()), (0, "su"));
}

#[test]
fn missing_material_errors() {
    let mut d = passive();
    d.node_mut(1).index = None;
    assert_eq!(collapse_phantoms(&d), Err(DagError::NoMaterial(1)));
}

#[test]
fn subdag_and_validate() {
    let d = collapse_phantoms(&passive()).unwrap();
    let s = d.subdag(5);
    assert_eq!(s.id, "t.5");
    assert_eq!(s.nodes.len(), 2);
    assert!(s.edges.iter().all(|e| e.parent == 5));
    assert!(d.is_ancestor(0, 7));
    assert!(!d.is_ancestor(5, 1));
}
