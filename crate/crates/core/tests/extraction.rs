mod common;

use common::dag::{leaf, phrase};
use deptypes_core::extraction::*;
use deptypes_core::*;

#[test]
fn translations() {
    let t = Tables::default();
    assert_eq!(trans(&leaf(0, 0, "x", "n"), true, &t), Ok(Type::atom("N")));
    assert_eq!(
        trans(&phrase(0, 0, 1, "np"), false, &t),
        Ok(Type::atom("NP"))
    );
    assert_eq!(
        trans(&phrase(0, 0, 1, "smain"), false, &t),
        Ok(Type::atom("S_MAIN"))
    );
    assert_eq!(trans(&phrase(0, 0, 1, "n"), false, &t), Ok(Type::atom("N")));
    assert!(matches!(
        trans(&phrase(0, 0, 1, "du"), false, &t),
        Err(ExtractError::UnmappedTag(_))
    ));
}

#[test]
fn modifier_assignment() {
    let t = Tables::default();
    let s = Type::atom("S_MAIN");
    let np = Type::atom("NP");
    let n = leaf(0, 0, "x", "n");
    assert_eq!(
        type_assign(&n, true, "mod", &s, &t),
        Ok(Type::dep_arrow(s.clone(), "mod", s.clone()))
    );
    assert_eq!(type_assign(&n, true, "su", &s, &t), Ok(Type::atom("N")));
    assert_eq!(
        type_assign(&n, true, "app", &np, &t),
        Ok(Type::dep_arrow(np.clone(), "app", np))
    );
}

#[test]
fn codomains() {
    let t = Tables::default();
    assert_eq!(t.atoms().count(), 32);
    assert!(t.labels().any(|l| l == "rhd_body"));
    assert!(!t.labels().any(|l| l == "hd" || l == "det"));
}
