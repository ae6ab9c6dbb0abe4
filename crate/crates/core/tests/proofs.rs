mod common;

use common::proofs::*;
use deptypes_core::proofs::*;
use deptypes_core::*;

#[test]
fn axiom_checks() {
    let p = Proof::ax("x", np());
    assert_eq!(check(&p), Ok(()));
    assert_eq!(term_of(&p), LambdaTerm::Var("x".into()));
}

#[test]
fn transitive_term() {
    let p = transitive();
    check(&p).unwrap();
    assert_eq!(term_of(&p).to_string(), "(at(een appel))(het meisje)");
    assert_eq!(p.conclusion.succedent, s());
}

#[test]
fn subject_relative_term() {
    let p = subject_relative();
    check(&p).unwrap();
    assert_eq!(term_of(&p), parse_term("dat(at (een appel))").unwrap());
}

#[test]
fn object_relative_term() {
    let p = object_relative();
    check(&p).unwrap();
    let t = term_of(&p);
    assert_eq!(t.to_string(), "die(λx.((at x)(het meisje)))");
    assert_eq!(t, parse_term("die(λx.((at x)(het meisje)))").unwrap());
    assert!(is_linear(&t));
}

#[test]
fn modal_readings_check() {
    let obj = modal_object_relative();
    check(&obj).unwrap();
    assert_eq!(obj.conclusion.succedent, np());
    let su = modal_subject_relative();
    check(&su).unwrap();
    let t = term_of(&su);
    assert!(is_linear(&t));
    assert_eq!(parse_term(&t.to_string()).unwrap(), t);
}

#[test]
fn swapped_bracket_rejected() {
    let e = check(&modal_object_relative_with("obj")).unwrap_err();
    assert_eq!(e.kind, CheckErrorKind::BracketMismatch);
    assert_eq!(e.path, vec![0, 1, 0, 1]);
}

#[test]
fn wrong_argument_reported_with_path() {
    let p = Proof::elim(Proof::lex("at", tv()), Proof::lex("meisje", n()));
    let e = check(&p).unwrap_err();
    assert!(matches!(e.kind, CheckErrorKind::TypeMismatch { .. }));
    assert!(e.path.is_empty());
}

#[test]
fn label_mismatch_detected() {
    let f = Type::dep_arrow(np(), "su", s());
    check(&Proof::elim(
        Proof::lex("slaapt", f),
        Proof::lex("jan", np()),
    ))
    .unwrap();
    let mut p = Proof::elim(
        Proof::lex("slaapt", Type::dep_arrow(np(), "obj1", s())),
        Proof::lex("jan", np()),
    );
    check(&p).unwrap();
    p.premises[0].conclusion.succedent = Type::dep_arrow(np(), "su", s());
    let e = check(&p).unwrap_err();
    assert!(matches!(e.kind, CheckErrorKind::LabelMismatch { .. }));
    assert_eq!(e.path, vec![0]);
}

#[test]
fn unused_and_duplicated_hypotheses() {
    let mut p = object_relative();
    p.premises[1].binder = Some("z".into());
    assert!(matches!(
        check(&p).unwrap_err().kind,
        CheckErrorKind::UnusedHypothesis(_)
    ));

    let dup = Proof::elim(
        Proof::elim(Proof::lex("at", tv()), Proof::ax("x", np())),
        Proof::ax("x", np()),
    );
    assert!(matches!(
        check(&dup).unwrap_err().kind,
        CheckErrorKind::DuplicatedHypothesis(_)
    ));
}

#[test]
fn permuting_multisets_preserves_verdict() {
    let mut p = transitive();
    if let Structure::Multiset(xs) = &mut p.conclusion.antecedent {
        xs.reverse();
    }
    check(&p).unwrap();
    p.conclusion.antecedent = Structure::Multiset(vec![
        Structure::word("appel", n()),
        Structure::Multiset(vec![
            Structure::word("het", det()),
            Structure::word("at", tv()),
        ]),
        Structure::word("meisje", n()),
        Structure::word("een", det()),
    ]);
    check(&p).unwrap();
}

#[test]
fn structure_mismatch_when_premise_dropped() {
    let mut p = transitive();
    p.conclusion.antecedent = Structure::Multiset(vec![Structure::word("at", tv())]);
    assert_eq!(
        check(&p).unwrap_err().kind,
        CheckErrorKind::StructureMismatch
    );
}

#[test]
fn modal_embedding() {
    let t = Type::arrow(
        Type::dep_arrow(np(), "obj1", s()),
        Label::dep("body"),
        Type::dep_arrow(np(), "mod", np()),
    );
    assert_eq!(to_modal(&t), modal_rel("obj1"));
}

#[test]
fn rule_names_round_trip() {
    for r in [
        Rule::Ax,
        Rule::Lex,
        Rule::ArrowElim,
        Rule::ArrowIntro,
        Rule::DiamondIntro("su".into()),
        Rule::DiamondElim("obj".into()),
    ] {
        assert_eq!(Rule::from_name(&r.name()), Some(r));
    }
}

#[test]
fn term_syntax() {
    let t = parse_term("λx.λy.((f y) x)").unwrap();
    assert!(is_linear(&t));
    assert!(!is_linear(&parse_term("λx.((f x) x)").unwrap()));
    assert!(!is_linear(&parse_term("λx.f").unwrap()));
    assert!(parse_term("(f").is_err());
    assert!(parse_term("").is_err());
    let m = parse_term("let ◇su y = x in (leggen(◇su(y)))").unwrap();
    assert_eq!(parse_term(&m.to_string()).unwrap(), m);
}
