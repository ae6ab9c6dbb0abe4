//! Hand-built derivations over the small transitive/relative lexicon.

use deptypes_core::proofs::Proof;
use deptypes_core::types::{Label, Type};

pub fn n() -> Type {
    Type::atom("N")
}
pub fn np() -> Type {
    Type::atom("NP")
}
pub fn s() -> Type {
    Type::atom("S")
}
pub fn det() -> Type {
    Type::plain_arrow(n(), np())
}
pub fn tv() -> Type {
    Type::plain_arrow(np(), Type::plain_arrow(np(), s()))
}
pub fn rel() -> Type {
    Type::plain_arrow(Type::plain_arrow(np(), s()), Type::plain_arrow(np(), np()))
}

fn nominal(d: &str, noun: &str) -> Proof {
    Proof::elim(Proof::lex(d, det()), Proof::lex(noun, n()))
}

/// het meisje at een appel
pub fn transitive() -> Proof {
    Proof::elim(
        Proof::elim(Proof::lex("at", tv()), nominal("een", "appel")),
        nominal("het", "meisje"),
    )
}

/// dat een appel at
pub fn subject_relative() -> Proof {
    Proof::elim(
        Proof::lex("dat", rel()),
        Proof::elim(Proof::lex("at", tv()), nominal("een", "appel")),
    )
}

/// die het meisje at
pub fn object_relative() -> Proof {
    let body = Proof::elim(
        Proof::elim(Proof::lex("at", tv()), Proof::ax("x", np())),
        nominal("het", "meisje"),
    );
    Proof::elim(
        Proof::lex("die", rel()),
        Proof::intro("x", np(), Label::Plain, body),
    )
}

fn dia(d: &str, t: Type) -> Type {
    Type::diamond(d, t)
}

/// ◇su NP → ◇obj NP → S
pub fn leggen() -> Type {
    Type::plain_arrow(dia("su", np()), Type::plain_arrow(dia("obj", np()), s()))
}

/// ◇body(◇d NP → S) → ◇mod NP → NP
pub fn modal_rel(d: &str) -> Type {
    Type::plain_arrow(
        dia("body", Type::plain_arrow(dia(d, np()), s())),
        Type::plain_arrow(dia("mod", np()), np()),
    )
}

/// eieren die kippen leggen, chickens as subject of the clause.
pub fn modal_object_relative() -> Proof {
    modal_object_relative_with("su")
}

/// As above, with the bracket on "kippen" labelled `bracket` while the
/// rest of the tree stays the same.
pub fn modal_object_relative_with(bracket: &str) -> Proof {
    let mut kippen = Proof::diamond_intro("su", Proof::lex("kippen", np()));
    if bracket != "su" {
        kippen.conclusion.antecedent = deptypes_core::proofs::Structure::bracket(
            bracket,
            Proof::lex("kippen", np()).conclusion.antecedent,
        );
    }
    let clause = Proof::elim(Proof::lex("leggen", leggen()), kippen);
    let body = Proof::diamond_intro("body", clause);
    let functor = Proof::elim(Proof::lex("die", modal_rel("obj")), body);
    Proof::elim(
        functor,
        Proof::diamond_intro("mod", Proof::lex("eieren", np())),
    )
}

/// eieren die kippen leggen, chickens as object: the subject slot is
/// abstracted through a bracketed hypothesis.
pub fn modal_subject_relative() -> Proof {
    let inner = Proof::elim(
        Proof::elim(
            Proof::lex("leggen", leggen()),
            Proof::diamond_intro("su", Proof::ax("y", np())),
        ),
        Proof::diamond_intro("obj", Proof::lex("kippen", np())),
    );
    let opened = Proof::diamond_elim("su", "y", Proof::ax("x", dia("su", np())), inner);
    let abs = Proof::intro("x", dia("su", np()), Label::Plain, opened);
    let functor = Proof::elim(
        Proof::lex("die", modal_rel("su")),
        Proof::diamond_intro("body", abs),
    );
    Proof::elim(
        functor,
        Proof::diamond_intro("mod", Proof::lex("eieren", np())),
    )
}
