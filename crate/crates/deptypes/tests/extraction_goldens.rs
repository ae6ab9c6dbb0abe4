mod common;

use common::*;
use deptypes_core::types::{print_type, Notation};

fn show(s: &GoldenSample) -> String {
    let mut out = format!("sample {} skip={:?}\n", s.id, s.skip);
    for (n, t) in &s.nodes {
        out.push_str(&format!("  node {n} {}\n", print_type(t, Notation::Infix)));
    }
    for (w, t) in &s.words {
        out.push_str(&format!("  word {w} {}\n", print_type(t, Notation::Infix)));
    }
    out
}

#[test]
fn every_fixture_matches_its_golden() {
    let mut failures = Vec::new();
    for (name, xml, golden, settings) in golden_cases() {
        let expected = parse_golden(&golden, &settings.vocabulary);
        let actual = actual_samples(&xml, &name, &settings);
        if expected != actual {
            failures.push(format!(
                "{name}\nexpected:\n{}actual:\n{}",
                expected.iter().map(show).collect::<String>(),
                actual.iter().map(show).collect::<String>()
            ));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
