mod common;

use std::path::Path;

use common::{fixtures, read};
use deptypes::alpino::{load_alpino, write_xml};
use deptypes::cli::{run, EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_USAGE};
use deptypes::records::{read_jsonl, DiagnosticRecord, ParseRecord, SampleRecord};
use deptypes::sexpr::{read_proofs, write_proof};
use deptypes_core::proofs::Proof;
use deptypes_core::types::{Label, Type, Vocabulary};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Out {
    let mut o = Vec::new();
    let mut e = Vec::new();
    let code = run(
        std::iter::once("deptypes").chain(args.iter().copied()),
        &mut o,
        &mut e,
    );
    Out {
        code,
        stdout: String::from_utf8(o).unwrap(),
        stderr: String::from_utf8(e).unwrap(),
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cli(&[]).code, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["extract"]).code, EXIT_USAGE);
    assert_eq!(cli(&["merges", "learn"]).code, EXIT_USAGE);
}

#[test]
fn missing_input_exits_three() {
    let out = cli(&["stats", "/nonexistent/samples.jsonl"]);
    assert_eq!(out.code, EXIT_IO);
    assert!(out.stderr.contains("/nonexistent/samples.jsonl"));
    assert_eq!(cli(&["extract", "/nonexistent/dir"]).code, EXIT_IO);
}

#[test]
fn bad_document_does_not_sink_the_batch() {
    let dir = tempfile::tempdir().unwrap();
    let diags = dir.path().join("diag.jsonl");
    let out = cli(&[
        "extract",
        p(&fixtures().join("bad")),
        "--diagnostics",
        p(&diags),
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let records: Vec<SampleRecord> = read_jsonl(&out.stdout).unwrap();
    let ids: Vec<&str> = records.iter().map(|r| r.id.as_str()).collect();
    assert!(ids.contains(&"transitive"), "{ids:?}");
    let bad = records.iter().find(|r| r.id == "malformed").unwrap();
    assert!(bad.skipped && bad.words.is_empty());
    assert_eq!(records.iter().filter(|r| !r.skipped).count(), 2);
    let diags: Vec<DiagnosticRecord> = read_jsonl(&read(&diags)).unwrap();
    assert!(diags.iter().any(|d| d.sample.starts_with("malformed")));
}

#[test]
fn fail_fast_stops_with_failure() {
    let out = cli(&["extract", p(&fixtures().join("bad")), "--fail-fast"]);
    assert_eq!(out.code, EXIT_FAILED);
    assert!(!out.stderr.is_empty());
}

#[test]
fn empty_directory_fails() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(cli(&["extract", p(dir.path())]).code, EXIT_FAILED);
}

#[test]
fn only_bad_documents_fail() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(
        fixtures().join("bad/malformed.xml"),
        dir.path().join("malformed.xml"),
    )
    .unwrap();
    let out = cli(&["extract", p(dir.path())]);
    assert_eq!(out.code, EXIT_FAILED);
    let records: Vec<SampleRecord> = read_jsonl(&out.stdout).unwrap();
    assert!(records.iter().all(|r| r.skipped));
}

#[test]
fn stats_on_empty_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    let out = cli(&["stats", p(&empty)]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["samples"], 0);
}

#[test]
fn stats_rejects_garbage_lines() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.jsonl");
    std::fs::write(&f, "{\"id\": 3\n").unwrap();
    assert_eq!(cli(&["stats", p(&f)]).code, EXIT_USAGE);
}

#[test]
fn check_reports_each_proof() {
    let proofs = fixtures().join("proofs");
    let out = cli(&["check", p(&proofs.join("simple.sexp"))]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout.lines().count(), 3);
    assert!(out
        .stdout
        .lines()
        .all(|l| l.split('\t').nth(1) == Some("ok")));

    let out = cli(&["check", p(&proofs.join("swapped.sexp"))]);
    assert_eq!(out.code, EXIT_FAILED);
    assert!(out.stdout.contains("bracket mismatch"), "{}", out.stdout);
}

#[test]
fn check_on_empty_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("none.sexp");
    std::fs::write(&f, "\n").unwrap();
    assert_eq!(cli(&["check", p(&f)]).code, EXIT_FAILED);
}

#[test]
fn parse_round_trip_through_cli() {
    let dir = tempfile::tempdir().unwrap();
    let samples = dir.path().join("samples.jsonl");
    let xml = fixtures().join("xml");
    let out = cli(&[
        "extract",
        p(&xml.join("transitive.xml")),
        p(&xml.join("relative.xml")),
        "--out",
        p(&samples),
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let out = cli(&["parse", p(&samples), "--jobs", "2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let parsed: Vec<ParseRecord> = read_jsonl(&out.stdout).unwrap();
    assert_eq!(parsed.len(), 2);
    assert!(parsed.iter().all(|r| r.ok && r.term.is_some()));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.jsonl");
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        format!(
            "inputs = [{:?}]\nout = {:?}\njobs = 2\n",
            p(&fixtures().join("xml/unary.xml")),
            p(&out_path)
        ),
    )
    .unwrap();
    let out = cli(&["extract", "--config", p(&cfg)]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let records: Vec<SampleRecord> = read_jsonl(&read(&out_path)).unwrap();
    assert!(!records.is_empty());

    std::fs::write(&cfg, "jobs = \"many\"\n").unwrap();
    assert_eq!(cli(&["extract", "--config", p(&cfg)]).code, EXIT_USAGE);
}

#[test]
fn alpino_writer_round_trips() {
    for entry in std::fs::read_dir(fixtures().join("xml")).unwrap() {
        let path = entry.unwrap().path();
        let dag = load_alpino(&read(&path), "x").unwrap();
        let again = load_alpino(&write_xml(&dag), "x").unwrap();
        assert_eq!(again, dag, "{}", path.display());
    }
}

#[test]
fn sexpr_writer_round_trips() {
    let vocab = Vocabulary::new(["N", "NP", "S"], ["su", "obj", "body", "mod"]).unwrap();
    for name in ["simple.sexp", "modal.sexp", "swapped.sexp"] {
        let proofs = read_proofs(&read(&fixtures().join("proofs").join(name)), &vocab).unwrap();
        for proof in proofs {
            let text = write_proof(&proof);
            assert_eq!(read_proofs(&text, &vocab).unwrap(), vec![proof], "{name}");
        }
    }
}

#[test]
fn sexpr_quotes_awkward_words() {
    let np = Type::atom("NP");
    let tv = Type::plain_arrow(np.clone(), Type::plain_arrow(np.clone(), Type::atom("S")));
    let body = Proof::elim(Proof::lex("at \"x\"", tv), Proof::ax("x", np.clone()));
    let p = Proof::intro("x", np, Label::Plain, body);
    let text = write_proof(&p);
    assert_eq!(read_proofs(&text, &Vocabulary::default()).unwrap(), vec![p]);
}

#[test]
fn sexpr_errors_have_offsets() {
    let v = Vocabulary::default();
    assert_eq!(read_proofs("(lex", &v).unwrap_err().pos, 0);
    assert!(read_proofs("(bogus (sequent (hyp x \"NP\") \"NP\"))", &v).is_err());
    assert!(read_proofs("(ax (sequent (hyp x \"NP\") \"Q\"))", &v).is_err());
}
