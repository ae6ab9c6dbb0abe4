#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use deptypes::alpino::load_alpino;
use deptypes::config::Settings;
use deptypes_core::extraction::{annotate_dag, to_sequences};
use deptypes_core::transforms::run_pipeline;
use deptypes_core::types::{parse_type, Notation, Type, Vocabulary};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[derive(Debug, Default, PartialEq)]
pub struct GoldenSample {
    pub id: String,
    pub nodes: BTreeMap<u32, Type>,
    pub words: Vec<(String, Type)>,
    pub skip: Option<String>,
}

pub fn parse_golden(text: &str, vocab: &Vocabulary) -> Vec<GoldenSample> {
    let mut out: Vec<GoldenSample> = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let cols: Vec<&str> = line.split('\t').collect();
        let ty = |s: &str| {
            parse_type(s, Notation::Infix, vocab).unwrap_or_else(|e| panic!("golden `{s}`: {e}"))
        };
        match cols.as_slice() {
            ["sample", id] => out.push(GoldenSample {
                id: id.to_string(),
                ..Default::default()
            }),
            ["node", n, t] => {
                out.last_mut()
                    .expect("sample first")
                    .nodes
                    .insert(n.parse().unwrap(), ty(t));
            }
            ["word", w, t] => out
                .last_mut()
                .expect("sample first")
                .words
                .push((w.to_string(), ty(t))),
            ["skip", stage] => out.last_mut().expect("sample first").skip = Some(stage.to_string()),
            other => panic!("bad golden line {other:?}"),
        }
    }
    out
}

/// What the library produces for one document, in golden shape.
pub fn actual_samples(xml: &str, name: &str, s: &Settings) -> Vec<GoldenSample> {
    let raw = load_alpino(xml, name).unwrap();
    match run_pipeline(&raw, &s.passes, &s.transform) {
        Err(d) => vec![GoldenSample {
            id: raw.id.clone(),
            skip: Some(d.stage),
            ..Default::default()
        }],
        Ok(dags) => dags
            .iter()
            .map(|d| match annotate_dag(d, &s.extraction) {
                Err(e) => GoldenSample {
                    id: d.id.clone(),
                    skip: Some(format!("extract: {e}")),
                    ..Default::default()
                },
                Ok(dict) => {
                    let (w, t) = to_sequences(d, &dict).unwrap();
                    GoldenSample {
                        id: d.id.clone(),
                        nodes: dict,
                        words: w.into_iter().zip(t).collect(),
                        skip: None,
                    }
                }
            })
            .collect(),
    }
}

pub fn variant_settings() -> Settings {
    let dir = fixtures().join("variant");
    Settings::from_files(
        Some(&read(&dir.join("tables.toml"))),
        Some(&read(&dir.join("passes.txt"))),
    )
    .unwrap()
}

/// (name, xml, golden, settings) for every golden fixture.
pub fn golden_cases() -> Vec<(String, String, String, Settings)> {
    let mut out = Vec::new();
    let dir = fixtures();
    let mut names: Vec<String> = std::fs::read_dir(dir.join("xml"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "xml"))
        .map(|p| p.file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    names.sort();
    for n in names {
        out.push((
            n.clone(),
            read(&dir.join("xml").join(format!("{n}.xml"))),
            read(&dir.join("golden").join(format!("{n}.tsv"))),
            Settings::default(),
        ));
    }
    let v = dir.join("variant");
    out.push((
        "fig43".into(),
        read(&v.join("fig43.xml")),
        read(&v.join("fig43.tsv")),
        variant_settings(),
    ));
    out
}
