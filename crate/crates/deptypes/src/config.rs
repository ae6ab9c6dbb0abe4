//! Translation tables, pass lists and the run configuration file.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use serde::Deserialize;

use deptypes_core::extraction::{ExtractionConfig, Tables};
use deptypes_core::transforms::{default_passes, Pass, TransformConfig};
use deptypes_core::types::{ObliquenessPoset, Vocabulary, CRD_ATOM, DET_ATOM};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{0}")]
    Toml(#[from] toml::de::Error),
    #[error("line {line}: unknown pass `{name}`")]
    UnknownPass { line: usize, name: String },
    #[error("{0}")]
    Invalid(String),
}

/// Tables file. Every section is optional and replaces the default
/// wholesale when present.
///
/// ```toml
/// modifiers = ["mod", "app", "predm"]
/// poset = [["cnj"], ["su"], ["obj1"]]
/// [pos]
/// n = "N"
/// [cat]
/// np = "NP"
/// [dep]
/// su = "su"
/// ```
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TablesFile {
    pub pos: Option<BTreeMap<String, String>>,
    pub cat: Option<BTreeMap<String, String>>,
    pub dep: Option<BTreeMap<String, String>>,
    pub modifiers: Option<Vec<String>>,
    pub poset: Option<Vec<Vec<String>>>,
}

/// Everything one extraction run needs, kept consistent across the
/// transform and extraction halves.
#[derive(Clone, Debug)]
pub struct Settings {
    pub passes: Vec<Pass>,
    pub transform: TransformConfig,
    pub extraction: ExtractionConfig,
    pub vocabulary: Vocabulary,
}

impl Default for Settings {
    fn default() -> Self {
        Settings::new(TablesFile::default(), default_passes())
            .expect("default tables are consistent")
    }
}

impl Settings {
    pub fn new(file: TablesFile, passes: Vec<Pass>) -> Result<Self, ConfigError> {
        let mut tables = Tables::default();
        if let Some(p) = file.pos {
            tables.pos_table = p;
        }
        if let Some(c) = file.cat {
            tables.cat_table = c;
        }
        if let Some(d) = file.dep {
            tables.dep_table = d;
        }
        let mut transform = TransformConfig::default();
        if let Some(m) = file.modifiers {
            tables.mod_labels = m.clone();
            transform.modifier_labels = m;
        }
        let mut extraction = ExtractionConfig {
            tables,
            ..ExtractionConfig::default()
        };
        if let Some(ranks) = file.poset {
            extraction.poset =
                ObliquenessPoset::new(ranks).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        }
        let vocabulary = vocabulary_for(&extraction.tables)?;
        Ok(Settings {
            passes,
            transform,
            extraction,
            vocabulary,
        })
    }

    pub fn from_files(tables: Option<&str>, passes: Option<&str>) -> Result<Self, ConfigError> {
        let file = match tables {
            Some(t) => toml::from_str(t)?,
            None => TablesFile::default(),
        };
        let passes = match passes {
            Some(p) => parse_passes(p)?,
            None => default_passes(),
        };
        Settings::new(file, passes)
    }
}

/// Table co-domains plus `S` and the placeholder atoms; dependency labels
/// plus `det` and `obj`.
pub fn vocabulary_for(t: &Tables) -> Result<Vocabulary, ConfigError> {
    let mut atoms: BTreeSet<String> = t.atoms().map(String::from).collect();
    atoms.extend(["S", DET_ATOM, CRD_ATOM].map(String::from));
    let mut labels: BTreeSet<String> = t.labels().map(String::from).collect();
    labels.extend(["det", "obj"].map(String::from));
    Vocabulary::new(atoms, labels).map_err(|e| ConfigError::Invalid(e.to_string()))
}

/// One pass name per line; `#` starts a comment.
pub fn parse_passes(text: &str) -> Result<Vec<Pass>, ConfigError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let name = line.split('#').next().unwrap_or("").trim();
        if name.is_empty() {
            continue;
        }
        let pass = Pass::from_name(name).ok_or_else(|| ConfigError::UnknownPass {
            line: i + 1,
            name: name.into(),
        })?;
        out.push(pass);
    }
    Ok(out)
}

/// Optional `--config` file. Command-line flags take precedence.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub inputs: Vec<PathBuf>,
    pub tables: Option<PathBuf>,
    pub passes: Option<PathBuf>,
    pub merges: Option<usize>,
    pub out: Option<PathBuf>,
    pub diagnostics: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub fail_fast: Option<bool>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(text)?)
    }
}
