//! Command-line front end. `run` is the whole program minus process exit,
//! so tests can drive it directly.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use deptypes_core::parser::ParserConfig;
use deptypes_core::proofs::{check, term_of};
use deptypes_core::typelang::{
    apply_merges, learn_merges, revert_merges, split_sentence, SymbolSeq, SEPARATOR,
};

use crate::config::{RunConfig, Settings};
use crate::pipeline::{collect_inputs, extract_files, is_unsupported, parse_records};
use crate::records::{
    read_jsonl, read_merge_table, write_jsonl, write_lexicon, write_merge_table, SampleRecord,
};
use crate::sexpr::read_proofs;
use crate::stats::{
    aggregate_parallel, report, report_json, sparsity_csv, typed_samples, DEFAULT_THRESHOLDS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "deptypes",
    version,
    about = "Type extraction, proof checking and parsing"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default)]
pub struct Common {
    /// TOML run configuration; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// TOML translation tables.
    #[arg(long, global = true)]
    pub tables: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extract word/type sequences from XML files or directories.
    Extract {
        inputs: Vec<PathBuf>,
        /// File listing pass names in order.
        #[arg(long)]
        passes: Option<PathBuf>,
        /// Diagnostics JSONL (stderr when absent).
        #[arg(long)]
        diagnostics: Option<PathBuf>,
        /// Stop after the first failing document.
        #[arg(long)]
        fail_fast: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Lexicon and ambiguity/sparsity statistics for extracted JSONL.
    Stats {
        input: PathBuf,
        /// Write the lexicon TSV here.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// Write the sparsity curve CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Learn, apply or revert digram merges over extracted JSONL.
    Merges {
        #[command(subcommand)]
        action: MergeAction,
    },
    /// Check proof s-expressions and print their terms.
    Check {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Parse extracted JSONL with the brute-force oracle.
    Parse {
        input: PathBuf,
        /// Diagnostics JSONL (stderr when absent).
        #[arg(long)]
        diagnostics: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
pub enum MergeAction {
    /// Learn up to N merges (until exhaustion when omitted).
    Learn {
        input: PathBuf,
        #[arg(long)]
        merges: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    Apply {
        input: PathBuf,
        #[arg(long)]
        table: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    Revert {
        input: PathBuf,
        #[arg(long)]
        table: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure(i32, String);

fn io_err(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_IO, format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, e.to_string())
}

/// Flags merged over the optional config file.
struct Resolved {
    run: RunConfig,
}

impl Resolved {
    fn new(common: &Common) -> Result<Self, Failure> {
        let mut run = match &common.config {
            Some(p) => {
                RunConfig::parse(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display())))?
            }
            None => RunConfig::default(),
        };
        if common.tables.is_some() {
            run.tables = common.tables.clone();
        }
        if common.jobs.is_some() {
            run.jobs = common.jobs;
        }
        if common.out.is_some() {
            run.out = common.out.clone();
        }
        Ok(Resolved { run })
    }

    fn jobs(&self) -> usize {
        self.run.jobs.unwrap_or(1)
    }

    fn settings(&self) -> Result<Settings, Failure> {
        let tables = self.run.tables.as_deref().map(read).transpose()?;
        let passes = self.run.passes.as_deref().map(read).transpose()?;
        Settings::from_files(tables.as_deref(), passes.as_deref()).map_err(usage)
    }

    fn emit(&self, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
        write_to(self.run.out.as_deref(), text, stdout)
    }
}

fn write_to(path: Option<&Path>, text: &str, fallback: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_err(p, e)),
        None => fallback
            .write_all(text.as_bytes())
            .map_err(|e| Failure(EXIT_IO, e.to_string())),
    }
}

fn load_records(path: &Path) -> Result<Vec<SampleRecord>, Failure> {
    read_jsonl(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Run the program on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Extract {
            inputs,
            passes,
            diagnostics,
            fail_fast,
            common,
        } => {
            let mut r = Resolved::new(&common)?;
            if passes.is_some() {
                r.run.passes = passes;
            }
            if diagnostics.is_some() {
                r.run.diagnostics = diagnostics;
            }
            if fail_fast {
                r.run.fail_fast = Some(true);
            }
            if !inputs.is_empty() {
                r.run.inputs = inputs;
            }
            cmd_extract(&r, stdout, stderr)
        }
        Command::Stats {
            input,
            lexicon,
            csv,
            common,
        } => {
            let r = Resolved::new(&common)?;
            let settings = r.settings()?;
            let records = load_records(&input)?;
            let samples = typed_samples(&records, &settings.vocabulary)
                .map_err(|(id, e)| usage(format!("{}: sample {id}: {e}", input.display())))?;
            let lex = aggregate_parallel(&samples, r.jobs());
            let rep = report(&lex, &samples, &DEFAULT_THRESHOLDS);
            if let Some(p) = lexicon {
                write_to(Some(&p), &write_lexicon(&lex), stdout)?;
            }
            if let Some(p) = csv {
                write_to(Some(&p), &sparsity_csv(&rep), stdout)?;
            }
            r.emit(&report_json(&rep), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Merges { action } => cmd_merges(action, stdout),
        Command::Check { input, common } => {
            let r = Resolved::new(&common)?;
            let settings = r.settings()?;
            let proofs = read_proofs(&read(&input)?, &settings.vocabulary)
                .map_err(|e| Failure(EXIT_FAILED, format!("{}: {e}", input.display())))?;
            if proofs.is_empty() {
                return Err(Failure(
                    EXIT_FAILED,
                    format!("{}: no proofs", input.display()),
                ));
            }
            let mut out = String::new();
            let mut bad = 0;
            for (i, p) in proofs.iter().enumerate() {
                match check(p) {
                    Ok(()) => out.push_str(&format!("{i}\tok\t{}\n", term_of(p))),
                    Err(e) => {
                        bad += 1;
                        out.push_str(&format!("{i}\terror\t{e}\n"));
                    }
                }
            }
            r.emit(&out, stdout)?;
            Ok(if bad == 0 { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Parse {
            input,
            diagnostics,
            common,
        } => {
            let r = Resolved::new(&common)?;
            let settings = r.settings()?;
            let records = load_records(&input)?;
            let cfg = ParserConfig {
                modifier_labels: settings.extraction.tables.mod_labels.clone(),
                ..ParserConfig::default()
            };
            let parsed = parse_records(&records, &settings.vocabulary, &cfg, r.jobs());
            let diags: Vec<_> = parsed
                .iter()
                .filter(|p| !p.ok)
                .map(|p| crate::records::DiagnosticRecord {
                    sample: p.id.clone(),
                    stage: if is_unsupported(p) {
                        "unsupported"
                    } else {
                        "parse"
                    }
                    .into(),
                    reason: p.reason.clone().unwrap_or_default(),
                })
                .collect();
            r.emit(&write_jsonl(&parsed), stdout)?;
            write_to(diagnostics.as_deref(), &write_jsonl(&diags), stderr)?;
            Ok(if parsed.iter().any(|p| p.ok) {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}

fn cmd_extract(
    r: &Resolved,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    if r.run.inputs.is_empty() {
        return Err(usage("no inputs given"));
    }
    let settings = r.settings()?;
    let files = collect_inputs(&r.run.inputs).map_err(|e| Failure(EXIT_IO, e.to_string()))?;
    if files.is_empty() {
        return Err(Failure(
            EXIT_FAILED,
            "no .xml files found in the inputs".into(),
        ));
    }
    let fail_fast = r.run.fail_fast.unwrap_or(false);
    let outcomes = extract_files(&files, &settings, r.jobs(), fail_fast)
        .map_err(|e| Failure(EXIT_IO, e.to_string()))?;
    let records: Vec<_> = outcomes
        .iter()
        .flat_map(|o| o.records.iter().cloned())
        .collect();
    let diags: Vec<_> = outcomes
        .iter()
        .flat_map(|o| o.diagnostics.iter().cloned())
        .collect();
    r.emit(&write_jsonl(&records), stdout)?;
    write_to(r.run.diagnostics.as_deref(), &write_jsonl(&diags), stderr)?;
    let ok = outcomes.iter().map(|o| o.succeeded()).sum::<usize>();
    Ok(if ok == 0 || (fail_fast && !diags.is_empty()) {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

/// Tokens of a record's types, each type followed by the separator.
fn record_seq(r: &SampleRecord) -> SymbolSeq {
    let mut out = Vec::new();
    for t in &r.types {
        out.extend(t.split(' ').filter(|s| !s.is_empty()).map(String::from));
        out.push(SEPARATOR.to_string());
    }
    out
}

fn rewrite(r: &SampleRecord, f: impl Fn(&[String]) -> SymbolSeq) -> SampleRecord {
    let seq = f(&record_seq(r));
    let types = split_sentence(&seq)
        .into_iter()
        .map(|chunk| chunk.join(" "))
        .collect();
    SampleRecord { types, ..r.clone() }
}

fn cmd_merges(action: MergeAction, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match action {
        MergeAction::Learn {
            input,
            merges,
            common,
        } => {
            let r = Resolved::new(&common)?;
            let n = merges.or(r.run.merges).unwrap_or(usize::MAX);
            let records = load_records(&input)?;
            let corpus: Vec<SymbolSeq> = records
                .iter()
                .filter(|r| !r.skipped)
                .map(record_seq)
                .collect();
            r.emit(&write_merge_table(&learn_merges(&corpus, n)), stdout)?;
            Ok(EXIT_OK)
        }
        MergeAction::Apply {
            input,
            table,
            common,
        } => rewrite_file(&input, &table, &common, false, stdout),
        MergeAction::Revert {
            input,
            table,
            common,
        } => rewrite_file(&input, &table, &common, true, stdout),
    }
}

fn rewrite_file(
    input: &Path,
    table: &Path,
    common: &Common,
    revert: bool,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let r = Resolved::new(common)?;
    let records = load_records(input)?;
    let table =
        read_merge_table(&read(table)?).map_err(|e| usage(format!("{}: {e}", table.display())))?;
    let out: Vec<SampleRecord> = records
        .iter()
        .map(|rec| {
            if revert {
                rewrite(rec, |s| revert_merges(s, &table))
            } else {
                rewrite(rec, |s| apply_merges(s, &table))
            }
        })
        .collect();
    r.emit(&write_jsonl(&out), stdout)?;
    Ok(EXIT_OK)
}
