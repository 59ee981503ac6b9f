use std::fs;
use std::path::PathBuf;

use serde::Serialize;
use subshift::criteria::CriterionReport;
use subshift::report::{rows_to_csv, CountRow};

use crate::{Format, Opts};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] subshift::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("oracle count exceeds exact count: {0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_budget() => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Serialize)]
pub struct ComplexityRow {
    pub system: String,
    pub n: usize,
    pub words: usize,
}

#[derive(Serialize)]
pub struct WitnessRow {
    pub n: usize,
    pub word: String,
    pub initial: String,
    pub closed_form: String,
    pub agrees: bool,
}

#[derive(Serialize)]
pub struct CheckRow {
    pub system: String,
    pub n: usize,
    pub side: String,
    pub exact_count: usize,
    pub oracle_count: usize,
    pub depth: usize,
    pub agrees: bool,
}

pub enum Output {
    Counts(Vec<CountRow>),
    Criteria(Vec<CriterionReport>),
    Complexity(Vec<ComplexityRow>),
    Witnesses(Vec<WitnessRow>),
    Check(Vec<CheckRow>),
}

fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv(out: &Output) -> String {
    let mut s = String::new();
    let mut line = |l: String| {
        s.push_str(&l);
        s.push('\n');
    };
    match out {
        Output::Counts(rows) => return rows_to_csv(rows),
        Output::Criteria(reports) => {
            line("criterion,system,n,verdict,exact,citation".into());
            for r in reports {
                let exact = r.quantities.get("exact").map_or("".into(), |v| v.to_string());
                line(format!(
                    "{},{},{},{},{},{}",
                    r.criterion,
                    field(&r.system),
                    r.n,
                    r.verdict.as_str(),
                    exact,
                    field(r.citation)
                ));
            }
        }
        Output::Complexity(rows) => {
            line("system,n,words".into());
            for r in rows {
                line(format!("{},{},{}", field(&r.system), r.n, r.words));
            }
        }
        Output::Witnesses(rows) => {
            line("n,word,initial,closed_form,agrees".into());
            for r in rows {
                line(format!("{},{},{},{},{}", r.n, r.word, field(&r.initial), field(&r.closed_form), r.agrees));
            }
        }
        Output::Check(rows) => {
            line("system,n,side,exact_count,oracle_count,depth,agrees".into());
            for r in rows {
                line(format!(
                    "{},{},{},{},{},{},{}",
                    field(&r.system),
                    r.n,
                    r.side,
                    r.exact_count,
                    r.oracle_count,
                    r.depth,
                    r.agrees
                ));
            }
        }
    }
    s
}

fn json(out: &Output) -> String {
    let value = match out {
        Output::Counts(rows) => serde_json::to_string_pretty(rows),
        Output::Criteria(reports) => serde_json::to_string_pretty(reports),
        Output::Complexity(rows) => serde_json::to_string_pretty(rows),
        Output::Witnesses(rows) => serde_json::to_string_pretty(rows),
        Output::Check(rows) => serde_json::to_string_pretty(rows),
    };
    value.expect("report rows serialize") + "\n"
}

pub fn emit(out: &Output, opts: &Opts) -> CliResult<()> {
    let text = match opts.format {
        Format::Csv => csv(out),
        Format::Json => json(out),
    };
    match &opts.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
