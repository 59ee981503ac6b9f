mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "subshift", version, about = "Count follower, predecessor and extender sets of subshifts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact tables and criteria for a sofic shift given as a labeled graph file.
    Graph {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// The up/down shift: exact tables, witness sets and closed-form checks.
    Updown {
        /// Emit predecessor witness sets with closed-form agreement instead of a report.
        #[arg(long)]
        witnesses: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// S-gap shift, from an explicit gap list or a named rule (depth-limited tables).
    Sgap {
        #[arg(long, value_delimiter = ',', conflicts_with = "gap_rule", required_unless_present = "gap_rule")]
        gaps: Vec<u64>,
        #[arg(long, requires = "cutoff")]
        gap_rule: Option<GapRule>,
        #[arg(long)]
        cutoff: Option<u64>,
        #[command(flatten)]
        opts: Opts,
    },
    /// Coded shift over a sofic base with code words `w c`, `w` in the base language.
    Coded {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value = "c")]
        separator: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Compare exact tables with depth-limited oracle counts.
    OracleCheck {
        #[arg(long, conflicts_with = "system", required_unless_present = "system")]
        file: Option<PathBuf>,
        #[arg(long)]
        system: Option<Builtin>,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args, Clone)]
pub struct Opts {
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub depth: u64,
    #[arg(long, value_enum, default_value_t = Report::Followers)]
    pub report: Report,
    /// Shorthand for `--report criteria`.
    #[arg(long)]
    pub criteria: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Cap on candidate extensions per oracle profile.
    #[arg(long)]
    pub budget: Option<u128>,
}

impl Opts {
    pub fn report(&self) -> Report {
        if self.criteria {
            Report::Criteria
        } else {
            self.report
        }
    }

    pub fn depth(&self) -> usize {
        self.depth as usize
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Report {
    Followers,
    Predecessors,
    Extenders,
    Complexity,
    Criteria,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
pub enum GapRule {
    #[value(name = "powers-of-2")]
    PowersOf2,
}

#[derive(ValueEnum, Clone, Copy)]
pub enum Builtin {
    GoldenMean,
    EvenShift,
    FullShift,
    Periodic01,
    Updown,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let (result, opts) = match &cli.command {
        Command::Graph { file, opts } => (commands::graph(file, opts), opts),
        Command::Updown { witnesses, opts } => (commands::updown(*witnesses, opts), opts),
        Command::Sgap { gaps, gap_rule, cutoff, opts } => (commands::sgap(gaps, *gap_rule, *cutoff, opts), opts),
        Command::Coded { file, separator, opts } => (commands::coded(file, separator, opts), opts),
        Command::OracleCheck { file, system, opts } => (commands::oracle_check(file.as_deref(), *system, opts), opts),
    };
    match result.and_then(|out| output::emit(&out, opts)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
