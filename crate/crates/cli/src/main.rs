mod input;
mod oracle_cmd;
mod random_cmd;
mod tables;
mod test_cmd;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dsf_core::enumeration::Mode as Family;
use dsf_core::oracle::{self, Mode, Property};
use dsf_core::{Filter, Itemize, Tester};

/// Error for an internal disagreement between two methods that must agree.
#[derive(Debug)]
pub struct InvariantViolation(pub String);

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invariant violated: {}", self.0)
    }
}

impl std::error::Error for InvariantViolation {}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Sequences,
    Partitions,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sequences => Family::Sequences,
            FamilyArg::Partitions => Family::Partitions,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyArg {
    Connected,
    Biconnected,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Forcibly,
    Potentially,
}

fn parse_filter(s: &str) -> Result<Filter, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Filter::ALL.iter().map(|f| f.as_str()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_itemize(s: &str) -> Result<Itemize, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Itemize::ALL.iter().map(|f| f.as_str()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

#[derive(Parser, Debug)]
#[command(name = "dsf", version, about = "Forcibly connected and biconnected degree sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide graphicality and (potential/forcible) connectivity of one sequence.
    Test {
        /// Degrees, separated by spaces or commas.
        #[arg(required = true, allow_negative_numbers = true)]
        sequence: Vec<String>,
        /// Print a split or cut certificate when a forcible property fails.
        #[arg(long)]
        witness: bool,
        /// Use the exhaustive GHH test for biconnectivity.
        #[arg(long)]
        basic: bool,
        /// Cross-check every verdict against brute-force realization.
        #[arg(long)]
        oracle: bool,
        /// Run the cut search on the thread pool.
        #[arg(long)]
        parallel: bool,
        /// Per-call time limit in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Largest length the brute-force check accepts.
        #[arg(long, default_value_t = oracle::DEFAULT_BOUND)]
        bound: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count sequences of fixed length or partitions of a fixed sum.
    Enumerate {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Length (sequences) or even sum (partitions).
        parameter: u32,
        #[arg(long, value_parser = parse_filter, default_value = "forcibly_biconnected")]
        filter: Filter,
        #[arg(long, value_parser = parse_itemize, default_value = "totals")]
        itemize: Itemize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Worker threads; 1 runs sequentially.
        #[arg(long, value_name = "K")]
        parallel: Option<usize>,
        /// Directory of cached tables, read before and written after counting.
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
    },
    /// Decide random sequences with prescribed smallest and largest terms.
    Random {
        #[arg(short = 'n', long, default_value_t = 100)]
        n: usize,
        #[arg(long = "pl", default_value_t = 0.2)]
        p_low: f64,
        #[arg(long = "ph", default_value_t = 0.8)]
        p_high: f64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-instance time limit in seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        /// Sweep the standard (p_l, p_h) grid instead of one pair.
        #[arg(long)]
        grid: bool,
        /// Leave wall times out so the output is reproducible.
        #[arg(long)]
        no_timing: bool,
        /// Include each sequence in the output.
        #[arg(long)]
        sequences: bool,
    },
    /// Smallest largest term among forcibly connected / biconnected members.
    Extremal {
        #[arg(value_enum)]
        family: FamilyArg,
        /// `a`, `a..b` or `a..=b` (inclusive).
        range: String,
        #[arg(long, default_value_t = 1)]
        step: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Forcibly biconnected counts against forcibly connected and all counts.
    Ratios {
        #[arg(value_enum)]
        family: FamilyArg,
        range: String,
        #[arg(long, default_value_t = 1)]
        step: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long, value_name = "K")]
        parallel: Option<usize>,
    },
    /// Answer a property question by enumerating every labeled realization.
    Oracle {
        #[arg(required = true)]
        sequence: Vec<String>,
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = oracle::DEFAULT_BOUND)]
        bound: usize,
        /// Print a realization supporting the verdict as an edge list.
        #[arg(long)]
        edges: bool,
    },
    /// List cut certificates of a sequence.
    Cuts {
        #[arg(required = true)]
        sequence: Vec<String>,
        #[arg(long)]
        limit: Option<usize>,
    },
}

fn cuts(words: &[String], limit: Option<usize>) -> anyhow::Result<()> {
    let raw = input::RawSequence::parse(words)?;
    if raw.zeros > 0 {
        println!("gate: not_potentially_biconnected");
        return Ok(());
    }
    let search = Tester::new().find_cut_witnesses(&raw.nonzero, limit)?;
    println!("gate: {}", serde_json::to_value(search.gate)?.as_str().unwrap_or_default());
    for w in &search.witnesses {
        println!("{}", serde_json::to_string(w)?);
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Test { sequence, witness, basic, oracle, parallel, budget, bound, format } => {
            let opts =
                test_cmd::TestOptions { witness, basic, oracle, parallel, budget, bound, format };
            test_cmd::run(&sequence, &opts)
        }
        Command::Enumerate { family, parameter, filter, itemize, format, parallel, cache } => {
            let opts =
                tables::EnumerateOptions { filter, itemize, format, workers: parallel, cache };
            tables::enumerate(family.into(), parameter, &opts)
        }
        Command::Random { n, p_low, p_high, count, seed, budget, grid, no_timing, sequences } => {
            random_cmd::run(&random_cmd::RandomOptions {
                n,
                p_low,
                p_high,
                count,
                seed,
                budget,
                grid,
                timing: !no_timing,
                sequences,
            })
        }
        Command::Extremal { family, range, step, format } => {
            tables::extremal(family.into(), &input::parse_range(&range, step)?, format)
        }
        Command::Ratios { family, range, step, format, parallel } => {
            tables::ratios(family.into(), &input::parse_range(&range, step)?, format, parallel)
        }
        Command::Oracle { sequence, property, mode, bound, edges } => {
            let property = match property {
                PropertyArg::Connected => Property::Connected,
                PropertyArg::Biconnected => Property::Biconnected,
            };
            let mode = match mode {
                ModeArg::Forcibly => Mode::Forcibly,
                ModeArg::Potentially => Mode::Potentially,
            };
            oracle_cmd::run(&sequence, property, mode, bound, edges)
        }
        Command::Cuts { sequence, limit } => cuts(&sequence, limit),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use dsf_core::Error as E;
    for cause in err.chain() {
        if cause.downcast_ref::<InvariantViolation>().is_some() {
            return 4;
        }
        if let Some(e) = cause.downcast_ref::<E>() {
            return match e {
                E::Timeout => 3,
                E::EmptyInput
                | E::NonPositiveTerm(_)
                | E::Parse(_)
                | E::InvalidParameter(_)
                | E::InvalidSelection(_)
                | E::OddSum(_) => 2,
                _ => 1,
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
