//! `tgs` — validate, enumerate, classify, and analyze finite commutative
//! ternary Γ-semirings from the command line.
//!
//! Exit codes: 0 success (and all enabled axioms pass for `check`),
//! 1 verdict failure or analysis error, 2 malformed input or exceeded
//! bound.

mod analyze;
mod check;
mod enumerate;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tgs_core::axioms::AxiomMode;

#[derive(Parser)]
#[command(name = "tgs", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Indented JSON.
    Pretty,
    /// Compact machine JSON.
    Json,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Verify the axioms of a structure file and print the report.
    Check {
        /// Structure file (JSON).
        file: PathBuf,
        /// strict, relaxed, or a list like T1+T2+C.
        #[arg(long, default_value = "strict")]
        axiom_mode: String,
        /// Witness cap per failing axiom.
        #[arg(long, default_value_t = 10)]
        max_witnesses: usize,
        /// text for a human-readable report, json for the raw report.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Enumerate all non-isomorphic structures for an order and Γ size.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        gamma_size: usize,
        #[arg(long, default_value = "strict")]
        axiom_mode: String,
        /// Identify catalogs up to γ reordering as well.
        #[arg(long)]
        permute_gamma: bool,
        /// Worker threads; defaults to $TGS_JOBS, then 1. The output is
        /// byte-identical for every value.
        #[arg(long)]
        jobs: Option<usize>,
        /// Refusal bound on the order (hard cap 6).
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Refusal bound on |Γ| (hard cap 3).
        #[arg(long, default_value_t = 2)]
        max_gamma_size: usize,
        /// Catalog output path (JSON Lines); the run manifest lands next to
        /// it as `<out>.manifest.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit a CSV summary over one or more catalogs.
    Report {
        /// Which summary: 1 (counts), 5 (ideal-lattice types),
        /// 6 (invariant tuples), 7 (decomposition pattern).
        #[arg(long)]
        table: u8,
        /// Output CSV path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Catalog files produced by `enumerate`.
        #[arg(required = true)]
        catalogs: Vec<PathBuf>,
    },
    /// Run one analyzer against a structure file and print a JSON report.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        what: analyze::What,
        /// ideals: DOT export paths.
        #[arg(long)]
        dot_ideals: Option<PathBuf>,
        #[arg(long)]
        dot_congruences: Option<PathBuf>,
        /// spectrum: DOT export of the prime inclusion diagram.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// spectrum: contract primes along a map into --target.
        #[arg(long)]
        target: Option<PathBuf>,
        /// spectrum: comma-separated images, e.g. "0,1,0".
        #[arg(long)]
        map: Option<String>,
        /// radical: weak | literal | power.
        #[arg(long, default_value = "power")]
        nil_mode: String,
        /// code: word length.
        #[arg(long)]
        length: Option<usize>,
        /// code: semicolon-separated generator vectors, e.g. "1,0;0,1".
        #[arg(long)]
        generators: Option<String>,
        /// code: semicolon-separated checks gamma:u:v, e.g. "1:1,0:0,1".
        #[arg(long)]
        checks: Option<String>,
        /// code: cap on |T|^length.
        #[arg(long, default_value_t = tgs_core::apps::DEFAULT_CODE_BUDGET)]
        budget: u64,
        /// sbox/paths: γ label (defaults to the first).
        #[arg(long)]
        gamma: Option<String>,
        /// sbox: write the difference table as CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// fuzzy: comma-separated grades per element ("1,1/2,0").
        #[arg(long)]
        grades: Option<String>,
        /// fuzzy: chain "grade:hexmask;..." for the inverse direction.
        #[arg(long)]
        chain: Option<String>,
        /// paths: edge-list graph file.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// paths: iteration cap.
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
        /// Report output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Input-shaped problems exit 2; everything else from the library is an
/// analysis error and exits 1.
pub fn exit_code_for(e: &tgs_core::Error) -> u8 {
    use tgs_core::Error::*;
    match e {
        EmptyCarrier | EmptyGamma | DuplicateGammaLabel(_) | UnknownGamma(_)
        | TableShape { .. } | EntryRange { .. } | IdentityAtZero { .. }
        | ElementRange { .. } | MapLength { .. } | BadRelabeling
        | BoundExceeded { .. } | GradeRange { .. } | NotAChain { .. }
        | ModeWithoutSymmetry | Parse { .. } | Io(_) | Json(_) => 2,
        _ => 1,
    }
}

pub fn parse_mode(s: &str) -> Result<AxiomMode, u8> {
    AxiomMode::parse(s).map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

pub fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), u8> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            2u8
        }),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<(), u8> = match cli.command {
        Command::Check { file, axiom_mode, max_witnesses, format } => {
            check::run(&file, &axiom_mode, max_witnesses, &format)
        }
        Command::Enumerate {
            order,
            gamma_size,
            axiom_mode,
            permute_gamma,
            jobs,
            max_order,
            max_gamma_size,
            out,
        } => enumerate::run(enumerate::Args {
            order,
            gamma_size,
            axiom_mode,
            permute_gamma,
            jobs,
            max_order,
            max_gamma_size,
            out,
        }),
        Command::Report { table, out, catalogs } => report::run(table, &out, &catalogs),
        Command::Analyze {
            file,
            what,
            dot_ideals,
            dot_congruences,
            dot,
            target,
            map,
            nil_mode,
            length,
            generators,
            checks,
            budget,
            gamma,
            csv,
            grades,
            chain,
            graph,
            horizon,
            format,
            out,
        } => analyze::run(analyze::Args {
            file,
            what,
            dot_ideals,
            dot_congruences,
            dot,
            target,
            map,
            nil_mode,
            length,
            generators,
            checks,
            budget,
            gamma,
            csv,
            grades,
            chain,
            graph,
            horizon,
            format,
            out,
        }),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
