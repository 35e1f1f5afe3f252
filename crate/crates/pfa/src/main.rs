//! Command-line front end. All automata are read and written in the text
//! format of [`pfa::format`](mod@pfa::format).
//!
//! Exit codes: 0 success (or verdict positive), 1 verdict negative,
//! 2 usage/parse error, 3 internal assertion failure (a witness triple
//! that fails to reproduce its parameters; never expected).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pfa::dfa::Dfa;
use pfa::spectrum::{self, TheoremConfig};
use pfa::witness::{self, WitnessParams};
use pfa::{format, quotient, Error};

#[derive(Parser)]
#[command(
    name = "pfa",
    version,
    about = "Permutation automata, accepting-state complexity, and right quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum ReportFormat {
    /// Human summary followed by the machine-readable section.
    #[default]
    Text,
    /// Machine-readable section only.
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a witness automaton.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Compute the right quotient A/B and summarize it.
    Quotient {
        /// Dividend automaton file (A).
        a: PathBuf,
        /// Divisor automaton file (B).
        b: PathBuf,
        /// Write the quotient automaton here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the accepting-state complexity of an automaton.
    Asc { path: PathBuf },
    /// Write the canonical minimal automaton.
    Minimize {
        path: PathBuf,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide language equality of two automata (exit 0 equal, 1 different).
    Equiv { a: PathBuf, b: PathBuf },
    /// Verify witness triples, the zero scan, and the unary low range.
    VerifyTheorem {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha_max: usize,
        /// Cycle length bound for the embedded unary search.
        #[arg(long, default_value_t = 12)]
        cycle_bound: usize,
        /// State bound for the embedded zero scan.
        #[arg(long, default_value_t = 4)]
        state_bound: usize,
        /// Alphabet bound for the embedded zero scan.
        #[arg(long, default_value_t = 2)]
        alphabet_bound: usize,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
    /// Brute-force the unary right-quotient spectrum for (m, n).
    UnaryBruteforce {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        cycle_bound: usize,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
    /// Enumerate small permutation-automaton pairs and assert that no
    /// right quotient is empty.
    ZeroScan {
        #[arg(long, default_value_t = 4)]
        state_bound: usize,
        #[arg(long, default_value_t = 2)]
        alphabet_bound: usize,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
}

#[derive(Subcommand)]
enum WitnessKind {
    /// The k-state dividend with finals {1, ..., m}, k = alpha + 1.
    Source {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The divisor on [k] x Z_{n+1} whose words stabilize state k.
    Divisor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The unary cycle automaton with asc t (t = 0 accepts nothing).
    Cycle {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<Dfa, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    format::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Writes an automaton to `--out` or stdout.
fn emit(dfa: &Dfa, out: Option<&Path>) -> Result<(), String> {
    let text = format::write(dfa);
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage_error(message: String) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Witness { kind } => {
            let (dfa, out) = match kind {
                WitnessKind::Source { m, alpha, out } => {
                    match WitnessParams::new(m, 1, alpha) {
                        Ok(params) => (witness::quotient_source(&params).into_dfa(), out),
                        Err(e) => return usage_error(e.to_string()),
                    }
                }
                WitnessKind::Divisor { n, alpha, out } => {
                    match WitnessParams::new(1, n, alpha) {
                        Ok(params) => (witness::quotient_divisor(&params).into_dfa(), out),
                        Err(e) => return usage_error(e.to_string()),
                    }
                }
                WitnessKind::Cycle { t, out } => (witness::unary_cycle(t).into_dfa(), out),
            };
            match emit(&dfa, out.as_deref()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => usage_error(e),
            }
        }
        Command::Quotient { a, b, out } => {
            let (dividend, divisor) = match (load(&a), load(&b)) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return usage_error(e),
            };
            let result = match quotient::right_quotient(&dividend, &divisor) {
                Ok(result) => result,
                Err(e) => return usage_error(e.to_string()),
            };
            if let Err(e) = emit(&result.automaton, out.as_deref()) {
                return usage_error(e);
            }
            // keep the summary off the automaton stream
            let summary = format!(
                "saturated finals: {}\nasc(A/B): {}\ndividend permutation automaton: {}\ndivisor permutation automaton: {}",
                result.saturated_finals.len(),
                result.automaton.asc(),
                if dividend.is_permutation_automaton() { "yes" } else { "no" },
                if divisor.is_permutation_automaton() { "yes" } else { "no" },
            );
            if out.is_some() {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
            ExitCode::SUCCESS
        }
        Command::Asc { path } => match load(&path) {
            Ok(dfa) => {
                println!("{}", dfa.asc());
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Command::Minimize { path, out } => match load(&path) {
            Ok(dfa) => match emit(&dfa.minimize(), out.as_deref()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => usage_error(e),
            },
            Err(e) => usage_error(e),
        },
        Command::Equiv { a, b } => {
            let (x, y) = match (load(&a), load(&b)) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return usage_error(e),
            };
            match x.equivalent(&y) {
                Ok(true) => {
                    println!("equal");
                    ExitCode::SUCCESS
                }
                Ok(false) => {
                    println!("different");
                    ExitCode::from(1)
                }
                Err(e) => usage_error(e.to_string()),
            }
        }
        Command::VerifyTheorem {
            m,
            n,
            alpha_max,
            cycle_bound,
            state_bound,
            alphabet_bound,
            format: report_format,
        } => {
            let config = TheoremConfig {
                alpha_max,
                cycle_bound,
                state_bound,
                alphabet_bound,
            };
            let report = match spectrum::verify_theorem(m, n, config) {
                Ok(report) => report,
                Err(Error::BadParams(message)) => return usage_error(message),
                Err(e) => return usage_error(e.to_string()),
            };
            match report_format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Machine => print!("{}", report.to_machine()),
            }
            if report.witness_failure.is_some() {
                ExitCode::from(3)
            } else if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::UnaryBruteforce {
            m,
            n,
            cycle_bound,
            format: report_format,
        } => {
            if m < 1 || n < 1 {
                return usage_error("m and n must be at least 1".into());
            }
            if cycle_bound < 2 {
                return usage_error("cycle bound must be at least 2".into());
            }
            let report = spectrum::unary_bruteforce(m, n, cycle_bound);
            match report_format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Machine => print!("{}", report.to_machine()),
            }
            // a partial report is flagged, not failed
            ExitCode::SUCCESS
        }
        Command::ZeroScan {
            state_bound,
            alphabet_bound,
            format: report_format,
        } => {
            if state_bound < 1 || alphabet_bound < 1 {
                return usage_error("bounds must be at least 1".into());
            }
            let report = spectrum::zero_scan(state_bound, alphabet_bound);
            match report_format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Machine => print!("{}", report.to_machine()),
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
