mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Law checking and calculus for rigs with derivations.
#[derive(Parser, Debug)]
#[command(name = "diffrig", version)]
pub struct Cli {
    /// Emit JSON (schema 1) instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every sampler.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Samples per law (ignored when the carrier is enumerated).
    #[arg(long, global = true, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Word-length bound for language windows.
    #[arg(long, global = true, default_value_t = 8)]
    pub maxlen: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the rig and derivation law suites of an instance:
    /// nat, cardinal, bool, langwindow, cardseq, poly-nat, broken, downsets:<poset file>.
    Laws {
        instance: String,
        /// Alphabet for `langwindow`.
        #[arg(long, default_value = "ab")]
        alphabet: String,
    },
    /// Regular expressions and Brzozowski derivatives.
    Regex {
        /// Alphabet symbols, written together (e.g. `ab`).
        #[arg(long, default_value = "ab", global = true)]
        alphabet: String,
        #[command(subcommand)]
        command: RegexCommand,
    },
    /// Species expressions as cardinality sequences.
    Species {
        #[command(subcommand)]
        command: SpeciesCommand,
    },
    /// Polynomials given as coefficient lists `A0,A1,...`.
    Poly {
        #[command(subcommand)]
        command: PolyCommand,
    },
    /// Differential polynomials over nat.
    Dpoly {
        #[command(subcommand)]
        command: DpolyCommand,
    },
    /// Differential-polynomial equations `X = dp(X, X', ...)`.
    Dpe {
        #[command(subcommand)]
        command: DpeCommand,
    },
    /// Co-Heyting boundaries on the down-sets of a poset file.
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum RegexCommand {
    /// Does the regex match the word?
    Match { regex: String, word: String },
    /// Derivative of the regex by a word.
    Derive { regex: String, word: String },
    /// Brzozowski DFA as a state table.
    Dfa {
        regex: String,
        #[arg(long, default_value_t = 10_000)]
        state_cap: usize,
    },
    /// Check the twisted Leibniz rule for `∂_a(r·s)` on the window.
    Leibniz {
        r: String,
        s: String,
        symbol: char,
        /// Use the untwisted rule (γ = identity) instead.
        #[arg(long)]
        untwisted: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpeciesCommand {
    /// Cardinality sequence c_0..=c_n.
    Seq {
        expr: String,
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Count labelled structures on a set of the given size by enumeration.
    Count {
        expr: String,
        #[arg(long)]
        size: usize,
    },
    /// Exponential generating function up to t^n.
    Egf {
        expr: String,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Check a differentiation rule on seeded random expressions.
    Check {
        rule: Rule,
        #[arg(long, default_value_t = 50)]
        cases: usize,
        /// Truncation.
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Rule {
    Chain,
    Power,
    Leibniz,
    Tuple,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Base {
    Nat,
    Cardinal,
}

#[derive(Args, Debug)]
pub struct BaseArg {
    #[arg(long, value_enum, default_value_t = Base::Nat)]
    pub base: Base,
}

#[derive(Subcommand, Debug)]
pub enum PolyCommand {
    /// `d/dY` with a trivial base derivation.
    Derive {
        coeffs: String,
        #[command(flatten)]
        base: BaseArg,
    },
    /// Evaluate at `Y = E` through the identity homomorphism.
    Eval {
        coeffs: String,
        #[arg(long)]
        at: String,
        #[command(flatten)]
        base: BaseArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum DpolyCommand {
    /// Apply `Y(i) -> Y(i+1)` extended by Leibniz.
    Derive {
        dpoly: String,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum DpeCommand {
    /// Check a candidate sequence against `X = dp(X, X', ...)`.
    Check {
        dpoly: String,
        /// Comma-separated coefficients c_0, c_1, ...
        #[arg(long)]
        candidate: String,
        /// Compare up to index n (default: as far as the candidate allows).
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LatticeCommand {
    /// Co-negation and boundary of a down-set.
    Boundary {
        #[arg(long)]
        poset: std::path::PathBuf,
        /// Elements of the down-set, comma-separated.
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Exhaustive Leibniz check for the boundary.
    Leibniz {
        #[arg(long)]
        poset: std::path::PathBuf,
    },
    /// Search for a pair on which the boundary is not additive.
    Linearity {
        #[arg(long)]
        poset: std::path::PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                format!("{}\n", out.json)
            } else {
                out.text
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
