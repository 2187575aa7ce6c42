use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Hyperelliptic Lefschetz fibrations from their monodromy"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the global relation of a Hurwitz system.
    Validate { file: PathBuf },
    /// Fiber counts, Euler characteristic, signature and w.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The Dirac parity invariant.
    W { file: PathBuf },
    /// Decide stable isomorphism of two systems.
    Compare {
        #[arg(long, required = true)]
        stable: bool,
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Elementary transformations.
    Move {
        #[command(subcommand)]
        kind: MoveKind,
    },
    /// Conjugate every factor and handle word.
    Conjugate {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_word)]
        word: Word,
        file: PathBuf,
    },
    /// Fiber sum, the second system twisted by `--twist`.
    Fibersum {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_word, default_value = "")]
        twist: Word,
    },
    /// Fiber sum with the reference system `N` times.
    Stabilize {
        #[arg(long = "n")]
        times: usize,
        file: PathBuf,
    },
    /// Combed normal form of a sphere braid.
    Comb {
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_word)]
        word: Word,
    },
    /// Chart files.
    Chart {
        #[command(subcommand)]
        action: ChartAction,
    },
    /// The shipped example corpus.
    Examples {
        #[command(subcommand)]
        action: ExampleAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum MoveKind {
    /// Slide the factor at `--at` past its right neighbour.
    Slide {
        #[arg(long)]
        at: usize,
        #[arg(long, value_enum)]
        dir: Side,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Side {
    #[value(name = "l", alias = "left")]
    Left,
    #[value(name = "r", alias = "right")]
    Right,
}

#[derive(Debug, Subcommand)]
pub enum ChartAction {
    /// Check the planar structure and vertex words of a chart
    Validate { file: PathBuf },
    /// Vertex and fiber tallies with the degree sum check
    Counts { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ExampleAction {
    /// Print a Hurwitz system: CI, CII, I<k>, Gamma0, PJ, RI, Q, R, U, V.
    Export(ExportArgs),
    /// Print a chart: Gamma0, R3, R4, L0 (with --index i), L (with --index h).
    Chart(ExportArgs),
    /// Print the expected values recorded for the corpus.
    Manifest,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    pub name: String,
    #[arg(long)]
    pub genus: usize,
    #[arg(long)]
    pub index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<i32>);

/// Integers separated by commas or whitespace; the empty string is the identity.
fn parse_word(s: &str) -> Result<Word, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>()
                .map_err(|e| format!("bad letter {t:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Word)
}
