mod commands;
mod render;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "nsgp",
    version,
    about = "Numerical semigroups and ratio-covarieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for level expansion
    #[arg(long, env = "NSGP_THREADS", default_value_t = 1, global = true,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct FamilyArgs {
    #[arg(long, short = 'F')]
    pub frobenius: i64,
    #[arg(long, short = 'm')]
    pub multiplicity: i64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariants, Apéry set, pseudo-Frobenius numbers and special gaps
    Analyze {
        #[arg(long, value_parser = parse_list)]
        generators: List,
    },
    /// All semigroups with the given Frobenius number and multiplicity
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Only the members of this genus
        #[arg(long)]
        genus: Option<i64>,
        /// Use the brute-force reference instead of the tree engine
        #[arg(long)]
        oracle: bool,
        /// Check the covariety axioms on the result
        #[arg(long)]
        verify_axioms: bool,
    },
    /// Attainable genera of the family
    GenusRange {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Inclusion-maximal members of the family
    MaxElements {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Least member of the family containing the given elements
    Closure {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = parse_list, default_value = "")]
        elements: List,
        #[arg(long)]
        oracle: bool,
    },
    /// Rank and minimal generating system inside the family
    Rank {
        #[arg(long, value_parser = parse_list)]
        generators: List,
        /// Defaults to the Frobenius number of the semigroup
        #[arg(long, short = 'F')]
        frobenius: Option<i64>,
        /// Defaults to the multiplicity of the semigroup
        #[arg(long, short = 'm')]
        multiplicity: Option<i64>,
    },
    /// Whether the semigroup has maximal rank in its family
    MrCheck {
        #[arg(long, value_parser = parse_list)]
        generators: List,
    },
    /// Covariety generated by a family, e.g. "5,7,9;5,6,8"
    GenerateCovariety {
        #[arg(long, value_parser = parse_family)]
        semigroups: Family,
    },
    /// Replay reference examples and the oracle sweep
    Verify {
        /// Largest Frobenius number in the oracle sweep
        #[arg(long, default_value_t = 18)]
        max_frobenius: i64,
    },
}

/// A comma-separated integer list. Wrapped because clap reads a bare `Vec`
/// field as a repeated flag.
#[derive(Debug, Clone)]
pub struct List(pub Vec<i64>);

#[derive(Debug, Clone)]
pub struct Family(pub Vec<Vec<i64>>);

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<_, _>>()
        .map(List)
}

fn parse_family(s: &str) -> Result<Family, String> {
    let groups: Vec<Vec<i64>> = s
        .split(';')
        .filter(|g| !g.trim().is_empty())
        .map(|g| parse_list(g).map(|l| l.0))
        .collect::<Result<_, _>>()?;
    if groups.is_empty() {
        return Err("empty family".into());
    }
    Ok(Family(groups))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(outcome) => {
            if let Err(e) = outcome.emit(cli.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
