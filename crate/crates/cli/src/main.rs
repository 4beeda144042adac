use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lyndon_core::prefix_order::prefix_standard_permutation_counted;
use lyndon_core::scan::{lyndon_suffix_table_counted, lyndon_suffix_table_lyndon_counted};
use lyndon_core::tree::{left_lyndon_forest_counted, left_lyndon_tree_counted};
use lyndon_core::{
    inverse_psp_binary, periods_from_psp, word_from_psp, ComparisonBudget, InverseOutcome, Permutation, Word,
};
use serde_json::json;

mod bench;
mod check;
mod render;

#[derive(Parser)]
#[command(
    name = "lyndon",
    version,
    about = "Lyndon tables, left Lyndon trees and prefix standard permutations"
)]
struct Cli {
    /// Output format.
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print comparison and iteration counters to stderr.
    #[arg(long, global = true)]
    count: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Dot,
    Json,
}

#[derive(Args)]
struct WordInput {
    /// Word over a-z.
    word: Option<String>,

    /// Read the word from a file instead (`-` for stdin).
    #[arg(long, value_name = "PATH", conflicts_with = "word")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Lyndon suffix table: length of the longest Lyndon suffix ending at each position.
    Lyns {
        #[command(flatten)]
        input: WordInput,
        /// Add the smallest period of every prefix (Lyndon words only).
        #[arg(long)]
        periods: bool,
    },
    /// Left Lyndon tree of a Lyndon word.
    Tree {
        #[command(flatten)]
        input: WordInput,
        /// Same as `--format dot`.
        #[arg(long)]
        dot: bool,
    },
    /// Left Lyndon trees of the Lyndon factors of any word.
    Forest {
        #[command(flatten)]
        input: WordInput,
        /// Same as `--format dot`.
        #[arg(long)]
        dot: bool,
    },
    /// Prefix standard permutation of a Lyndon word.
    Psp {
        #[command(flatten)]
        input: WordInput,
    },
    /// Rank of every proper prefix of a Lyndon word.
    Rank {
        #[command(flatten)]
        input: WordInput,
    },
    /// Start positions of the Lyndon factorisation.
    Factorize {
        #[command(flatten)]
        input: WordInput,
    },
    /// Binary Lyndon word with the given prefix standard permutation.
    InversePsp {
        /// Comma-separated permutation, e.g. `1,0,4,3,5,2,6`.
        perm: String,
    },
    /// Smallest periods of the prefixes of any Lyndon word with this permutation.
    PeriodsFromPsp { perm: String, n: usize },
    /// Lexicographically smallest Lyndon word with this permutation.
    WordFromPsp { perm: String, n: usize },
    /// Run the oracle equivalences over every small word.
    Check {
        /// Alphabet size.
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        /// Longest word length.
        #[arg(long, default_value_t = 12)]
        maxlen: usize,
    },
    /// Time the linear algorithms on random words.
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Exit status 1 carries a rejection, 2 a usage or domain error.
enum Failure {
    Rejected(String),
    Invalid(String),
}

impl From<lyndon_core::Error> for Failure {
    fn from(e: lyndon_core::Error) -> Self {
        match e {
            lyndon_core::Error::NotAPsp => Failure::Rejected(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Rejected(text)) => (text + "\n", 1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            (String::new(), 2)
        }
    };
    // A closed pipe is not worth a panic.
    let _ = io::stdout().write_all(text.as_bytes());
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Outcome {
    let mut budget = ComparisonBudget::new();
    let format = match &cli.command {
        Command::Tree { dot: true, .. } | Command::Forest { dot: true, .. } => Format::Dot,
        _ => cli.format,
    };
    let dot_ok = matches!(cli.command, Command::Tree { .. } | Command::Forest { .. });
    if format == Format::Dot && !dot_ok {
        return Err(Failure::Invalid(
            "dot output is only available for tree and forest".into(),
        ));
    }

    let out = match &cli.command {
        Command::Lyns { input, periods } => {
            let y = read_word(input)?;
            if *periods {
                let (lyns, period) = lyndon_suffix_table_lyndon_counted(&y, &mut budget)?;
                render::lyns(format, &y, &lyns, Some(&period))
            } else {
                let lyns = lyndon_suffix_table_counted(&y, &mut budget)?;
                render::lyns(format, &y, &lyns, None)
            }
        }
        Command::Tree { input, .. } => {
            let y = read_word(input)?;
            let tree = left_lyndon_tree_counted(&y, &mut budget)?;
            render::tree(format, &y, &tree)
        }
        Command::Forest { input, .. } => {
            let y = read_word(input)?;
            let forest = left_lyndon_forest_counted(&y, &mut budget)?;
            render::forest(format, &y, &forest)
        }
        Command::Psp { input } => {
            let y = read_word(input)?;
            let psp = prefix_standard_permutation_counted(&y, &mut budget)?;
            render::sequence(format, "psp", "r", psp.as_slice(), ",")
        }
        Command::Rank { input } => {
            let y = read_word(input)?;
            let rank = prefix_standard_permutation_counted(&y, &mut budget)?.inverse();
            render::sequence(format, "rank", "j", rank.as_slice(), ",")
        }
        Command::Factorize { input } => {
            let y = read_word(input)?;
            let starts = lyndon_suffix_table_counted(&y, &mut budget)?.factor_starts();
            render::factors(format, &y, &starts)
        }
        Command::InversePsp { perm } => return inverse_psp(format, &parse_perm(perm)?),
        Command::PeriodsFromPsp { perm, n } => {
            let period = periods_from_psp(&parse_perm(perm)?, *n)?;
            render::sequence(format, "period", "j", period.as_slice(), " ")
        }
        Command::WordFromPsp { perm, n } => {
            let y = word_from_psp(&parse_perm(perm)?, *n)?;
            render::word(format, &y)
        }
        Command::Check { sigma, maxlen } => {
            text_only(format)?;
            return check::run(*sigma, *maxlen);
        }
        Command::Bench { n, trials, seed } => {
            text_only(format)?;
            return bench::run(*n, *trials, *seed);
        }
    };
    if cli.count {
        eprintln!(
            "loop_iterations {}\nletter_comparisons {}\nbundle_steps {}",
            budget.loop_iterations, budget.letter_comparisons, budget.bundle_steps
        );
    }
    Ok(out)
}

fn text_only(format: Format) -> Result<(), Failure> {
    match format {
        Format::Text => Ok(()),
        _ => Err(Failure::Invalid("check and bench only print text".into())),
    }
}

fn read_word(input: &WordInput) -> Result<Vec<u8>, Failure> {
    let raw = match (&input.word, &input.file) {
        (Some(word), None) => word.clone(),
        (None, Some(path)) => {
            let mut buf = String::new();
            let read = if path.as_os_str() == "-" {
                io::stdin().read_to_string(&mut buf).map(|_| ())
            } else {
                std::fs::read_to_string(path).map(|s| buf = s)
            };
            read.map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            buf.trim_end().to_string()
        }
        _ => return Err(Failure::Invalid("give exactly one of WORD or --file".into())),
    };
    Ok(raw.parse::<Word>()?.into_bytes())
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    s.parse::<Permutation>()
        .map_err(|_| Failure::Invalid(format!("malformed permutation {s:?}")))
}

fn inverse_psp(format: Format, p: &Permutation) -> Outcome {
    match inverse_psp_binary(p)? {
        InverseOutcome::Word(y) => Ok(render::word(format, &y)),
        InverseOutcome::Rejected {
            candidate,
            candidate_psp,
        } => {
            let candidate = String::from_utf8_lossy(&candidate);
            let text = match format {
                Format::Json => json!({
                    "rejected": true,
                    "candidate": candidate,
                    "candidate_psp": candidate_psp.map(|p| p.into_vec()),
                })
                .to_string(),
                _ => {
                    match &candidate_psp {
                        Some(q) => eprintln!("candidate {candidate} has psp {q}"),
                        None => eprintln!("candidate {candidate} is not a Lyndon word"),
                    }
                    "REJECT: not a PSP of a binary Lyndon word".to_string()
                }
            };
            Err(Failure::Rejected(text))
        }
    }
}
