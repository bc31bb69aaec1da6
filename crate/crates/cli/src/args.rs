use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use summarax_core::numerics::DampingParams;
use summarax_core::summarize::DEFAULT_K;
use summarax_core::{Algorithm, BleuOptions, LexRankMode, SummarizerParams};

use crate::failure::Failure;

pub const STOPWORDS_ENV: &str = "SUMMARAX_STOPWORDS";

#[derive(Debug, Parser)]
#[command(
    name = "summarax",
    version,
    about = "Extractive summarization and BLEU/ROUGE evaluation"
)]
pub struct Cli {
    /// Stopword file (one word per line, `#` comments). Defaults to $SUMMARAX_STOPWORDS, then the built-in list.
    #[arg(long, global = true, value_name = "PATH")]
    pub stopwords: Option<PathBuf>,

    /// JSON file mirroring the command-line flags; explicit flags win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize one document.
    Summarize(SummarizeArgs),
    /// Evaluate summarizers over a paired corpus.
    Evaluate(EvaluateArgs),
    /// Token frequency table of a document as CSV.
    Freq(FreqArgs),
}

#[derive(Debug, Args)]
pub struct SummarizeArgs {
    /// Plain-text input file.
    pub input: PathBuf,

    /// textrank, lexrank, luhn, lsa or klsum.
    #[arg(long, value_parser = parse_algorithm)]
    pub algo: Option<Algorithm>,

    /// Print `index<TAB>score<TAB>sentence` lines.
    #[arg(long)]
    pub scores: bool,

    /// Write the summary here instead of stdout.
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(flatten)]
    pub summarizer: SummarizerFlags,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Directory containing docs/ and refs/.
    pub corpus: PathBuf,

    /// Comma-separated algorithm list (default: all five).
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm)]
    pub algos: Option<Vec<Algorithm>>,

    /// ROUGE n-gram order (default 1).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=4))]
    pub rouge_n: Option<u64>,

    /// Highest BLEU n-gram order, uniform weights (default 4).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=9))]
    pub bleu_max_n: Option<u64>,

    /// Floor for zero n-gram precisions (off by default).
    #[arg(long, value_name = "EPS")]
    pub bleu_smoothing: Option<f64>,

    /// Remove stopwords from summaries and references before scoring.
    #[arg(long)]
    pub metric_stopwords: bool,

    /// Worker threads (0 = all cores). Results do not depend on it.
    #[arg(long)]
    pub workers: Option<usize>,

    /// JSON report path; without it the JSON goes to stdout and the table to stderr.
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Also write the per-algorithm CSV here.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,

    #[command(flatten)]
    pub summarizer: SummarizerFlags,
}

#[derive(Debug, Args)]
pub struct FreqArgs {
    /// Plain-text input file.
    pub input: PathBuf,

    /// Keep stopwords.
    #[arg(long)]
    pub raw: bool,

    /// Also drop single-character tokens and numerals.
    #[arg(long)]
    pub drop_single_char: bool,

    /// Only the N most frequent tokens.
    #[arg(long, value_name = "N")]
    pub top: Option<usize>,

    /// Write the CSV here instead of stdout.
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SummarizerFlags {
    /// Sentences per summary.
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Option<u64>,

    /// Damping factor for TextRank and LexRank (default 0.85).
    #[arg(long)]
    pub damping: Option<f64>,

    /// Use thresholded LexRank edges instead of cosine weights.
    #[arg(long, value_name = "T")]
    pub lexrank_threshold: Option<f64>,

    /// Fraction of the vocabulary treated as significant by Luhn (default 0.1).
    #[arg(long)]
    pub luhn_ratio: Option<f64>,

    /// Largest run of insignificant words inside a Luhn window (default 4).
    #[arg(long)]
    pub luhn_gap: Option<usize>,

    /// Probability floor for unseen words in KL-Sum (default 1e-12).
    #[arg(long)]
    pub kl_epsilon: Option<f64>,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse::<Algorithm>().map_err(|e| e.to_string())
}

/// `--config` file contents. Every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub stopwords: Option<PathBuf>,
    pub algo: Option<String>,
    pub algos: Option<Vec<String>>,
    pub k: Option<usize>,
    pub rouge_n: Option<usize>,
    pub bleu_max_n: Option<usize>,
    pub bleu_smoothing: Option<f64>,
    pub metric_stopwords: Option<bool>,
    pub workers: Option<usize>,
    pub damping: Option<f64>,
    pub lexrank_mode: Option<String>,
    pub lexrank_threshold: Option<f64>,
    pub luhn_ratio: Option<f64>,
    pub luhn_gap: Option<usize>,
    pub kl_epsilon: Option<f64>,
    pub scores: Option<bool>,
    pub raw: Option<bool>,
    pub drop_single_char: Option<bool>,
    pub top: Option<usize>,
}

impl ConfigFile {
    pub fn load(path: Option<&Path>) -> Result<Self, Failure> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }
}

pub fn resolve_algorithm(flag: Option<Algorithm>, file: &ConfigFile) -> Result<Algorithm, Failure> {
    match (flag, &file.algo) {
        (Some(a), _) => Ok(a),
        (None, Some(name)) => name.parse().map_err(Failure::from),
        (None, None) => Ok(Algorithm::TextRank),
    }
}

pub fn resolve_algorithms(
    flag: Option<Vec<Algorithm>>,
    file: &ConfigFile,
) -> Result<Vec<Algorithm>, Failure> {
    let algos = match (flag, &file.algos) {
        (Some(a), _) => a,
        (None, Some(names)) => names
            .iter()
            .map(|n| n.parse::<Algorithm>())
            .collect::<Result<_, _>>()?,
        (None, None) => Algorithm::ALL.to_vec(),
    };
    if algos.is_empty() {
        return Err(Failure::usage("no algorithms selected"));
    }
    Ok(algos)
}

pub fn resolve_k(flags: &SummarizerFlags, file: &ConfigFile) -> Result<usize, Failure> {
    let k = flags.k.map(|k| k as usize).or(file.k).unwrap_or(DEFAULT_K);
    if k < 1 {
        return Err(Failure::usage("k must be at least 1"));
    }
    Ok(k)
}

pub fn resolve_summarizer(
    flags: &SummarizerFlags,
    file: &ConfigFile,
) -> Result<SummarizerParams, Failure> {
    let defaults = SummarizerParams::default();
    let damping = flags
        .damping
        .or(file.damping)
        .unwrap_or(defaults.damping.damping);
    if !(damping > 0.0 && damping < 1.0) {
        return Err(Failure::usage(format!(
            "damping must lie in (0, 1), got {damping}"
        )));
    }
    let threshold = flags.lexrank_threshold.or(file.lexrank_threshold);
    let lexrank_mode = match (threshold, file.lexrank_mode.as_deref()) {
        (Some(t), _) => LexRankMode::Threshold { threshold: t },
        (None, Some("threshold")) => LexRankMode::Threshold { threshold: 0.1 },
        (None, Some("continuous") | None) => LexRankMode::Continuous,
        (None, Some(other)) => {
            return Err(Failure::usage(format!("unknown lexrank mode {other:?}")))
        }
    };
    if let LexRankMode::Threshold { threshold } = lexrank_mode {
        if !(0.0..=1.0).contains(&threshold) {
            return Err(Failure::usage(format!(
                "lexrank threshold must lie in [0, 1], got {threshold}"
            )));
        }
    }
    let luhn_ratio = flags
        .luhn_ratio
        .or(file.luhn_ratio)
        .unwrap_or(defaults.luhn_ratio);
    if !(luhn_ratio > 0.0 && luhn_ratio <= 1.0) {
        return Err(Failure::usage(format!(
            "luhn ratio must lie in (0, 1], got {luhn_ratio}"
        )));
    }
    let kl_epsilon = flags
        .kl_epsilon
        .or(file.kl_epsilon)
        .unwrap_or(defaults.kl_epsilon);
    if kl_epsilon.is_nan() || kl_epsilon <= 0.0 {
        return Err(Failure::usage(format!(
            "kl epsilon must be positive, got {kl_epsilon}"
        )));
    }
    Ok(SummarizerParams {
        damping: DampingParams {
            damping,
            ..defaults.damping
        },
        lexrank_mode,
        luhn_ratio,
        luhn_gap: flags
            .luhn_gap
            .or(file.luhn_gap)
            .unwrap_or(defaults.luhn_gap),
        kl_epsilon,
    })
}

pub fn resolve_bleu(args: &EvaluateArgs, file: &ConfigFile) -> Result<BleuOptions, Failure> {
    let max_n = args
        .bleu_max_n
        .map(|n| n as usize)
        .or(file.bleu_max_n)
        .unwrap_or(4);
    if !(1..=9).contains(&max_n) {
        return Err(Failure::usage(format!(
            "bleu max n must lie in 1..=9, got {max_n}"
        )));
    }
    let smoothing = args.bleu_smoothing.or(file.bleu_smoothing);
    if let Some(eps) = smoothing {
        if !(eps > 0.0 && eps <= 1.0) {
            return Err(Failure::usage(format!(
                "bleu smoothing must lie in (0, 1], got {eps}"
            )));
        }
    }
    Ok(BleuOptions {
        smoothing,
        ..BleuOptions::order(max_n)
    })
}

pub fn resolve_rouge_n(args: &EvaluateArgs, file: &ConfigFile) -> Result<usize, Failure> {
    let n = args
        .rouge_n
        .map(|n| n as usize)
        .or(file.rouge_n)
        .unwrap_or(1);
    if !(1..=4).contains(&n) {
        return Err(Failure::usage(format!(
            "rouge n must lie in 1..=4, got {n}"
        )));
    }
    Ok(n)
}
