//! Documents × algorithms evaluation and report serialization.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::corpus::{Corpus, DocumentId};
use crate::error::{Error, Result};
use crate::metrics::{bleu_score, rouge_n, BleuBreakdown, BleuOptions, RougeScore};
use crate::parallel::map_ordered;
use crate::summarize::{summarize, Algorithm, SummarizerParams, Summary, DEFAULT_K};
use crate::textpipe::{
    document_tokens, prepare_document, remove_stopwords, StopwordList, Token, TokenizedSentence,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalConfig {
    /// Sentences per summary.
    pub k: usize,
    pub rouge_n: usize,
    pub bleu: BleuOptions,
    pub summarizer: SummarizerParams,
    /// Where the stopword list came from (path or `"builtin:english"`).
    pub stopword_source: String,
    /// Drop stopwords from summaries and references before scoring.
    pub metric_stopwords: bool,
    /// Worker threads; 0 means all cores. Never affects results.
    #[serde(skip)]
    pub workers: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            k: DEFAULT_K,
            rouge_n: 1,
            bleu: BleuOptions::default(),
            summarizer: SummarizerParams::default(),
            stopword_source: "builtin:english".to_owned(),
            metric_stopwords: false,
            workers: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DocumentScores {
    pub selected: Vec<usize>,
    pub rouge: RougeScore,
    /// BLEU at the configured order.
    pub bleu: BleuBreakdown,
    /// BLEU-4 with uniform weights.
    pub bleu4: BleuBreakdown,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgorithmAggregate {
    pub algorithm: Algorithm,
    pub mean_recall: f64,
    pub mean_precision: f64,
    pub mean_f1: f64,
    /// Mean clipped n-gram precision for n = 1..=4.
    pub mean_bleu_1: f64,
    pub mean_bleu_2: f64,
    pub mean_bleu_3: f64,
    pub mean_bleu_4: f64,
    /// Mean BLEU at the configured order.
    pub mean_bleu: f64,
    /// Mean BLEU-4 score.
    pub bleu4_composite: f64,
    pub per_document: BTreeMap<DocumentId, DocumentScores>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportConfig {
    #[serde(flatten)]
    pub eval: EvalConfig,
    pub algorithms: Vec<Algorithm>,
    pub averaging: &'static str,
    pub bleu_reference: &'static str,
    pub rouge_variant: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusInfo {
    pub documents: usize,
    pub ids: Vec<DocumentId>,
    pub dangling_references: Vec<DocumentId>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub config: ReportConfig,
    pub corpus: CorpusInfo,
    pub algorithms: Vec<AlgorithmAggregate>,
    /// Algorithms by descending mean F1, ties by name.
    pub ranking: Vec<Algorithm>,
}

struct PreparedDocument {
    id: DocumentId,
    sentences: Vec<TokenizedSentence>,
    reference: Vec<Token>,
}

/// Summarizes and scores every (document, algorithm) pair, then averages
/// per algorithm. The corpus must pass [`crate::require_paired`].
pub fn evaluate_corpus(
    corpus: &Corpus,
    algorithms: &[Algorithm],
    stops: &StopwordList,
    config: &EvalConfig,
) -> Result<EvalReport> {
    let mut algorithms = algorithms.to_vec();
    algorithms.sort();
    algorithms.dedup();
    if algorithms.is_empty() {
        return Err(Error::NoAlgorithms);
    }
    if config.k < 1 {
        return Err(Error::InvalidK);
    }
    let unpaired: Vec<String> = corpus
        .documents()
        .iter()
        .filter(|d| corpus.reference(&d.id).is_none())
        .map(|d| d.id.to_string())
        .collect();
    if !unpaired.is_empty() {
        return Err(Error::UnpairedDocuments(unpaired));
    }

    let metric_tokens = |text_tokens: Vec<Token>| {
        if config.metric_stopwords {
            remove_stopwords(&text_tokens, stops)
        } else {
            text_tokens
        }
    };

    let prepared: Vec<PreparedDocument> =
        map_ordered(corpus.documents(), config.workers, |doc| PreparedDocument {
            id: doc.id.clone(),
            sentences: prepare_document(&doc.text),
            reference: metric_tokens(document_tokens(
                corpus.reference(&doc.id).unwrap_or_default(),
            )),
        });

    let tasks: Vec<(usize, Algorithm)> = algorithms
        .iter()
        .flat_map(|&a| (0..prepared.len()).map(move |d| (d, a)))
        .collect();
    let results = map_ordered(&tasks, config.workers, |&(d, algorithm)| {
        let doc = &prepared[d];
        score_document(doc, algorithm, stops, config, &metric_tokens).map_err(|e| {
            Error::InDocument {
                id: doc.id.to_string(),
                source: Box::new(e),
            }
        })
    });

    let mut per_algorithm: BTreeMap<Algorithm, BTreeMap<DocumentId, DocumentScores>> =
        BTreeMap::new();
    for (&(d, algorithm), result) in tasks.iter().zip(results) {
        per_algorithm
            .entry(algorithm)
            .or_default()
            .insert(prepared[d].id.clone(), result?);
    }

    let aggregates: Vec<AlgorithmAggregate> = per_algorithm
        .into_iter()
        .map(|(algorithm, per_document)| aggregate(algorithm, per_document))
        .collect();
    let mut ranking: Vec<&AlgorithmAggregate> = aggregates.iter().collect();
    ranking.sort_by(|a, b| {
        b.mean_f1
            .total_cmp(&a.mean_f1)
            .then_with(|| a.algorithm.name().cmp(b.algorithm.name()))
    });
    let ranking = ranking.into_iter().map(|a| a.algorithm).collect();

    Ok(EvalReport {
        config: ReportConfig {
            eval: config.clone(),
            algorithms,
            averaging: "macro",
            bleu_reference: "reference_summary",
            rouge_variant: format!("rouge-{}", config.rouge_n),
        },
        corpus: CorpusInfo {
            documents: corpus.len(),
            ids: corpus.documents().iter().map(|d| d.id.clone()).collect(),
            dangling_references: corpus.dangling_references().to_vec(),
        },
        algorithms: aggregates,
        ranking,
    })
}

fn score_document(
    doc: &PreparedDocument,
    algorithm: Algorithm,
    stops: &StopwordList,
    config: &EvalConfig,
    metric_tokens: &impl Fn(Vec<Token>) -> Vec<Token>,
) -> Result<DocumentScores> {
    let summary: Summary = summarize(
        algorithm,
        &doc.sentences,
        config.k,
        stops,
        &config.summarizer,
    )?;
    let candidate = metric_tokens(summary.tokens(&doc.sentences));
    let bleu4_options = BleuOptions {
        smoothing: config.bleu.smoothing,
        ..BleuOptions::order(4)
    };
    Ok(DocumentScores {
        rouge: rouge_n(&candidate, &doc.reference, config.rouge_n)?,
        bleu: bleu_score(&candidate, &doc.reference, &config.bleu)?,
        bleu4: bleu_score(&candidate, &doc.reference, &bleu4_options)?,
        selected: summary.selected,
        warnings: summary.warnings,
    })
}

fn aggregate(
    algorithm: Algorithm,
    per_document: BTreeMap<DocumentId, DocumentScores>,
) -> AlgorithmAggregate {
    let mean = |f: &dyn Fn(&DocumentScores) -> f64| {
        per_document.values().map(f).sum::<f64>() / per_document.len() as f64
    };
    AlgorithmAggregate {
        algorithm,
        mean_recall: mean(&|s| s.rouge.recall),
        mean_precision: mean(&|s| s.rouge.precision),
        mean_f1: mean(&|s| s.rouge.f1),
        mean_bleu_1: mean(&|s| s.bleu4.precisions[0]),
        mean_bleu_2: mean(&|s| s.bleu4.precisions[1]),
        mean_bleu_3: mean(&|s| s.bleu4.precisions[2]),
        mean_bleu_4: mean(&|s| s.bleu4.precisions[3]),
        mean_bleu: mean(&|s| s.bleu.score),
        bleu4_composite: mean(&|s| s.bleu4.score),
        per_document,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::UnsupportedFormat(s.to_owned())),
        }
    }
}

pub const CSV_HEADER: &str =
    "algorithm,recall,precision,f1,bleu1,bleu2,bleu3,bleu4,bleu4_composite";

/// Serializes a report. Every real is written with exactly six decimals.
pub fn emit_report(report: &EvalReport, format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Json => {
            let mut value = serde_json::to_value(report).expect("report types serialize");
            fix_reals(&mut value);
            let mut out = serde_json::to_vec_pretty(&value).expect("json values serialize");
            out.push(b'\n');
            Ok(out)
        }
        ReportFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for a in &report.algorithms {
                let cells = [
                    a.mean_recall,
                    a.mean_precision,
                    a.mean_f1,
                    a.mean_bleu_1,
                    a.mean_bleu_2,
                    a.mean_bleu_3,
                    a.mean_bleu_4,
                    a.bleu4_composite,
                ];
                out.push_str(a.algorithm.name());
                for c in cells {
                    let _ = write!(out, ",{c:.6}");
                }
                out.push('\n');
            }
            Ok(out.into_bytes())
        }
    }
}

/// Rewrites every non-integer JSON number as a fixed six-decimal literal.
fn fix_reals(value: &mut Value) {
    match value {
        Value::Number(n) if !(n.is_u64() || n.is_i64()) => {
            let v = n.as_f64().expect("finite report values");
            *n = format!("{v:.6}")
                .parse()
                .expect("fixed-point literal is valid JSON");
        }
        Value::Array(items) => items.iter_mut().for_each(fix_reals),
        Value::Object(map) => map.values_mut().for_each(fix_reals),
        _ => {}
    }
}

/// Plain-text ranking table: algorithm, recall, precision, F1 at three decimals.
pub fn ranking_table(report: &EvalReport) -> String {
    let by_algo: BTreeMap<Algorithm, &AlgorithmAggregate> =
        report.algorithms.iter().map(|a| (a.algorithm, a)).collect();
    let mut out = format!(
        "{:<26}{:>8}{:>11}{:>10}\n",
        "NLP Algorithms", "Recall", "Precision", "F1-Score"
    );
    for algorithm in &report.ranking {
        let a = by_algo[algorithm];
        let _ = writeln!(
            out,
            "{:<26}{:>8.3}{:>11.3}{:>10.3}",
            algorithm.display_name(),
            a.mean_recall,
            a.mean_precision,
            a.mean_f1
        );
    }
    out
}
