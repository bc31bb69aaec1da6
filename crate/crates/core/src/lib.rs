//! Extractive text summarization and summary evaluation.
//!
//! Five sentence-extraction algorithms (TextRank, LexRank, Luhn, LSA and
//! KL-Sum) share one text pipeline and a small dense-numerics layer. The
//! [`metrics`] module scores summaries against references with BLEU and
//! ROUGE-N, and [`report`] runs the whole documents × algorithms matrix over
//! a [`corpus`] and serializes deterministic reports.
//!
//! ```
//! use summarax_core::{summarize, Algorithm, StopwordList, SummarizerParams};
//!
//! let text = "Alloys are strong. Strong alloys resist heat. Heat ruins weak metals.";
//! let sentences = summarax_core::textpipe::prepare_document(text);
//! let stops = StopwordList::english();
//! let summary = summarize(Algorithm::TextRank, &sentences, 1, &stops, &SummarizerParams::default()).unwrap();
//! assert_eq!(summary.selected.len(), 1);
//! ```

pub mod corpus;
pub mod error;
pub mod metrics;
pub mod numerics;
pub mod parallel;
pub mod report;
pub mod summarize;
pub mod textpipe;

pub use corpus::{load_corpus, require_paired, Corpus, Document, DocumentId};
pub use error::{Error, Result};
pub use metrics::{bleu_score, rouge_n, BleuBreakdown, BleuOptions, RougeScore};
pub use report::{emit_report, evaluate_corpus, EvalConfig, EvalReport, ReportFormat};
pub use summarize::{summarize, Algorithm, LexRankMode, SummarizerParams, Summary};
pub use textpipe::{StopwordList, Token, TokenizedSentence};
