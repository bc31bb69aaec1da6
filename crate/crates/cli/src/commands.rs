use std::io::Write;
use std::path::{Path, PathBuf};

use summarax_core::report::ranking_table;
use summarax_core::textpipe::{
    build_frequency_table, document_tokens, is_numeral, prepare_document, remove_stopwords,
};
use summarax_core::{
    emit_report, evaluate_corpus, load_corpus, require_paired, summarize, EvalConfig, ReportFormat,
    StopwordList,
};

use crate::args::{self, ConfigFile, EvaluateArgs, FreqArgs, SummarizeArgs, STOPWORDS_ENV};
use crate::failure::{Failure, EXIT_IO};

/// Stopword list plus a description of where it came from.
pub fn load_stopwords(
    flag: Option<&Path>,
    file: &ConfigFile,
) -> Result<(StopwordList, String), Failure> {
    let env = std::env::var_os(STOPWORDS_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from);
    match flag
        .map(Path::to_path_buf)
        .or_else(|| file.stopwords.clone())
        .or(env)
    {
        Some(path) => {
            let text = read_text(&path)?;
            Ok((StopwordList::parse(&text), path.display().to_string()))
        }
        None => Ok((StopwordList::english(), "builtin:english".to_owned())),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::io(path, e))?;
    let text = String::from_utf8(bytes).map_err(|_| Failure {
        code: EXIT_IO,
        message: format!("{} is not valid UTF-8", path.display()),
    })?;
    Ok(text.replace("\r\n", "\n"))
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| Failure::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(|e| Failure::io(Path::new("<stdout>"), e))
        }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

pub fn summarize_cmd(
    args: &SummarizeArgs,
    stops: &StopwordList,
    file: &ConfigFile,
) -> Result<(), Failure> {
    let algorithm = args::resolve_algorithm(args.algo, file)?;
    let k = args::resolve_k(&args.summarizer, file)?;
    let params = args::resolve_summarizer(&args.summarizer, file)?;
    let text = read_text(&args.input)?;
    let sentences = prepare_document(&text);
    let summary = summarize(algorithm, &sentences, k, stops, &params)?;
    for w in &summary.warnings {
        log::warn!("{w}");
    }

    let with_scores = args.scores || file.scores.unwrap_or(false);
    let mut out = String::new();
    for &i in &summary.selected {
        let line = one_line(&sentences[i].raw);
        if with_scores {
            let score = summary.scores.get(&i).copied().unwrap_or(f64::NAN);
            out.push_str(&format!("{i}\t{score:.6}\t{line}\n"));
        } else {
            out.push_str(&line);
            out.push('\n');
        }
    }
    write_output(args.output.as_deref(), out.as_bytes())
}

pub fn evaluate_cmd(
    args: &EvaluateArgs,
    stops: &StopwordList,
    stop_source: String,
    file: &ConfigFile,
) -> Result<(), Failure> {
    let algorithms = args::resolve_algorithms(args.algos.clone(), file)?;
    let config = EvalConfig {
        k: args::resolve_k(&args.summarizer, file)?,
        rouge_n: args::resolve_rouge_n(args, file)?,
        bleu: args::resolve_bleu(args, file)?,
        summarizer: args::resolve_summarizer(&args.summarizer, file)?,
        stopword_source: stop_source,
        metric_stopwords: args.metric_stopwords || file.metric_stopwords.unwrap_or(false),
        workers: args.workers.or(file.workers).unwrap_or(0),
    };

    let corpus = require_paired(load_corpus(&args.corpus)?)?;
    let report = evaluate_corpus(&corpus, &algorithms, stops, &config)?;

    let json = emit_report(&report, ReportFormat::Json)?;
    write_output(args.output.as_deref(), &json)?;
    if let Some(csv_path) = &args.csv {
        write_output(Some(csv_path), &emit_report(&report, ReportFormat::Csv)?)?;
    }
    let table = ranking_table(&report);
    if args.output.is_some() {
        write_output(None, table.as_bytes())?;
    } else {
        eprint!("{table}");
    }
    Ok(())
}

pub fn freq_cmd(args: &FreqArgs, stops: &StopwordList, file: &ConfigFile) -> Result<(), Failure> {
    let text = read_text(&args.input)?;
    let mut tokens = document_tokens(&text);
    if !(args.raw || file.raw.unwrap_or(false)) {
        tokens = remove_stopwords(&tokens, stops);
    }
    if args.drop_single_char || file.drop_single_char.unwrap_or(false) {
        tokens.retain(|t| t.char_len() > 1 && !is_numeral(t));
    }
    let table = build_frequency_table(&tokens);
    let csv = table.to_csv(args.top.or(file.top));
    write_output(args.output.as_deref(), csv.as_bytes())
}
