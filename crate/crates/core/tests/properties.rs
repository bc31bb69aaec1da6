use std::collections::HashMap;

use proptest::prelude::*;
use summarax_core::corpus::{Corpus, Document, DocumentId};
use summarax_core::numerics::{fixed_point_residual, Convergence, DampingParams};
use summarax_core::summarize::{
    idf_modified_cosine, lexrank_graph, textrank_graph, SentenceVector,
};
use summarax_core::textpipe::{compute_idf, IdfTable, Token, TokenizedSentence};
use summarax_core::{
    emit_report, evaluate_corpus, summarize, Algorithm, EvalConfig, LexRankMode, ReportFormat,
    StopwordList, SummarizerParams,
};

const WORDS: &[&str] = &[
    "alloy", "phase", "grain", "the", "of", "strength", "nickel", "cobalt", "entropy", "and",
    "heat", "steel",
];

fn sentence_strategy() -> impl Strategy<Value = String> {
    proptest::collection::vec(0..WORDS.len(), 1..9).prop_map(|idx| {
        let mut words: Vec<&str> = idx.iter().map(|&i| WORDS[i]).collect();
        let first = words[0].to_uppercase();
        words[0] = &first;
        format!("{}.", words.join(" "))
    })
}

fn document_strategy(max: usize) -> impl Strategy<Value = Vec<TokenizedSentence>> {
    proptest::collection::vec(sentence_strategy(), 1..max).prop_map(|raws| {
        raws.into_iter()
            .enumerate()
            .map(|(i, r)| TokenizedSentence::new(i, r))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn summaries_have_the_promised_shape(doc in document_strategy(12), k in 1usize..6) {
        let stops = StopwordList::english();
        for algorithm in Algorithm::ALL {
            let s = summarize(algorithm, &doc, k, &stops, &SummarizerParams::default()).unwrap();
            prop_assert_eq!(s.selected.len(), k.min(doc.len()));
            prop_assert!(s.selected.windows(2).all(|w| w[0] < w[1]));
            let joined: Vec<&str> = s.selected.iter().map(|&i| doc[i].raw.as_str()).collect();
            prop_assert_eq!(&s.text, &joined.join(" "));
            let again = summarize(algorithm, &doc, k, &stops, &SummarizerParams::default()).unwrap();
            prop_assert_eq!(s, again);
        }
    }

    #[test]
    fn graph_rankers_meet_the_residual_bound(doc in document_strategy(10)) {
        let stops = StopwordList::english();
        let params = DampingParams::default();
        for graph in [
            textrank_graph(&doc, &stops),
            lexrank_graph(&doc, &stops, LexRankMode::Continuous),
            lexrank_graph(&doc, &stops, LexRankMode::Threshold { threshold: 0.1 }),
        ] {
            for i in 0..graph.rows() {
                prop_assert_eq!(graph[(i, i)], 0.0);
                for j in 0..graph.cols() {
                    prop_assert_eq!(graph[(i, j)], graph[(j, i)]);
                }
            }
            let out = summarax_core::numerics::damped_score_iteration(&graph, &params).unwrap();
            prop_assert_eq!(out.status, Convergence::Converged);
            prop_assert!(fixed_point_residual(&graph, params.damping, &out.values).unwrap() <= params.tol);
        }
    }

    #[test]
    fn cosine_is_symmetric_bounded_and_scale_free(a in sentence_strategy(), b in sentence_strategy()) {
        let ta = summarax_core::textpipe::tokenize(&a);
        let tb = summarax_core::textpipe::tokenize(&b);
        let idf = compute_idf(&[ta.clone(), tb.clone()]).unwrap();
        let scaled = idf.scaled(10.0);
        let (x, y) = (SentenceVector::new(&ta, &idf), SentenceVector::new(&tb, &idf));
        let c = idf_modified_cosine(&x, &y);
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert_eq!(c, idf_modified_cosine(&y, &x));
        prop_assert!((idf_modified_cosine(&x, &x) - 1.0).abs() <= 1e-12);
        let c10 = idf_modified_cosine(&SentenceVector::new(&ta, &scaled), &SentenceVector::new(&tb, &scaled));
        prop_assert!((c - c10).abs() <= 1e-12);
    }
}

#[test]
fn cosine_with_hand_built_idf() {
    let idf: HashMap<Token, f64> = [("alloy", 1.0), ("strength", 2.0), ("ductility", 2.0)]
        .into_iter()
        .map(|(w, v)| (Token::normalize(w).unwrap(), v))
        .collect();
    let idf = IdfTable::from_map(idf, 2);
    let x = SentenceVector::new(&summarax_core::textpipe::tokenize("alloy strength"), &idf);
    let y = SentenceVector::new(&summarax_core::textpipe::tokenize("alloy ductility"), &idf);
    assert!((idf_modified_cosine(&x, &y) - 0.2).abs() < 1e-15);
}

fn corpus_from(pairs: &[(&str, &str, &str)]) -> Corpus {
    let docs = pairs
        .iter()
        .map(|(id, t, _)| Document::new(DocumentId::new(*id).unwrap(), *t).unwrap())
        .collect();
    let refs = pairs
        .iter()
        .map(|(id, _, r)| (DocumentId::new(*id).unwrap(), r.to_string()))
        .collect();
    Corpus::new(docs, refs).unwrap()
}

#[test]
fn evaluation_ignores_document_order_and_worker_count() {
    let pairs = [
        (
            "a",
            "Nickel alloys resist heat. Cobalt adds strength. The grain size shrinks.",
            "Nickel alloys resist heat.",
        ),
        (
            "b",
            "Steel rusts in water. Chromium forms a film. The film protects steel.",
            "Chromium protects steel.",
        ),
        (
            "c",
            "Entropy favours solid solutions. Five elements mix. Phases stay simple.",
            "Entropy gives simple phases.",
        ),
    ];
    let mut reversed = pairs;
    reversed.reverse();
    let stops = StopwordList::english();
    let mut outputs = Vec::new();
    for (p, workers) in [(&pairs, 1), (&reversed, 1), (&pairs, 4), (&reversed, 0)] {
        let config = EvalConfig {
            workers,
            ..Default::default()
        };
        let report = evaluate_corpus(&corpus_from(p), &Algorithm::ALL, &stops, &config).unwrap();
        outputs.push(emit_report(&report, ReportFormat::Json).unwrap());
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn ranking_follows_mean_f1() {
    let pairs = [(
        "a",
        "Tungsten resists creep at high temperature. The lab was painted blue yesterday. Tungsten alloys keep strength at high temperature.",
        "Tungsten alloys resist creep and keep strength at high temperature.",
    )];
    let config = EvalConfig {
        k: 1,
        ..Default::default()
    };
    let report = evaluate_corpus(
        &corpus_from(&pairs),
        &Algorithm::ALL,
        &StopwordList::english(),
        &config,
    )
    .unwrap();
    let f1: HashMap<Algorithm, f64> = report
        .algorithms
        .iter()
        .map(|a| (a.algorithm, a.mean_f1))
        .collect();
    for w in report.ranking.windows(2) {
        let (a, b) = (f1[&w[0]], f1[&w[1]]);
        assert!(a > b || (a == b && w[0].name() < w[1].name()));
    }
    assert_eq!(report.ranking.len(), 5);
}
