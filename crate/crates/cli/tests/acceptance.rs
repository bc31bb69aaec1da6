//! Acceptance criteria, one PASS/FAIL line each. Oracles here are written
//! independently of the library code paths they check.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use summarax_core::metrics::{bleu_score, brevity_penalty, f1_from, rouge_n, BleuOptions};
use summarax_core::numerics::{
    damped_score_iteration, svd_decompose, Convergence, DampingParams, DenseMatrix,
};
use summarax_core::summarize::{
    idf_modified_cosine, luhn_window_score, summarize_klsum, summarize_luhn, SentenceVector,
};
use summarax_core::textpipe::{compute_idf, Token, TokenizedSentence};
use summarax_core::{summarize, Algorithm, StopwordList, SummarizerParams};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, start: Instant) -> Result<(), String> {
    ensure(start.elapsed() < budget, || {
        format!("took {:?}, budget {budget:?}", start.elapsed())
    })
}

fn toks(words: &[&str]) -> Vec<Token> {
    words.iter().map(|w| Token::normalize(w).unwrap()).collect()
}

const VOCAB: &[&str] = &[
    "alloy", "phase", "grain", "strength", "nickel", "cobalt", "entropy", "heat", "steel",
    "boundary", "twin", "creep", "oxide", "film", "copper", "iron", "chromium", "laser", "powder",
    "crack",
];

fn random_tokens(rng: &mut ChaCha8Rng, len: usize) -> Vec<Token> {
    let words: Vec<&str> = (0..len)
        .map(|_| VOCAB[rng.gen_range(0..VOCAB.len())])
        .collect();
    toks(&words)
}

// 1
fn f1_consistency() -> Outcome {
    let start = Instant::now();
    let rows = [
        (0.370, "0.540"),
        (0.299, "0.460"),
        (0.423, "0.595"),
        (0.350, "0.519"),
        (0.250, "0.400"),
    ];
    for (precision, expected) in rows {
        let f1 = f1_from(precision, 1.0).map_err(|e| e.to_string())?;
        let got = format!("{f1:.3}");
        ensure(got == expected, || {
            format!("p={precision}: {got} != {expected}")
        })?;
    }
    within(Duration::from_secs(1), start)?;
    Ok("5/5 rows reproduce at 3 decimals".into())
}

// 2
fn metric_identity() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for case in 0..50 {
        let len = rng.gen_range(4..=200);
        let x = random_tokens(&mut rng, len);
        let b = bleu_score(&x, &x, &BleuOptions::order(4)).map_err(|e| e.to_string())?;
        ensure((b.score - 1.0).abs() <= 1e-12, || {
            format!("case {case}: bleu {}", b.score)
        })?;
        for n in [1, 2] {
            let r = rouge_n(&x, &x, n).map_err(|e| e.to_string())?;
            for v in [r.recall, r.precision, r.f1] {
                ensure((v - 1.0).abs() <= 1e-12, || {
                    format!("case {case}: rouge-{n} {r:?}")
                })?;
            }
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok("50 sequences, BLEU-4 = 1 and ROUGE-1/2 = (1,1,1)".into())
}

// 3
fn damped_iteration_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let params = DampingParams::default();
    let d = params.damping;
    let mut worst = 0.0f64;
    for case in 0..200 {
        let n = rng.gen_range(1..=5);
        let mut w = vec![vec![0.0; n]; n];
        for row in w.iter_mut() {
            for v in row.iter_mut() {
                if rng.gen_bool(0.6) {
                    *v = rng.gen_range(0.0..3.0);
                }
            }
        }
        let adj = DenseMatrix::from_rows(&w).unwrap();
        let out = damped_score_iteration(&adj, &params).map_err(|e| e.to_string())?;
        ensure(out.status == Convergence::Converged, || {
            format!("case {case}: not converged")
        })?;

        // Dense solve of (I - d Mᵀ) x = (1 - d) 1, M[j][i] = w_ji / out_j.
        let mut system = DMatrix::<f64>::identity(n, n);
        for j in 0..n {
            let out_w: f64 = w[j].iter().sum();
            if out_w > 0.0 {
                for i in 0..n {
                    system[(i, j)] -= d * w[j][i] / out_w;
                }
            }
        }
        let rhs = DVector::from_element(n, 1.0 - d);
        let exact = system.lu().solve(&rhs).ok_or("singular system")?;
        for i in 0..n {
            let incoming: f64 = (0..n)
                .filter(|&j| w[j].iter().sum::<f64>() > 0.0)
                .map(|j| w[j][i] / w[j].iter().sum::<f64>() * out.values[j])
                .sum();
            let residual = (out.values[i] - ((1.0 - d) + d * incoming)).abs();
            let err = (out.values[i] - exact[i]).abs();
            worst = worst.max(err);
            ensure(residual <= 1e-6, || {
                format!("case {case}: residual {residual}")
            })?;
            ensure(err <= 1e-6, || {
                format!(
                    "case {case} node {i}: |{} - {}| = {err}",
                    out.values[i], exact[i]
                )
            })?;
        }
    }
    within(Duration::from_secs(5), start)?;
    Ok(format!(
        "200 graphs, max deviation from dense solve {worst:.2e}"
    ))
}

// 4
fn svd_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut eig_checked = 0;
    for case in 0..300 {
        let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let mut data: Vec<f64> = (0..m * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if case % 7 == 0 && n > 1 {
            // Duplicate a column to exercise rank deficiency.
            for i in 0..m {
                data[i * n + 1] = data[i * n];
            }
        }
        let a = DenseMatrix::from_vec(m, n, data).unwrap();
        let svd = svd_decompose(&a).map_err(|e| e.to_string())?;
        let k = m.min(n);
        let norm = a.frobenius_norm();

        let r = svd.reconstruct();
        let err: f64 = (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (r[(i, j)] - a[(i, j)]).powi(2))
            .sum::<f64>()
            .sqrt();
        ensure(err <= 1e-8 * norm, || {
            format!("case {case} {m}x{n}: reconstruction {err:e}")
        })?;

        for (label, prod) in [
            ("UᵀU", svd.u.transpose().matmul(&svd.u).unwrap()),
            ("VtVtᵀ", svd.vt.matmul(&svd.vt.transpose()).unwrap()),
        ] {
            for i in 0..k {
                for j in 0..k {
                    let e = if i == j { 1.0 } else { 0.0 };
                    let dev = (prod[(i, j)] - e).abs();
                    ensure(dev <= 1e-8, || {
                        format!("case {case}: {label}[{i},{j}] off by {dev:e}")
                    })?;
                }
            }
        }
        let s = &svd.singular_values;
        ensure(
            s.windows(2).all(|w| w[0] >= w[1]) && s.iter().all(|&v| v >= 0.0),
            || format!("case {case}: singular values {s:?}"),
        )?;

        if m <= 4 && n <= 4 {
            let dm = DMatrix::from_row_slice(m, n, a.as_slice());
            let mut eig: Vec<f64> = SymmetricEigen::new(dm.transpose() * &dm)
                .eigenvalues
                .iter()
                .copied()
                .collect();
            eig.sort_by(|x, y| y.total_cmp(x));
            for (i, e) in eig.iter().enumerate() {
                let sq = if i < k { s[i] * s[i] } else { 0.0 };
                ensure((sq - e).abs() <= 1e-8, || {
                    format!("case {case}: σ²[{i}]={sq} vs λ={e}")
                })?;
            }
            eig_checked += 1;
        }
    }
    within(Duration::from_secs(5), start)?;
    Ok(format!(
        "300 matrices up to 8x8, {eig_checked} checked against eigenvalues of AᵀA"
    ))
}

// 5
fn oracle_kl(p: &BTreeMap<&str, f64>, tokens: &[&str], eps: f64) -> f64 {
    let mut counts: HashMap<&str, f64> = HashMap::new();
    for t in tokens {
        *counts.entry(t).or_default() += 1.0;
    }
    let total = tokens.len() as f64;
    p.iter()
        .map(|(w, pw)| {
            let q = if total > 0.0 {
                counts.get(w).copied().unwrap_or(0.0) / total
            } else {
                0.0
            };
            pw * (pw / q.max(eps)).ln()
        })
        .sum()
}

fn klsum_greedy_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let stops = StopwordList::empty();
    let eps = 1e-12;
    let mut steps = 0;
    for case in 0..80 {
        let n = rng.gen_range(1..=8);
        let vocab = &VOCAB[..rng.gen_range(2..=8)];
        let doc: Vec<TokenizedSentence> = (0..n)
            .map(|i| {
                let words: Vec<&str> = (0..rng.gen_range(1..=6))
                    .map(|_| vocab[rng.gen_range(0..vocab.len())])
                    .collect();
                TokenizedSentence::new(i, words.join(" "))
            })
            .collect();
        let words: Vec<Vec<&str>> = doc
            .iter()
            .map(|s| s.tokens.iter().map(Token::as_str).collect())
            .collect();
        let all: Vec<&str> = words.iter().flatten().copied().collect();
        let mut p: BTreeMap<&str, f64> = BTreeMap::new();
        for w in &all {
            *p.entry(w).or_default() += 1.0 / all.len() as f64;
        }

        let k = rng.gen_range(1..=3);
        let mut chosen: Vec<usize> = Vec::new();
        for step in 1..=k.min(n) {
            let s = summarize_klsum(&doc, step, &stops, eps).map_err(|e| e.to_string())?;
            let new: Vec<usize> = s
                .selected
                .iter()
                .copied()
                .filter(|i| !chosen.contains(i))
                .collect();
            ensure(new.len() == 1, || {
                format!("case {case}: step {step} added {new:?}")
            })?;
            let pick = new[0];

            let divergences: Vec<(usize, f64)> = (0..n)
                .filter(|j| !chosen.contains(j))
                .map(|j| {
                    let mut summary: Vec<&str> = chosen
                        .iter()
                        .flat_map(|&c| words[c].iter().copied())
                        .collect();
                    summary.extend(words[j].iter().copied());
                    (j, oracle_kl(&p, &summary, eps))
                })
                .collect();
            let min = divergences
                .iter()
                .map(|d| d.1)
                .fold(f64::INFINITY, f64::min);
            let expected = divergences.iter().find(|d| d.1 <= min + 1e-12).unwrap().0;
            let picked = divergences.iter().find(|d| d.0 == pick).unwrap().1;
            ensure(picked <= min + 1e-12, || {
                format!("case {case} step {step}: picked {picked} > min {min}")
            })?;
            ensure(pick == expected, || {
                format!("case {case} step {step}: picked {pick}, expected {expected}")
            })?;
            chosen.push(pick);
            steps += 1;
        }
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!(
        "80 documents, {steps} greedy steps at the exhaustive minimum"
    ))
}

// 6
fn luhn_hand_cases() -> Outcome {
    let mask = |p: &str| p.chars().map(|c| c == 'S').collect::<Vec<_>>();
    for (pattern, expected) in [
        ("SxxS", 1.0),
        ("SSS", 3.0),
        ("xxxx", 0.0),
        ("SS", 2.0),
        ("SxxxxxS", 1.0),
    ] {
        let got = luhn_window_score(&mask(pattern), 4);
        ensure(got == expected, || {
            format!("{pattern}: {got} != {expected}")
        })?;
    }
    // Sentence A = [S,S], B = [S,x,x,x,x,x,S] with "w" the only significant word.
    let doc = summarax_core::textpipe::prepare_document("W w. W a1 a2 a3 a4 a5 w.");
    let s = summarize_luhn(&doc, 1, &StopwordList::empty(), 0.1, 4).map_err(|e| e.to_string())?;
    ensure(
        s.scores[&0] == 2.0 && s.scores[&1] == 1.0 && s.selected == vec![0],
        || format!("{s:?}"),
    )?;
    Ok("1.0, 3.0, 0.0 and the gap-5 split reproduce exactly".into())
}

// 7
fn brevity_monotone() -> Outcome {
    let r = 20;
    let mut prev = 0.0;
    for c in 1..=40 {
        let bp = brevity_penalty(c, r).map_err(|e| e.to_string())?;
        ensure(bp >= prev, || format!("decreased at c={c}"))?;
        if c >= r {
            ensure(bp == 1.0, || format!("c={c}: {bp}"))?;
        } else {
            let expected = (1.0 - r as f64 / c as f64).exp();
            ensure((bp - expected).abs() <= 1e-12, || {
                format!("c={c}: {bp} vs {expected}")
            })?;
        }
        prev = bp;
    }
    Ok("c = 1..40 at r = 20".into())
}

// 8
fn cosine_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..1000 {
        let units: Vec<Vec<Token>> = (0..rng.gen_range(2..6))
            .map(|_| {
                let len = rng.gen_range(1..10);
                random_tokens(&mut rng, len)
            })
            .collect();
        let idf = compute_idf(&units).map_err(|e| e.to_string())?;
        let scaled = idf.scaled(10.0);
        let (a, b) = (&units[0], &units[1]);
        let (x, y) = (SentenceVector::new(a, &idf), SentenceVector::new(b, &idf));
        let c = idf_modified_cosine(&x, &y);
        ensure((0.0..=1.0).contains(&c), || format!("case {case}: {c}"))?;
        ensure((c - idf_modified_cosine(&y, &x)).abs() <= 1e-12, || {
            format!("case {case}: asymmetric")
        })?;
        ensure((idf_modified_cosine(&x, &x) - 1.0).abs() <= 1e-12, || {
            format!("case {case}: self != 1")
        })?;
        let c10 = idf_modified_cosine(
            &SentenceVector::new(a, &scaled),
            &SentenceVector::new(b, &scaled),
        );
        ensure((c - c10).abs() <= 1e-12, || {
            format!("case {case}: scaled {c} vs {c10}")
        })?;
    }
    Ok("1000 random pairs".into())
}

// 9
fn end_to_end_determinism() -> Outcome {
    let start = Instant::now();
    let corpus = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/sample_corpus");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for workers in [1, 8] {
        let path = dir.path().join(format!("report-{workers}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_summarax"))
            .arg("evaluate")
            .arg(&corpus)
            .args(["--workers", &workers.to_string(), "--output"])
            .arg(&path)
            .env_remove("SUMMARAX_STOPWORDS")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), || {
            String::from_utf8_lossy(&status.stderr).into_owned()
        })?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || {
        "reports differ between --workers 1 and 8".into()
    })?;
    let report: serde_json::Value =
        serde_json::from_slice(&outputs[0]).map_err(|e| e.to_string())?;
    let algos = report["algorithms"].as_array().map_or(0, Vec::len);
    let docs = report["corpus"]["documents"].as_u64().unwrap_or(0);
    ensure(algos == 5 && docs == 20, || {
        format!("{algos} aggregates over {docs} documents")
    })?;
    within(Duration::from_secs(10), start)?;
    Ok(format!(
        "{} byte reports identical, {:?} total",
        outputs[0].len(),
        start.elapsed()
    ))
}

// 10
fn summary_shapes() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let stops = StopwordList::english();
    let params = SummarizerParams::default();
    let mut checked = 0;
    for case in 0..200 {
        let n = rng.gen_range(1..=30);
        let doc: Vec<TokenizedSentence> = (0..n)
            .map(|i| {
                let len = rng.gen_range(1..12);
                let mut words: Vec<String> = (0..len)
                    .map(|_| {
                        if rng.gen_bool(0.25) {
                            ["the", "of", "and", "is"][rng.gen_range(0..4)].to_owned()
                        } else {
                            VOCAB[rng.gen_range(0..VOCAB.len())].to_owned()
                        }
                    })
                    .collect();
                words[0] = words[0].to_uppercase();
                TokenizedSentence::new(i, format!("{}.", words.join(" ")))
            })
            .collect();
        for algorithm in Algorithm::ALL {
            for k in [1, 3, 100] {
                let s =
                    summarize(algorithm, &doc, k, &stops, &params).map_err(|e| e.to_string())?;
                ensure(s.selected.windows(2).all(|w| w[0] < w[1]), || {
                    format!("case {case} {algorithm}: order")
                })?;
                ensure(s.selected.len() == k.min(n), || {
                    format!("case {case} {algorithm} k={k}: size")
                })?;
                let distinct: HashSet<_> = s.selected.iter().collect();
                ensure(
                    distinct.len() == s.selected.len() && s.selected.iter().all(|&i| i < n),
                    || format!("case {case} {algorithm}: indices {:?}", s.selected),
                )?;
                let text: Vec<&str> = s.selected.iter().map(|&i| doc[i].raw.as_str()).collect();
                ensure(s.text == text.join(" "), || {
                    format!("case {case} {algorithm}: text")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} summaries well-formed"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 F1 from precision and recall", f1_consistency),
        ("2 metric identity", metric_identity),
        ("3 damped-iteration oracle", damped_iteration_oracle),
        ("4 SVD oracle", svd_oracle),
        ("5 KL-Sum greedy oracle", klsum_greedy_oracle),
        ("6 Luhn hand cases", luhn_hand_cases),
        ("7 brevity-penalty monotonicity", brevity_monotone),
        ("8 cosine properties", cosine_properties),
        ("9 end-to-end determinism", end_to_end_determinism),
        ("10 summary shapes", summary_shapes),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
