//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p lyndon-core --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use lyndon_core::oracle::{
    enumerate_lyndon, enumerate_words, for_each_lyndon_word, half_zimin, naive_left_tree, naive_lyns, naive_psp,
};
use lyndon_core::prefix_order::prefix_standard_permutation_counted;
use lyndon_core::scan::{lyndon_suffix_table_counted, lyndon_suffix_table_lyndon};
use lyndon_core::tree::left_lyndon_tree_counted;
use lyndon_core::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn report(criterion: u32, title: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS criterion {criterion}: {title}");
    } else {
        println!("FAIL criterion {criterion}: {title}");
        for f in failures.iter().take(10) {
            println!("    {f}");
        }
    }
    assert!(failures.is_empty(), "criterion {criterion} failed: {failures:?}");
}

fn check<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        failures.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn perm(values: &[usize]) -> Permutation {
    Permutation::new(values.to_vec()).unwrap()
}

#[test]
fn criterion_1_golden_tables() {
    let mut failures = Vec::new();
    check(
        &mut failures,
        "lyns(babbababbaabb)",
        lyndon_suffix_table(b"babbababbaabb").unwrap().into_vec(),
        vec![1, 1, 2, 3, 1, 2, 1, 2, 5, 1, 1, 3, 4],
    );
    let running = b"ababbababbabac";
    let (lyns, period) = lyndon_suffix_table_lyndon(running).unwrap();
    check(
        &mut failures,
        "lyns(ababbababbabac)",
        lyns.as_slice(),
        &[1, 2, 1, 2, 5, 1, 2, 1, 2, 5, 1, 2, 1, 14],
    );
    check(
        &mut failures,
        "period(ababbababbabac)",
        period.as_slice(),
        &[1, 2, 2, 2, 5, 5, 5, 5, 5, 5, 5, 5, 5, 14],
    );
    check(
        &mut failures,
        "lyns via general scan",
        lyndon_suffix_table(running).unwrap().into_vec(),
        lyns.into_vec(),
    );
    check(
        &mut failures,
        "rank(ababbababbabac)",
        prefix_rank_table(running).unwrap().into_vec(),
        vec![0, 3, 1, 2, 12, 4, 7, 5, 6, 11, 8, 10, 9],
    );
    check(
        &mut failures,
        "psp(ababbababbabac)",
        prefix_standard_permutation(running).unwrap().into_vec(),
        vec![0, 2, 3, 1, 5, 7, 8, 6, 10, 12, 11, 9, 4],
    );
    report(1, "golden lyns, period, rank and psp tables", &failures);
}

#[test]
fn criterion_2_reverse_engineering_goldens() {
    let mut failures = Vec::new();
    check(
        &mut failures,
        "inverse_psp_binary(1,0,4,3,5,2,6)",
        inverse_psp_binary(&perm(&[1, 0, 4, 3, 5, 2, 6])).unwrap(),
        InverseOutcome::Word(b"aabaabbb".to_vec()),
    );
    check(
        &mut failures,
        "inverse_psp_binary(1,0,5,3,2,4,6)",
        inverse_psp_binary(&perm(&[1, 0, 5, 3, 2, 4, 6])).unwrap(),
        InverseOutcome::Rejected {
            candidate: b"aabababb".to_vec(),
            candidate_psp: Some(perm(&[1, 0, 3, 2, 5, 4, 6])),
        },
    );
    let p = perm(&[0, 2, 1, 4, 6, 5, 3, 7]);
    check(
        &mut failures,
        "periods_from_psp",
        periods_from_psp(&p, 9).unwrap().into_vec(),
        vec![1, 2, 2, 4, 4, 4, 4, 8, 9],
    );
    check(
        &mut failures,
        "word_from_psp",
        word_from_psp(&p, 9).unwrap(),
        b"abacabadb".to_vec(),
    );
    report(2, "reverse-engineering goldens", &failures);
}

#[test]
fn criterion_3_factorisation_golden() {
    let mut failures = Vec::new();
    let y = b"babbababbaabb";
    check(
        &mut failures,
        "lyndon_factorize",
        lyndon_factorize(y).unwrap(),
        vec![0, 1, 4, 9],
    );
    let forest = left_lyndon_forest(y).unwrap();
    let factors: Vec<&[u8]> = forest.factors().map(|(range, _)| &y[range]).collect();
    check(
        &mut failures,
        "forest factors",
        factors,
        vec![&b"b"[..], b"abb", b"ababb", b"aabb"],
    );
    check(&mut failures, "forest internal nodes", forest.internal_count(), 9);
    report(3, "factorisation and forest of babbababbaabb", &failures);
}

#[test]
fn criterion_4_exhaustive_oracle_suites() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut words = 0usize;
    for y in enumerate_words(2, 12).chain(enumerate_words(3, 8)) {
        words += 1;
        if lyndon_suffix_table(&y).unwrap() != naive_lyns(&y).unwrap() {
            failures.push(format!("lyns mismatch on {}", String::from_utf8_lossy(&y)));
        }
    }

    let binary: Vec<Vec<u8>> = enumerate_lyndon(2, 14).filter(|w| w.len() >= 2).collect();
    let ternary: Vec<Vec<u8>> = enumerate_lyndon(3, 9).filter(|w| w.len() >= 2).collect();
    let mut lyndon = 0usize;
    for (y, is_binary) in binary
        .iter()
        .map(|w| (w, true))
        .chain(ternary.iter().map(|w| (w, false)))
    {
        lyndon += 1;
        let shown = String::from_utf8_lossy(y);
        if left_lyndon_tree(y).unwrap() != naive_left_tree(y).unwrap() {
            failures.push(format!("tree mismatch on {shown}"));
        }
        let psp = prefix_standard_permutation(y).unwrap();
        if psp != naive_psp(y).unwrap() {
            failures.push(format!("psp mismatch on {shown}"));
        }
        if !check_theorem6(y).unwrap() {
            failures.push(format!("creation order differs from psp on {shown}"));
        }
        if !check_cartesian(y).unwrap() {
            failures.push(format!("not a Cartesian tree of ranks on {shown}"));
        }
        if is_binary && inverse_psp_binary(&psp).unwrap() != InverseOutcome::Word(y.clone()) {
            failures.push(format!("binary inverse failed on {shown}"));
        }
    }
    let elapsed = started.elapsed();
    println!("    {words} words, {lyndon} Lyndon words, {elapsed:.2?}");
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}, budget 60 s"));
    }
    report(4, "exhaustive oracle equivalences", &failures);
}

#[test]
fn criterion_5_fiber_minimality() {
    let mut failures = Vec::new();
    let mut fibers: BTreeMap<Permutation, Vec<Vec<u8>>> = BTreeMap::new();
    for y in enumerate_lyndon(4, 8).filter(|w| w.len() >= 2) {
        fibers.entry(naive_psp(&y).unwrap()).or_default().push(y);
    }
    for (p, fiber) in &fibers {
        let n = p.len() + 1;
        let minimum = fiber.iter().min().unwrap();
        match word_from_psp(p, n) {
            Ok(z) if &z == minimum => {}
            other => failures.push(format!(
                "fiber of {p}: word_from_psp gave {other:?}, minimum {minimum:?}"
            )),
        }
    }

    let target = perm(&[0, 2, 3, 1, 4]);
    let fiber: BTreeSet<String> = enumerate_lyndon(3, 6)
        .filter(|w| w.len() == 6 && naive_psp(w).unwrap() == target)
        .map(|w| String::from_utf8(w).unwrap())
        .collect();
    let expected: BTreeSet<String> = ["ababbb", "ababbc", "ababcb", "ababcc"].map(String::from).into();
    check(&mut failures, "fiber of (0,2,3,1,4) over {a,b,c}", fiber, expected);
    println!("    {} fibers checked", fibers.len());
    report(5, "word_from_psp is the fiber minimum", &failures);
}

#[test]
fn criterion_6_zimin_recovery_and_alphabet_bound() {
    let mut failures = Vec::new();
    for k in 2..=5 {
        let z = half_zimin(k);
        let psp = prefix_standard_permutation(&z).unwrap();
        let n = z.len();
        let recovered = word_from_psp(&psp, n).unwrap();
        let letters = recovered.iter().collect::<BTreeSet<_>>().len();
        check(
            &mut failures,
            &format!("letters of recovered Z{k}"),
            letters,
            (n + 1).ilog2() as usize + 1,
        );
        check(&mut failures, &format!("recovery of Z{k}"), recovered, z);
    }

    // Quaternary words include every binary and ternary one.
    let mut worst_by_len = [0usize; 17];
    let mut count = 0u64;
    for_each_lyndon_word(4, 16, |y| {
        let n = y.len();
        if n < 2 {
            return;
        }
        count += 1;
        let psp = prefix_standard_permutation(y).unwrap();
        match word_from_psp(&psp, n) {
            Ok(z) => {
                // Outputs use a prefix of the alphabet, so the top letter counts them.
                let letters = (z.iter().max().unwrap() - b'a' + 1) as usize;
                worst_by_len[n] = worst_by_len[n].max(letters);
            }
            Err(e) => failures.push(format!("{}: {e}", String::from_utf8_lossy(y))),
        }
    });
    for (n, &worst) in worst_by_len.iter().enumerate().skip(2) {
        let bound = (n + 1).ilog2() as usize + 1;
        if worst > bound {
            failures.push(format!("length {n}: {worst} letters, bound {bound}"));
        }
    }
    for (n, letters) in [(2, 2), (4, 3), (8, 4)] {
        check(
            &mut failures,
            &format!("worst letters at length {n}"),
            worst_by_len[n],
            letters,
        );
    }
    println!(
        "    {count} Lyndon words, worst letters by length {:?}",
        &worst_by_len[2..]
    );
    report(6, "half Zimin recovery and alphabet bound", &failures);
}

/// `aa` followed by random `ab`/`b` blocks: every later `a` is followed by
/// `b`, so each proper suffix beats the word and it is Lyndon.
fn random_lyndon_word(rng: &mut StdRng, n: usize) -> Vec<u8> {
    assert!(n >= 3);
    let mut y = Vec::with_capacity(n);
    y.extend_from_slice(b"aa");
    while y.len() < n {
        if n - y.len() >= 2 && rng.gen_bool(0.5) {
            y.extend_from_slice(b"ab");
        } else {
            y.push(b'b');
        }
    }
    y
}

fn time_pipeline(y: &[u8]) -> Duration {
    let started = Instant::now();
    let lyns = lyndon_suffix_table(y).unwrap();
    let tree = left_lyndon_tree(y).unwrap();
    let psp = prefix_standard_permutation(y).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(
        (lyns.len(), tree.internal_count(), psp.len()),
        (y.len(), y.len() - 1, y.len() - 1)
    );
    elapsed
}

#[test]
fn criterion_7_linearity() {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x1d0d);
    let n = 1_000_000usize;

    let mut worst_iterations = 0f64;
    for trial in 0..100 {
        let sigma = 2 + (trial % 3) as u8;
        let y: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect();
        let mut budget = ComparisonBudget::new();
        lyndon_suffix_table_counted(&y, &mut budget).unwrap();
        if budget.loop_iterations > 2 * n as u64 - 2 || budget.letter_comparisons > 2 * n as u64 {
            failures.push(format!("trial {trial}: {budget:?}"));
        }
        worst_iterations = worst_iterations.max(budget.loop_iterations as f64 / n as f64);
    }

    for trial in 0..5 {
        let y = random_lyndon_word(&mut rng, n);
        let mut budget = ComparisonBudget::new();
        let tree = left_lyndon_tree_counted(&y, &mut budget).unwrap();
        check(
            &mut failures,
            &format!("tree {trial} internal nodes"),
            tree.internal_count(),
            n - 1,
        );
        check(
            &mut failures,
            &format!("tree {trial} bundling iterations"),
            budget.bundle_steps,
            n as u64 - 1,
        );
        let mut budget = ComparisonBudget::new();
        prefix_standard_permutation_counted(&y, &mut budget).unwrap();
        check(
            &mut failures,
            &format!("psp {trial} bundling iterations"),
            budget.bundle_steps,
            n as u64 - 1,
        );
    }

    let small = random_lyndon_word(&mut rng, 1_000_000);
    let large = random_lyndon_word(&mut rng, 10_000_000);
    let best = |y: &[u8]| (0..3).map(|_| time_pipeline(y)).min().unwrap();
    let (t_small, t_large) = (best(&small), best(&large));
    let ratio = t_large.as_secs_f64() / t_small.as_secs_f64();
    println!(
        "    worst iterations/n {worst_iterations:.3}; pipeline 10^6: {t_small:.2?}, 10^7: {t_large:.2?}, ratio {ratio:.2}"
    );
    if ratio > 15.0 {
        failures.push(format!("time ratio {ratio:.2} exceeds 15"));
    }
    report(7, "linear counters and wall-clock scaling", &failures);
}
