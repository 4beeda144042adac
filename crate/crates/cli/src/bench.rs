use std::fmt::Write;
use std::time::{Duration, Instant};

use lyndon_core::prefix_order::prefix_standard_permutation_counted;
use lyndon_core::scan::lyndon_suffix_table_counted;
use lyndon_core::tree::{left_lyndon_forest_counted, left_lyndon_tree_counted};
use lyndon_core::ComparisonBudget;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::{Failure, Outcome};

/// `aa` then random `ab`/`b` blocks, which is always a Lyndon word.
fn lyndon_input(rng: &mut StdRng, n: usize) -> Vec<u8> {
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

fn best_of<T>(trials: usize, mut f: impl FnMut(&mut ComparisonBudget) -> T) -> (Duration, ComparisonBudget) {
    let mut best = Duration::MAX;
    let mut budget = ComparisonBudget::new();
    for _ in 0..trials {
        budget = ComparisonBudget::new();
        let started = Instant::now();
        std::hint::black_box(f(&mut budget));
        best = best.min(started.elapsed());
    }
    (best, budget)
}

pub fn run(n: usize, trials: usize, seed: u64) -> Outcome {
    if n < 3 || trials == 0 {
        return Err(Failure::Invalid("need n >= 3 and trials >= 1".into()));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let random: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..4)).collect();
    let lyndon = lyndon_input(&mut rng, n);

    let rows = [
        (
            "lyns (random)",
            best_of(trials, |b| lyndon_suffix_table_counted(&random, b).map(|t| t.len())),
        ),
        (
            "forest (random)",
            best_of(trials, |b| left_lyndon_forest_counted(&random, b).map(|f| f.len())),
        ),
        (
            "lyns (lyndon)",
            best_of(trials, |b| lyndon_suffix_table_counted(&lyndon, b).map(|t| t.len())),
        ),
        (
            "tree (lyndon)",
            best_of(trials, |b| left_lyndon_tree_counted(&lyndon, b).map(|t| t.len())),
        ),
        (
            "psp (lyndon)",
            best_of(trials, |b| {
                prefix_standard_permutation_counted(&lyndon, b).map(|p| p.len())
            }),
        ),
    ];

    let mut out = format!("n {n}, best of {trials}\n");
    let _ = writeln!(
        out,
        "{:<16} {:>12} {:>12} {:>12} {:>10} {:>10}",
        "op", "iterations", "comparisons", "bundles", "ms", "ns/letter"
    );
    for (name, (time, b)) in rows {
        let ms = time.as_secs_f64() * 1e3;
        let per = time.as_secs_f64() * 1e9 / n as f64;
        let _ = writeln!(
            out,
            "{name:<16} {:>12} {:>12} {:>12} {ms:>10.2} {per:>10.2}",
            b.loop_iterations, b.letter_comparisons, b.bundle_steps
        );
    }
    Ok(out)
}
