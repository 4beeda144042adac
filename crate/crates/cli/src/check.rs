use std::fmt::Write;

use lyndon_core::oracle::{
    enumerate_words, for_each_lyndon_word, naive_factor_starts, naive_left_tree, naive_lyns, naive_periods, naive_psp,
};
use lyndon_core::scan::lyndon_suffix_table_lyndon;
use lyndon_core::*;

use crate::{Failure, Outcome};

#[derive(Default)]
struct Tally {
    passed: u64,
    total: u64,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.total += 1;
        self.passed += ok as u64;
    }
}

const SUITES: [&str; 9] = [
    "lyns",
    "forest",
    "tree",
    "psp",
    "creation-order",
    "cartesian",
    "periods",
    "word-from-psp",
    "inverse-psp",
];

pub fn run(sigma: usize, maxlen: usize) -> Outcome {
    if !(1..=26).contains(&sigma) || maxlen == 0 {
        return Err(Failure::Invalid("need 1 <= sigma <= 26 and maxlen >= 1".into()));
    }
    let mut tally: [Tally; 9] = Default::default();

    for y in enumerate_words(sigma, maxlen) {
        tally[0].record(lyndon_suffix_table(&y).ok() == naive_lyns(&y).ok());
        let forest_ok = left_lyndon_forest(&y).is_ok_and(|forest| {
            Some(forest.starts().to_vec()) == naive_factor_starts(&y).ok()
                && forest
                    .factors()
                    .all(|(range, t)| naive_left_tree(&y[range]).ok().as_ref() == Some(t))
        });
        tally[1].record(forest_ok);
    }

    for_each_lyndon_word(sigma, maxlen, |y| {
        if y.len() < 2 {
            return;
        }
        tally[2].record(left_lyndon_tree(y).ok() == naive_left_tree(y).ok());
        let psp = prefix_standard_permutation(y);
        tally[3].record(psp.is_ok() && psp.as_ref().ok() == naive_psp(y).ok().as_ref());
        tally[4].record(check_theorem6(y) == Ok(true));
        tally[5].record(check_cartesian(y) == Ok(true));
        let Ok(psp) = psp else { return };

        let brute = naive_periods(y);
        let scanned = lyndon_suffix_table_lyndon(y).map(|(_, period)| period);
        tally[6].record(scanned.as_ref() == Ok(&brute) && periods_from_psp(&psp, y.len()).as_ref() == Ok(&brute));
        let fixed_point = word_from_psp(&psp, y.len())
            .is_ok_and(|z| z.as_slice() <= y && prefix_standard_permutation(&z).as_ref() == Ok(&psp));
        tally[7].record(fixed_point);
        if sigma == 2 {
            tally[8].record(inverse_psp_binary(&psp) == Ok(InverseOutcome::Word(y.to_vec())));
        }
    });

    let mut out = String::new();
    let mut all_passed = true;
    for (name, t) in SUITES.iter().zip(&tally) {
        if t.total == 0 {
            let _ = writeln!(out, "{name:<14} skipped");
            continue;
        }
        let ok = t.passed == t.total;
        all_passed &= ok;
        let _ = writeln!(
            out,
            "{name:<14} {}/{} {}",
            t.passed,
            t.total,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if all_passed {
        Ok(out)
    } else {
        out.pop();
        Err(Failure::Rejected(out))
    }
}
