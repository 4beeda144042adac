//! Online left-to-right scans in the letter-comparison model.
//!
//! Every scan performs exactly one three-way letter comparison per main-loop
//! iteration, so `letter_comparisons == loop_iterations` for all of them.
//! The counters live in [`ComparisonBudget`] and are only touched by the
//! `*_counted` variants' callers; the plain functions use a throwaway budget.

use std::cmp::Ordering;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Instrumentation counters for the linear-time claims.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComparisonBudget {
    /// Three-way comparisons between two letters of the input.
    pub letter_comparisons: u64,
    /// Iterations of a scan's main loop.
    pub loop_iterations: u64,
    /// Iterations of the bundling loop (tree, forest and psp construction).
    pub bundle_steps: u64,
}

impl ComparisonBudget {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    fn compare<S: Ord>(&mut self, a: &S, b: &S) -> Ordering {
        self.letter_comparisons += 1;
        a.cmp(b)
    }
}

/// `lyns[j]` is the length of the longest Lyndon suffix of `y[0..=j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LynsTable(Vec<usize>);

impl LynsTable {
    pub fn new(values: Vec<usize>) -> Self {
        LynsTable(values)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Start positions of the Lyndon factorisation, in increasing order.
    ///
    /// Traces the table backwards from the end of the word: each factor ends
    /// right before the previous start and its length is `lyns` at that end.
    pub fn factor_starts(&self) -> Vec<usize> {
        let mut starts = Vec::new();
        let mut end = self.0.len();
        while end > 0 {
            end -= self.0[end - 1];
            starts.push(end);
        }
        starts.reverse();
        starts
    }
}

impl Deref for LynsTable {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// `period[j]` is the smallest period of `y[0..=j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodTable(Vec<usize>);

impl PeriodTable {
    pub fn new(values: Vec<usize>) -> Self {
        PeriodTable(values)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for PeriodTable {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// `base + ((i - base + 1) mod per)` for `base <= i < base + per`.
#[inline]
fn next_in_period(i: usize, base: usize, per: usize) -> usize {
    if i + 1 - base == per {
        base
    } else {
        i + 1
    }
}

/// Tests whether `y` is a prefix of some Lyndon word.
///
/// Returns the final period on success and `None` as soon as a letter breaks
/// the order. `y` is itself a Lyndon word iff the result is `Some(y.len())`.
pub fn lyndon_word_prefix<S: Ord>(y: &[S]) -> Result<Option<usize>> {
    lyndon_word_prefix_counted(y, &mut ComparisonBudget::new())
}

pub fn lyndon_word_prefix_counted<S: Ord>(y: &[S], budget: &mut ComparisonBudget) -> Result<Option<usize>> {
    if y.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (mut per, mut i) = (1, 0);
    for j in 1..y.len() {
        budget.loop_iterations += 1;
        match budget.compare(&y[j], &y[i]) {
            Ordering::Greater => {
                per = j + 1;
                i = 0;
            }
            Ordering::Less => return Ok(None),
            Ordering::Equal => i = next_in_period(i, 0, per),
        }
    }
    Ok(Some(per))
}

/// Lyndon suffix table and prefix period table of a Lyndon word.
pub fn lyndon_suffix_table_lyndon<S: Ord>(y: &[S]) -> Result<(LynsTable, PeriodTable)> {
    lyndon_suffix_table_lyndon_counted(y, &mut ComparisonBudget::new())
}

pub fn lyndon_suffix_table_lyndon_counted<S: Ord>(
    y: &[S],
    budget: &mut ComparisonBudget,
) -> Result<(LynsTable, PeriodTable)> {
    let mut period = Vec::with_capacity(y.len());
    period.push(1);
    let lyns = scan_lyndon_word(y, budget, |_, _, per| period.push(per))?;
    Ok((lyns, PeriodTable(period)))
}

/// The scan shared by the Lyndon-word algorithms.
///
/// `on_position(j, lyns, per)` runs for `j >= 1` once `lyns[j]` is final,
/// with `lyns` covering positions `0..=j` and `per` the period of `y[..=j]`.
/// The word is rejected as soon as `y[j] < y[i]`, or at the end when its
/// final period falls short of its length.
pub(crate) fn scan_lyndon_word<S: Ord>(
    y: &[S],
    budget: &mut ComparisonBudget,
    mut on_position: impl FnMut(usize, &[usize], usize),
) -> Result<LynsTable> {
    let n = y.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut lyns = vec![0; n];
    lyns[0] = 1;
    let (mut per, mut i) = (1, 0);
    for j in 1..n {
        budget.loop_iterations += 1;
        // Invariant: y[i] == y[j - per].
        match budget.compare(&y[j], &y[i]) {
            Ordering::Greater => {
                lyns[j] = j + 1;
                per = j + 1;
                i = 0;
            }
            Ordering::Equal => {
                lyns[j] = lyns[i];
                i = next_in_period(i, 0, per);
            }
            Ordering::Less => return Err(Error::NotLyndon { position: j }),
        }
        on_position(j, &lyns[..=j], per);
    }
    if per != n {
        return Err(Error::NotLyndon { position: n });
    }
    Ok(LynsTable(lyns))
}

/// Lyndon suffix table of an arbitrary non-empty word.
pub fn lyndon_suffix_table<S: Ord>(y: &[S]) -> Result<LynsTable> {
    scan_word(y, &mut ComparisonBudget::new(), |_, _| {})
}

pub fn lyndon_suffix_table_counted<S: Ord>(y: &[S], budget: &mut ComparisonBudget) -> Result<LynsTable> {
    scan_word(y, budget, |_, _| {})
}

/// What the general scan just did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ScanEvent {
    /// `lyns[j]` was written for the current factor attempt.
    Position(usize),
    /// The factorisation of `y[..h]` is final and scanning restarts at `h`.
    /// Values written for positions `>= h` will be rewritten.
    Reset(usize),
}

/// Duval-style scan over an arbitrary word.
///
/// `h` is the start of the current factor attempt, which has the shape
/// `x^k z` with `|x| = per`; `i` tracks the letter of `x` facing `y[j]`.
/// The sum `h + j` strictly increases every iteration, bounding the loop by
/// `2n - 2` iterations.
pub(crate) fn scan_word<S: Ord>(
    y: &[S],
    budget: &mut ComparisonBudget,
    mut on_event: impl FnMut(ScanEvent, &[usize]),
) -> Result<LynsTable> {
    let n = y.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut lyns = vec![0; n];
    lyns[0] = 1;
    let (mut per, mut h, mut i, mut j) = (1, 0, 0, 1);
    while j < n {
        budget.loop_iterations += 1;
        match budget.compare(&y[j], &y[i]) {
            Ordering::Less => {
                // Keep the complete copies of x, restart on the residue z.
                h = j - (i - h);
                lyns[h] = 1;
                per = 1;
                i = h;
                j = h + 1;
                on_event(ScanEvent::Reset(h), &lyns[..=h]);
            }
            Ordering::Greater => {
                lyns[j] = j - h + 1;
                on_event(ScanEvent::Position(j), &lyns[..=j]);
                j += 1;
                per = j - h;
                i = h;
            }
            Ordering::Equal => {
                lyns[j] = lyns[i];
                on_event(ScanEvent::Position(j), &lyns[..=j]);
                i = next_in_period(i, h, per);
                j += 1;
            }
        }
    }
    Ok(LynsTable(lyns))
}

/// Start positions of the Lyndon factors of `y`, increasing.
pub fn lyndon_factorize<S: Ord>(y: &[S]) -> Result<Vec<usize>> {
    Ok(lyndon_suffix_table(y)?.factor_starts())
}
