//! Brute-force references and word enumeration.
//!
//! Everything here is built from the comparison primitives in
//! [`crate::order`] alone (Lyndon tests go through the suffix condition, not
//! the linear scan), and is quadratic or worse. Used to cross-check the
//! linear-time algorithms.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::order::{compare_infinite, is_lyndon_by_condition, LyndonCondition};
use crate::permutation::Permutation;
use crate::scan::{LynsTable, PeriodTable};
use crate::tree::LyndonTree;

/// Lyndon test straight from the definition: single letters are Lyndon,
/// longer words must be smaller than each proper suffix.
pub fn naive_is_lyndon<S: Ord + Clone>(w: &[S]) -> bool {
    match w.len() {
        0 => false,
        1 => true,
        _ => is_lyndon_by_condition(w, LyndonCondition::Suffix).expect("length checked"),
    }
}

pub fn naive_lyns<S: Ord + Clone>(y: &[S]) -> Result<LynsTable> {
    if y.is_empty() {
        return Err(Error::EmptyWord);
    }
    let table = (0..y.len())
        .map(|j| {
            (1..=j + 1)
                .rev()
                .find(|&len| naive_is_lyndon(&y[j + 1 - len..=j]))
                .expect("single letters are Lyndon")
        })
        .collect();
    Ok(LynsTable::new(table))
}

/// Smallest period of every prefix.
pub fn naive_periods<S: Ord>(y: &[S]) -> PeriodTable {
    let table = (0..y.len())
        .map(|j| {
            let prefix = &y[..=j];
            (1..=j + 1)
                .find(|&p| (p..prefix.len()).all(|i| prefix[i] == prefix[i - p]))
                .expect("length is a period")
        })
        .collect();
    PeriodTable::new(table)
}

/// Factor starts by repeatedly peeling off the longest Lyndon prefix.
pub fn naive_factor_starts<S: Ord + Clone>(y: &[S]) -> Result<Vec<usize>> {
    if y.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut starts = Vec::new();
    let mut at = 0;
    while at < y.len() {
        starts.push(at);
        let rest = &y[at..];
        at += (1..=rest.len())
            .rev()
            .find(|&len| naive_is_lyndon(&rest[..len]))
            .expect("single letters are Lyndon");
    }
    Ok(starts)
}

fn require_lyndon<S: Ord + Clone>(y: &[S], min: usize) -> Result<()> {
    if y.len() < min {
        return Err(Error::TooShort { len: y.len(), min });
    }
    if !naive_is_lyndon(y) {
        return Err(Error::NotLyndon { position: y.len() });
    }
    Ok(())
}

/// Sorts prefix end positions with the infinite-order comparator.
pub fn naive_psp<S: Ord + Clone>(y: &[S]) -> Result<Permutation> {
    require_lyndon(y, 2)?;
    let mut ends: Vec<usize> = (0..y.len() - 1).collect();
    ends.sort_by(|&a, &b| compare_infinite(&y[..=a], &y[..=b]).unwrap_or(Ordering::Equal));
    Permutation::new(ends)
}

/// Left Lyndon tree by recursive left standard factorisation, internal nodes
/// numbered in postorder.
pub fn naive_left_tree<S: Ord + Clone>(y: &[S]) -> Result<LyndonTree> {
    require_lyndon(y, 1)?;
    fn build<S: Ord + Clone>(y: &[S], offset: usize, n: usize, children: &mut Vec<(usize, usize)>) -> usize {
        if y.len() == 1 {
            return offset;
        }
        let split = (1..y.len())
            .rev()
            .find(|&len| naive_is_lyndon(&y[..len]))
            .expect("first letter is Lyndon");
        let left = build(&y[..split], offset, n, children);
        let right = build(&y[split..], offset + split, n, children);
        children.push((left, right));
        n + children.len() - 1
    }
    let mut children = Vec::with_capacity(y.len() - 1);
    build(y, 0, y.len(), &mut children);
    Ok(LyndonTree::from_children(y.len(), children))
}

/// The first `sigma` letters of `a..=z`.
fn alphabet(sigma: usize) -> u8 {
    assert!((1..=26).contains(&sigma), "alphabet size must be in 1..=26");
    sigma as u8
}

/// All words of exactly `len` letters over the first `sigma` letters, in
/// lexicographic order.
pub fn words_of_length(sigma: usize, len: usize) -> impl Iterator<Item = Vec<u8>> {
    let top = b'a' + alphabet(sigma) - 1;
    let mut next = Some(vec![b'a'; len]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // Odometer step; None once every digit has wrapped.
        let mut pos = succ.len();
        while pos > 0 {
            pos -= 1;
            if succ[pos] < top {
                succ[pos] += 1;
                next = Some(succ);
                break;
            }
            succ[pos] = b'a';
        }
        Some(current)
    })
}

/// All words of length `1..=max_len`, shortest first.
pub fn enumerate_words(sigma: usize, max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=max_len).flat_map(move |len| words_of_length(sigma, len))
}

/// All Lyndon words over the first `sigma` letters of length `1..=max_len`,
/// shortest first and lexicographic within a length. Filters every word, so
/// keep `sigma^max_len` small.
pub fn enumerate_lyndon(sigma: usize, max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    enumerate_words(sigma, max_len).filter(|w| naive_is_lyndon(w))
}

/// Visits every Lyndon word of length `1..=max_len` over the first `sigma`
/// letters in lexicographic order, generating each from its predecessor in
/// amortised constant time: repeat the word up to `max_len`, strip trailing
/// maximal letters, bump the last letter.
pub fn for_each_lyndon_word(sigma: usize, max_len: usize, mut visit: impl FnMut(&[u8])) {
    let top = b'a' + alphabet(sigma) - 1;
    if max_len == 0 {
        return;
    }
    let mut w = Vec::with_capacity(max_len);
    w.push(b'a');
    loop {
        visit(&w);
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
}

/// Half Zimin word of order `k >= 1`: `Z_{k-1}` followed by the `k`-th letter.
pub fn half_zimin(k: usize) -> Vec<u8> {
    assert!((1..=26).contains(&k));
    let mut z: Vec<u8> = Vec::new();
    for i in 0..k - 1 {
        let prev = z.clone();
        z.push(b'a' + i as u8);
        z.extend_from_slice(&prev);
    }
    z.push(b'a' + (k - 1) as u8);
    z
}
