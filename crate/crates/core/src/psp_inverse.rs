//! Recovering words from prefix standard permutations.
//!
//! Output words are over the letters `a < b < c < ...` (ASCII bytes).

use crate::cartesian::CartesianTree;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::prefix_order::{has_psp, prefix_standard_permutation};
use crate::scan::PeriodTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseOutcome {
    /// The binary Lyndon word whose psp is the input.
    Word(Vec<u8>),
    /// No binary Lyndon word has this psp. `candidate_psp` is `None` when the
    /// candidate is not even a Lyndon word.
    Rejected {
        candidate: Vec<u8>,
        candidate_psp: Option<Permutation>,
    },
}

/// Recovers the binary Lyndon word of length `p.len() + 1` whose psp is `p`.
///
/// The max-rooted Cartesian tree of the rank table is the internal skeleton of
/// the left Lyndon tree. Internal node `j` sits between leaves `j` and `j + 1`,
/// so leaf `j` is a left child exactly when node `j` has no left subtree; left
/// leaves read `a`, all others `b`.
pub fn inverse_psp_binary(p: &Permutation) -> Result<InverseOutcome> {
    if p.is_empty() {
        return Err(Error::TooShort { len: 1, min: 2 });
    }
    let rank = p.inverse();
    let skeleton = CartesianTree::new(rank.as_slice());
    let mut candidate: Vec<u8> = (0..p.len())
        .map(|j| if skeleton.left(j).is_none() { b'a' } else { b'b' })
        .collect();
    candidate.push(b'b');

    match prefix_standard_permutation(&candidate) {
        Ok(psp) if &psp == p => Ok(InverseOutcome::Word(candidate)),
        Ok(psp) => Ok(InverseOutcome::Rejected {
            candidate,
            candidate_psp: Some(psp),
        }),
        Err(Error::NotLyndon { .. }) => Ok(InverseOutcome::Rejected {
            candidate,
            candidate_psp: None,
        }),
        Err(e) => Err(e),
    }
}

fn check_length(p: &Permutation, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    if p.len() + 1 != n {
        return Err(Error::LengthMismatch {
            perm_len: p.len(),
            word_len: n,
        });
    }
    Ok(())
}

/// Smallest periods of all prefixes of a Lyndon word of length `n`, read off
/// its psp `p` from right to left.
///
/// A descent `p[j] < p[j-1]` marks a border: the prefixes of length at most
/// `p[j] + 1` below it repeat, so positions down to that length share period
/// `p[j] + 1`.
pub fn periods_from_psp(p: &Permutation, n: usize) -> Result<PeriodTable> {
    check_length(p, n)?;
    let mut per = vec![0; n];
    let mut q = n;
    for j in (1..n - 1).rev() {
        per[j] = if j >= q {
            q
        } else if p[j] < p[j - 1] {
            q = p[j] + 1;
            q
        } else {
            j + 1
        };
    }
    per[0] = 1;
    per[n - 1] = n;
    Ok(PeriodTable::new(per))
}

fn successor(letter: u8) -> Result<u8> {
    if letter >= b'z' {
        Err(Error::AlphabetExhausted)
    } else {
        Ok(letter + 1)
    }
}

/// Lexicographically smallest Lyndon word over `a, b, ...` whose psp is `p`.
///
/// Scans the rank table tracking the highest rank `r` met so far and the
/// current period `q`. A prefix ranked at most `r` continues the period; a
/// higher one ends a Lyndon prefix and needs the next letter up.
pub fn word_from_psp(p: &Permutation, n: usize) -> Result<Vec<u8>> {
    check_length(p, n)?;
    let rank = p.inverse();
    let mut y = Vec::with_capacity(n);
    y.push(b'a');
    let (mut r, mut q) = (rank[0], 1);
    for j in 1..n - 1 {
        if rank[j] <= r {
            y.push(y[j - q]);
        } else {
            y.push(successor(y[j - q])?);
            r = rank[j];
            q = j + 1;
        }
    }
    y.push(successor(y[n - 1 - q])?);

    if has_psp(&y, p) {
        Ok(y)
    } else {
        Err(Error::NotAPsp)
    }
}
