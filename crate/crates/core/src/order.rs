//! Words and the three orderings on them: lexicographic, strongly-less and
//! the infinite order `u ≺ v` (compare `u^∞` with `v^∞`, longer word first
//! on ties).
//!
//! All operations are generic over any `Ord` symbol type and take words as
//! slices. [`Word`] is the concrete lowercase-ASCII instantiation used by the
//! command-line front end.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scan;

/// Lexicographic order: a proper prefix is smaller than its extensions.
pub fn compare_lex<S: Ord>(u: &[S], v: &[S]) -> Ordering {
    u.cmp(v)
}

/// `u = r·a·s`, `v = r·b·t` with letters `a < b`.
pub fn is_strongly_less<S: Ord>(u: &[S], v: &[S]) -> bool {
    match u.iter().zip(v).find(|(a, b)| a != b) {
        Some((a, b)) => a < b,
        None => false,
    }
}

/// Compares `u` and `v` in the infinite order.
///
/// Only the first `|u| + |v|` letters of `u^∞` and `v^∞` are inspected: by the
/// periodicity lemma two such expansions agreeing on that window are equal,
/// in which case both words are powers of a common word and the longer one is
/// the smaller.
pub fn compare_infinite<S: Ord>(u: &[S], v: &[S]) -> Result<Ordering> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let window = u.len() + v.len();
    let expansion = u.iter().cycle().zip(v.iter().cycle()).take(window);
    for (a, b) in expansion {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(v.len().cmp(&u.len()))
}

/// True iff `w` is a Lyndon word.
///
/// Runs the linear Lyndon-prefix scan: `w` is Lyndon iff it is a prefix of a
/// Lyndon word whose final period is `|w|`.
pub fn is_lyndon<S: Ord>(w: &[S]) -> Result<bool> {
    Ok(scan::lyndon_word_prefix(w)? == Some(w.len()))
}

/// One of the three equivalent characterisations of Lyndon words of length
/// at least two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LyndonCondition {
    /// `w < vu` for every non-trivial factorisation `w = uv`.
    Rotation,
    /// `w < v` for every proper non-empty suffix `v`.
    Suffix,
    /// `u^∞ < w^∞` for every proper non-empty prefix `u`.
    Prefix,
}

impl LyndonCondition {
    pub const ALL: [LyndonCondition; 3] = [Self::Rotation, Self::Suffix, Self::Prefix];
}

/// Evaluates a Lyndon condition by direct enumeration (quadratic).
pub fn is_lyndon_by_condition<S: Ord + Clone>(w: &[S], which: LyndonCondition) -> Result<bool> {
    let n = w.len();
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    let holds = match which {
        LyndonCondition::Rotation => (1..n).all(|k| {
            let rotated: Vec<S> = w[k..].iter().chain(&w[..k]).cloned().collect();
            w < rotated.as_slice()
        }),
        LyndonCondition::Suffix => (1..n).all(|k| w < &w[k..]),
        LyndonCondition::Prefix => (1..n).all(|len| {
            // u^∞ < w^∞ on the |u|+|w| window; equality there means u^∞ = w^∞.
            let u = &w[..len];
            u.iter()
                .cycle()
                .zip(w.iter().cycle())
                .take(len + n)
                .find(|(a, b)| a != b)
                .is_some_and(|(a, b)| a < b)
        }),
    };
    Ok(holds)
}

/// A word over the lowercase ASCII letters `a..=z`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|b| !b.is_ascii_lowercase()) {
            return Err(Error::InvalidSymbol(bad as char));
        }
        Ok(Word(symbols))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(bad) = s.chars().find(|c| !c.is_ascii_lowercase()) {
            return Err(Error::InvalidSymbol(bad));
        }
        Ok(Word(s.as_bytes().to_vec()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Only a-z bytes get in, so this is valid UTF-8.
        f.write_str(std::str::from_utf8(&self.0).expect("ascii word"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Ordering::*;

    fn w(s: &str) -> &[u8] {
        s.as_bytes()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(compare_lex(w("ab"), w("b")), Less);
        assert_eq!(compare_lex(w("ab"), w("aba")), Less);
        assert_eq!(compare_lex(w("aba"), w("ab")), Greater);
    }

    #[test]
    fn strongly_less_examples() {
        assert!(is_strongly_less(w("ab"), w("b")));
        assert!(!is_strongly_less(w("ab"), w("aba")));
        assert!(!is_strongly_less(w("abc"), w("ab")));
        assert!(!is_strongly_less(w("b"), w("ab")));
    }

    #[test]
    fn infinite_examples() {
        assert_eq!(compare_infinite(w("aba"), w("ab")).unwrap(), Less);
        assert_eq!(compare_infinite(w("aa"), w("a")).unwrap(), Less);
        assert_eq!(compare_infinite(w("ab"), w("ab")).unwrap(), Equal);
        assert_eq!(compare_infinite(w("ababb"), w("ababba")).unwrap(), Greater);
        assert_eq!(compare_infinite(w("abab"), w("ab")).unwrap(), Less);
        assert_eq!(compare_infinite(w(""), w("a")), Err(Error::EmptyWord));
        assert_eq!(compare_infinite(w("a"), w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(w("ababbababbabac")).unwrap());
        assert!(!is_lyndon(w("babbababbaabb")).unwrap());
        assert!(is_lyndon(w("a")).unwrap());
        assert!(!is_lyndon(w("aa")).unwrap());
        assert_eq!(is_lyndon(w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn condition_examples() {
        assert!(is_lyndon_by_condition(w("aabb"), LyndonCondition::Rotation).unwrap());
        assert!(!is_lyndon_by_condition(w("abab"), LyndonCondition::Suffix).unwrap());
        assert!(is_lyndon_by_condition(w("ab"), LyndonCondition::Prefix).unwrap());
        assert!(!is_lyndon_by_condition(w("babbababbaabb"), LyndonCondition::Suffix).unwrap());
        assert_eq!(
            is_lyndon_by_condition(w("a"), LyndonCondition::Suffix),
            Err(Error::TooShort { len: 1, min: 2 })
        );
    }

    #[test]
    fn word_parsing() {
        let word: Word = "abac".parse().unwrap();
        assert_eq!(word.as_bytes(), b"abac");
        assert_eq!(word.to_string(), "abac");
        assert_eq!("abC".parse::<Word>(), Err(Error::InvalidSymbol('C')));
        assert_eq!(Word::new(b"a1".to_vec()), Err(Error::InvalidSymbol('1')));
        assert_eq!("".parse::<Word>().unwrap().len(), 0);
    }

    #[test]
    fn generic_symbols() {
        assert_eq!(compare_infinite(&[3u32, 7], &[3u32]).unwrap(), Greater);
        assert!(is_lyndon(&[1i64, 2, 2]).unwrap());
    }
}
