use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `0..m`, stored as its one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m];
        for &v in &values {
            if v >= m || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation { len: m });
            }
        }
        Ok(Permutation(values))
    }

    /// Caller guarantees bijectivity.
    pub(crate) fn new_unchecked(values: Vec<usize>) -> Self {
        Permutation(values)
    }

    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for Permutation {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Comma-separated decimal, no whitespace: `1,0,4,3`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Permutation::new(Vec::new());
        }
        let values = s
            .split(',')
            .map(|part| {
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::NotAPermutation { len: 0 });
                }
                part.parse::<usize>().map_err(|_| Error::NotAPermutation { len: 0 })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}
