//! Subsequence embeddings and their witnesses.
//!
//! An alignment of a pattern `Y` in a host text `X` is a strictly increasing
//! index sequence `j_0 < j_1 < ... < j_{|Y|-1}` with `Y[l] = X[j_l]` for all
//! `l`; it spans the substring `X[j_0 ..= j_{|Y|-1}]`. A pattern is a
//! subsequence of a text exactly when such an alignment exists.

use crate::error::{Error, Result};
use crate::text::Text;

/// A strictly increasing index sequence witnessing a subsequence embedding.
///
/// The type itself does not enforce the invariants; [`verify_alignment`]
/// checks them against a concrete pattern and text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    indices: Vec<usize>,
}

impl Alignment {
    pub fn new(indices: Vec<usize>) -> Alignment {
        Alignment { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// First and last host index, i.e. the substring the alignment spans.
    pub fn span(&self) -> Option<(usize, usize)> {
        Some((*self.indices.first()?, *self.indices.last()?))
    }
}

fn check_kinds(pattern: &Text, text: &Text) -> Result<()> {
    if pattern.kind() != text.kind() {
        return Err(Error::AlphabetMismatch {
            expected: text.kind(),
            found: pattern.kind(),
        });
    }
    Ok(())
}

/// Greedy left-to-right scan on raw symbol slices.
pub(crate) fn is_subsequence_bytes(pattern: &[u8], text: &[u8]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    let mut p = 0;
    for &symbol in text {
        if symbol == pattern[p] {
            p += 1;
            if p == pattern.len() {
                return true;
            }
        }
    }
    false
}

/// Is `pattern` obtainable from `text` by deleting symbols?
///
/// Computed by a single greedy left-to-right scan. The empty pattern is a
/// subsequence of every text.
pub fn is_subsequence(pattern: &Text, text: &Text) -> Result<bool> {
    check_kinds(pattern, text)?;
    Ok(is_subsequence_bytes(pattern.as_bytes(), text.as_bytes()))
}

/// The lexicographically smallest alignment of `pattern` in `text`, i.e. the
/// greedy earliest-match embedding, or `None` when no embedding exists.
pub fn leftmost_alignment(pattern: &Text, text: &Text) -> Result<Option<Alignment>> {
    check_kinds(pattern, text)?;
    let pat = pattern.as_bytes();
    let mut indices = Vec::with_capacity(pat.len());
    let mut p = 0;
    for (j, &symbol) in text.as_bytes().iter().enumerate() {
        if p == pat.len() {
            break;
        }
        if symbol == pat[p] {
            indices.push(j);
            p += 1;
        }
    }
    if p == pat.len() {
        Ok(Some(Alignment::new(indices)))
    } else {
        Ok(None)
    }
}

/// Checks the alignment invariants: one index per pattern symbol, strictly
/// increasing, in range, and symbol-matching. A malformed alignment yields
/// `false`, never an error.
pub fn verify_alignment(pattern: &Text, text: &Text, alignment: &Alignment) -> bool {
    let pat = pattern.as_bytes();
    let txt = text.as_bytes();
    let idx = alignment.indices();
    if idx.len() != pat.len() {
        return false;
    }
    let mut prev: Option<usize> = None;
    for (l, &j) in idx.iter().enumerate() {
        if j >= txt.len() || txt[j] != pat[l] {
            return false;
        }
        if let Some(p) = prev {
            if j <= p {
                return false;
            }
        }
        prev = Some(j);
    }
    true
}
