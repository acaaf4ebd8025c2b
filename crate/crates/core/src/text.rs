use std::fmt;

use crate::alphabet::AlphabetKind;
use crate::error::{Error, Result};

/// A finite symbol sequence over a declared alphabet.
///
/// Symbols are stored as single ASCII bytes (`'0'`, `'1'`, `'x'`, `'$'`).
/// Indexing is 0-based and `Text` values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    kind: AlphabetKind,
    symbols: Vec<u8>,
}

impl Text {
    /// Builds a text over `kind`, validating every byte against the alphabet.
    pub fn new(kind: AlphabetKind, symbols: impl Into<Vec<u8>>) -> Result<Text> {
        let symbols = symbols.into();
        if let Some(&byte) = symbols.iter().find(|&&b| !kind.contains(b)) {
            return Err(Error::InvalidSymbol { byte, kind });
        }
        Ok(Text { kind, symbols })
    }

    /// Builds a text from validated bytes. Not public: callers inside the
    /// crate use it where the bytes are produced by construction.
    pub(crate) fn from_validated(kind: AlphabetKind, symbols: Vec<u8>) -> Text {
        debug_assert!(symbols.iter().all(|&b| kind.contains(b)));
        Text { kind, symbols }
    }

    /// Parses the on-disk form: raw symbol bytes with one optional trailing
    /// newline (`\n` or `\r\n`) ignored.
    pub fn parse_file_bytes(kind: AlphabetKind, mut bytes: &[u8]) -> Result<Text> {
        if bytes.last() == Some(&b'\n') {
            bytes = &bytes[..bytes.len() - 1];
            if bytes.last() == Some(&b'\r') {
                bytes = &bytes[..bytes.len() - 1];
            }
        }
        Text::new(kind, bytes)
    }

    /// The on-disk form: the raw symbol bytes plus a trailing newline.
    pub fn to_file_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.symbols.len() + 1);
        out.extend_from_slice(&self.symbols);
        out.push(b'\n');
        out
    }

    pub fn kind(&self) -> AlphabetKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.symbols
    }

    /// Reinterprets the text over a wider alphabet. The symbols are unchanged,
    /// so widening binary to four-symbol always succeeds; narrowing revalidates.
    pub fn with_kind(&self, kind: AlphabetKind) -> Result<Text> {
        Text::new(kind, self.symbols.clone())
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Symbols are ASCII by construction.
        f.write_str(std::str::from_utf8(&self.symbols).expect("ascii"))
    }
}
