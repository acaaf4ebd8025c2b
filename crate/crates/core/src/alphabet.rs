use std::fmt;

/// The two alphabets the reductions are defined over.
///
/// Symbols use their canonical ASCII encodings, so texts can be written to
/// and read from plain files byte for byte.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlphabetKind {
    /// `{0, 1}`
    Binary,
    /// `{0, 1, x, $}`
    Four,
}

impl AlphabetKind {
    /// The symbols of this alphabet, as ASCII bytes.
    pub fn symbols(self) -> &'static [u8] {
        match self {
            AlphabetKind::Binary => b"01",
            AlphabetKind::Four => b"01x$",
        }
    }

    /// Is `byte` a symbol of this alphabet?
    pub fn contains(self, byte: u8) -> bool {
        self.symbols().contains(&byte)
    }

    /// The smallest alphabet containing every byte of `bytes`, if one exists.
    pub fn infer(bytes: &[u8]) -> Option<AlphabetKind> {
        if bytes.iter().all(|&b| AlphabetKind::Binary.contains(b)) {
            Some(AlphabetKind::Binary)
        } else if bytes.iter().all(|&b| AlphabetKind::Four.contains(b)) {
            Some(AlphabetKind::Four)
        } else {
            None
        }
    }

    /// Numeric tag used by the CLI and the metadata sidecar: the alphabet size.
    pub fn tag(self) -> u8 {
        match self {
            AlphabetKind::Binary => 2,
            AlphabetKind::Four => 4,
        }
    }

    pub fn from_tag(tag: u8) -> Option<AlphabetKind> {
        match tag {
            2 => Some(AlphabetKind::Binary),
            4 => Some(AlphabetKind::Four),
            _ => None,
        }
    }
}

impl fmt::Display for AlphabetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetKind::Binary => write!(f, "binary"),
            AlphabetKind::Four => write!(f, "four"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        assert!(AlphabetKind::Binary.contains(b'0'));
        assert!(AlphabetKind::Binary.contains(b'1'));
        assert!(!AlphabetKind::Binary.contains(b'x'));
        assert!(!AlphabetKind::Binary.contains(b'$'));
        assert!(AlphabetKind::Four.contains(b'x'));
        assert!(AlphabetKind::Four.contains(b'$'));
        assert!(!AlphabetKind::Four.contains(b'2'));
    }

    #[test]
    fn inference_picks_smallest() {
        assert_eq!(AlphabetKind::infer(b"0101"), Some(AlphabetKind::Binary));
        assert_eq!(AlphabetKind::infer(b"01x0"), Some(AlphabetKind::Four));
        assert_eq!(AlphabetKind::infer(b"$"), Some(AlphabetKind::Four));
        assert_eq!(AlphabetKind::infer(b""), Some(AlphabetKind::Binary));
        assert_eq!(AlphabetKind::infer(b"abc"), None);
    }

    #[test]
    fn tags_round_trip() {
        for kind in [AlphabetKind::Binary, AlphabetKind::Four] {
            assert_eq!(AlphabetKind::from_tag(kind.tag()), Some(kind));
        }
        assert_eq!(AlphabetKind::from_tag(3), None);
    }
}
