//! Episode matching: the shortest substring of `S` containing `P` as a
//! subsequence.
//!
//! Three solvers with an identical contract:
//!
//! * [`episode_dp`] — rolling dynamic program, `O(|S|·|P|)` time and
//!   `O(|P|)` working space;
//! * [`episode_per_start_greedy`] — greedy earliest-match from every
//!   feasible window start, `O(|S|^2)` worst case;
//! * [`episode_bruteforce`] — every window in increasing length order.
//!   This is the ground-truth oracle the other two are tested against.
//!
//! Ties between equal-length minimal windows are broken towards the leftmost
//! window, so all three solvers agree on the full result, not just the length.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::subseq::is_subsequence_bytes;
use crate::text::Text;

/// A minimal episode window: `P` is a subsequence of
/// `S[window_start ..= window_end]` and no shorter window of `S` contains `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpisodeResult {
    pub length: usize,
    pub window_start: usize,
    pub window_end: usize,
}

impl EpisodeResult {
    fn from_window(window_start: usize, window_end: usize) -> EpisodeResult {
        EpisodeResult {
            length: window_end - window_start + 1,
            window_start,
            window_end,
        }
    }

    /// Checks the result invariants against concrete inputs: the length
    /// matches the window, the window contains the pattern, and no window
    /// shorter by one does.
    pub fn check_against(&self, s: &Text, p: &Text) -> bool {
        let (src, pat) = (s.as_bytes(), p.as_bytes());
        if self.window_end >= src.len()
            || self.window_start > self.window_end
            || self.length != self.window_end - self.window_start + 1
        {
            return false;
        }
        if !is_subsequence_bytes(pat, &src[self.window_start..=self.window_end]) {
            return false;
        }
        if self.length > 1 {
            let shorter = self.length - 1;
            for start in 0..=(src.len() - shorter) {
                if is_subsequence_bytes(pat, &src[start..start + shorter]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Which episode matching algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Solver {
    Dp,
    Greedy,
    Brute,
}

impl Solver {
    pub const ALL: [Solver; 3] = [Solver::Dp, Solver::Greedy, Solver::Brute];

    pub fn name(self) -> &'static str {
        match self {
            Solver::Dp => "dp",
            Solver::Greedy => "greedy",
            Solver::Brute => "brute",
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Solver> {
        match s {
            "dp" => Ok(Solver::Dp),
            "greedy" => Ok(Solver::Greedy),
            "brute" => Ok(Solver::Brute),
            other => Err(Error::Parse(format!("unknown solver `{other}`"))),
        }
    }
}

/// Runs the selected solver.
pub fn solve(s: &Text, p: &Text, solver: Solver) -> Result<Option<EpisodeResult>> {
    match solver {
        Solver::Dp => episode_dp(s, p),
        Solver::Greedy => episode_per_start_greedy(s, p),
        Solver::Brute => episode_bruteforce(s, p),
    }
}

fn check_inputs(s: &Text, p: &Text) -> Result<()> {
    if p.kind() != s.kind() {
        return Err(Error::AlphabetMismatch {
            expected: s.kind(),
            found: p.kind(),
        });
    }
    if p.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(())
}

/// Marks a window start that does not exist yet. Valid starts are `< |S|`.
const NO_START: usize = usize::MAX;

/// Rolling dynamic program over window starts.
///
/// `starts[i]` holds, after processing the first `j` symbols of `S`, the
/// largest `s` such that `P[..i]` is a subsequence of `S[s..j]`. When
/// `S[j-1] = P[i-1]` the best embedding of `P[..i]` ends here and inherits
/// the start for `P[..i-1]` up to `j-1`; otherwise the previous column value
/// carries over unchanged. The minimal window is the best `j - starts[|P|]`
/// over all `j`.
pub fn episode_dp(s: &Text, p: &Text) -> Result<Option<EpisodeResult>> {
    check_inputs(s, p)?;
    let src = s.as_bytes();
    let pat = p.as_bytes();
    let m = pat.len();

    let mut starts = vec![NO_START; m + 1];
    starts[0] = 0;

    let mut best: Option<EpisodeResult> = None;
    for (j, &symbol) in src.iter().enumerate() {
        // Descending i keeps starts[i-1] at its previous-column value.
        for i in (1..=m).rev() {
            if symbol == pat[i - 1] {
                starts[i] = starts[i - 1];
            }
        }
        starts[0] = j + 1;
        if starts[m] != NO_START {
            let length = (j + 1) - starts[m];
            if best.is_none_or(|b| length < b.length) {
                best = Some(EpisodeResult::from_window(starts[m], j));
            }
        }
    }
    Ok(best)
}

/// Greedy matcher anchored at every position where the window could start.
///
/// A minimal window necessarily starts at an occurrence of `P[0]`, and for a
/// fixed start the earliest-match scan reaches the smallest possible end.
pub fn episode_per_start_greedy(s: &Text, p: &Text) -> Result<Option<EpisodeResult>> {
    check_inputs(s, p)?;
    let src = s.as_bytes();
    let pat = p.as_bytes();

    let mut best: Option<EpisodeResult> = None;
    for start in 0..src.len() {
        if src.len() - start < pat.len() {
            break;
        }
        if src[start] != pat[0] {
            continue;
        }
        let mut matched = 1;
        let mut end = start;
        for (offset, &symbol) in src[start + 1..].iter().enumerate() {
            if matched == pat.len() {
                break;
            }
            if symbol == pat[matched] {
                matched += 1;
                end = start + 1 + offset;
            }
        }
        if matched == pat.len() && best.is_none_or(|b| end - start + 1 < b.length) {
            best = Some(EpisodeResult::from_window(start, end));
        }
    }
    Ok(best)
}

/// Does the window contain `pattern` as a subsequence? Gives up as soon as
/// the unscanned tail is too short to hold the unmatched pattern suffix.
fn window_contains(window: &[u8], pattern: &[u8]) -> bool {
    let mut matched = 0;
    for (i, &symbol) in window.iter().enumerate() {
        if window.len() - i < pattern.len() - matched {
            return false;
        }
        if symbol == pattern[matched] {
            matched += 1;
            if matched == pattern.len() {
                return true;
            }
        }
    }
    false
}

/// Exhaustive ground-truth oracle: tries every window of `S` in increasing
/// length order (windows shorter than `P` cannot contain it and are skipped)
/// and returns the first hit, which is the leftmost minimal window.
pub fn episode_bruteforce(s: &Text, p: &Text) -> Result<Option<EpisodeResult>> {
    check_inputs(s, p)?;
    let src = s.as_bytes();
    let pat = p.as_bytes();
    if pat.len() > src.len() || !is_subsequence_bytes(pat, src) {
        return Ok(None);
    }
    for length in pat.len()..=src.len() {
        for start in 0..=(src.len() - length) {
            if window_contains(&src[start..start + length], pat) {
                return Ok(Some(EpisodeResult::from_window(start, start + length - 1)));
            }
        }
    }
    Ok(None)
}
