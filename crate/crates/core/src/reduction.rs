//! The two constructions mapping an OV instance to an episode matching
//! instance, such that an orthogonal pair exists if and only if some window
//! of the built string shorter than the decision threshold contains the
//! built pattern as a subsequence.
//!
//! Both constructions share one skeleton. Each B-vector becomes a pattern
//! gadget and each A-vector a text gadget, with the property that the
//! pattern gadget embeds into the text gadget exactly when the two vectors
//! are orthogonal ([`lemma_check`]). The source string interleaves every
//! A-gadget with gadgets for the all-zeros vector (which absorb any pattern
//! gadget) and repeats the A-part twice, so a cheaper-than-baseline window
//! exists exactly when some pattern gadget can sit inside an A-gadget.
//!
//! The four-symbol construction separates coordinates with `x` and gadgets
//! with `$`; the binary construction replaces them with runs `0^d` and
//! `1^{d+1}`.

use crate::alphabet::AlphabetKind;
use crate::episode::{solve, Solver};
use crate::error::{Error, Result};
use crate::ov::{is_orthogonal, BitVector, OvInstance};
use crate::subseq::{is_subsequence, is_subsequence_bytes};
use crate::text::Text;

/// An episode matching instance produced by a construction, together with
/// the decision threshold: the OV instance has an orthogonal pair iff the
/// episode length is strictly below `threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    s: Text,
    p: Text,
    kind: AlphabetKind,
    threshold: usize,
    n: usize,
    m: usize,
    d: usize,
}

impl ReductionInstance {
    pub fn s(&self) -> &Text {
        &self.s
    }

    pub fn p(&self) -> &Text {
        &self.p
    }

    pub fn kind(&self) -> AlphabetKind {
        self.kind
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Length of one block: a text gadget plus its trailing separator.
    pub fn block_len(&self) -> usize {
        block_len(self.kind, self.d)
    }

    /// Length of the window that aligns every pattern gadget with a
    /// zero-vector gadget. Such a window always exists, so this is an upper
    /// bound on the episode length of any built instance.
    pub fn baseline_len(&self) -> usize {
        match self.kind {
            AlphabetKind::Four => self.threshold,
            AlphabetKind::Binary => self.threshold + 2 * self.d,
        }
    }

    /// Inclusive bounds the episode length must satisfy when the source
    /// instance has no orthogonal pair. Exact for the four-symbol kind.
    pub fn no_pair_bounds(&self) -> (usize, usize) {
        (self.threshold, self.baseline_len())
    }

    /// Upper bound on the episode length when an orthogonal pair exists:
    /// at least one whole block below the baseline.
    pub fn yes_pair_upper(&self) -> usize {
        self.baseline_len() - self.block_len()
    }

    /// Returns a copy with the threshold replaced. Fault-injection helper
    /// for negative controls; the result deliberately violates the
    /// construction invariants.
    pub fn with_threshold(&self, threshold: usize) -> ReductionInstance {
        ReductionInstance {
            threshold,
            ..self.clone()
        }
    }

    /// Number of blocks in the source string, delimited by the outer
    /// separator. Counts only exact separators, so a malformed string
    /// yields a wrong count rather than a masked one.
    pub fn count_blocks(&self) -> usize {
        let bytes = self.s.as_bytes();
        let separators = match self.kind {
            AlphabetKind::Four => bytes.iter().filter(|&&b| b == b'$').count(),
            AlphabetKind::Binary => {
                let mut runs = 0usize;
                let mut current = 0usize;
                for &b in bytes.iter().chain(std::iter::once(&b'0')) {
                    if b == b'1' {
                        current += 1;
                    } else {
                        if current == self.d + 1 {
                            runs += 1;
                        }
                        current = 0;
                    }
                }
                runs
            }
        };
        // The string opens with one extra separator before the first block.
        separators.saturating_sub(1)
    }

    /// Checks every length invariant of the construction: the string,
    /// pattern, and threshold formulas, the block count, and that the
    /// pattern embeds into the string at all.
    pub fn check_geometry(&self) -> std::result::Result<(), String> {
        let (n, m, d) = (self.n, self.m, self.d);
        let checks = [
            ("p_len", self.p.len(), p_len_formula(self.kind, m, d)),
            ("s_len", self.s.len(), s_len_formula(self.kind, n, d)),
            ("threshold", self.threshold, threshold_formula(self.kind, m, d)),
            ("blocks", self.count_blocks(), 4 * n + 1),
        ];
        for (name, got, want) in checks {
            if got != want {
                return Err(format!("{name} = {got}, expected {want}"));
            }
        }
        if !is_subsequence_bytes(self.p.as_bytes(), self.s.as_bytes()) {
            return Err("pattern is not a subsequence of the source string".into());
        }
        Ok(())
    }
}

/// `|P|` as a function of the construction parameters.
pub fn p_len_formula(kind: AlphabetKind, m: usize, d: usize) -> usize {
    match kind {
        AlphabetKind::Four => 2 * d * m + 1,
        AlphabetKind::Binary => (d + 2) * d * m + (m + 1) * (d + 1),
    }
}

/// `|S|` as a function of the construction parameters.
pub fn s_len_formula(kind: AlphabetKind, n: usize, d: usize) -> usize {
    match kind {
        AlphabetKind::Four => 3 * d * (4 * n + 1) + 1,
        AlphabetKind::Binary => block_len(kind, d) * (4 * n + 1) + d + 1,
    }
}

/// The decision threshold: an orthogonal pair exists iff the episode length
/// is strictly below it.
pub fn threshold_formula(kind: AlphabetKind, m: usize, d: usize) -> usize {
    match kind {
        AlphabetKind::Four => 3 * d * (2 * m - 1) + 1,
        // One baseline window minus the slack a misaligned boundary can save.
        AlphabetKind::Binary => block_len(kind, d) * (2 * m - 1) + d + 1 - 2 * d,
    }
}

fn block_len(kind: AlphabetKind, d: usize) -> usize {
    match kind {
        AlphabetKind::Four => 3 * d,
        AlphabetKind::Binary => d * d + 4 * d + 1,
    }
}

// Byte-level gadget appenders. All construction goes through these so the
// public gadget functions and the builders cannot drift apart.

fn push_coord_four(out: &mut Vec<u8>, bit: bool) {
    out.extend_from_slice(if bit { b"00" } else { b"01" });
}

fn push_pattern_gadget_four(out: &mut Vec<u8>, b: &BitVector) {
    for (k, &bit) in b.bits().iter().enumerate() {
        if k > 0 {
            out.push(b'x');
        }
        out.push(if bit { b'1' } else { b'0' });
    }
}

fn push_text_gadget_four(out: &mut Vec<u8>, a: &BitVector) {
    for (k, &bit) in a.bits().iter().enumerate() {
        if k > 0 {
            out.push(b'x');
        }
        push_coord_four(out, bit);
    }
}

fn push_inner_sep(out: &mut Vec<u8>, d: usize) {
    out.resize(out.len() + d, b'0');
}

fn push_outer_sep(out: &mut Vec<u8>, d: usize) {
    out.resize(out.len() + d + 1, b'1');
}

fn push_pattern_gadget_binary(out: &mut Vec<u8>, b: &BitVector) {
    let d = b.dim();
    push_inner_sep(out, d);
    for &bit in b.bits() {
        out.push(if bit { b'1' } else { b'0' });
        push_inner_sep(out, d);
    }
}

fn push_text_gadget_binary(out: &mut Vec<u8>, a: &BitVector) {
    let d = a.dim();
    push_inner_sep(out, d);
    for &bit in a.bits() {
        push_coord_four(out, bit);
        push_inner_sep(out, d);
    }
}

/// The 2-symbol encoding of one vector entry on the text side: `01` encodes
/// a 0, `00` encodes a 1.
pub fn coord_gadget_four(bit: bool) -> Text {
    let mut out = Vec::with_capacity(2);
    push_coord_four(&mut out, bit);
    Text::from_validated(AlphabetKind::Four, out)
}

/// Pattern-side gadget for a B-vector: its bits separated by `x`,
/// length `2d - 1`.
pub fn pattern_gadget_four(b: &BitVector) -> Text {
    let mut out = Vec::with_capacity(2 * b.dim() - 1);
    push_pattern_gadget_four(&mut out, b);
    Text::from_validated(AlphabetKind::Four, out)
}

/// Text-side gadget for an A-vector: its coordinate gadgets separated by
/// `x`, length `3d - 1`.
pub fn text_gadget_four(a: &BitVector) -> Text {
    let mut out = Vec::with_capacity(3 * a.dim() - 1);
    push_text_gadget_four(&mut out, a);
    Text::from_validated(AlphabetKind::Four, out)
}

/// Pattern-side gadget for a B-vector over the binary alphabet: bits
/// surrounded by `0^d` inner separators, length `(d + 2)d`.
pub fn pattern_gadget_binary(b: &BitVector) -> Text {
    let d = b.dim();
    let mut out = Vec::with_capacity((d + 2) * d);
    push_pattern_gadget_binary(&mut out, b);
    Text::from_validated(AlphabetKind::Binary, out)
}

/// Text-side gadget for an A-vector over the binary alphabet: coordinate
/// gadgets surrounded by `0^d` inner separators, length `(d + 3)d`.
pub fn text_gadget_binary(a: &BitVector) -> Text {
    let d = a.dim();
    let mut out = Vec::with_capacity((d + 3) * d);
    push_text_gadget_binary(&mut out, a);
    Text::from_validated(AlphabetKind::Binary, out)
}

fn check_preconditions(inst: &OvInstance) -> Result<()> {
    // m = 1 makes the cheapest yes-window exactly as long as the threshold
    // and m > n can leave no room to shift pattern gadgets sideways, so the
    // equivalence needs n >= m >= 2. Swap A and B before building if B is
    // the larger set.
    if inst.m() < 2 || inst.n() < inst.m() {
        return Err(Error::InvalidParams(format!(
            "reduction requires n >= m >= 2, got n={}, m={}",
            inst.n(),
            inst.m()
        )));
    }
    Ok(())
}

fn assemble(
    inst: &OvInstance,
    kind: AlphabetKind,
    push_pattern: impl Fn(&mut Vec<u8>, &BitVector),
    push_text: impl Fn(&mut Vec<u8>, &BitVector),
    push_sep: impl Fn(&mut Vec<u8>),
) -> Result<ReductionInstance> {
    check_preconditions(inst)?;
    let (n, m, d) = (inst.n(), inst.m(), inst.dim());
    let zero = BitVector::zero(d)?;

    let mut p = Vec::with_capacity(p_len_formula(kind, m, d));
    push_sep(&mut p);
    for b in inst.b().iter() {
        push_pattern(&mut p, b);
        push_sep(&mut p);
    }

    // One leading separator, one zero block, then two copies of
    // (A-gadget block, zero block) for every A-vector: 4n + 1 blocks.
    let mut s = Vec::with_capacity(s_len_formula(kind, n, d));
    push_sep(&mut s);
    push_text(&mut s, &zero);
    push_sep(&mut s);
    for _ in 0..2 {
        for a in inst.a().iter() {
            push_text(&mut s, a);
            push_sep(&mut s);
            push_text(&mut s, &zero);
            push_sep(&mut s);
        }
    }

    let built = ReductionInstance {
        s: Text::from_validated(kind, s),
        p: Text::from_validated(kind, p),
        kind,
        threshold: threshold_formula(kind, m, d),
        n,
        m,
        d,
    };
    debug_assert_eq!(built.check_geometry(), Ok(()));
    Ok(built)
}

/// Builds the four-symbol instance for `inst`.
pub fn build_four(inst: &OvInstance) -> Result<ReductionInstance> {
    assemble(
        inst,
        AlphabetKind::Four,
        push_pattern_gadget_four,
        push_text_gadget_four,
        |out| out.push(b'$'),
    )
}

/// Builds the binary instance for `inst`.
pub fn build_binary(inst: &OvInstance) -> Result<ReductionInstance> {
    let d = inst.dim();
    assemble(
        inst,
        AlphabetKind::Binary,
        push_pattern_gadget_binary,
        push_text_gadget_binary,
        move |out| push_outer_sep(out, d),
    )
}

/// Builds the instance of the requested kind.
pub fn build(inst: &OvInstance, kind: AlphabetKind) -> Result<ReductionInstance> {
    match kind {
        AlphabetKind::Four => build_four(inst),
        AlphabetKind::Binary => build_binary(inst),
    }
}

/// Answers the OV question through the episode matching side: episode
/// length strictly below the threshold.
///
/// The pattern of a well-formed instance always embeds into its string, so
/// a solver reporting no embedding is a construction bug and surfaces as an
/// internal-invariant error, never as a decision.
pub fn decide_via_episode(r: &ReductionInstance, solver: Solver) -> Result<bool> {
    let episode = solve(r.s(), r.p(), solver)?.ok_or_else(|| {
        Error::InternalInvariant(format!(
            "{} reduction pattern is not a subsequence of its source string",
            r.kind()
        ))
    })?;
    Ok(episode.length < r.threshold())
}

/// The gadget-level equivalence both constructions rest on: the pattern
/// gadget of `b` embeds into the text gadget of `a` iff `a` and `b` are
/// orthogonal. Returns the embedding answer and raises an
/// internal-invariant error if it ever disagrees with orthogonality.
pub fn lemma_check(a: &BitVector, b: &BitVector, kind: AlphabetKind) -> Result<bool> {
    let orthogonal = is_orthogonal(a, b)?;
    let (pattern, text) = match kind {
        AlphabetKind::Four => (pattern_gadget_four(b), text_gadget_four(a)),
        AlphabetKind::Binary => (pattern_gadget_binary(b), text_gadget_binary(a)),
    };
    let embeds = is_subsequence(&pattern, &text)?;
    if embeds != orthogonal {
        return Err(Error::InternalInvariant(format!(
            "gadget embedding ({embeds}) disagrees with orthogonality ({orthogonal}) \
             for a={a}, b={b}, kind={kind}"
        )));
    }
    Ok(embeds)
}

/// Renders the metadata sidecar emitted next to a reduction's S and P files.
pub fn format_metadata(r: &ReductionInstance) -> String {
    format!(
        "kind={}\nn={}\nm={}\nd={}\nthreshold={}\ns_len={}\np_len={}\n",
        r.kind().tag(),
        r.n(),
        r.m(),
        r.d(),
        r.threshold(),
        r.s().len(),
        r.p().len()
    )
}
