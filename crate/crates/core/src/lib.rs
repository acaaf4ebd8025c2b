//! Episode matching, orthogonal vectors, and the constructions tying them
//! together.
//!
//! Episode matching asks for the length of the shortest substring of a text
//! `S` that contains a pattern `P` as a subsequence. This crate provides:
//!
//! * three interchangeable episode matching solvers, including an
//!   exhaustive oracle used to cross-check the other two
//!   ([`episode_dp`], [`episode_per_start_greedy`], [`episode_bruteforce`]);
//! * the orthogonal vectors problem: bit vectors, an exhaustive decider,
//!   and seeded generation of yes/no instances ([`ov`]);
//! * two constructions (four-symbol and binary alphabet) that turn an OV
//!   instance into an episode matching instance whose answer falls strictly
//!   below a threshold exactly when an orthogonal pair exists
//!   ([`reduction`]), plus verifiers that confirm the equivalence and the
//!   sharpened length bounds instance by instance ([`verify`]).

pub mod alphabet;
pub mod episode;
pub mod error;
pub mod ov;
pub mod reduction;
pub mod subseq;
pub mod text;
pub mod verify;

pub use alphabet::AlphabetKind;
pub use episode::{
    episode_bruteforce, episode_dp, episode_per_start_greedy, solve, EpisodeResult, Solver,
};
pub use error::{Error, Result};
pub use ov::{
    generate_instance, is_orthogonal, ov_bruteforce, parse_instance, serialize_instance,
    BitVector, OvInstance, VectorSet,
};
pub use reduction::{
    build, build_binary, build_four, coord_gadget_four, decide_via_episode, format_metadata,
    lemma_check, pattern_gadget_binary, pattern_gadget_four, text_gadget_binary,
    text_gadget_four, ReductionInstance,
};
pub use subseq::{is_subsequence, leftmost_alignment, verify_alignment, Alignment};
pub use text::Text;
pub use verify::{verify_equivalence, verify_reductions, KindReport, VerificationReport};
