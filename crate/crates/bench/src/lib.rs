//! Shared input builders for the criterion benchmarks.

use epimatch_core::{build, generate_instance, AlphabetKind, ReductionInstance};

/// A balanced (n = m) reduction instance with a fixed seed, so every
/// benchmark run times the same bytes.
pub fn balanced_instance(kind: AlphabetKind, n: usize, d: usize) -> ReductionInstance {
    let instance = generate_instance(n, n, d, false, 0xBE7C).expect("valid bench parameters");
    build(&instance, kind).expect("buildable bench instance")
}
