//! Construction-level properties: the gadget embedding lemma, exact
//! instance geometry, and decision equivalence on small exhaustive sweeps.

use epimatch_core::{
    build, generate_instance, lemma_check, ov_bruteforce, verify_equivalence, AlphabetKind,
    BitVector, OvInstance, VectorSet,
};
use proptest::prelude::*;

const BOTH_KINDS: [AlphabetKind; 2] = [AlphabetKind::Four, AlphabetKind::Binary];

/// Every vector pair up to dimension 4, both alphabets: gadget embedding
/// coincides with orthogonality. `lemma_check` raises on any mismatch.
#[test]
fn lemma_exhaustive_through_dimension_four() {
    for d in 1..=4usize {
        for a_bits in 0..1u64 << d {
            let a = BitVector::from_index_bits(a_bits, d).unwrap();
            for b_bits in 0..1u64 << d {
                let b = BitVector::from_index_bits(b_bits, d).unwrap();
                for kind in BOTH_KINDS {
                    let embeds = lemma_check(&a, &b, kind).unwrap();
                    assert_eq!(embeds, a_bits & b_bits == 0, "a={a} b={b} kind={kind}");
                }
            }
        }
    }
}

fn instance_from_bits(a_bits: &[u64], b_bits: &[u64], d: usize) -> OvInstance {
    let build_set = |bits: &[u64]| {
        VectorSet::new(
            bits.iter()
                .map(|&v| BitVector::from_index_bits(v, d).unwrap())
                .collect(),
        )
        .unwrap()
    };
    OvInstance::new(build_set(a_bits), build_set(b_bits)).unwrap()
}

/// All 16 instances with n = m = 2, d = 1: both constructions, all three
/// solvers, decisions equal the exhaustive OV answer and the sharpened
/// bounds hold.
#[test]
fn exhaustive_equivalence_smallest_instances() {
    for packed in 0..16u64 {
        let inst = instance_from_bits(
            &[packed & 1, packed >> 1 & 1],
            &[packed >> 2 & 1, packed >> 3 & 1],
            1,
        );
        let report = verify_equivalence(&inst).unwrap();
        assert!(report.pass(), "instance {packed:04b}: {report}");
        assert_eq!(report.ov_yes, ov_bruteforce(&inst).is_some());
    }
}

/// Geometry formulas hold for every built instance across a parameter grid.
#[test]
fn geometry_grid() {
    for (n, m, d) in [(2, 2, 1), (3, 2, 2), (5, 4, 3), (8, 2, 6), (4, 4, 5), (9, 8, 2)] {
        let inst = generate_instance(n, m, d, (n + m + d) % 2 == 0, 11).unwrap();
        for kind in BOTH_KINDS {
            let r = build(&inst, kind).unwrap();
            assert_eq!(r.check_geometry(), Ok(()), "n={n} m={m} d={d} kind={kind}");
            assert_eq!(r.count_blocks(), 4 * n + 1);
        }
    }
}

proptest! {
    /// Random dimensions beyond the exhaustive range still satisfy the
    /// gadget lemma.
    #[test]
    fn lemma_random_higher_dimensions(
        d in 5usize..=12,
        a_seed in any::<u64>(),
        b_seed in any::<u64>(),
    ) {
        let a = BitVector::from_index_bits(a_seed, d).unwrap();
        let b = BitVector::from_index_bits(b_seed, d).unwrap();
        for kind in BOTH_KINDS {
            let embeds = lemma_check(&a, &b, kind).unwrap();
            let orthogonal = a.bits().iter().zip(b.bits()).all(|(&x, &y)| !(x && y));
            prop_assert_eq!(embeds, orthogonal);
        }
    }

    /// Generated instances carry the promised answer and build into
    /// geometry-correct reductions.
    #[test]
    fn generated_instances_verify(
        n in 2usize..=6,
        extra in 0usize..=3,
        d in 1usize..=4,
        planted in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let m = n.min(2 + extra);
        let inst = generate_instance(n.max(m), m, d, planted, seed).unwrap();
        prop_assert_eq!(ov_bruteforce(&inst).is_some(), planted);
        let report = verify_equivalence(&inst).unwrap();
        prop_assert!(report.pass(), "{}", report);
    }
}
