//! Property tests for the algebraic invariants: distance/parity laws on
//! words, translation invariance, and soundness of the extension step
//! under arbitrary bias.

use proptest::prelude::*;

use fibcube::codes::{vasilev_extend, BiasFunction};
use fibcube::{Code, Word};

fn word_of_len(n: u32) -> impl Strategy<Value = Word> {
    (0..1u64 << n).prop_map(move |bits| Word::new(n, bits).unwrap())
}

fn word_pair() -> impl Strategy<Value = (Word, Word)> {
    (1u32..=20).prop_flat_map(|n| (word_of_len(n), word_of_len(n)))
}

fn word_triple() -> impl Strategy<Value = (Word, Word, Word)> {
    (1u32..=20).prop_flat_map(|n| (word_of_len(n), word_of_len(n), word_of_len(n)))
}

proptest! {
    #[test]
    fn distance_is_popcount_of_sum((a, b) in word_pair()) {
        let d = a.hamming_distance(b).unwrap();
        prop_assert_eq!(d, a.xor_add(b).unwrap().bits().count_ones());
        prop_assert_eq!(d, b.hamming_distance(a).unwrap());
        prop_assert_eq!(d == 0, a == b);
    }

    #[test]
    fn distance_satisfies_the_triangle_inequality((a, b, c) in word_triple()) {
        let ab = a.hamming_distance(b).unwrap();
        let bc = b.hamming_distance(c).unwrap();
        let ac = a.hamming_distance(c).unwrap();
        prop_assert!(ac <= ab + bc);
    }

    #[test]
    fn parity_is_additive_under_sum((a, b) in word_pair()) {
        prop_assert_eq!(
            a.xor_add(b).unwrap().parity(),
            (a.parity() + b.parity()) % 2
        );
    }

    #[test]
    fn parity_is_additive_under_concat(a in (1u32..=20).prop_flat_map(word_of_len),
                                       b in (1u32..=20).prop_flat_map(word_of_len)) {
        prop_assert_eq!(
            a.concat(b).unwrap().parity(),
            (a.parity() + b.parity()) % 2
        );
    }

    #[test]
    fn concat_is_associative(a in (1u32..=10).prop_flat_map(word_of_len),
                             b in (1u32..=10).prop_flat_map(word_of_len),
                             c in (1u32..=10).prop_flat_map(word_of_len)) {
        let left = a.concat(b).unwrap().concat(c).unwrap();
        let right = a.concat(b.concat(c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn complement_is_an_involution(a in (1u32..=20).prop_flat_map(word_of_len)) {
        prop_assert_eq!(a.complement().complement(), a);
        prop_assert_eq!(a.hamming_distance(a.complement()).unwrap(), a.len());
    }

    #[test]
    fn translation_preserves_distances_and_verdict(
        words in proptest::collection::btree_set(0..128u64, 1..=6),
        t in 0..128u64,
    ) {
        let words: Vec<Word> = words.into_iter().map(|b| Word::new(7, b).unwrap()).collect();
        let code = Code::new(7, words).unwrap();
        let t = Word::new(7, t).unwrap();
        let moved = code.translate(t).unwrap();
        prop_assert_eq!(moved.len(), code.len());
        // Pairwise distances survive as a multiset; spot-check via the
        // sorted list.
        let dists = |c: &Code| {
            let ws = c.words();
            let mut d: Vec<u32> = (0..ws.len())
                .flat_map(|i| (i + 1..ws.len()).map(move |j| (i, j)))
                .map(|(i, j)| ws[i].hamming_distance(ws[j]).unwrap())
                .collect();
            d.sort_unstable();
            d
        };
        prop_assert_eq!(dists(&code), dists(&moved));
        let before = code.verify_perfect_qn().unwrap();
        let after = moved.verify_perfect_qn().unwrap();
        prop_assert_eq!(before.status, after.status);
    }

    /// Soundness of the extension step: any perfect base code of the
    /// 3-cube and any total bias gives a perfect code of the 7-cube.
    #[test]
    fn extension_step_is_perfect_for_any_bias(
        base_choice in 0..4u64,
        table in proptest::collection::vec(0..=1u8, 8),
    ) {
        // The four perfect codes of Q3 are the antipodal pairs.
        let a = Word::new(3, base_choice).unwrap();
        let base = Code::new(3, vec![a, a.complement()]).unwrap();
        prop_assert!(base.verify_perfect_qn().unwrap().is_perfect());
        let bias = BiasFunction::from_table(3, table).unwrap();
        let extended = vasilev_extend(&base, &bias).unwrap();
        prop_assert_eq!(extended.len(), 16);
        prop_assert!(extended.verify_perfect_qn().unwrap().is_perfect());
    }
}
