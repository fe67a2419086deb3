//! Seeded random digraphs.
//!
//! The generator is xoshiro256++ seeded through SplitMix64 (the
//! `seed_from_u64` convention of the reference implementation). Cells are
//! filled row by row; each cell takes the top bit of one 64-bit output.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::digraph::Digraph;

/// A stream of uniformly random digraphs of a fixed order.
#[derive(Clone, Debug)]
pub struct DigraphStream {
    n: usize,
    rng: Xoshiro256PlusPlus,
}

impl DigraphStream {
    pub fn new(n: usize, seed: u64) -> Self {
        DigraphStream {
            n,
            rng: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }
}

impl Iterator for DigraphStream {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        let rng = &mut self.rng;
        Some(Digraph::from_fn(self.n, |_, _| rng.next_u64() >> 63 == 1))
    }
}

/// The first `count` digraphs of the stream for `seed`.
pub fn random_digraphs(n: usize, count: usize, seed: u64) -> Vec<Digraph> {
    DigraphStream::new(n, seed).take(count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    struct SplitMix64(u64);

    impl SplitMix64 {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        }
    }

    struct Reference([u64; 4]);

    impl Reference {
        fn seeded(seed: u64) -> Self {
            let mut sm = SplitMix64(seed);
            Reference([sm.next(), sm.next(), sm.next(), sm.next()])
        }

        fn next(&mut self) -> u64 {
            let s = &mut self.0;
            let result = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
            let t = s[1] << 17;
            s[2] ^= s[0];
            s[3] ^= s[1];
            s[1] ^= s[2];
            s[0] ^= s[3];
            s[2] ^= t;
            s[3] = s[3].rotate_left(45);
            result
        }
    }

    #[test]
    fn splitmix_reference_output() {
        let mut sm = SplitMix64(1234567);
        let first: Vec<u64> = (0..3).map(|_| sm.next()).collect();
        assert_eq!(
            first,
            vec![
                6457827717110365317,
                3203168211198807973,
                9817491932198370423
            ]
        );
    }

    #[test]
    fn published_output_from_small_state() {
        let expected = [
            41943041,
            58720359,
            3588806011781223,
            3591011842654386,
            9228616714210784205,
            9973669472204895162,
            14011001112246962877,
            12406186145184390807,
            15849039046786891736,
            10450023813501588000,
        ];
        let mut reference = Reference([1, 2, 3, 4]);
        let seed: Vec<u8> = [1u64, 2, 3, 4]
            .iter()
            .flat_map(|w| w.to_le_bytes())
            .collect();
        let mut ours = Xoshiro256PlusPlus::from_seed(seed.try_into().unwrap());
        for e in expected {
            assert_eq!(reference.next(), e);
            assert_eq!(ours.next_u64(), e);
        }
    }

    #[test]
    fn generator_matches_reference() {
        for seed in [0, 1, 7, 42, u64::MAX] {
            let mut ours = Xoshiro256PlusPlus::seed_from_u64(seed);
            let mut reference = Reference::seeded(seed);
            for _ in 0..1000 {
                assert_eq!(ours.next_u64(), reference.next());
            }
        }
    }

    #[test]
    fn digraphs_follow_the_bit_layout() {
        let mut reference = Reference::seeded(7);
        let expected: Vec<Digraph> = (0..5)
            .map(|_| Digraph::from_fn(4, |_, _| reference.next() >> 63 == 1))
            .collect();
        assert_eq!(random_digraphs(4, 5, 7), expected);
    }

    #[test]
    fn pinned_matrices() {
        let ds = random_digraphs(3, 2, 7);
        let text: Vec<String> = ds.iter().map(|d| d.to_matrix_text()).collect();
        assert_eq!(text, vec!["001\n010\n101\n", "000\n100\n000\n"]);
    }

    #[test]
    fn streams_are_deterministic() {
        assert_eq!(random_digraphs(5, 20, 99), random_digraphs(5, 20, 99));
        assert_ne!(random_digraphs(5, 20, 99), random_digraphs(5, 20, 100));
    }
}
