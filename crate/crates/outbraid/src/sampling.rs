//! Seeded random words for the randomized suites.

use outbraid_core::central_ext::FreePairWord;
use rand::Rng;

fn random_pair_word<R: Rng>(rng: &mut R, len: usize) -> FreePairWord {
    let letters = (0..len)
        .map(|_| [1i8, -1, 2, -2][rng.random_range(0..4)])
        .collect();
    FreePairWord::new(letters).expect("letters in range")
}

/// A freely reduced element of the commutator subgroup of `F(x, y)` with at
/// most `max_len` letters: one commutator `[u, v]`, or a product of two when
/// there is room.
pub fn random_commutator_word<R: Rng>(rng: &mut R, max_len: usize) -> FreePairWord {
    let budget = (max_len / 2).max(2);
    let two = budget >= 4 && rng.random_bool(0.35);
    if two {
        let a = rng.random_range(1..=budget - 3);
        let b = rng.random_range(1..=budget - 2 - a);
        let c = rng.random_range(1..=budget - 1 - a - b);
        let d = rng.random_range(1..=budget - a - b - c);
        let first = FreePairWord::commutator(&random_pair_word(rng, a), &random_pair_word(rng, b));
        let second = FreePairWord::commutator(&random_pair_word(rng, c), &random_pair_word(rng, d));
        first.concat(&second).free_reduce()
    } else {
        let a = rng.random_range(1..budget);
        let b = rng.random_range(1..=budget - a);
        FreePairWord::commutator(&random_pair_word(rng, a), &random_pair_word(rng, b)).free_reduce()
    }
}
