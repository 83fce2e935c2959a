//! Random generation of valid Seifert data and elementary moves, used by
//! the randomized self-tests and the test suites.

use rand::Rng;

use crate::seifert::{ElementaryMove, SeifertInvariants};

/// A random valid presentation: genus in `[-2, 2]`, up to `max_pairs`
/// pairs with `1 <= a <= max_multiplicity` and `|b| <= max_b` (resampled
/// until coprime). `max_b` must be at least 1 so every multiplicity has a
/// coprime partner in range.
pub fn random_invariants(
    rng: &mut impl Rng,
    max_pairs: usize,
    max_multiplicity: i64,
    max_b: i64,
) -> SeifertInvariants {
    assert!(max_multiplicity >= 1 && max_b >= 1);
    let genus = rng.gen_range(-2..=2);
    let n = rng.gen_range(0..=max_pairs);
    let mut pairs = Vec::with_capacity(n);
    for _ in 0..n {
        let a = rng.gen_range(1..=max_multiplicity);
        let b = loop {
            let b = rng.gen_range(-max_b..=max_b);
            if a == 1 || num_integer::gcd(a, b) == 1 {
                break b;
            }
        };
        pairs.push((a, b));
    }
    SeifertInvariants::new(genus, pairs).expect("sampled data is valid by construction")
}

/// A random elementary move applicable to `s`.
pub fn random_move(rng: &mut impl Rng, s: &SeifertInvariants) -> ElementaryMove {
    let n = s.pairs().len();
    let trivial_indices: Vec<usize> = s
        .pairs()
        .iter()
        .enumerate()
        .filter(|(_, p)| p.a == 1 && p.b == 0)
        .map(|(i, _)| i)
        .collect();

    loop {
        match rng.gen_range(0..4) {
            0 => return ElementaryMove::InsertTrivial,
            1 if n >= 2 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                if i != j {
                    return ElementaryMove::Swap { i, j };
                }
            }
            2 if n >= 2 => {
                let to = rng.gen_range(0..n);
                let from = rng.gen_range(0..n);
                if to != from {
                    return ElementaryMove::Transfer { to, from };
                }
            }
            3 if !trivial_indices.is_empty() => {
                let index = trivial_indices[rng.gen_range(0..trivial_indices.len())];
                return ElementaryMove::DeleteTrivial { index };
            }
            _ => {}
        }
    }
}

/// Applies `count` random elementary moves to `s`.
pub fn random_move_sequence(
    rng: &mut impl Rng,
    s: &SeifertInvariants,
    count: usize,
) -> SeifertInvariants {
    let mut current = s.clone();
    for _ in 0..count {
        let mv = random_move(rng, &current);
        current = current
            .apply_move(&mv)
            .expect("sampled moves are applicable");
    }
    current
}
