use rand::Rng;

use super::{Alphabet, Regex};
use crate::rig::SeededRng;

/// A random canonical regex of nesting depth at most `depth`, weighted
/// toward concatenation and alternation.
pub fn random_regex(rng: &mut SeededRng, alphabet: &Alphabet, depth: usize) -> Regex {
    let leaf = |rng: &mut SeededRng| match rng.gen_range(0..10) {
        0 => Regex::Eps,
        1 => Regex::Empty,
        _ => Regex::Lit(alphabet.symbols()[rng.gen_range(0..alphabet.len())]),
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..10) {
        0..=3 => Regex::cat(
            random_regex(rng, alphabet, depth - 1),
            random_regex(rng, alphabet, depth - 1),
        ),
        4..=6 => Regex::alt(
            random_regex(rng, alphabet, depth - 1),
            random_regex(rng, alphabet, depth - 1),
        ),
        7 => Regex::star(random_regex(rng, alphabet, depth - 1)),
        _ => leaf(rng),
    }
}
