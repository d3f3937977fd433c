use rand::Rng;

use super::{seq_of, SpeciesExpr};
use crate::rig::SeededRng;

/// A random expression of depth at most `depth`. Inner operands of
/// compositions come from [`random_empty_free`], so every generated
/// composition is defined.
pub fn random_species(rng: &mut SeededRng, depth: usize) -> SpeciesExpr {
    let leaf = |rng: &mut SeededRng| match rng.gen_range(0..10) {
        0 => SpeciesExpr::Zero,
        1 | 2 => SpeciesExpr::One,
        3..=6 => SpeciesExpr::X,
        _ => SpeciesExpr::E,
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..12) {
        0..=2 => SpeciesExpr::sum(
            random_species(rng, depth - 1),
            random_species(rng, depth - 1),
        ),
        3..=5 => SpeciesExpr::prod(
            random_species(rng, depth - 1),
            random_species(rng, depth - 1),
        ),
        6 | 7 => {
            let f = random_species(rng, depth - 1);
            let g = random_empty_free(rng, depth - 1);
            SpeciesExpr::comp(f, g)
        }
        8 | 9 => SpeciesExpr::deriv(random_species(rng, depth - 1)),
        _ => leaf(rng),
    }
}

/// A random expression of depth at most `depth` with no structure on the
/// empty set, usable as the inner operand of a composition.
pub fn random_empty_free(rng: &mut SeededRng, depth: usize) -> SpeciesExpr {
    let g = random_species(rng, depth);
    let g0 = seq_of(&g, 0).expect("generated expressions are well-defined");
    if g0.get(0).bits() == 0 {
        g
    } else if depth == 0 {
        SpeciesExpr::X
    } else {
        SpeciesExpr::prod(SpeciesExpr::X, random_species(rng, depth - 1))
    }
}
