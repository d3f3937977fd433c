use rand::Rng;

use super::{seeded_rng, Derivation, Dimension, Rig, RigError, EXHAUSTIVE_LIMIT};
use crate::report::LawReport;

/// The `∪`-self-similar elements of an enumerable rig.
#[derive(Clone, Debug)]
pub struct SelfSimilar<E> {
    pub elements: Vec<E>,
    /// Only `zero` is self-similar.
    pub taut: bool,
}

fn enumerate<R: Rig>(rig: &R) -> Result<Vec<R::Elem>, RigError> {
    rig.carrier()
        .ok_or_else(|| RigError::NotEnumerable(rig.name()))
}

/// Every carrier element `a` with `a + a = a`.
pub fn find_self_similar<R: Rig>(rig: &R) -> Result<SelfSimilar<R::Elem>, RigError> {
    let elements: Vec<_> = enumerate(rig)?
        .into_iter()
        .filter(|a| rig.equiv(&rig.add(a, a), a))
        .collect();
    let zero = rig.zero();
    let taut = elements.len() == 1 && rig.equiv(&elements[0], &zero);
    Ok(SelfSimilar { elements, taut })
}

/// Every carrier element fixed by the derivation (`∂a = a`).
pub fn napier_search<R: Rig>(rig: &R, d: &Derivation<R::Elem>) -> Result<Vec<R::Elem>, RigError> {
    Ok(enumerate(rig)?
        .into_iter()
        .filter(|a| rig.equiv(&d.apply(a), a))
        .collect())
}

/// `∂1` must be idempotent under `+`, since `1·1 = 1` and Leibniz give
/// `∂1 = ∂1 + ∂1`.
pub fn derivation_unit_report<R: Rig>(rig: &R, d: &Derivation<R::Elem>) -> LawReport {
    let d1 = d.apply(&rig.one());
    let law = format!("{}:unit-self-similar", d.name);
    if rig.equiv(&d1, &rig.add(&d1, &d1)) {
        LawReport::pass(rig.name(), law, 1)
    } else {
        LawReport::fail(rig.name(), law, 1, vec![rig.render(&d1)])
    }
}

fn sample_set<R: Rig>(rig: &R, n_samples: usize, seed: u64) -> Vec<R::Elem> {
    if let Some(c) = rig.carrier() {
        return c;
    }
    let mut rng = seeded_rng(seed);
    let mut out = vec![rig.zero(), rig.one()];
    out.extend((0..n_samples).map(|_| {
        let size = rng.gen_range(0..=6);
        rig.sample(&mut rng, size)
    }));
    out
}

/// Check that `dim` is a dimension (additive, `dim 0 = 0`, reflects zero) on
/// a sample set, then that no non-zero sample is self-similar.
pub fn is_taut_via_dimension<R: Rig>(
    rig: &R,
    dim: &Dimension<R::Elem>,
    n_samples: usize,
    seed: u64,
) -> LawReport {
    let samples = sample_set(rig, n_samples, seed);
    let inst = rig.name();
    let law = |what: &str| format!("dimension[{}]:{}", dim.name, what);
    let zero = rig.zero();
    if dim.of(&zero) != 0 {
        return LawReport::fail(inst, law("zero"), 1, vec![rig.render(&zero)]);
    }

    let n = samples.len();
    let exhaustive = n.saturating_mul(n) <= EXHAUSTIVE_LIMIT;
    let pairs: Box<dyn Iterator<Item = (usize, usize)>> = if exhaustive {
        Box::new((0..n).flat_map(move |i| (0..n).map(move |j| (i, j))))
    } else {
        Box::new((0..n).map(move |i| (i, (i * 7 + 3) % n)))
    };
    let mut tested = 0;
    for (i, j) in pairs {
        tested += 1;
        let (a, b) = (&samples[i], &samples[j]);
        if dim.of(&rig.add(a, b)) != dim.of(a) + dim.of(b) {
            return LawReport::fail(
                inst,
                law("additive"),
                tested,
                vec![rig.render(a), rig.render(b)],
            );
        }
    }
    if let Some(a) = samples
        .iter()
        .find(|a| dim.of(a) == 0 && !rig.equiv(a, &zero))
    {
        return LawReport::fail(inst, law("reflects-zero"), n, vec![rig.render(a)]);
    }
    match samples
        .iter()
        .find(|a| rig.equiv(&rig.add(a, a), a) && !rig.equiv(a, &zero))
    {
        Some(a) => LawReport::fail(inst, law("taut"), n, vec![rig.render(a)]),
        None => LawReport::pass(inst, law("taut"), n),
    }
}

/// `start, ∂start, ∂²start, …` up to the first repeat.
#[derive(Clone, Debug)]
pub struct DerivationChain<E> {
    pub elements: Vec<E>,
    /// Index `i` of the first element with `∂(chain[i]) = chain[i]`.
    pub stabilized_at: Option<usize>,
}

pub fn iterate_derivation_chain<R: Rig>(
    rig: &R,
    d: &Derivation<R::Elem>,
    start: R::Elem,
    max_steps: usize,
) -> DerivationChain<R::Elem> {
    assert!(max_steps >= 1, "max_steps must be at least 1");
    let mut elements = vec![start];
    for _ in 0..max_steps {
        let last = elements.last().expect("chain is never empty");
        let next = d.apply(last);
        if rig.equiv(&next, last) {
            let at = elements.len() - 1;
            return DerivationChain {
                elements,
                stabilized_at: Some(at),
            };
        }
        elements.push(next);
    }
    DerivationChain {
        elements,
        stabilized_at: None,
    }
}
