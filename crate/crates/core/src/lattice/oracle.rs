//! Brute-force searches over the whole carrier, used to check the closed
//! forms in the parent module.

use std::sync::Arc;

use super::{conot, cosubtract, downsets, DownSet, LatticeError, Poset};

/// The least `z` in the carrier with `y ⊆ x ∪ z`.
pub fn least_cosubtract(y: &DownSet, x: &DownSet, carrier: &[DownSet]) -> Option<DownSet> {
    let fits: Vec<&DownSet> = carrier.iter().filter(|z| y.is_subset(&x.join(z))).collect();
    fits.iter()
        .find(|z| fits.iter().all(|w| z.is_subset(w)))
        .map(|z| (*z).clone())
}

/// A triple `(y, x, z)` violating `y \ x ⊆ z ⟺ y ⊆ x ∪ z`.
pub fn check_adjointness(
    p: &Arc<Poset>,
) -> Result<Option<(DownSet, DownSet, DownSet)>, LatticeError> {
    let carrier = downsets(p)?;
    for y in &carrier {
        for x in &carrier {
            let d = cosubtract(y, x)?;
            for z in &carrier {
                if d.is_subset(z) != y.is_subset(&x.join(z)) {
                    return Ok(Some((y.clone(), x.clone(), z.clone())));
                }
            }
        }
    }
    Ok(None)
}

/// A pair `(y, x)` where the closed form differs from the brute-force least
/// element.
pub fn check_closed_form(p: &Arc<Poset>) -> Result<Option<(DownSet, DownSet)>, LatticeError> {
    let carrier = downsets(p)?;
    for y in &carrier {
        for x in &carrier {
            if least_cosubtract(y, x, &carrier).as_ref() != Some(&cosubtract(y, x)?) {
                return Ok(Some((y.clone(), x.clone())));
            }
        }
    }
    Ok(None)
}

/// `⌟x` is contained in every `z` with `x ∪ z = ⊤`.
pub fn conot_is_minimal(x: &DownSet, carrier: &[DownSet]) -> bool {
    let top = DownSet::top(x.poset());
    let c = conot(x);
    x.join(&c) == top
        && carrier
            .iter()
            .filter(|z| x.join(z) == top)
            .all(|z| c.is_subset(z))
}
