//! Co-Heyting boundaries on the distributive lattice of down-sets of a
//! finite poset.
//!
//! Join is union, meet is intersection. Subtraction `y \ x` is the least
//! down-set `z` with `y ⊆ x ∪ z`, co-negation is `⊤ \ x`, and the boundary
//! is `x ∩ ⌟x`.

pub mod oracle;

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::report::LawReport;
use crate::rig::{Derivation, Rig, SeededRng};

/// Largest poset whose down-sets are enumerated.
pub const DOWNSET_CAP: usize = 12;
/// Largest poset representable at all (one bit per element).
pub const POSET_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("order is not antisymmetric: `{0}` and `{1}` lie below each other")]
    NotAntisymmetric(String, String),
    #[error("poset has {size} elements; the limit is {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("down-sets belong to different posets")]
    PosetMismatch,
    #[error("{0} is not down-closed")]
    NotDownClosed(String),
}

/// A finite poset. `below[i]` is the mask of elements `≤ i`, including `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    below: Vec<u32>,
}

impl Poset {
    /// Build from element names and cover (or any generating) relations
    /// `(lo, hi)` meaning `lo < hi`; the order is their reflexive-transitive
    /// closure.
    pub fn from_covers(
        names: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Poset, LatticeError> {
        let n = names.len();
        if n > POSET_CAP {
            return Err(LatticeError::TooLarge {
                size: n,
                cap: POSET_CAP,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(LatticeError::DuplicateElement(name.clone()));
            }
        }
        let mut below: Vec<u32> = (0..n).map(|i| 1 << i).collect();
        for &(lo, hi) in covers {
            below[hi] |= 1 << lo;
        }
        for k in 0..n {
            for i in 0..n {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if below[i] >> j & 1 == 1 && below[j] >> i & 1 == 1 {
                    return Err(LatticeError::NotAntisymmetric(
                        names[j].clone(),
                        names[i].clone(),
                    ));
                }
            }
        }
        Ok(Poset { names, below })
    }

    /// `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Result<Poset, LatticeError> {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers((0..n).map(|i| i.to_string()).collect(), &covers)
    }

    pub fn antichain(names: &[&str]) -> Result<Poset, LatticeError> {
        Poset::from_covers(names.iter().map(|s| s.to_string()).collect(), &[])
    }

    /// Parse `elements: a b c` followed by `a < b` lines.
    pub fn parse(text: &str) -> Result<Poset, LatticeError> {
        let mut names: Option<Vec<String>> = None;
        let mut covers = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| LatticeError::Parse {
                line: lineno,
                message: message.to_string(),
            };
            match &names {
                None => {
                    let rest = line
                        .strip_prefix("elements:")
                        .ok_or_else(|| err("expected `elements: ...`"))?;
                    names = Some(rest.split_whitespace().map(str::to_string).collect());
                }
                Some(ns) => {
                    let (lo, hi) = line
                        .split_once('<')
                        .ok_or_else(|| err("expected `a < b`"))?;
                    let find = |s: &str| {
                        let s = s.trim();
                        if s.is_empty() || s.contains(char::is_whitespace) {
                            return Err(err("expected `a < b`"));
                        }
                        ns.iter()
                            .position(|n| n == s)
                            .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
                    };
                    covers.push((find(lo)?, find(hi)?));
                }
            }
        }
        let names = names.ok_or(LatticeError::Parse {
            line: 1,
            message: "missing `elements:` line".into(),
        })?;
        Poset::from_covers(names, &covers)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b] >> a & 1 == 1
    }

    pub fn full_mask(&self) -> u32 {
        if self.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.len()) - 1
        }
    }

    pub fn down_closure(&self, mask: u32) -> u32 {
        (0..self.len())
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0, |acc, i| acc | self.below[i])
    }

    pub fn is_down_closed(&self, mask: u32) -> bool {
        self.down_closure(mask) == mask
    }

    fn render_mask(&self, mask: u32) -> String {
        let parts: Vec<&str> = (0..self.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.names[i].as_str())
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// A down-closed subset of a poset.
#[derive(Clone, Debug)]
pub struct DownSet {
    poset: Arc<Poset>,
    mask: u32,
}

impl PartialEq for DownSet {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && same_poset(self, other)
    }
}

impl Eq for DownSet {}

fn same_poset(a: &DownSet, b: &DownSet) -> bool {
    Arc::ptr_eq(&a.poset, &b.poset) || a.poset == b.poset
}

impl DownSet {
    pub fn new(poset: &Arc<Poset>, mask: u32) -> Result<DownSet, LatticeError> {
        if mask & !poset.full_mask() != 0 || !poset.is_down_closed(mask) {
            return Err(LatticeError::NotDownClosed(
                poset.render_mask(mask & poset.full_mask()),
            ));
        }
        Ok(DownSet {
            poset: Arc::clone(poset),
            mask,
        })
    }

    /// The down-set with exactly the named elements. Names may be
    /// separated by commas and/or whitespace.
    pub fn from_names(poset: &Arc<Poset>, names: &str) -> Result<DownSet, LatticeError> {
        let mut mask = 0;
        for name in names
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
        {
            let i = poset
                .index_of(name)
                .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))?;
            mask |= 1 << i;
        }
        DownSet::new(poset, mask)
    }

    pub fn bottom(poset: &Arc<Poset>) -> DownSet {
        DownSet {
            poset: Arc::clone(poset),
            mask: 0,
        }
    }

    pub fn top(poset: &Arc<Poset>) -> DownSet {
        DownSet {
            poset: Arc::clone(poset),
            mask: poset.full_mask(),
        }
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_subset(&self, other: &DownSet) -> bool {
        self.mask & !other.mask == 0
    }

    fn with_mask(&self, mask: u32) -> DownSet {
        DownSet {
            poset: Arc::clone(&self.poset),
            mask,
        }
    }

    /// Union. Both sides must come from the same poset.
    pub fn join(&self, other: &DownSet) -> DownSet {
        debug_assert!(same_poset(self, other));
        self.with_mask(self.mask | other.mask)
    }

    /// Intersection. Both sides must come from the same poset.
    pub fn meet(&self, other: &DownSet) -> DownSet {
        debug_assert!(same_poset(self, other));
        self.with_mask(self.mask & other.mask)
    }
}

impl fmt::Display for DownSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poset.render_mask(self.mask))
    }
}

/// Every down-set, in increasing mask order.
pub fn downsets(p: &Arc<Poset>) -> Result<Vec<DownSet>, LatticeError> {
    if p.len() > DOWNSET_CAP {
        return Err(LatticeError::TooLarge {
            size: p.len(),
            cap: DOWNSET_CAP,
        });
    }
    Ok((0..=p.full_mask())
        .filter(|&m| p.is_down_closed(m))
        .map(|mask| DownSet {
            poset: Arc::clone(p),
            mask,
        })
        .collect())
}

/// `y \ x`: the least down-set `z` with `y ⊆ x ∪ z`, i.e. the down-closure
/// of the set difference.
pub fn cosubtract(y: &DownSet, x: &DownSet) -> Result<DownSet, LatticeError> {
    if !same_poset(y, x) {
        return Err(LatticeError::PosetMismatch);
    }
    Ok(y.with_mask(y.poset.down_closure(y.mask & !x.mask)))
}

/// `⌟x = ⊤ \ x`.
pub fn conot(x: &DownSet) -> DownSet {
    x.with_mask(x.poset.down_closure(x.poset.full_mask() & !x.mask))
}

/// `∂x = x ∩ ⌟x`.
pub fn boundary(x: &DownSet) -> DownSet {
    x.meet(&conot(x))
}

/// `∂(a ∩ b) = (∂a ∩ b) ∪ (a ∩ ∂b)` over every pair of down-sets.
pub fn check_leibniz_boundary(p: &Arc<Poset>) -> Result<LawReport, LatticeError> {
    let carrier = downsets(p)?;
    let mut samples = 0;
    for a in &carrier {
        for b in &carrier {
            samples += 1;
            let lhs = boundary(&a.meet(b));
            let rhs = boundary(a).meet(b).join(&a.meet(&boundary(b)));
            if lhs != rhs {
                return Ok(LawReport::fail(
                    "downsets",
                    "boundary:leibniz",
                    samples,
                    vec![
                        a.to_string(),
                        b.to_string(),
                        format!("lhs={lhs}"),
                        format!("rhs={rhs}"),
                    ],
                ));
            }
        }
    }
    Ok(LawReport::pass("downsets", "boundary:leibniz", samples))
}

/// The first pair, in carrier order, with `∂(a ∪ b) ≠ ∂a ∪ ∂b`.
pub fn find_linearity_counterexample(
    p: &Arc<Poset>,
) -> Result<Option<(DownSet, DownSet)>, LatticeError> {
    let carrier = downsets(p)?;
    for a in &carrier {
        for b in &carrier {
            if boundary(&a.join(b)) != boundary(a).join(&boundary(b)) {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

fn element_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("e{i}")
    }
}

/// A random poset on `1..=max_elements` elements named `a, b, …`: a DAG on
/// the index order, transitively closed.
pub fn random_poset(rng: &mut SeededRng, max_elements: usize) -> Arc<Poset> {
    let n = rng.gen_range(1..=max_elements.clamp(1, POSET_CAP));
    let mut covers = Vec::new();
    for hi in 0..n {
        for lo in 0..hi {
            if rng.gen_bool(0.35) {
                covers.push((lo, hi));
            }
        }
    }
    Arc::new(
        Poset::from_covers((0..n).map(element_name).collect(), &covers)
            .expect("index-ordered edges are acyclic"),
    )
}

/// The lattice of down-sets as a rig: `+` is union, `·` is intersection.
#[derive(Clone, Debug)]
pub struct DownSetRig {
    pub poset: Arc<Poset>,
}

impl DownSetRig {
    pub fn new(poset: Arc<Poset>) -> Self {
        DownSetRig { poset }
    }

    /// The boundary, registered as Leibniz-only.
    pub fn boundary_derivation() -> Derivation<DownSet> {
        Derivation::new("boundary", boundary).leibniz_only()
    }
}

impl Rig for DownSetRig {
    type Elem = DownSet;

    fn name(&self) -> String {
        "downsets".into()
    }

    fn sample(&self, rng: &mut SeededRng, _size: usize) -> DownSet {
        let raw = rng.gen::<u32>() & self.poset.full_mask();
        DownSet {
            poset: Arc::clone(&self.poset),
            mask: self.poset.down_closure(raw),
        }
    }

    fn equiv(&self, a: &DownSet, b: &DownSet) -> bool {
        a == b
    }

    fn zero(&self) -> DownSet {
        DownSet::bottom(&self.poset)
    }

    fn one(&self) -> DownSet {
        DownSet::top(&self.poset)
    }

    fn add(&self, a: &DownSet, b: &DownSet) -> DownSet {
        a.join(b)
    }

    fn mul(&self, a: &DownSet, b: &DownSet) -> DownSet {
        a.meet(b)
    }

    fn render(&self, a: &DownSet) -> String {
        a.to_string()
    }

    fn carrier(&self) -> Option<Vec<DownSet>> {
        downsets(&self.poset).ok()
    }
}
