//! Polynomials `Σ A_i·Yⁱ` over a base rig, and differential polynomials in
//! `Y, Y⁽¹⁾, Y⁽²⁾, …`.

mod diff;

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::rig::{Derivation, Rig, SeededRng};

pub use diff::{diffpoly_derive, dpe_check_solution, parse_diffpoly, DiffPoly, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("base rig mismatch: `{0}` vs `{1}`")]
    BaseMismatch(String, String),
    #[error("map is not a rig homomorphism: {0}")]
    HomViolation(String),
    #[error("candidate truncation {have} is below the required {need}")]
    InsufficientTruncation { have: usize, need: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// A polynomial with coefficients in `R`, trailing zeros stripped.
pub struct Poly<R: Rig> {
    base: Arc<R>,
    coeffs: Vec<R::Elem>,
}

impl<R: Rig> Clone for Poly<R> {
    fn clone(&self) -> Self {
        Poly {
            base: Arc::clone(&self.base),
            coeffs: self.coeffs.clone(),
        }
    }
}

impl<R: Rig> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poly")
            .field("base", &self.base.name())
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<R: Rig> Poly<R> {
    pub fn new(base: Arc<R>, mut coeffs: Vec<R::Elem>) -> Self {
        let zero = base.zero();
        while coeffs.last().is_some_and(|c| base.equiv(c, &zero)) {
            coeffs.pop();
        }
        Poly { base, coeffs }
    }

    pub fn zero(base: Arc<R>) -> Self {
        Poly::new(base, Vec::new())
    }

    pub fn constant(base: Arc<R>, c: R::Elem) -> Self {
        Poly::new(base, vec![c])
    }

    /// The indeterminate `Y`.
    pub fn var(base: Arc<R>) -> Self {
        let coeffs = vec![base.zero(), base.one()];
        Poly::new(base, coeffs)
    }

    pub fn base(&self) -> &Arc<R> {
        &self.base
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn check_base(&self, other: &Poly<R>) -> Result<(), PolyError> {
        let (a, b) = (self.base.name(), other.base.name());
        if Arc::ptr_eq(&self.base, &other.base) || a == b {
            Ok(())
        } else {
            Err(PolyError::BaseMismatch(a, b))
        }
    }

    /// Coefficientwise equality under the base's canonical equality.
    pub fn equiv(&self, other: &Poly<R>) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| self.base.equiv(a, b))
    }
}

impl<R: Rig> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.base;
        let (zero, one) = (b.zero(), b.one());
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if b.equiv(c, &zero) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "Y".into(),
                _ => format!("Y^{i}"),
            };
            match (b.equiv(c, &one), mono.is_empty()) {
                (true, false) => f.write_str(&mono)?,
                (_, true) => f.write_str(&b.render(c))?,
                (false, false) => write!(f, "{}*{mono}", b.render(c))?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn poly_add<R: Rig>(p: &Poly<R>, q: &Poly<R>) -> Result<Poly<R>, PolyError> {
    p.check_base(q)?;
    let b = &p.base;
    let n = p.coeffs.len().max(q.coeffs.len());
    let zero = b.zero();
    let coeffs = (0..n)
        .map(|i| {
            b.add(
                p.coeffs.get(i).unwrap_or(&zero),
                q.coeffs.get(i).unwrap_or(&zero),
            )
        })
        .collect();
    Ok(Poly::new(Arc::clone(b), coeffs))
}

/// Cauchy product: `c_k = Σ_{i+j=k} A_i·B_j`.
pub fn poly_mul<R: Rig>(p: &Poly<R>, q: &Poly<R>) -> Result<Poly<R>, PolyError> {
    p.check_base(q)?;
    let b = &p.base;
    if p.coeffs.is_empty() || q.coeffs.is_empty() {
        return Ok(Poly::zero(Arc::clone(b)));
    }
    let mut coeffs = vec![b.zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, x) in p.coeffs.iter().enumerate() {
        for (j, y) in q.coeffs.iter().enumerate() {
            coeffs[i + j] = b.add(&coeffs[i + j], &b.mul(x, y));
        }
    }
    Ok(Poly::new(Arc::clone(b), coeffs))
}

/// `∂(Σ A_i Yⁱ) = Σ (∂A_i·Yⁱ + i·A_i·Yⁱ⁻¹)`, with `∂Y = 1` and the base
/// derivation defaulting to the trivial one.
pub fn poly_derive<R: Rig>(p: &Poly<R>, base_d: Option<&Derivation<R::Elem>>) -> Poly<R> {
    let b = &p.base;
    let n = p.coeffs.len();
    let mut coeffs = vec![b.zero(); n];
    for (i, a) in p.coeffs.iter().enumerate() {
        if let Some(d) = base_d {
            coeffs[i] = b.add(&coeffs[i], &d.apply(a));
        }
        if i > 0 {
            coeffs[i - 1] = b.add(&coeffs[i - 1], &b.scale(i, a));
        }
    }
    Poly::new(Arc::clone(b), coeffs)
}

/// `Σ hom(A_i)·eⁱ` in the target rig.
///
/// `hom` is first checked to preserve `0`, `1`, and sums and products of the
/// polynomial's own coefficients.
pub fn poly_eval<R: Rig, T: Rig>(
    p: &Poly<R>,
    hom: impl Fn(&R::Elem) -> T::Elem,
    target: &T,
    e: &T::Elem,
) -> Result<T::Elem, PolyError> {
    let b = &p.base;
    let violation = |what: &str, args: &[&R::Elem]| {
        let shown: Vec<String> = args.iter().map(|a| b.render(a)).collect();
        PolyError::HomViolation(format!("{what} at ({})", shown.join(", ")))
    };
    if !target.equiv(&hom(&b.zero()), &target.zero()) {
        return Err(violation("zero", &[]));
    }
    if !target.equiv(&hom(&b.one()), &target.one()) {
        return Err(violation("one", &[]));
    }
    for x in &p.coeffs {
        for y in &p.coeffs {
            if !target.equiv(&hom(&b.add(x, y)), &target.add(&hom(x), &hom(y))) {
                return Err(violation("add", &[x, y]));
            }
            if !target.equiv(&hom(&b.mul(x, y)), &target.mul(&hom(x), &hom(y))) {
                return Err(violation("mul", &[x, y]));
            }
        }
    }
    // Horner
    Ok(p.coeffs.iter().rev().fold(target.zero(), |acc, a| {
        target.add(&target.mul(&acc, e), &hom(a))
    }))
}

/// `R[Y]` as a rig, with samples of degree at most `max_degree`.
pub struct PolyRig<R: Rig> {
    pub base: Arc<R>,
    pub max_degree: usize,
}

impl<R: Rig> PolyRig<R> {
    pub fn new(base: R) -> Self {
        PolyRig {
            base: Arc::new(base),
            max_degree: 4,
        }
    }

    /// `∂Y = 1` over the trivial base derivation.
    pub fn y_derivation() -> Derivation<Poly<R>>
    where
        R: Send + Sync + 'static,
    {
        Derivation::new("d-dY", |p: &Poly<R>| poly_derive(p, None))
    }
}

impl<R: Rig + Send + Sync + 'static> Rig for PolyRig<R> {
    type Elem = Poly<R>;

    fn name(&self) -> String {
        format!("poly-{}", self.base.name())
    }

    fn sample(&self, rng: &mut SeededRng, size: usize) -> Poly<R> {
        let deg = rng.gen_range(0..=self.max_degree.min(size));
        let coeffs = (0..=deg)
            .map(|_| self.base.sample(rng, size.min(2)))
            .collect();
        Poly::new(Arc::clone(&self.base), coeffs)
    }

    fn equiv(&self, a: &Poly<R>, b: &Poly<R>) -> bool {
        a.equiv(b)
    }

    fn zero(&self) -> Poly<R> {
        Poly::zero(Arc::clone(&self.base))
    }

    fn one(&self) -> Poly<R> {
        Poly::constant(Arc::clone(&self.base), self.base.one())
    }

    fn add(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        poly_add(a, b).expect("same base")
    }

    fn mul(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        poly_mul(a, b).expect("same base")
    }

    fn render(&self, a: &Poly<R>) -> String {
        a.to_string()
    }
}
