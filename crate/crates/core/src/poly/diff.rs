use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use super::PolyError;
use crate::report::LawReport;
use crate::rig::instances::NatRig;
use crate::rig::Rig;
use crate::species::{binomial, CardSeq};

/// A multiset of derivative orders: `[0, 1, 1]` is `Y·Y⁽¹⁾·Y⁽¹⁾`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut orders: Vec<u32>) -> Self {
        orders.sort_unstable();
        Monomial(orders)
    }

    pub fn orders(&self) -> &[u32] {
        &self.0
    }

    pub fn max_order(&self) -> Option<u32> {
        self.0.last().copied()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, o) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "Y({o})")?;
        }
        Ok(())
    }
}

/// A differential polynomial: base coefficients on monomials, no zero terms.
pub struct DiffPoly<R: Rig> {
    base: Arc<R>,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Rig> Clone for DiffPoly<R> {
    fn clone(&self) -> Self {
        DiffPoly {
            base: Arc::clone(&self.base),
            terms: self.terms.clone(),
        }
    }
}

impl<R: Rig> fmt::Debug for DiffPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<R: Rig> DiffPoly<R> {
    pub fn zero(base: Arc<R>) -> Self {
        DiffPoly {
            base,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(base: Arc<R>, terms: impl IntoIterator<Item = (Monomial, R::Elem)>) -> Self {
        let mut dp = DiffPoly::zero(base);
        for (m, c) in terms {
            dp.add_term(m, &c);
        }
        dp
    }

    fn add_term(&mut self, m: Monomial, c: &R::Elem) {
        let b = &self.base;
        let sum = match self.terms.get(&m) {
            Some(old) => b.add(old, c),
            None => c.clone(),
        };
        if b.equiv(&sum, &b.zero()) {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order present.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::max_order).max()
    }

    pub fn equiv(&self, other: &DiffPoly<R>) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((m, a), (n, b))| m == n && self.base.equiv(a, b))
    }

    /// `∂Y⁽ⁱ⁾ = Y⁽ⁱ⁺¹⁾`, extended by linearity and Leibniz; coefficients are
    /// constants.
    pub fn derive(&self) -> DiffPoly<R> {
        let mut out = DiffPoly::zero(Arc::clone(&self.base));
        for (m, c) in &self.terms {
            for j in 0..m.0.len() {
                let mut orders = m.0.clone();
                orders[j] += 1;
                out.add_term(Monomial::new(orders), c);
            }
        }
        out
    }
}

impl<R: Rig> fmt::Display for DiffPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let one = self.base.one();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let show_coeff = m.0.is_empty() || !self.base.equiv(c, &one);
            match (show_coeff, m.0.is_empty()) {
                (true, true) => f.write_str(&self.base.render(c))?,
                (true, false) => write!(f, "{}*{m}", self.base.render(c))?,
                (false, _) => write!(f, "{m}")?,
            }
        }
        Ok(())
    }
}

/// Parse `c * Y(i1)*Y(i2)*... + ...`. A term may omit its coefficient, may
/// repeat coefficients (they multiply), and `Y` abbreviates `Y(0)`.
pub fn parse_diffpoly<R: Rig>(
    base: Arc<R>,
    text: &str,
    coeff: impl Fn(&str) -> Option<R::Elem>,
) -> Result<DiffPoly<R>, PolyError> {
    let mut dp = DiffPoly::zero(Arc::clone(&base));
    if text.trim().is_empty() {
        return Err(PolyError::Parse("empty differential polynomial".into()));
    }
    for term in text.split('+') {
        let mut c = base.one();
        let mut orders = Vec::new();
        for factor in term.split('*') {
            let factor: String = factor.chars().filter(|c| !c.is_whitespace()).collect();
            if factor.is_empty() {
                return Err(PolyError::Parse(format!(
                    "empty factor in term `{}`",
                    term.trim()
                )));
            }
            if factor == "Y" {
                orders.push(0);
            } else if let Some(inner) = factor.strip_prefix("Y(").and_then(|s| s.strip_suffix(')'))
            {
                let o = inner
                    .parse::<u32>()
                    .map_err(|_| PolyError::Parse(format!("bad derivative order in `{factor}`")))?;
                orders.push(o);
            } else {
                let v = coeff(&factor)
                    .ok_or_else(|| PolyError::Parse(format!("bad coefficient `{factor}`")))?;
                c = base.mul(&c, &v);
            }
        }
        dp.add_term(Monomial::new(orders), &c);
    }
    Ok(dp)
}

/// Free-function form of [`DiffPoly::derive`].
pub fn diffpoly_derive<R: Rig>(dp: &DiffPoly<R>) -> DiffPoly<R> {
    dp.derive()
}

fn truncated_product(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    (0..a.len())
        .map(|m| (0..=m).map(|k| binomial(m, k) * &a[k] * &b[m - k]).sum())
        .collect()
}

impl DiffPoly<NatRig> {
    /// Substitute the shifts of `seq` for `Y⁽ⁱ⁾` and read off `c_0..=c_n`,
    /// products being binomial convolutions.
    pub fn eval_at_seq(&self, seq: &CardSeq, n: usize) -> Result<CardSeq, PolyError> {
        let need = n + self.order().unwrap_or(0) as usize;
        if seq.truncation() < need {
            return Err(PolyError::InsufficientTruncation {
                have: seq.truncation(),
                need,
            });
        }
        let mut total = vec![BigUint::ZERO; n + 1];
        for (m, c) in &self.terms {
            let mut acc = vec![BigUint::ZERO; n + 1];
            acc[0] = BigUint::from(*c);
            for &o in m.orders() {
                let o = o as usize;
                acc = truncated_product(&acc, &seq.coeffs[o..=o + n]);
            }
            for (t, a) in total.iter_mut().zip(acc) {
                *t += a;
            }
        }
        Ok(CardSeq::new(total))
    }
}

/// Does `candidate` solve `X = dp(X, X', X'', …)` up to `tⁿ`?
pub fn dpe_check_solution(
    dp: &DiffPoly<NatRig>,
    candidate: &CardSeq,
    n: usize,
) -> Result<LawReport, PolyError> {
    let rhs = dp.eval_at_seq(candidate, n)?;
    let law = format!("dpe[X = {dp}]");
    Ok(match (0..=n).find(|&i| candidate.get(i) != rhs.get(i)) {
        None => LawReport::pass("cardseq", law, n + 1),
        Some(i) => LawReport::fail(
            "cardseq",
            law,
            n + 1,
            vec![
                format!("index={i}"),
                format!("lhs={}", candidate.get(i)),
                format!("rhs={}", rhs.get(i)),
            ],
        ),
    })
}
