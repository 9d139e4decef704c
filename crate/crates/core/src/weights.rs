//! Weight functions `w : N -> (0, inf)` driving the inner product.
//!
//! Ratios `w(l) / w(l')` with `l >= l'` are first-class: for the q-factorial
//! preset they are polynomials in `q` even though a generic quotient of two
//! values would leave the ring.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("unknown weight preset `{0}` (expected unit, factorial or q_factorial)")]
    UnknownPreset(String),
    #[error("weight table `{name}` has no value for l = {l} (table length {len})")]
    OutOfRange { name: String, l: u32, len: usize },
    #[error("weight ratio w({l})/w({lp}) needs l >= l'")]
    RatioOrder { l: u32, lp: u32 },
    #[error("weight table `{name}`: w({lp}) * ratio({l},{lp}) != w({l})")]
    Inconsistent { name: String, l: u32, lp: u32 },
    #[error("weight table `{name}`: w({l}) is zero")]
    ZeroWeight { name: String, l: u32 },
    #[error("weight table `{name}`: w({l})/w({lp}) is not in the scalar ring: {source}")]
    Ratio { name: String, l: u32, lp: u32, source: ScalarError },
}

/// User-supplied finite weight table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    name: String,
    values: Vec<Scalar>,
    ratios: BTreeMap<(u32, u32), Scalar>,
}

impl WeightTable {
    /// Validates that every value is nonzero and every supplied ratio is
    /// consistent with the values it relates.
    pub fn new(
        name: impl Into<String>,
        values: Vec<Scalar>,
        ratios: BTreeMap<(u32, u32), Scalar>,
    ) -> Result<Self, WeightError> {
        let name = name.into();
        for (l, v) in values.iter().enumerate() {
            if v.is_zero() {
                return Err(WeightError::ZeroWeight { name, l: l as u32 });
            }
        }
        for (&(l, lp), r) in &ratios {
            if l < lp {
                return Err(WeightError::RatioOrder { l, lp });
            }
            if let (Some(vl), Some(vlp)) = (values.get(l as usize), values.get(lp as usize)) {
                if &(vlp * r) != vl {
                    return Err(WeightError::Inconsistent { name, l, lp });
                }
            }
        }
        Ok(WeightTable { name, values, ratios })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightFunction {
    /// `w(l) = 1`.
    Unit,
    /// `w(l) = l!`.
    Factorial,
    /// `w(l) = [l]_q!` with `[j]_q = 1 + q + ... + q^(j-1)`.
    QFactorial,
    Table(WeightTable),
}

impl WeightFunction {
    pub fn preset(name: &str) -> Result<Self, WeightError> {
        match name {
            "unit" => Ok(WeightFunction::Unit),
            "factorial" => Ok(WeightFunction::Factorial),
            "q_factorial" | "q-factorial" => Ok(WeightFunction::QFactorial),
            other => Err(WeightError::UnknownPreset(other.into())),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            WeightFunction::Unit => "unit",
            WeightFunction::Factorial => "factorial",
            WeightFunction::QFactorial => "q_factorial",
            WeightFunction::Table(t) => &t.name,
        }
    }

    pub fn value(&self, l: u32) -> Result<Scalar, WeightError> {
        match self {
            WeightFunction::Table(t) => {
                t.values.get(l as usize).cloned().ok_or_else(|| WeightError::OutOfRange {
                    name: t.name.clone(),
                    l,
                    len: t.values.len(),
                })
            }
            _ => self.ratio(l, 0),
        }
    }

    /// `w(l) / w(lp)` for `l >= lp`, exactly.
    pub fn ratio(&self, l: u32, lp: u32) -> Result<Scalar, WeightError> {
        if l < lp {
            return Err(WeightError::RatioOrder { l, lp });
        }
        match self {
            WeightFunction::Unit => Ok(Scalar::one()),
            WeightFunction::Factorial => {
                let n = (lp + 1..=l).fold(BigInt::one(), |acc, n| acc * BigInt::from(n));
                Ok(Scalar::from_rational(BigRational::from_integer(n)))
            }
            WeightFunction::QFactorial => Ok(Scalar::from_q_polynomial(&q_factorial_ratio(l, lp))),
            WeightFunction::Table(t) => {
                if l == lp {
                    return Ok(Scalar::one());
                }
                if let Some(r) = t.ratios.get(&(l, lp)) {
                    return Ok(r.clone());
                }
                let vl = self.value(l)?;
                let vlp = self.value(lp)?;
                vl.exact_div(&vlp).map_err(|source| WeightError::Ratio {
                    name: t.name.clone(),
                    l,
                    lp,
                    source,
                })
            }
        }
    }

    /// `s * w(to) / w(from)` for any index order: a ratio multiple when
    /// `to >= from`, otherwise an exact division by `w(from) / w(to)`.
    pub fn rescale(&self, s: &Scalar, to: u32, from: u32) -> Result<Scalar, WeightError> {
        if to >= from {
            Ok(s * &self.ratio(to, from)?)
        } else {
            s.exact_div(&self.ratio(from, to)?).map_err(|source| WeightError::Ratio {
                name: self.name().into(),
                l: to,
                lp: from,
                source,
            })
        }
    }
}

/// Dense coefficients of `[lp+1]_q [lp+2]_q ... [l]_q`. Multiplying by
/// `[n]_q` is a sliding window sum of width `n`.
fn q_factorial_ratio(l: u32, lp: u32) -> Vec<BigInt> {
    let mut poly = alloc::vec![BigInt::one()];
    for n in lp + 1..=l {
        let n = n as usize;
        let mut next = alloc::vec![BigInt::zero(); poly.len() + n - 1];
        let mut window = BigInt::zero();
        for (d, slot) in next.iter_mut().enumerate() {
            if let Some(c) = poly.get(d) {
                window += c;
            }
            if d >= n {
                if let Some(c) = poly.get(d - n) {
                    window -= c;
                }
            }
            *slot = window.clone();
        }
        poly = next;
    }
    poly
}
