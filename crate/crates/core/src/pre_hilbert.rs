//! The weighted sesquilinear form on SU_q(2),
//! `<ε(k,l,m), ε(r,s,t)> = w(l+t) δ(k,r) δ(l+t, m+s)`,
//! and audits of how it interacts with the star operation.
//!
//! The form is positive definite on P (the Gram matrix of `a^i c^j` is
//! diagonal with entries `w(j)`) but degenerate-looking on A: it pairs distinct
//! basis vectors such as `1` and `c c*`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, NormalMonomial};
use crate::error::{Error, Result};
use crate::plane::PMonomial;
use crate::scalar::Scalar;
use crate::weights::{WeightError, WeightFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProductSpace {
    weights: WeightFunction,
}

impl InnerProductSpace {
    pub fn new(weights: WeightFunction) -> Self {
        InnerProductSpace { weights }
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    pub fn inner_monomial(
        &self,
        x: NormalMonomial,
        y: NormalMonomial,
    ) -> Result<Scalar, WeightError> {
        if x.k == y.k && x.l + y.m == x.m + y.l {
            self.weights.value(x.l + y.m)
        } else {
            Ok(Scalar::zero())
        }
    }

    /// Anti-linear in the first slot, linear in the second.
    pub fn inner(&self, f: &AlgebraElement, g: &AlgebraElement) -> Result<Scalar, WeightError> {
        let mut acc = Scalar::zero();
        for (x, cx) in f.terms() {
            for (y, cy) in g.terms() {
                let w = self.inner_monomial(*x, *y)?;
                if !w.is_zero() {
                    acc += &(&(&cx.conj() * cy) * &w);
                }
            }
        }
        Ok(acc)
    }

    /// All `(i, j)` with `<a^i c^j, f> != 0`. Each basis term `ε(k,l,m)` of `f`
    /// can only pair with `(k, l - m)`, so the set is finite.
    pub fn check_condition3(&self, f: &AlgebraElement) -> Result<BTreeSet<PMonomial>, WeightError> {
        let candidates: BTreeSet<PMonomial> = f
            .terms()
            .filter(|(x, _)| x.k >= 0 && x.l >= x.m)
            .map(|(x, _)| PMonomial::new(x.k as u32, x.l - x.m))
            .collect();
        let mut out = BTreeSet::new();
        for p in candidates {
            if !self.inner(&AlgebraElement::monomial(p.embed()), f)?.is_zero() {
                out.insert(p);
            }
        }
        Ok(out)
    }

    /// Distinct basis pairs `x < y` with `|k| <= k_max`, `l, m <= lm_max` and
    /// `<x, y> != 0`.
    pub fn off_diagonal_pairs(
        &self,
        k_max: i64,
        lm_max: u32,
    ) -> Result<Vec<(NormalMonomial, NormalMonomial, Scalar)>, WeightError> {
        let mut basis = Vec::new();
        for k in -k_max..=k_max {
            for l in 0..=lm_max {
                for m in 0..=lm_max {
                    basis.push(NormalMonomial::new(k, l, m));
                }
            }
        }
        let mut out = Vec::new();
        for (n, x) in basis.iter().enumerate() {
            for y in &basis[n + 1..] {
                let v = self.inner_monomial(*x, *y)?;
                if !v.is_zero() {
                    out.push((*x, *y, v));
                }
            }
        }
        Ok(out)
    }

    /// Checks the star/inner-product compatibility identities on each sample.
    ///
    /// For `(f1, f2, g)` with `f1, f2` in P this evaluates
    /// `<f1, f2 g> = <f1 g*, f2>` both as written and with `g` replaced by
    /// `g*` (i.e. `<f1 g, f2> = <f1, f2 g*>`, the form used for adjoints of
    /// Toeplitz operators); the universal identity implies both. It also
    /// checks anti-unitarity `<f1, f2>* = <f1*, f2*>`.
    pub fn audit_axioms(&self, samples: &[AxiomSample]) -> Result<AxiomAudit> {
        let mut triples = Vec::with_capacity(samples.len());
        for (index, s) in samples.iter().enumerate() {
            if !s.f1.is_in_p() || !s.f2.is_in_p() {
                return Err(Error::Domain(alloc::format!(
                    "sample {}: f1 and f2 must lie in P (got `{}`, `{}`)",
                    index, s.f1, s.f2
                )));
            }
            let g_star = s.g.star();
            let literal = IdentityCheck {
                lhs: self.inner(&s.f1, &s.f2.mul(&s.g))?,
                rhs: self.inner(&s.f1.mul(&g_star), &s.f2)?,
            };
            let transposed = IdentityCheck {
                lhs: self.inner(&s.f1.mul(&s.g), &s.f2)?,
                rhs: self.inner(&s.f1, &s.f2.mul(&g_star))?,
            };
            let anti_unitary = IdentityCheck {
                lhs: self.inner(&s.f1, &s.f2)?.conj(),
                rhs: self.inner(&s.f1.star(), &s.f2.star())?,
            };
            triples.push(TripleAudit { index, sample: s.clone(), literal, transposed, anti_unitary });
        }
        Ok(AxiomAudit { triples })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomSample {
    pub f1: AlgebraElement,
    pub f2: AlgebraElement,
    pub g: AlgebraElement,
}

impl AxiomSample {
    pub fn new(f1: AlgebraElement, f2: AlgebraElement, g: AlgebraElement) -> Self {
        AxiomSample { f1, f2, g }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleAudit {
    pub index: usize,
    pub sample: AxiomSample,
    /// `<f1, f2 g>` against `<f1 g*, f2>`.
    pub literal: IdentityCheck,
    /// `<f1 g, f2>` against `<f1, f2 g*>`.
    pub transposed: IdentityCheck,
    /// `<f1, f2>*` against `<f1*, f2*>`.
    pub anti_unitary: IdentityCheck,
}

impl TripleAudit {
    pub fn star_identity_holds(&self) -> bool {
        self.literal.holds() && self.transposed.holds()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomAudit {
    pub triples: Vec<TripleAudit>,
}

impl AxiomAudit {
    /// Samples violating `<f1, f2 g> = <f1 g*, f2>` in either form.
    pub fn star_identity_witnesses(&self) -> impl Iterator<Item = &TripleAudit> {
        self.triples.iter().filter(|t| !t.star_identity_holds())
    }

    /// Samples violating anti-unitarity of the star on `(f1, f2)`.
    pub fn anti_unitary_witnesses(&self) -> impl Iterator<Item = &TripleAudit> {
        self.triples.iter().filter(|t| !t.anti_unitary.holds())
    }

    pub fn all_hold(&self) -> bool {
        self.triples.iter().all(|t| t.star_identity_holds() && t.anti_unitary.holds())
    }
}
