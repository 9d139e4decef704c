//! Toeplitz quantization of SU_q(2) on the quantum plane P.
//!
//! All exact work happens in the unnormalized basis `a^i c^j`, whose Gram
//! matrix is `diag(w(j))`. In that basis the projection onto P is
//!
//! ```text
//! P_K ε(k,l,m) = w(l)/w(l-m) a^k c^{l-m}   if k >= 0 and l >= m, else 0
//! ```
//!
//! and `T_g ψ = P_K(ψ g)`. The orthonormal basis `φ(i,j) = w(j)^{-1/2} a^i c^j`
//! only shows up in the numeric matrix view.

mod operator;

pub use operator::{annihilation, creation, q_commutator, ToeplitzOperator};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::plane::{PElement, PMonomial};
use crate::pre_hilbert::InnerProductSpace;
use crate::scalar::Scalar;
use crate::weights::WeightFunction;

/// Index rectangle `{(i, j) : i <= i_max, j <= j_max}` of basis monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub i_max: u32,
    pub j_max: u32,
}

impl Window {
    pub fn new(i_max: u32, j_max: u32) -> Self {
        Window { i_max, j_max }
    }

    pub fn contains(&self, x: PMonomial) -> bool {
        x.i <= self.i_max && x.j <= self.j_max
    }

    /// Monomials in `(i, j)` lexicographic order.
    pub fn monomials(&self) -> impl Iterator<Item = PMonomial> {
        let j_max = self.j_max;
        (0..=self.i_max).flat_map(move |i| (0..=j_max).map(move |j| PMonomial::new(i, j)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Exact entries in the `a^i c^j` basis.
    Unnormalized,
    /// `f64` entries in the orthonormal `φ` basis at `q = q0`.
    Normalized { q0: BigRational },
}

#[derive(Clone, Debug, PartialEq)]
pub enum MatrixEntry {
    Exact(Scalar),
    Numeric(f64),
}

/// Window view of an operator: entry `(row, col)` is the coefficient of `row`
/// in the image of `col`. Rows cover the full image support, so operators
/// raising degree give rectangular matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    pub window: Window,
    pub basis: Basis,
    entries: BTreeMap<(PMonomial, PMonomial), MatrixEntry>,
}

impl OperatorMatrix {
    pub fn get(&self, row: PMonomial, col: PMonomial) -> Option<&MatrixEntry> {
        self.entries.get(&(row, col))
    }

    /// Nonzero entries keyed by `(row, col)`.
    pub fn entries(&self) -> impl Iterator<Item = (&(PMonomial, PMonomial), &MatrixEntry)> {
        self.entries.iter()
    }

    pub fn rows(&self) -> BTreeSet<PMonomial> {
        self.entries.keys().map(|(r, _)| *r).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Exact entry, treating a missing entry as zero.
    pub fn exact(&self, row: PMonomial, col: PMonomial) -> Option<Scalar> {
        match self.entries.get(&(row, col)) {
            None => Some(Scalar::zero()),
            Some(MatrixEntry::Exact(s)) => Some(s.clone()),
            Some(MatrixEntry::Numeric(_)) => None,
        }
    }
}

/// Images of an operator on every window column that did not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCheck {
    pub window: Window,
    pub nonzero: Vec<(PMonomial, PElement)>,
}

impl WindowCheck {
    pub fn is_zero(&self) -> bool {
        self.nonzero.is_empty()
    }

    pub fn first_witness(&self) -> Option<&(PMonomial, PElement)> {
        self.nonzero.first()
    }

    /// Splits the nonzero columns into those matching `boundary` and the rest.
    pub fn split(&self, boundary: impl Fn(PMonomial) -> bool) -> (WindowCheck, WindowCheck) {
        let (b, rest): (Vec<_>, Vec<_>) = self.nonzero.iter().cloned().partition(|(x, _)| boundary(*x));
        (
            WindowCheck { window: self.window, nonzero: rest },
            WindowCheck { window: self.window, nonzero: b },
        )
    }
}

/// Outcome of diagonalizing an operator over a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagonal {
    Eigenvalues(BTreeMap<PMonomial, Scalar>),
    /// First column whose image is not a multiple of itself.
    OffDiagonal(PMonomial, PElement),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisComparison {
    pub symbol: AlgebraElement,
    pub standard: PElement,
    pub rotated: PElement,
}

impl BasisComparison {
    pub fn agrees(&self) -> bool {
        self.standard == self.rotated
    }
}

/// The quantization data: weights, the inner product they define, and the
/// projection onto P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quantizer {
    space: InnerProductSpace,
}

impl Quantizer {
    pub fn new(weights: WeightFunction) -> Self {
        Quantizer { space: InnerProductSpace::new(weights) }
    }

    pub fn space(&self) -> &InnerProductSpace {
        &self.space
    }

    pub fn weights(&self) -> &WeightFunction {
        self.space.weights()
    }

    pub fn project(&self, f: &AlgebraElement) -> Result<PElement> {
        let mut out = PElement::zero();
        for (x, c) in f.terms() {
            if x.k >= 0 && x.l >= x.m {
                let ratio = self.weights().ratio(x.l, x.l - x.m)?;
                out.add_term(PMonomial::new(x.k as u32, x.l - x.m), c * &ratio);
            }
        }
        Ok(out)
    }

    /// `T_g ψ = P_K(ψ g)`.
    pub fn toeplitz_apply(&self, g: &AlgebraElement, psi: &PElement) -> Result<PElement> {
        self.project(&psi.embed().mul(g))
    }

    pub fn apply(&self, op: &ToeplitzOperator, psi: &PElement) -> Result<PElement> {
        match op {
            ToeplitzOperator::Symbol(g) => self.toeplitz_apply(g, psi),
            ToeplitzOperator::Compose(s, t) => {
                let inner = self.apply(t, psi)?;
                self.apply(s, &inner)
            }
            ToeplitzOperator::Sum(parts) => {
                let mut acc = PElement::zero();
                for p in parts {
                    acc = &acc + &self.apply(p, psi)?;
                }
                Ok(acc)
            }
            ToeplitzOperator::Scale(s, inner) => Ok(self.apply(inner, psi)?.scale(s)),
            ToeplitzOperator::Adjoint(inner) => {
                let mut acc = PElement::zero();
                for (x, c) in psi.terms() {
                    acc = &acc + &self.adjoint_monomial(inner, *x)?.scale(c);
                }
                Ok(acc)
            }
        }
    }

    pub fn apply_monomial(&self, op: &ToeplitzOperator, x: PMonomial) -> Result<PElement> {
        self.apply(op, &PElement::monomial(x))
    }

    /// `S†(e_β) = Σ_α S(e_α)[β] · w(j_β)/w(j_α) e_α`, where only the finitely
    /// many `α = β - Δ` (Δ a shift of `S`) can contribute.
    fn adjoint_monomial(&self, op: &ToeplitzOperator, beta: PMonomial) -> Result<PElement> {
        let mut out = PElement::zero();
        for (di, dj) in op.shifts() {
            let Some(alpha) = beta.shifted(-di, -dj) else { continue };
            let c = self.apply_monomial(op, alpha)?.coeff(&beta);
            if c.is_zero() {
                continue;
            }
            out.add_term(alpha, self.weights().rescale(&c, beta.j, alpha.j)?);
        }
        Ok(out)
    }

    pub fn operator_matrix(
        &self,
        op: &ToeplitzOperator,
        window: Window,
        basis: Basis,
    ) -> Result<OperatorMatrix> {
        let mut entries = BTreeMap::new();
        for col in window.monomials() {
            for (row, c) in self.apply_monomial(op, col)?.terms() {
                let entry = match &basis {
                    Basis::Unnormalized => MatrixEntry::Exact(c.clone()),
                    Basis::Normalized { q0 } => {
                        MatrixEntry::Numeric(self.normalized_entry(c, row.j, col.j, q0)?)
                    }
                };
                entries.insert((*row, col), entry);
            }
        }
        Ok(OperatorMatrix { window, basis, entries })
    }

    /// Exact matrix of the Gram adjoint over the window.
    pub fn adjoint_on_window(&self, op: &ToeplitzOperator, window: Window) -> Result<OperatorMatrix> {
        self.operator_matrix(&op.clone().adjoint(), window, Basis::Unnormalized)
    }

    /// Unnormalized entry `c` rescaled by `(w(row_j)/w(col_j))^{1/2}` at `q0`.
    fn normalized_entry(&self, c: &Scalar, row_j: u32, col_j: u32, q0: &BigRational) -> Result<f64> {
        let zero = BigRational::zero();
        let eval = |s: &Scalar| -> Result<f64> { Ok(s.eval(q0, &zero)?.to_f64()) };
        let w_row = self.weights().value(row_j)?.eval(q0, &zero)?;
        let w_col = self.weights().value(col_j)?.eval(q0, &zero)?;
        let ratio = match (w_row, w_col) {
            (crate::scalar::Value::Exact(a), crate::scalar::Value::Exact(b)) if !b.is_zero() => {
                (a / b).to_f64().unwrap_or(f64::NAN)
            }
            (a, b) => a.to_f64() / b.to_f64(),
        };
        if ratio < 0.0 {
            return Err(Error::Domain(alloc::format!(
                "weights w({}) and w({}) have opposite signs at q = {}",
                row_j, col_j, q0
            )));
        }
        Ok(eval(c)? * libm::sqrt(ratio))
    }

    /// Applies `op` to every window column and keeps the nonzero images.
    pub fn window_check(&self, op: &ToeplitzOperator, window: Window) -> Result<WindowCheck> {
        let mut nonzero = Vec::new();
        for x in window.monomials() {
            let image = self.apply_monomial(op, x)?;
            if !image.is_zero() {
                nonzero.push((x, image));
            }
        }
        Ok(WindowCheck { window, nonzero })
    }

    pub fn diagonal_on_window(&self, op: &ToeplitzOperator, window: Window) -> Result<Diagonal> {
        let mut eigen = BTreeMap::new();
        for x in window.monomials() {
            let image = self.apply_monomial(op, x)?;
            let lambda = image.coeff(&x);
            if image != PElement::term(lambda.clone(), x) {
                return Ok(Diagonal::OffDiagonal(x, image));
            }
            eigen.insert(x, lambda);
        }
        Ok(Diagonal::Eigenvalues(eigen))
    }

    /// Projection through a different orthonormal Hamel basis of P: each pair
    /// `{a^{2t} c^j, a^{2t+1} c^j}` (equal norms `w(j)`) is replaced by its
    /// rotation through the Pythagorean angle `(3/5, 4/5)`. Coefficients come
    /// from pairing with the rotated vectors and dividing by their norms.
    pub fn project_rotated(&self, f: &AlgebraElement) -> Result<PElement> {
        let pairs: BTreeSet<(u32, u32)> = f
            .terms()
            .filter(|(x, _)| x.k >= 0)
            .map(|(x, _)| ((x.k as u32) & !1, x.l.saturating_sub(x.m)))
            .collect();
        let three = Scalar::from_ratio(3, 5);
        let four = Scalar::from_ratio(4, 5);
        let mut out = PElement::zero();
        for (i0, j) in pairs {
            let e1 = PElement::monomial(PMonomial::new(i0, j));
            let e2 = PElement::monomial(PMonomial::new(i0 + 1, j));
            let psi1 = &e1.scale(&three) + &e2.scale(&four);
            let psi2 = &e2.scale(&three) - &e1.scale(&four);
            for psi in [psi1, psi2] {
                let embedded = psi.embed();
                let norm = self.space.inner(&embedded, &embedded)?;
                let pairing = self.space.inner(&embedded, f)?;
                if pairing.is_zero() {
                    continue;
                }
                out = &out + &psi.scale(&pairing.exact_div(&norm)?);
            }
        }
        Ok(out)
    }

    pub fn check_basis_independence(&self, samples: &[AlgebraElement]) -> Result<Vec<BasisComparison>> {
        samples
            .iter()
            .map(|f| {
                Ok(BasisComparison {
                    symbol: f.clone(),
                    standard: self.project(f)?,
                    rotated: self.project_rotated(f)?,
                })
            })
            .collect()
    }
}
