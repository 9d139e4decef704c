use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::AlgebraElement;
use crate::plane::PElement;
use crate::scalar::Scalar;

/// Operator on P built lazily from Toeplitz operators `T_g`.
///
/// Evaluation happens per basis vector (see `Quantizer::apply`); matrices are
/// derived views over a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ToeplitzOperator {
    /// `T_g = P_K M_g`.
    Symbol(AlgebraElement),
    /// Adjoint on P with respect to the Gram form `<a^i c^j, a^i c^j> = w(j)`.
    Adjoint(Box<ToeplitzOperator>),
    /// `Compose(s, t) = s ∘ t` (apply `t` first).
    Compose(Box<ToeplitzOperator>, Box<ToeplitzOperator>),
    Sum(Vec<ToeplitzOperator>),
    Scale(Scalar, Box<ToeplitzOperator>),
}

impl ToeplitzOperator {
    pub fn symbol(g: AlgebraElement) -> Self {
        ToeplitzOperator::Symbol(g)
    }

    /// `T_1`, the identity of P.
    pub fn identity() -> Self {
        ToeplitzOperator::Symbol(AlgebraElement::one())
    }

    pub fn zero() -> Self {
        ToeplitzOperator::Sum(Vec::new())
    }

    pub fn adjoint(self) -> Self {
        ToeplitzOperator::Adjoint(Box::new(self))
    }

    /// `self ∘ rhs`.
    pub fn compose(self, rhs: ToeplitzOperator) -> Self {
        ToeplitzOperator::Compose(Box::new(self), Box::new(rhs))
    }

    pub fn scale(self, s: Scalar) -> Self {
        ToeplitzOperator::Scale(s, Box::new(self))
    }

    pub fn plus(self, rhs: ToeplitzOperator) -> Self {
        ToeplitzOperator::Sum(alloc::vec![self, rhs])
    }

    pub fn minus(self, rhs: ToeplitzOperator) -> Self {
        self.plus(rhs.scale(-Scalar::one()))
    }

    /// Every bidegree `(Δi, Δj)` by which the operator can move a basis vector
    /// `a^i c^j`. A symbol term `ε(k,l,m)` sends `a^i c^j` to a multiple of
    /// `a^{i+k} c^{j+l-m}`, so the set is finite and exact for every tree.
    pub fn shifts(&self) -> BTreeSet<(i64, i64)> {
        match self {
            ToeplitzOperator::Symbol(g) => {
                g.terms().map(|(x, _)| (x.k, x.l as i64 - x.m as i64)).collect()
            }
            ToeplitzOperator::Adjoint(inner) => {
                inner.shifts().into_iter().map(|(a, b)| (-a, -b)).collect()
            }
            ToeplitzOperator::Compose(s, t) => {
                let (s, t) = (s.shifts(), t.shifts());
                let mut out = BTreeSet::new();
                for a in &s {
                    for b in &t {
                        out.insert((a.0 + b.0, a.1 + b.1));
                    }
                }
                out
            }
            ToeplitzOperator::Sum(parts) => parts.iter().flat_map(|p| p.shifts()).collect(),
            ToeplitzOperator::Scale(_, inner) => inner.shifts(),
        }
    }
}

/// Creation operator `A†(g) = T_g` for `g` in P (equal to right multiplication by `g`).
pub fn creation(g: &PElement) -> ToeplitzOperator {
    ToeplitzOperator::Symbol(g.embed())
}

/// Annihilation operator `A(g) = T_{g*}`.
pub fn annihilation(g: &PElement) -> ToeplitzOperator {
    ToeplitzOperator::Symbol(g.embed().star())
}

/// `[S, T]_λ = S T - λ T S`.
pub fn q_commutator(s: &ToeplitzOperator, t: &ToeplitzOperator, lambda: &Scalar) -> ToeplitzOperator {
    let st = s.clone().compose(t.clone());
    let ts = t.clone().compose(s.clone());
    ToeplitzOperator::Sum(alloc::vec![st, ts.scale(-lambda)])
}

impl fmt::Display for ToeplitzOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToeplitzOperator::Symbol(g) => write!(f, "T[{}]", g),
            ToeplitzOperator::Adjoint(inner) => write!(f, "adj({})", inner),
            ToeplitzOperator::Compose(s, t) => write!(f, "({} . {})", s, t),
            ToeplitzOperator::Sum(parts) if parts.is_empty() => f.write_str("0"),
            ToeplitzOperator::Sum(parts) => {
                for (n, p) in parts.iter().enumerate() {
                    if n > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{}", p)?;
                }
                Ok(())
            }
            ToeplitzOperator::Scale(s, inner) => write!(f, "({}) {}", s, inner),
        }
    }
}
