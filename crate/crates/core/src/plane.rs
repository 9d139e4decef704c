//! The Manin quantum plane P: the subalgebra spanned by `a^i c^j`.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Sub};

use crate::algebra::{write_linear_combination, AlgebraElement, NormalMonomial};
use crate::scalar::Scalar;

/// `a^i c^j`, i.e. `ε(i, j, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PMonomial {
    pub i: u32,
    pub j: u32,
}

impl PMonomial {
    pub const ONE: PMonomial = PMonomial { i: 0, j: 0 };

    pub fn new(i: u32, j: u32) -> Self {
        PMonomial { i, j }
    }

    pub fn embed(self) -> NormalMonomial {
        NormalMonomial::new(self.i as i64, self.j, 0)
    }

    /// Shifted by a bidegree, if the result stays in the first quadrant.
    pub fn shifted(self, di: i64, dj: i64) -> Option<PMonomial> {
        let i = self.i as i64 + di;
        let j = self.j as i64 + dj;
        if i < 0 || j < 0 || i > u32::MAX as i64 || j > u32::MAX as i64 {
            None
        } else {
            Some(PMonomial::new(i as u32, j as u32))
        }
    }
}

impl TryFrom<NormalMonomial> for PMonomial {
    type Error = NormalMonomial;
    fn try_from(x: NormalMonomial) -> Result<Self, NormalMonomial> {
        if x.is_in_p() {
            Ok(PMonomial::new(x.k as u32, x.l))
        } else {
            Err(x)
        }
    }
}

impl fmt::Display for PMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.embed(), f)
    }
}

/// Element of P.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PElement {
    terms: BTreeMap<PMonomial, Scalar>,
}

impl PElement {
    pub fn zero() -> Self {
        PElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(PMonomial::ONE)
    }

    pub fn monomial(x: PMonomial) -> Self {
        Self::term(Scalar::one(), x)
    }

    pub fn term(c: Scalar, x: PMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(x, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &PMonomial) -> Scalar {
        self.terms.get(x).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, x: PMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(x).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn scale(&self, s: &Scalar) -> PElement {
        let mut out = Self::zero();
        for (x, c) in &self.terms {
            out.add_term(*x, c * s);
        }
        out
    }

    /// The inclusion P -> A.
    pub fn embed(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (x, c) in &self.terms {
            out.add_term(x.embed(), c.clone());
        }
        out
    }

    /// `Some` exactly when `f` lies in P.
    pub fn from_algebra(f: &AlgebraElement) -> Option<PElement> {
        let mut out = Self::zero();
        for (x, c) in f.terms() {
            out.add_term(PMonomial::try_from(*x).ok()?, c.clone());
        }
        Some(out)
    }

    pub fn map_scalars<E>(
        &self,
        mut f: impl FnMut(&Scalar) -> Result<Scalar, E>,
    ) -> Result<PElement, E> {
        let mut out = Self::zero();
        for (x, c) in &self.terms {
            out.add_term(*x, f(c)?);
        }
        Ok(out)
    }
}

impl<'a> Add<&'a PElement> for &'a PElement {
    type Output = PElement;
    fn add(self, rhs: &'a PElement) -> PElement {
        let mut out = self.clone();
        for (x, c) in &rhs.terms {
            out.add_term(*x, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a PElement> for &'a PElement {
    type Output = PElement;
    fn sub(self, rhs: &'a PElement) -> PElement {
        let mut out = self.clone();
        for (x, c) in &rhs.terms {
            out.add_term(*x, -c);
        }
        out
    }
}

impl fmt::Display for PElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter(), |x| *x == PMonomial::ONE)
    }
}

impl fmt::Debug for PElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PElement({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_injective_on_p() {
        let mut p = PElement::monomial(PMonomial::new(2, 1));
        p.add_term(PMonomial::new(0, 3), Scalar::q_pow(-1));
        assert_eq!(PElement::from_algebra(&p.embed()), Some(p));
        let outside = AlgebraElement::monomial(NormalMonomial::new(1, 0, 1));
        assert_eq!(PElement::from_algebra(&outside), None);
    }
}
