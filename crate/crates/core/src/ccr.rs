//! The free algebra F on generators `G_f` (`f` in P or P*), its evaluation
//! `π(G_{f1} ... G_{fn}) = T_{f1} ∘ ... ∘ T_{fn}` on P, and the grading tools
//! used to split relations into classical and quantum parts.
//!
//! Window checks only refute kernel membership: a nonzero image is a witness,
//! a clean window says nothing about columns outside it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::algebra::{write_linear_combination, AlgebraElement, Generator};
use crate::error::{Error, Result};
use crate::plane::{PElement, PMonomial};
use crate::quantization::{Quantizer, ToeplitzOperator, Window};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorKind {
    /// `G_f`, evaluated as `T_f`.
    Symbol,
    /// Evaluated as the Gram adjoint of `T_f`. Not one of the `G_f` of F
    /// proper; admitted so that relations mixing `T_f` and adjoints can be
    /// written down.
    Adjoint,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeGenerator {
    payload: AlgebraElement,
    kind: GeneratorKind,
}

impl FreeGenerator {
    pub fn new(payload: AlgebraElement, kind: GeneratorKind) -> Result<Self> {
        if !(payload.is_in_p() || payload.is_in_pstar()) {
            return Err(Error::Domain(alloc::format!(
                "generator payload `{}` lies in neither P nor P*",
                payload
            )));
        }
        if payload.is_zero() || payload.as_scalar().is_some() {
            return Err(Error::Domain(alloc::format!(
                "generator payload `{}` is a multiple of the unit",
                payload
            )));
        }
        Ok(FreeGenerator { payload, kind })
    }

    pub fn symbol(payload: AlgebraElement) -> Result<Self> {
        Self::new(payload, GeneratorKind::Symbol)
    }

    pub fn adjoint(payload: AlgebraElement) -> Result<Self> {
        Self::new(payload, GeneratorKind::Adjoint)
    }

    /// `G_g` for one of the four presentation generators.
    pub fn basic(g: Generator) -> Self {
        FreeGenerator { payload: AlgebraElement::generator(g), kind: GeneratorKind::Symbol }
    }

    pub fn payload(&self) -> &AlgebraElement {
        &self.payload
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn is_extended(&self) -> bool {
        self.kind == GeneratorKind::Adjoint
    }

    pub fn operator(&self) -> ToeplitzOperator {
        let t = ToeplitzOperator::symbol(self.payload.clone());
        match self.kind {
            GeneratorKind::Symbol => t,
            GeneratorKind::Adjoint => t.adjoint(),
        }
    }
}

impl fmt::Display for FreeGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeneratorKind::Symbol => write!(f, "[{}]", self.payload),
            GeneratorKind::Adjoint => write!(f, "[adj:{}]", self.payload),
        }
    }
}

impl fmt::Debug for FreeGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A word in the generators, ordered by length and then lexicographically.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(pub Vec<FreeGenerator>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.0.clone();
        out.extend(rhs.0.iter().cloned());
        FreeWord(out)
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, g) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", g)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Element of F with coefficients in the scalar ring (which may carry `h`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeElement {
    terms: BTreeMap<FreeWord, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::term(s, FreeWord::empty())
    }

    pub fn term(c: Scalar, w: FreeWord) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn generator(g: FreeGenerator) -> Self {
        Self::term(Scalar::one(), FreeWord(alloc::vec![g]))
    }

    pub fn word(gens: &[FreeGenerator]) -> Self {
        Self::term(Scalar::one(), FreeWord(gens.to_vec()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &FreeWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: FreeWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> FreeElement {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, rhs: &FreeElement) -> FreeElement {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Length of the longest word. `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(FreeWord::degree).max()
    }

    pub fn has_h(&self) -> bool {
        self.terms.values().any(Scalar::has_h)
    }

    pub fn has_extended_generators(&self) -> bool {
        self.terms.keys().any(|w| w.0.iter().any(FreeGenerator::is_extended))
    }

    pub fn map_scalars<E>(
        &self,
        mut f: impl FnMut(&Scalar) -> Result<Scalar, E>,
    ) -> Result<FreeElement, E> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Substitutes the formal `h` by a rational exactly.
    pub fn substitute_h(&self, value: &BigRational) -> FreeElement {
        self.map_scalars(|c| Ok::<_, ()>(c.substitute_h(value))).unwrap_or_default()
    }

    /// `π(self)` as an operator tree. Coefficients must be free of `h`.
    pub fn to_operator(&self) -> Result<ToeplitzOperator> {
        if self.has_h() {
            return Err(Error::HbarUnbound);
        }
        let parts = self
            .terms
            .iter()
            .map(|(w, c)| {
                let op = w
                    .0
                    .iter()
                    .rev()
                    .fold(ToeplitzOperator::identity(), |acc, g| g.operator().compose(acc));
                if c.is_one() {
                    op
                } else {
                    op.scale(c.clone())
                }
            })
            .collect();
        Ok(ToeplitzOperator::Sum(parts))
    }
}

impl From<FreeGenerator> for FreeElement {
    fn from(g: FreeGenerator) -> Self {
        FreeElement::generator(g)
    }
}

impl From<Scalar> for FreeElement {
    fn from(s: Scalar) -> Self {
        FreeElement::scalar(s)
    }
}

impl<'a> Add<&'a FreeElement> for &'a FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &'a FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a FreeElement> for &'a FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &'a FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a FreeElement> for &'a FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &'a FreeElement) -> FreeElement {
        FreeElement::mul(self, rhs)
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter(), |w| w.0.is_empty())
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeElement({})", self)
    }
}

/// Numeric values to substitute during evaluation. `hbar` is required when
/// the relation carries `h`; `q` specializes the resulting coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    pub q: Option<BigRational>,
    pub hbar: Option<BigRational>,
}

impl Substitution {
    pub fn symbolic() -> Self {
        Self::default()
    }
}

fn bind_hbar(r: &FreeElement, subst: &Substitution) -> Result<FreeElement> {
    if !r.has_h() {
        return Ok(r.clone());
    }
    let hbar = subst.hbar.as_ref().ok_or(Error::HbarUnbound)?;
    Ok(r.map_scalars(|c| c.substitute_hbar(hbar))?)
}

fn specialize(x: PElement, subst: &Substitution) -> Result<PElement> {
    match &subst.q {
        None => Ok(x),
        Some(q0) => Ok(x.map_scalars(|c| c.specialize_q(q0))?),
    }
}

/// `π(r) ψ`: each word acts with its leftmost generator applied last.
pub fn pi_apply(
    quantizer: &Quantizer,
    r: &FreeElement,
    psi: &PElement,
    subst: &Substitution,
) -> Result<PElement> {
    let op = bind_hbar(r, subst)?.to_operator()?;
    specialize(quantizer.apply(&op, psi)?, subst)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationVerdict {
    pub window: Window,
    /// First column (in `(i, j)` order) with a nonzero image, and that image.
    pub witness: Option<(PMonomial, PElement)>,
}

impl RelationVerdict {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `π(r) a^i c^j = 0` for every column of the window.
pub fn is_relation_on_window(
    quantizer: &Quantizer,
    r: &FreeElement,
    window: Window,
    subst: &Substitution,
) -> Result<RelationVerdict> {
    let op = bind_hbar(r, subst)?.to_operator()?;
    for x in window.monomials() {
        let image = specialize(quantizer.apply_monomial(&op, x)?, subst)?;
        if !image.is_zero() {
            return Ok(RelationVerdict { window, witness: Some((x, image)) });
        }
    }
    Ok(RelationVerdict { window, witness: None })
}

/// Homogeneous components `[R_0, ..., R_n]`, zero components included.
pub fn degree_decompose(r: &FreeElement) -> Result<Vec<FreeElement>> {
    let n = r.degree().ok_or(Error::ZeroElement)?;
    let mut parts = alloc::vec![FreeElement::zero(); n + 1];
    for (w, c) in r.terms() {
        parts[w.degree()].add_term(w.clone(), c.clone());
    }
    Ok(parts)
}

/// The top-degree component `R_n`.
pub fn classical_part(r: &FreeElement) -> Result<FreeElement> {
    Ok(degree_decompose(r)?.pop().unwrap_or_default())
}

/// `Σ_d h^(n-d) R_d` with `h` standing for `ℏ^(1/2)`.
pub fn hbar_deform(r: &FreeElement) -> Result<FreeElement> {
    if r.has_h() {
        return Err(Error::AlreadyDeformed);
    }
    let parts = degree_decompose(r)?;
    let n = parts.len() - 1;
    let mut out = FreeElement::zero();
    for (d, part) in parts.iter().enumerate() {
        out = &out + &part.scale(&Scalar::h_pow((n - d) as u32));
    }
    Ok(out)
}

/// Homogeneous in word length. The zero element counts as classical.
pub fn is_classical(r: &FreeElement) -> bool {
    let mut degrees = r.terms().map(|(w, _)| w.degree());
    match degrees.next() {
        None => true,
        Some(d) => degrees.all(|e| e == d),
    }
}

pub fn is_quantum(r: &FreeElement) -> bool {
    !is_classical(r)
}

/// Generators of the classical relation ideal: the classical part of each
/// supplied relation.
pub fn dequantized_generators(relations: &[FreeElement]) -> Result<Vec<FreeElement>> {
    relations.iter().map(classical_part).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcrFamily {
    /// `A_j A_k - A_k A_j`
    Annihilators,
    /// `A_j† A_k† - A_k† A_j†`
    Creators,
    /// `A_j A_k† - A_k† A_j - δ(j,k) ℏ 1`
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardRelation {
    pub family: CcrFamily,
    pub j: usize,
    pub k: usize,
    pub relation: FreeElement,
}

/// The standard canonical commutation relations over pairs
/// `(A_j, A_j†)` of generators, with `ℏ` written as `h^2`. Pairs `j < k` are
/// listed for the first two families and all `(j, k)` for the third.
pub fn standard_ccr(pairs: &[(FreeGenerator, FreeGenerator)]) -> Vec<StandardRelation> {
    let commutator = |x: &FreeGenerator, y: &FreeGenerator| {
        &FreeElement::word(&[x.clone(), y.clone()]) - &FreeElement::word(&[y.clone(), x.clone()])
    };
    let mut out = Vec::new();
    for j in 0..pairs.len() {
        for k in j + 1..pairs.len() {
            out.push(StandardRelation {
                family: CcrFamily::Annihilators,
                j,
                k,
                relation: commutator(&pairs[j].0, &pairs[k].0),
            });
            out.push(StandardRelation {
                family: CcrFamily::Creators,
                j,
                k,
                relation: commutator(&pairs[j].1, &pairs[k].1),
            });
        }
    }
    for j in 0..pairs.len() {
        for k in 0..pairs.len() {
            let mut relation = commutator(&pairs[j].0, &pairs[k].1);
            if j == k {
                relation = &relation - &FreeElement::scalar(Scalar::h_pow(2));
            }
            out.push(StandardRelation { family: CcrFamily::Mixed, j, k, relation });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightFunction;
    use Generator::*;

    fn g(x: Generator) -> FreeElement {
        FreeElement::generator(FreeGenerator::basic(x))
    }

    fn q_oscillator() -> FreeElement {
        let q = Scalar::q_pow(1);
        let r = &(&g(CStar) * &g(C)) - &(&g(C) * &g(CStar)).scale(&q);
        &r - &FreeElement::one()
    }

    #[test]
    fn generator_domain() {
        assert!(FreeGenerator::symbol(AlgebraElement::one()).is_err());
        assert!(FreeGenerator::symbol(AlgebraElement::zero()).is_err());
        let mixed = &AlgebraElement::generator(A) + &AlgebraElement::generator(AStar);
        assert!(FreeGenerator::symbol(mixed).is_err());
        let ac = AlgebraElement::generator(A).mul(&AlgebraElement::generator(C));
        assert!(FreeGenerator::symbol(ac).is_ok());
        assert!(FreeGenerator::adjoint(AlgebraElement::generator(A)).unwrap().is_extended());
    }

    #[test]
    fn pi_apply_examples() {
        let t = Quantizer::new(WeightFunction::QFactorial);
        let s = Substitution::symbolic();
        let one = PElement::one();
        let got = pi_apply(&t, &g(C), &one, &s).unwrap();
        assert_eq!(got, PElement::monomial(PMonomial::new(0, 1)));
        let psi = PElement::monomial(PMonomial::new(2, 3));
        assert_eq!(pi_apply(&t, &FreeElement::one(), &psi, &s).unwrap(), psi);
        for x in Window::new(3, 3).monomials() {
            let image = pi_apply(&t, &q_oscillator(), &PElement::monomial(x), &s).unwrap();
            assert!(image.is_zero());
        }
    }

    #[test]
    fn word_order_applies_leftmost_last() {
        let t = Quantizer::new(WeightFunction::Unit);
        let s = Substitution::symbolic();
        // T_{a*} T_a 1 = T_{a*} a = 1 - q^2, while T_a T_{a*} 1 = 0
        let left = pi_apply(&t, &(&g(AStar) * &g(A)), &PElement::one(), &s).unwrap();
        assert_eq!(left, PElement::term(&Scalar::one() - &Scalar::q_pow(2), PMonomial::ONE));
        assert!(pi_apply(&t, &(&g(A) * &g(AStar)), &PElement::one(), &s).unwrap().is_zero());
    }

    #[test]
    fn window_verdicts() {
        let w = Window::new(6, 6);
        let s = Substitution::symbolic();
        let qf = Quantizer::new(WeightFunction::QFactorial);
        assert!(is_relation_on_window(&qf, &q_oscillator(), w, &s).unwrap().holds());
        let unit = Quantizer::new(WeightFunction::Unit);
        let v = is_relation_on_window(&unit, &q_oscillator(), w, &s).unwrap();
        let (x, image) = v.witness.unwrap();
        assert_eq!(x, PMonomial::new(0, 1));
        assert_eq!(image, PElement::term(-Scalar::q_pow(1), x));
        let q = Scalar::q_pow(1);
        let r = &(&g(C) * &g(A)) - &(&g(A) * &g(C)).scale(&q);
        assert!(is_relation_on_window(&unit, &r, w, &s).unwrap().holds());
    }

    #[test]
    fn hbar_needs_a_value() {
        let t = Quantizer::new(WeightFunction::QFactorial);
        let deformed = hbar_deform(&q_oscillator()).unwrap();
        let w = Window::new(2, 2);
        assert_eq!(
            is_relation_on_window(&t, &deformed, w, &Substitution::symbolic()),
            Err(Error::HbarUnbound)
        );
        let one = Substitution { q: None, hbar: Some(BigRational::from_integer(1.into())) };
        assert!(is_relation_on_window(&t, &deformed, w, &one).unwrap().holds());
        let two = Substitution { q: None, hbar: Some(BigRational::from_integer(2.into())) };
        assert!(!is_relation_on_window(&t, &deformed, w, &two).unwrap().holds());
    }

    #[test]
    fn grading_examples() {
        let r = q_oscillator();
        let parts = degree_decompose(&r).unwrap();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], FreeElement::scalar(-Scalar::one()));
        assert!(parts[1].is_zero());
        assert_eq!(classical_part(&r).unwrap(), &r + &FreeElement::one());
        let ga = &g(A) - &FreeElement::one();
        assert_eq!(degree_decompose(&ga).unwrap(), alloc::vec![-&FreeElement::one(), g(A)]);
        assert_eq!(degree_decompose(&FreeElement::zero()), Err(Error::ZeroElement));
        let five = &(&g(A) * &g(AStar)) - &FreeElement::scalar(Scalar::from_int(5));
        assert_eq!(classical_part(&five).unwrap(), &g(A) * &g(AStar));
    }

    #[test]
    fn deform_examples() {
        let r = q_oscillator();
        let d = hbar_deform(&r).unwrap();
        let expected = &classical_part(&r).unwrap() - &FreeElement::scalar(Scalar::h_pow(2));
        assert_eq!(d, expected);
        assert_eq!(d.substitute_h(&BigRational::from_integer(1.into())), r);
        assert_eq!(
            d.substitute_h(&BigRational::from_integer(0.into())),
            classical_part(&r).unwrap()
        );
        assert_eq!(hbar_deform(&d), Err(Error::AlreadyDeformed));
        let homogeneous = &g(A) * &g(C);
        assert_eq!(hbar_deform(&homogeneous).unwrap(), homogeneous);
    }

    #[test]
    fn classification_examples() {
        let qi = Scalar::q_pow(-1);
        let r = &(&g(A) * &g(C)) - &(&g(C) * &g(A)).scale(&qi);
        assert!(is_classical(&r));
        assert!(is_quantum(&q_oscillator()));
        assert!(is_classical(&FreeElement::one()));
    }

    #[test]
    fn standard_ccr_classification() {
        let pairs = [
            (FreeGenerator::basic(AStar), FreeGenerator::basic(A)),
            (FreeGenerator::basic(CStar), FreeGenerator::basic(C)),
        ];
        let rels = standard_ccr(&pairs);
        assert_eq!(rels.len(), 6);
        for r in rels {
            let quantum = r.family == CcrFamily::Mixed && r.j == r.k;
            assert_eq!(is_quantum(&r.relation), quantum, "{}", r.relation);
        }
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", q_oscillator()), "-1 + [c*]*[c] - q [c]*[c*]");
        let adj = FreeElement::generator(FreeGenerator::adjoint(AlgebraElement::generator(A)).unwrap());
        assert_eq!(alloc::format!("{}", adj), "[adj:a]");
        assert_eq!(alloc::format!("{}", FreeElement::zero()), "0");
    }
}
