//! The *-algebra SU_q(2) in the normal-ordered basis
//! `ε(k,l,m) = a^k c^l (c*)^m` (`k >= 0`) or `(a*)^-k c^l (c*)^m` (`k < 0`).
//!
//! Products are brought to normal form with the exchange rules
//!
//! ```text
//! c a  = q^-1 a c      c* a  = q^-1 a c*      c c* = c* c
//! c a* = q a* c        c* a* = q a* c*
//! a a* = 1 - q^2 c* c  a* a  = 1 - c* c
//! ```
//!
//! A product of normal monomials `ε(x) ε(y)` only ever needs the `c`-block of
//! `x` moved past the `a`-block of `y` (one power of `q`), followed by the
//! reduction of a mixed block `a^p (a*)^r` or `(a*)^p a^r`. The latter is a
//! polynomial in `c* c` placed to the right of a pure `a` or `a*` power, which
//! is computed in closed form by [`mixed_block`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::Scalar;

/// Presentation symbols of SU_q(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    AStar,
    C,
    CStar,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::AStar, Generator::C, Generator::CStar];

    pub fn star(self) -> Generator {
        match self {
            Generator::A => Generator::AStar,
            Generator::AStar => Generator::A,
            Generator::C => Generator::CStar,
            Generator::CStar => Generator::C,
        }
    }

    /// `g^power` as a basis monomial.
    pub fn power(self, power: u32) -> NormalMonomial {
        match self {
            Generator::A => NormalMonomial::new(power as i64, 0, 0),
            Generator::AStar => NormalMonomial::new(-(power as i64), 0, 0),
            Generator::C => NormalMonomial::new(0, power, 0),
            Generator::CStar => NormalMonomial::new(0, 0, power),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::A => "a",
            Generator::AStar => "a*",
            Generator::C => "c",
            Generator::CStar => "c*",
        }
    }
}

/// A word in the generators with positive powers; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word(pub Vec<(Generator, u32)>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn letters(letters: &[Generator]) -> Self {
        Word(letters.iter().map(|g| (*g, 1)).collect())
    }

    pub fn push(&mut self, g: Generator, power: u32) {
        if power > 0 {
            self.0.push((g, power));
        }
    }
}

/// Basis element `ε(k,l,m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalMonomial {
    pub k: i64,
    pub l: u32,
    pub m: u32,
}

impl NormalMonomial {
    pub const ONE: NormalMonomial = NormalMonomial { k: 0, l: 0, m: 0 };

    pub fn new(k: i64, l: u32, m: u32) -> Self {
        NormalMonomial { k, l, m }
    }

    /// `ε(x) ε(y)` expanded in the basis.
    pub fn mul(self, rhs: NormalMonomial) -> AlgebraElement {
        // c^l1 (c*)^m1 past the a-block of rhs: q^{-k2 (l1 + m1)}
        let exchange = Scalar::q_pow(-rhs.k * (self.l as i64 + self.m as i64));
        let k = self.k + rhs.k;
        let (l, m) = (self.l + rhs.l, self.m + rhs.m);
        let mut out = AlgebraElement::zero();
        for (n, coeff) in mixed_block(self.k, rhs.k).into_iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let n = n as u32;
            out.add_term(NormalMonomial::new(k, l + n, m + n), &coeff * &exchange);
        }
        out
    }

    /// `ε(k,l,m)* = q^{k(l+m)} ε(-k,m,l)`.
    pub fn star(self) -> (Scalar, NormalMonomial) {
        (
            Scalar::q_pow(self.k * (self.l as i64 + self.m as i64)),
            NormalMonomial::new(-self.k, self.m, self.l),
        )
    }

    pub fn is_in_p(self) -> bool {
        self.m == 0 && self.k >= 0
    }

    pub fn is_in_pstar(self) -> bool {
        self.l == 0 && self.k <= 0
    }
}

/// Coefficients `[x_0, x_1, ...]` with
/// `block(k1) block(k2) = block(k1 + k2) * sum_n x_n (c* c)^n`,
/// where `block(k)` is `a^k` for `k >= 0` and `(a*)^-k` otherwise.
///
/// Peeling one `a a*` pair off `a^p (a*)^r` gives
/// `a^p (a*)^r = a^{p-1} (a*)^{r-1} (1 - q^{2r} c* c)`, and peeling `a* a` off
/// `(a*)^p a^r` gives `(a*)^{p-1} a^{r-1} (1 - q^{-2(r-1)} c* c)`; iterating
/// yields a product of linear factors in `c* c`.
pub fn mixed_block(k1: i64, k2: i64) -> Vec<Scalar> {
    if (k1 >= 0 && k2 >= 0) || (k1 <= 0 && k2 <= 0) {
        return alloc::vec![Scalar::one()];
    }
    let (p, r) = (k1.unsigned_abs(), k2.unsigned_abs());
    let steps = p.min(r) as i64;
    let r = r as i64;
    let mut poly = alloc::vec![Scalar::one()];
    for s in 0..steps {
        let current_r = r - s;
        let exponent = if k1 > 0 { 2 * current_r } else { -2 * (current_r - 1) };
        // poly *= (1 - q^exponent X)
        let factor = Scalar::q_pow(exponent);
        let mut next = poly.clone();
        next.push(Scalar::zero());
        for (n, c) in poly.iter().enumerate() {
            next[n + 1] -= &(c * &factor);
        }
        poly = next;
    }
    poly
}

/// Element of SU_q(2): finite linear combination of basis monomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<NormalMonomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(NormalMonomial::ONE)
    }

    pub fn monomial(x: NormalMonomial) -> Self {
        Self::term(Scalar::one(), x)
    }

    pub fn term(coeff: Scalar, x: NormalMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(x, coeff);
        out
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::term(s, NormalMonomial::ONE)
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(g.power(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &NormalMonomial) -> Scalar {
        self.terms.get(x).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, x: NormalMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(x).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        let mut out = Self::zero();
        for (x, c) in &self.terms {
            out.add_term(*x, c * s);
        }
        out
    }

    /// The scalar `s` if this element equals `s * 1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&NormalMonomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn mul(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = Self::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &rhs.terms {
                let coeff = cx * cy;
                for (z, cz) in x.mul(*y).terms {
                    out.add_term(z, &cz * &coeff);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The involution; anti-linear, which is linear here because scalar
    /// conjugation is the identity.
    pub fn star(&self) -> AlgebraElement {
        let mut out = Self::zero();
        for (x, c) in &self.terms {
            let (factor, y) = x.star();
            out.add_term(y, &c.conj() * &factor);
        }
        out
    }

    /// Membership in the quantum plane P spanned by `a^i c^j`.
    pub fn is_in_p(&self) -> bool {
        self.terms.keys().all(|x| x.is_in_p())
    }

    /// Membership in P* spanned by `(a*)^i (c*)^j`.
    pub fn is_in_pstar(&self) -> bool {
        self.terms.keys().all(|x| x.is_in_pstar())
    }

    pub fn map_scalars<E>(
        &self,
        mut f: impl FnMut(&Scalar) -> Result<Scalar, E>,
    ) -> Result<AlgebraElement, E> {
        let mut out = Self::zero();
        for (x, c) in &self.terms {
            out.add_term(*x, f(c)?);
        }
        Ok(out)
    }
}

/// Brings a word into the normal-ordered basis.
pub fn normal_order(word: &Word) -> AlgebraElement {
    word.0.iter().fold(AlgebraElement::one(), |acc, (g, p)| {
        acc.mul(&AlgebraElement::monomial(g.power(*p)))
    })
}

impl From<NormalMonomial> for AlgebraElement {
    fn from(x: NormalMonomial) -> Self {
        AlgebraElement::monomial(x)
    }
}

impl From<Scalar> for AlgebraElement {
    fn from(s: Scalar) -> Self {
        AlgebraElement::scalar(s)
    }
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (x, c) in &rhs.terms {
            out.add_term(*x, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (x, c) in &rhs.terms {
            out.add_term(*x, -c);
        }
        out
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        AlgebraElement::mul(self, rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for NormalMonomial {
    /// `a^k c^l c*^m`, with `a*^p` (exponent always written) for `k = -p < 0`
    /// and the unit written as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<alloc::string::String> = Vec::new();
        match self.k {
            0 => {}
            1 => parts.push("a".into()),
            k if k > 0 => parts.push(alloc::format!("a^{}", k)),
            k => parts.push(alloc::format!("a*^{}", -k)),
        }
        match self.l {
            0 => {}
            1 => parts.push("c".into()),
            l => parts.push(alloc::format!("c^{}", l)),
        }
        match self.m {
            0 => {}
            1 => parts.push("c*".into()),
            m => parts.push(alloc::format!("c*^{}", m)),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Shared term printer for the linear-combination types (algebra, plane and
/// free elements): sign pulled out of single-term coefficients, multi-term
/// coefficients parenthesized, unit coefficients omitted.
pub(crate) fn write_linear_combination<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a Scalar)>,
    is_unit: impl Fn(&K) -> bool,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let (negative, magnitude) = match c.as_monomial() {
            Some((_, r)) if r < &num_rational::BigRational::zero() => (true, -c),
            _ => (false, c.clone()),
        };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let unit_key = is_unit(key);
        if magnitude.is_one() {
            write!(f, "{}", key)?;
        } else if magnitude.len() > 1 {
            write!(f, "({}) {}", magnitude, key)?;
        } else if unit_key {
            write!(f, "{}", magnitude)?;
        } else {
            write!(f, "{} {}", magnitude, key)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter(), |x| *x == NormalMonomial::ONE)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use Generator::*;

    fn e(k: i64, l: u32, m: u32) -> AlgebraElement {
        AlgebraElement::monomial(NormalMonomial::new(k, l, m))
    }

    fn q(n: i64) -> Scalar {
        Scalar::q_pow(n)
    }

    #[test]
    fn monomial_mul_examples() {
        let ca = NormalMonomial::new(0, 1, 0).mul(NormalMonomial::new(1, 0, 0));
        assert_eq!(ca, e(1, 1, 0).scale(&q(-1)));
        let a_star_a = NormalMonomial::new(-1, 0, 0).mul(NormalMonomial::new(1, 0, 0));
        assert_eq!(a_star_a, &e(0, 0, 0) - &e(0, 1, 1));
        let a_a_star = NormalMonomial::new(1, 0, 0).mul(NormalMonomial::new(-1, 0, 0));
        assert_eq!(a_a_star, &e(0, 0, 0) - &e(0, 1, 1).scale(&q(2)));
        let ac = NormalMonomial::new(1, 0, 0).mul(NormalMonomial::new(0, 1, 0));
        assert_eq!(ac, e(1, 1, 0));
    }

    /// Each exchange rule, checked by normal-ordering both sides of it.
    #[test]
    fn exchange_rules() {
        let rules: [(Generator, Generator, i64); 4] =
            [(A, C, 1), (A, CStar, 1), (C, AStar, 1), (CStar, AStar, 1)];
        for (x, y, exp) in rules {
            let lhs = normal_order(&Word::letters(&[x, y]));
            let rhs = normal_order(&Word::letters(&[y, x])).scale(&q(exp));
            assert_eq!(lhs, rhs, "{:?}{:?} = q^{} {:?}{:?}", x, y, exp, y, x);
        }
        assert_eq!(normal_order(&Word::letters(&[C, A])), e(1, 1, 0).scale(&q(-1)));
        assert_eq!(
            normal_order(&Word::letters(&[C, CStar])),
            normal_order(&Word::letters(&[CStar, C]))
        );
    }

    #[test]
    fn defining_relations() {
        let a_star_a = normal_order(&Word::letters(&[AStar, A]));
        let c_star_c = normal_order(&Word::letters(&[CStar, C]));
        assert_eq!(&a_star_a + &c_star_c, AlgebraElement::one());
        let a_a_star = normal_order(&Word::letters(&[A, AStar]));
        assert_eq!(&a_a_star + &c_star_c.scale(&q(2)), AlgebraElement::one());
    }

    #[test]
    fn mul_examples() {
        let f = &e(1, 2, 3) + &e(-2, 0, 1);
        assert_eq!(AlgebraElement::one().mul(&f), f);
        assert!(AlgebraElement::zero().mul(&f).is_zero());
        let a_plus_c = &e(1, 0, 0) + &e(0, 1, 0);
        let expected = &(&e(0, 0, 0) - &e(0, 1, 1).scale(&q(2))) + &e(-1, 1, 0).scale(&q(1));
        assert_eq!(a_plus_c.mul(&e(-1, 0, 0)), expected);
    }

    #[test]
    fn normal_order_examples() {
        assert_eq!(normal_order(&Word::new()), AlgebraElement::one());
        assert_eq!(normal_order(&Word::letters(&[A, C, CStar])), e(1, 1, 1));
        let once = normal_order(&Word::letters(&[AStar, A]));
        assert_eq!(normal_order(&Word::letters(&[AStar, A, AStar, A])), once.mul(&once));
    }

    #[test]
    fn mixed_powers_match_letter_by_letter() {
        for p in 0..4u32 {
            for r in 0..4u32 {
                let mut w = Word::new();
                w.push(A, p);
                w.push(AStar, r);
                let mut letters = alloc::vec![A; p as usize];
                letters.extend(core::iter::repeat_n(AStar, r as usize));
                assert_eq!(normal_order(&w), normal_order(&Word::letters(&letters)));
                let mut w = Word::new();
                w.push(AStar, p);
                w.push(A, r);
                let mut letters = alloc::vec![AStar; p as usize];
                letters.extend(core::iter::repeat_n(A, r as usize));
                assert_eq!(normal_order(&w), normal_order(&Word::letters(&letters)));
            }
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(e(1, 1, 0).star(), e(-1, 0, 1).scale(&q(1)));
        assert_eq!(e(1, 1, 0).star(), normal_order(&Word::letters(&[CStar, AStar])));
        assert_eq!(AlgebraElement::one().star(), AlgebraElement::one());
        let f = &e(2, 1, 3).scale(&Scalar::from_int(5)) - &e(-1, 2, 0);
        assert_eq!(f.star().star(), f);
    }

    /// The closed star formula against normal-ordering the reversed, starred word.
    #[test]
    fn star_formula_matches_reversed_word() {
        for k in -3..=3i64 {
            for l in 0..3 {
                for m in 0..3 {
                    let x = NormalMonomial::new(k, l, m);
                    // (g1 g2 g3)* = g3* g2* g1*; for ε = a^k c^l c*^m: (c*^m)* = c^m etc.
                    let mut w = Word::new();
                    w.push(C, m);
                    w.push(CStar, l);
                    if k >= 0 {
                        w.push(AStar, k as u32);
                    } else {
                        w.push(A, (-k) as u32);
                    }
                    assert_eq!(AlgebraElement::monomial(x).star(), normal_order(&w), "{:?}", x);
                }
            }
        }
    }

    #[test]
    fn p_membership() {
        assert!(e(2, 3, 0).is_in_p());
        assert!(!e(-1, 0, 0).is_in_p());
        assert!(e(2, 3, 0).star().is_in_pstar());
        assert!(AlgebraElement::one().is_in_p() && AlgebraElement::one().is_in_pstar());
    }

    #[test]
    fn display() {
        assert_eq!(e(1, 1, 0).to_string(), "a c");
        let x = e(-1, 1, 0).scale(&(&Scalar::one() - &q(2)));
        assert_eq!(x.to_string(), "(1 - q^2) a*^1 c");
        assert_eq!(AlgebraElement::scalar(&Scalar::one() - &q(2)).to_string(), "(1 - q^2) 1");
        assert_eq!(e(1, 1, 0).scale(&q(-1)).to_string(), "q^-1 a c");
        assert_eq!((&e(0, 0, 0) - &e(0, 1, 1)).to_string(), "1 - c c*");
        assert_eq!(AlgebraElement::zero().to_string(), "0");
        assert_eq!(AlgebraElement::scalar(Scalar::from_int(-2)).to_string(), "-2");
    }
}
