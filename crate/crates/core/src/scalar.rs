//! Exact coefficient ring: Laurent polynomials in `q` over the rationals,
//! optionally carrying a formal symbol `h` standing for the square root of
//! Planck's constant.
//!
//! A [`Scalar`] is stored as a sparse map from exponent pairs to nonzero
//! rational coefficients, so structural equality is ring equality. The symbol
//! `h` is never inverted; only the `ccr` layer introduces it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponent pair of a scalar monomial `q^q * h^h`.
///
/// The derived ordering (`h` first, then `q`) is the canonical term order and
/// also the monomial order used by [`Scalar::exact_div`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent {
    pub h: u32,
    pub q: i64,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { h: 0, q: 0 };

    pub fn new(q: i64, h: u32) -> Self {
        Exponent { h, q }
    }

    fn add(self, other: Exponent) -> Exponent {
        Exponent { h: self.h + other.h, q: self.q + other.q }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("`{dividend}` is not divisible by `{divisor}` in the scalar ring")]
    NotDivisible {
        dividend: alloc::string::String,
        divisor: alloc::string::String,
    },
    #[error("cannot evaluate at q = 0")]
    ZeroQ,
    #[error("hbar must be nonnegative")]
    NegativeHbar,
    #[error("`{0}` is not a unit of the scalar ring")]
    NotInvertible(alloc::string::String),
    #[error("h^{0} needs the square root of hbar, which is not rational here")]
    IrrationalHbar(u32),
}

/// Result of numerically evaluating a [`Scalar`].
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    /// Every `h` exponent was even, so the value stayed rational.
    Exact(BigRational),
    /// Some odd power of `h` forced `sqrt(hbar)` through `f64`.
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Value::Approx(x) => *x,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{}", r),
            Value::Approx(x) => write!(f, "{}", x),
        }
    }
}

/// Laurent polynomial in `q` (and polynomial in `h`) with rational coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Exponent, BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), Exponent::ZERO)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::monomial(r, Exponent::ZERO)
    }

    /// `coeff * q^e.q * h^e.h`; a zero coefficient gives the zero scalar.
    pub fn monomial(coeff: BigRational, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(e, coeff);
        }
        Scalar { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), Exponent::new(e, 0))
    }

    /// `h^e`, i.e. `hbar^(e/2)`.
    pub fn h_pow(e: u32) -> Self {
        Self::monomial(BigRational::one(), Exponent::new(0, e))
    }

    /// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
    pub fn q_integer(n: u32) -> Self {
        let mut s = Scalar::zero();
        for e in 0..n {
            s.add_term(Exponent::new(e as i64, 0), BigRational::one());
        }
        s
    }

    /// `Σ coeffs[e] q^e`.
    pub fn from_q_polynomial(coeffs: &[BigInt]) -> Self {
        let mut s = Scalar::zero();
        for (e, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                s.terms.insert(Exponent::new(e as i64, 0), BigRational::from_integer(c.clone()));
            }
        }
        s
    }

    /// `(d, [(e, n_e)])` with `self = Σ n_e q^e h^.. / d` and `d` the lcm
    /// of the coefficient denominators.
    fn integer_form(&self) -> (BigInt, Vec<(Exponent, BigInt)>) {
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .terms
            .iter()
            .map(|(e, c)| (*e, c.numer() * (&den / c.denom())))
            .collect();
        (den, nums)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Exponent::ZERO).is_some_and(|c| c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exponent) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The single term, if this scalar has exactly one.
    pub fn as_monomial(&self) -> Option<(Exponent, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// The rational value, if the scalar is a constant (possibly zero).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Exponent::ZERO).cloned(),
            _ => None,
        }
    }

    pub fn has_h(&self) -> bool {
        self.terms.keys().any(|e| e.h > 0)
    }

    pub fn max_h(&self) -> u32 {
        self.terms.keys().map(|e| e.h).max().unwrap_or(0)
    }

    /// Scalar conjugation. `q` is real and coefficients are rational, so this
    /// is the identity; it exists so that sesquilinear code says what it means.
    pub fn conj(&self) -> Scalar {
        self.clone()
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift_q(&self, shift: i64) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::new(e.q + shift, e.h), c.clone()))
                .collect(),
        }
    }

    /// Integer power. Negative exponents need an invertible (monomial) base.
    pub fn pow(&self, n: i64) -> Result<Scalar, ScalarError> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        let mut base = self.clone();
        let mut acc = Scalar::one();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Inverse of a unit `c * q^e` (with no `h`).
    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        match self.as_monomial() {
            Some((e, c)) if e.h == 0 => Ok(Scalar::monomial(c.recip(), Exponent::new(-e.q, 0))),
            _ if self.is_zero() => Err(ScalarError::DivisionByZero),
            _ => Err(ScalarError::NotInvertible(alloc::format!("{}", self))),
        }
    }

    fn leading(&self) -> Option<(Exponent, &BigRational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    fn q_range(&self) -> (i64, i64) {
        let mut it = self.terms.keys().map(|e| e.q);
        let first = it.next().unwrap_or(0);
        it.fold((first, first), |(lo, hi), q| (lo.min(q), hi.max(q)))
    }

    fn h_range(&self) -> (u32, u32) {
        let lo = self.terms.keys().map(|e| e.h).min().unwrap_or(0);
        let hi = self.terms.keys().map(|e| e.h).max().unwrap_or(0);
        (lo, hi)
    }

    /// Exact quotient `self / divisor`, failing when the quotient leaves the ring.
    ///
    /// Division runs in the lexicographic `(h, q)` order. Any true quotient has
    /// its exponents inside the box spanned by the differences of the min/max
    /// `q` and `h` degrees of dividend and divisor, so a quotient term outside
    /// that box proves non-divisibility and the loop always terminates.
    pub fn exact_div(&self, divisor: &Scalar) -> Result<Scalar, ScalarError> {
        if divisor.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        let not_divisible = || ScalarError::NotDivisible {
            dividend: alloc::format!("{}", self),
            divisor: alloc::format!("{}", divisor),
        };
        let (xq_lo, xq_hi) = self.q_range();
        let (dq_lo, dq_hi) = divisor.q_range();
        let (xh_lo, xh_hi) = self.h_range();
        let (dh_lo, dh_hi) = divisor.h_range();
        if xh_lo < dh_lo || xh_hi < dh_hi {
            return Err(not_divisible());
        }
        let (q_lo, q_hi) = (xq_lo - dq_lo, xq_hi - dq_hi);
        let (h_lo, h_hi) = (xh_lo - dh_lo, xh_hi - dh_hi);
        let (lead_e, lead_c) = divisor.leading().expect("nonzero divisor");
        let lead_c = lead_c.clone();

        let mut remainder = self.clone();
        let mut quotient = Scalar::zero();
        while let Some((re, rc)) = remainder.leading() {
            if re.h < lead_e.h {
                return Err(not_divisible());
            }
            let te = Exponent::new(re.q - lead_e.q, re.h - lead_e.h);
            if te.q < q_lo || te.q > q_hi || te.h < h_lo || te.h > h_hi {
                return Err(not_divisible());
            }
            let tc = rc / &lead_c;
            let term = Scalar::monomial(tc.clone(), te);
            remainder -= &(&term * divisor);
            quotient.add_term(te, tc);
        }
        Ok(quotient)
    }

    /// Numeric evaluation at `q = q0`, `hbar = hbar0` (so `h = sqrt(hbar0)`).
    ///
    /// The result is exact whenever every `h` exponent is even; otherwise the
    /// odd powers of `sqrt(hbar0)` are taken in `f64` (about 15 significant
    /// digits).
    pub fn eval(&self, q0: &BigRational, hbar0: &BigRational) -> Result<Value, ScalarError> {
        if q0.is_zero() {
            return Err(ScalarError::ZeroQ);
        }
        if hbar0.is_negative() {
            return Err(ScalarError::NegativeHbar);
        }
        if self.terms.keys().all(|e| e.h % 2 == 0) {
            let mut acc = BigRational::zero();
            for (e, c) in &self.terms {
                acc += c * q0.pow(e.q as i32) * hbar0.pow((e.h / 2) as i32);
            }
            return Ok(Value::Exact(acc));
        }
        let q = q0.to_f64().unwrap_or(f64::NAN);
        let root = libm::sqrt(hbar0.to_f64().unwrap_or(f64::NAN));
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            acc += c.to_f64().unwrap_or(f64::NAN)
                * libm::pow(q, e.q as f64)
                * libm::pow(root, e.h as f64);
        }
        Ok(Value::Approx(acc))
    }

    /// Substitutes `q := q0`, keeping any `h` symbolic.
    pub fn specialize_q(&self, q0: &BigRational) -> Result<Scalar, ScalarError> {
        if q0.is_zero() {
            return Err(ScalarError::ZeroQ);
        }
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            out.add_term(Exponent::new(0, e.h), c * q0.pow(e.q as i32));
        }
        Ok(out)
    }

    /// Substitutes `h := value` exactly.
    pub fn substitute_h(&self, value: &BigRational) -> Scalar {
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            let factor = if e.h == 0 { BigRational::one() } else { value.pow(e.h as i32) };
            out.add_term(Exponent::new(e.q, 0), c * factor);
        }
        out
    }

    /// Substitutes `hbar := hbar0`, i.e. `h^2 := hbar0`. Odd powers of `h`
    /// need `hbar0` to be the square of a rational.
    pub fn substitute_hbar(&self, hbar0: &BigRational) -> Result<Scalar, ScalarError> {
        if hbar0.is_negative() {
            return Err(ScalarError::NegativeHbar);
        }
        let root = rational_sqrt(hbar0);
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            let factor = if e.h % 2 == 0 {
                hbar0.pow((e.h / 2) as i32)
            } else {
                match &root {
                    Some(r) => r.pow(e.h as i32),
                    None => return Err(ScalarError::IrrationalHbar(e.h)),
                }
            };
            out.add_term(Exponent::new(e.q, 0), c * factor);
        }
        Ok(out)
    }
}

/// Exact square root of a nonnegative rational, when it exists.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().to_biguint()?;
    let d = r.denom().to_biguint()?;
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &sn * &sn == n && &sd * &sd == d {
        Some(BigRational::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> SubAssign<&'a Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &'a Scalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        let (small, large) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        if let Some((e0, c0)) = small.as_monomial() {
            // a monomial factor only shifts exponents, so no terms merge
            let terms = if c0.is_one() {
                large.terms.iter().map(|(e, c)| (e.add(e0), c.clone())).collect()
            } else {
                large.terms.iter().map(|(e, c)| (e.add(e0), c * c0)).collect()
            };
            return Scalar { terms };
        }
        // multiply over a common denominator so the inner loop stays in BigInt
        let (da, na) = small.integer_form();
        let (db, nb) = large.integer_form();
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (ea, ca) in &na {
            for (eb, cb) in &nb {
                *acc.entry(ea.add(*eb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(e, n)| (e, BigRational::new(n, den.clone())))
            .collect();
        Scalar { terms }
    }
}

impl<'a> MulAssign<&'a Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &'a Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

/// Writes `|c| * q^a * h^b` for one term (sign handled by the caller).
fn write_term_magnitude(f: &mut fmt::Formatter<'_>, e: &Exponent, c: &BigRational) -> fmt::Result {
    let c = c.abs();
    let mut parts: alloc::vec::Vec<alloc::string::String> = alloc::vec::Vec::new();
    if !c.is_one() || *e == Exponent::ZERO {
        parts.push(alloc::format!("{}", c));
    }
    match e.q {
        0 => {}
        1 => parts.push("q".into()),
        n => parts.push(alloc::format!("q^{}", n)),
    }
    match e.h {
        0 => {}
        1 => parts.push("h".into()),
        n => parts.push(alloc::format!("h^{}", n)),
    }
    f.write_str(&parts.join("*"))
}

/// Canonical text form: terms ascending by `(h, q)`, e.g. `1 - q^2 + 1/3*q^-1*h^2`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_term_magnitude(f, e, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}
