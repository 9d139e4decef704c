//! Random element generators shared by the integration tests. Property tests
//! draw a seed from proptest and feed it to these through a ChaCha stream, so
//! failures shrink to a reproducible seed.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use suq2_core::{AlgebraElement, NormalMonomial, PElement, PMonomial, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to three terms `c q^e h^d` with small rational `c`.
pub fn scalar(rng: &mut impl Rng, with_h: bool) -> Scalar {
    let mut s = Scalar::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let num = rng.gen_range(-5i64..=5);
        let den = rng.gen_range(1i64..=3);
        let mut t = &Scalar::from_ratio(num, den) * &Scalar::q_pow(rng.gen_range(-3..=3));
        if with_h && rng.gen_bool(0.3) {
            t = &t * &Scalar::h_pow(rng.gen_range(1..=3));
        }
        s += &t;
    }
    s
}

pub fn nonzero_scalar(rng: &mut impl Rng) -> Scalar {
    loop {
        let s = scalar(rng, false);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn monomial(rng: &mut impl Rng, k_max: i64, lm_max: u32) -> NormalMonomial {
    NormalMonomial::new(
        rng.gen_range(-k_max..=k_max),
        rng.gen_range(0..=lm_max),
        rng.gen_range(0..=lm_max),
    )
}

pub fn algebra(rng: &mut impl Rng, k_max: i64, lm_max: u32, max_terms: usize) -> AlgebraElement {
    let mut f = AlgebraElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        f.add_term(monomial(rng, k_max, lm_max), scalar(rng, false));
    }
    f
}

/// Element of P with total degree `i + j <= degree`.
pub fn p_element(rng: &mut impl Rng, degree: u32, max_terms: usize) -> PElement {
    let mut f = PElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let i = rng.gen_range(0..=degree);
        let j = rng.gen_range(0..=degree - i);
        f.add_term(PMonomial::new(i, j), scalar(rng, false));
    }
    f
}
