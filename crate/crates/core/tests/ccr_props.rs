mod common;

use num_rational::BigRational;
use proptest::prelude::*;
use rand::Rng;
use suq2_core::algebra::Generator::*;
use suq2_core::ccr::{
    classical_part, degree_decompose, hbar_deform, is_classical, is_relation_on_window, pi_apply,
    FreeElement, FreeGenerator, Substitution,
};
use suq2_core::{AlgebraElement, PMonomial, Quantizer, Scalar, WeightFunction, Window};

fn random_generator(r: &mut impl Rng) -> FreeGenerator {
    let basic = [A, AStar, C, CStar][r.gen_range(0..4)];
    match r.gen_range(0..3) {
        0 => FreeGenerator::basic(basic),
        1 => FreeGenerator::adjoint(AlgebraElement::generator(basic)).unwrap(),
        _ => {
            let p = common::p_element(r, 2, 2).embed();
            let p = if p.as_scalar().is_some() { AlgebraElement::generator(A).mul(&p) } else { p };
            let p = if p.is_zero() { AlgebraElement::generator(C) } else { p };
            FreeGenerator::symbol(if r.gen_bool(0.5) { p.star() } else { p }).unwrap()
        }
    }
}

fn random_free(r: &mut impl Rng, max_len: usize) -> FreeElement {
    let mut x = FreeElement::zero();
    for _ in 0..r.gen_range(1..=3) {
        let len = r.gen_range(0..=max_len);
        let word: Vec<_> = (0..len).map(|_| random_generator(r)).collect();
        x = &x + &FreeElement::word(&word).scale(&common::nonzero_scalar(r));
    }
    x
}

#[test]
fn q_oscillator_window_behaviour() {
    let r = suq2_core::expr::free("[c*]*[c] - q [c]*[c*] - 1").unwrap();
    let s = Substitution::symbolic();
    let qf = Quantizer::new(WeightFunction::QFactorial);
    assert!(is_relation_on_window(&qf, &r, Window::new(8, 8), &s).unwrap().holds());
    let unit = Quantizer::new(WeightFunction::Unit);
    for j in 1..5u32 {
        let x = PMonomial::new(2, j);
        let image = pi_apply(&unit, &r, &suq2_core::PElement::monomial(x), &s).unwrap();
        assert_eq!(image, suq2_core::PElement::term(-Scalar::q_pow(1), x));
    }
}

#[test]
fn numeric_q_agrees_with_symbolic() {
    let r = suq2_core::expr::free("[c*]*[c] - 2 [c]*[c*] - 1").unwrap();
    let qf = Quantizer::new(WeightFunction::QFactorial);
    let two = Substitution { q: Some(BigRational::from_integer(2.into())), hbar: None };
    let w = Window::new(3, 3);
    assert!(is_relation_on_window(&qf, &r, w, &two).unwrap().holds());
    assert!(!is_relation_on_window(&qf, &r, w, &Substitution::symbolic()).unwrap().holds());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn evaluation_is_multiplicative(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let x = random_free(&mut r, 2);
        let y = random_free(&mut r, 2);
        let psi = common::p_element(&mut r, 2, 2);
        let t = Quantizer::new(WeightFunction::QFactorial);
        let s = Substitution::symbolic();
        let lhs = pi_apply(&t, &x.mul(&y), &psi, &s).unwrap();
        let rhs = pi_apply(&t, &x, &pi_apply(&t, &y, &psi, &s).unwrap(), &s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn deformation_specializations(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let x = random_free(&mut r, 3);
        prop_assume!(!x.is_zero());
        let d = hbar_deform(&x).unwrap();
        prop_assert_eq!(d.substitute_h(&BigRational::from_integer(1.into())), x.clone());
        prop_assert_eq!(d.substitute_h(&BigRational::from_integer(0.into())), classical_part(&x).unwrap());
        let parts = degree_decompose(&x).unwrap();
        prop_assert!(parts.iter().all(is_classical));
        prop_assert!(!parts.last().unwrap().is_zero());
        let sum = parts.iter().fold(FreeElement::zero(), |acc, p| &acc + p);
        prop_assert_eq!(sum, x);
    }
}
