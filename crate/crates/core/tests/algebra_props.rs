mod common;

use num_rational::BigRational;
use proptest::prelude::*;
use rand::Rng;
use suq2_core::algebra::{normal_order, Generator, Word};
use suq2_core::ccr::{FreeElement, FreeGenerator};
use suq2_core::{expr, AlgebraElement, Scalar, Value};

fn at_q_one(f: &AlgebraElement) -> AlgebraElement {
    let one = BigRational::from_integer(1.into());
    f.map_scalars(|c| c.specialize_q(&one)).unwrap()
}

fn random_word(rng: &mut impl rand::Rng, len: usize) -> Word {
    let mut w = Word::new();
    for _ in 0..len {
        w.push(Generator::ALL[rng.gen_range(0..4)], rng.gen_range(1..=2));
    }
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_axioms(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let (x, y, z) = (common::scalar(&mut r, true), common::scalar(&mut r, true), common::scalar(&mut r, true));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &Scalar::one(), x.clone());
        prop_assert_eq!(&x + &Scalar::zero(), x);
    }

    #[test]
    fn exact_division_inverts_multiplication(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let x = common::scalar(&mut r, true);
        let y = common::nonzero_scalar(&mut r);
        prop_assert_eq!((&x * &y).exact_div(&y).unwrap(), x);
    }

    #[test]
    fn evaluation_is_a_ring_map(seed in any::<u64>(), num in 1i64..7, den in 1i64..7) {
        let mut r = common::rng(seed);
        let (x, y) = (common::scalar(&mut r, false), common::scalar(&mut r, false));
        let q0 = BigRational::new(num.into(), den.into());
        let zero = BigRational::from_integer(0.into());
        let ev = |s: &Scalar| match s.eval(&q0, &zero).unwrap() {
            Value::Exact(v) => v,
            other => panic!("unexpected {:?}", other),
        };
        prop_assert_eq!(ev(&(&x * &y)), ev(&x) * ev(&y));
        prop_assert_eq!(ev(&(&x + &y)), ev(&x) + ev(&y));
    }

    #[test]
    fn algebra_is_associative(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let f = common::algebra(&mut r, 2, 2, 3);
        let g = common::algebra(&mut r, 2, 2, 3);
        let h = common::algebra(&mut r, 2, 2, 3);
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&(&g + &h)), &f.mul(&g) + &f.mul(&h));
        prop_assert_eq!(AlgebraElement::one().mul(&f), f.clone());
        prop_assert_eq!(f.mul(&AlgebraElement::one()), f);
    }

    #[test]
    fn star_is_an_antimultiplicative_involution(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let f = common::algebra(&mut r, 2, 2, 3);
        let g = common::algebra(&mut r, 2, 2, 3);
        prop_assert_eq!(f.mul(&g).star(), g.star().mul(&f.star()));
        prop_assert_eq!(f.star().star(), f.clone());
        prop_assert_eq!((&f + &g).star(), &f.star() + &g.star());
    }

    #[test]
    fn star_matches_reversed_word(seed in any::<u64>(), len in 0usize..5) {
        let mut r = common::rng(seed);
        let w = random_word(&mut r, len);
        let mut reversed = Word::new();
        for (g, p) in w.0.iter().rev() {
            reversed.push(g.star(), *p);
        }
        prop_assert_eq!(normal_order(&w).star(), normal_order(&reversed));
    }

    #[test]
    fn p_and_pstar_are_subalgebras(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let f = common::p_element(&mut r, 3, 3).embed();
        let g = common::p_element(&mut r, 3, 3).embed();
        prop_assert!(f.mul(&g).is_in_p());
        prop_assert!(f.star().mul(&g.star()).is_in_pstar());
    }

    #[test]
    fn commutative_at_q_equal_one(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let f = common::algebra(&mut r, 2, 2, 3);
        let g = common::algebra(&mut r, 2, 2, 3);
        prop_assert_eq!(at_q_one(&f.mul(&g)), at_q_one(&g.mul(&f)));
    }

    #[test]
    fn printed_algebra_parses_back(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let f = common::algebra(&mut r, 3, 3, 4);
        prop_assert_eq!(expr::algebra(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn printed_scalars_and_p_parse_back(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let s = common::scalar(&mut r, true);
        prop_assert_eq!(expr::scalar(&s.to_string()).unwrap(), s);
        let p = common::p_element(&mut r, 4, 4);
        prop_assert_eq!(expr::p_element(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn printed_free_elements_parse_back(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let mut gens = Vec::new();
        for _ in 0..3 {
            let p = loop {
                let p = common::p_element(&mut r, 2, 2).embed();
                if p.as_scalar().is_none() && !p.is_zero() {
                    break p;
                }
            };
            let payload = if r.gen_bool(0.5) { p.star() } else { p };
            gens.push(if r.gen_bool(0.2) {
                FreeGenerator::adjoint(payload).unwrap()
            } else {
                FreeGenerator::symbol(payload).unwrap()
            });
        }
        let mut x = FreeElement::zero();
        for _ in 0..r.gen_range(1..4) {
            let len = r.gen_range(0..3);
            let word: Vec<_> = (0..len).map(|_| gens[r.gen_range(0..3)].clone()).collect();
            x = &x + &FreeElement::word(&word).scale(&common::scalar(&mut r, true));
        }
        prop_assert_eq!(expr::free(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn parser_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = expr::algebra(&text);
        let _ = expr::free(&text);
        let _ = expr::scalar(&text);
    }

    #[test]
    fn parser_never_panics_on_grammar_soup(picks in proptest::collection::vec(0usize..22, 0..30)) {
        const PIECES: [&str; 22] = [
            "a", "a*", "c", "c*", "q", "h", "1", "23", "/", "*", "^", "-", "+", "(", ")",
            "[", "]", "[adj:", "[p:", " ", "^*", "^-2",
        ];
        let text: String = picks.iter().map(|&n| PIECES[n]).collect();
        let _ = expr::algebra(&text);
        let _ = expr::free(&text);
        let _ = expr::scalar(&text);
        let _ = expr::p_element(&text);
    }
}
