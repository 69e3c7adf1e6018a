mod common;

use std::cmp::Ordering;

use common::*;
use fsbasis::combinatorics::{Factor, Monomial, Setup, WeightVector};
use fsbasis::oracle::{sector_rank, Oracle};
use fsbasis::qseries::{enumerative_character, fermionic_character};
use fsbasis::straightening::{straighten_by_elimination, straighten_by_rewriting};
use fsbasis::{LinComb, QSeries};
use proptest::prelude::*;

fn setup_strategy(max_rank: usize) -> impl Strategy<Value = Setup> {
    (1..=max_rank).prop_flat_map(|l| (Just(l), 0..=l)).prop_map(|(l, r)| setup(l, r))
}

fn monomial_strategy(rank: usize, max_len: usize, max_depth: u32) -> impl Strategy<Value = Vec<(usize, u32)>> {
    prop::collection::vec((1..=rank, 1..=max_depth), 0..=max_len)
}

fn mono(f: &[(usize, u32)], s: &Setup) -> Monomial {
    Monomial::new(f.iter().map(|&(c, d)| Factor::new(c, d)), s).unwrap()
}

fn series(max_order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-20i64..20, 1..=max_order + 1).prop_map(move |c| QSeries::from_coeffs(c, max_order))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn order_is_total_and_antisymmetric(a in monomial_strategy(3, 4, 6), b in monomial_strategy(3, 4, 6), c in monomial_strategy(3, 4, 6)) {
        let s = setup(3, 0);
        let (a, b, c) = (mono(&a, &s), mono(&b, &s), mono(&c, &s));
        prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
        prop_assert_eq!(a.compare(&b) == Ordering::Equal, a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn order_compatible_with_multiplication(a in monomial_strategy(2, 3, 5), b in monomial_strategy(2, 3, 5), c in monomial_strategy(2, 3, 5)) {
        let s = setup(2, 0);
        let (a, b, c) = (mono(&a, &s), mono(&b, &s), mono(&c, &s));
        if a.degree() == b.degree() && a.weight(2) == b.weight(2) {
            prop_assert_eq!(a.compare(&b), a.mul(&c).compare(&b.mul(&c)));
        }
    }

    #[test]
    fn admissibility_agrees_with_definition(s in setup_strategy(3), f in monomial_strategy(3, 5, 8)) {
        let f: Vec<_> = f.into_iter().filter(|x| x.0 <= s.rank()).collect();
        let m = mono(&f, &s);
        let expected = admissible_by_definition(&f, s.rank(), s.module());
        prop_assert_eq!(m.is_admissible(&s), expected);
        prop_assert_eq!(m.first_violation(&s).is_none(), expected);
    }

    #[test]
    fn series_ring_laws(a in series(8), b in series(8), c in series(8)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QSeries::zero(8));
        prop_assert_eq!(&a * &QSeries::one(8), a.clone());
    }

    #[test]
    fn division_inverts_multiplication(a in series(8), tail in prop::collection::vec(-5i64..5, 0..8)) {
        let mut c = vec![1i64];
        c.extend(tail);
        let unit = QSeries::from_coeffs(c, 8);
        prop_assert_eq!((&a * &unit).div_by_unit(&unit).unwrap(), a);
    }

    #[test]
    fn fermionic_equals_enumerative(s in setup_strategy(3), w in prop::collection::vec(0u32..4, 3)) {
        let w = WeightVector(w[..s.rank()].to_vec());
        prop_assert_eq!(fermionic_character(&s, &w, 16).unwrap(), enumerative_character(&s, &w, 16).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn straightening_preserves_grading_and_agrees(s in setup_strategy(2), f in monomial_strategy(2, 4, 4)) {
        let f: Vec<_> = f.into_iter().filter(|x| x.0 <= s.rank()).collect();
        let b = mono(&f, &s);
        prop_assume!(b.degree() <= 8);
        let v = LinComb::monomial(b.clone());
        let out = straighten_by_rewriting(&v, &s);
        for m in out.monomials() {
            prop_assert!(m.is_admissible(&s));
            prop_assert_eq!(m.grading(s.rank()), b.grading(s.rank()));
        }
        prop_assert_eq!(straighten_by_elimination(&v, &s).unwrap(), out);
    }

    #[test]
    fn oracle_images_are_order_free_and_graded(s in setup_strategy(2), f in monomial_strategy(2, 3, 4)) {
        let f: Vec<_> = f.into_iter().filter(|x| x.0 <= s.rank()).collect();
        let oracle = Oracle::new(s.rank());
        let b = mono(&f, &s);
        // one factor at a time, in reverse canonical order
        let mut v = oracle.highest_weight_vector(s.module());
        for x in b.factors().iter().rev() {
            v = oracle.apply_x(x.color, -i64::from(x.depth), &v);
        }
        prop_assert_eq!(&v, &oracle.apply_monomial(&b, &s));
        let degrees: std::collections::BTreeSet<u32> = v.states().map(|st| st.degree()).collect();
        prop_assert!(degrees.len() <= 1);
    }

    #[test]
    fn sectors_are_bases(s in setup_strategy(2), w in prop::collection::vec(0u32..3, 2), d in 0u32..=6) {
        let w = WeightVector(w[..s.rank()].to_vec());
        let rec = sector_rank(&Oracle::new(s.rank()), &s, &w, d).unwrap();
        prop_assert!(rec.triple.is_basis(), "{:?}", rec.triple);
    }
}
