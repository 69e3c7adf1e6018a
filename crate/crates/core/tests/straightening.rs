mod common;

use common::*;
use fsbasis::combinatorics::{pbw_monomials, WeightVector};
use fsbasis::oracle::Oracle;
use fsbasis::straightening::{straighten_by_elimination, Straightener};
use fsbasis::LinComb;

#[test]
fn every_pbw_monomial_straightens_soundly() {
    for rank in 1..=2 {
        let oracle = Oracle::new(rank);
        for module in 0..=rank {
            let s = setup(rank, module);
            for d in 0..=6 {
                for w in WeightVector::all_up_to_length(rank, d) {
                    for b in pbw_monomials(&w, d) {
                        let mut st = Straightener::with_trace(s);
                        let out = st.straighten(&LinComb::monomial(b.clone()));
                        assert!(out.monomials().all(|m| m.is_admissible(&s)), "{b}");
                        assert_eq!(oracle.apply_monomial(&b, &s), oracle.apply_lincomb(&out, &s), "{b}");
                        assert_eq!(straighten_by_elimination(&LinComb::monomial(b.clone()), &s).unwrap(), out, "{b}");
                        for step in st.trace() {
                            let g = step.source.grading(rank);
                            for t in &step.targets {
                                assert!(t > &step.source, "{} -> {t}", step.source);
                                assert_eq!(t.grading(rank), g);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn rank_three_spot_checks() {
    let s = setup(3, 2);
    let oracle = Oracle::new(3);
    for text in ["x3(-1) x2(-1) x1(-1)", "x2(-2) x2(-3) x1(-2)", "x3(-2) x3(-2) x1(-3)"] {
        let b = fsbasis::combinatorics::parse_monomial(text, &s).unwrap();
        let out = Straightener::new(s).straighten_monomial(&b);
        assert!(out.monomials().all(|m| m.is_admissible(&s)));
        assert_eq!(oracle.apply_monomial(&b, &s), oracle.apply_lincomb(&out, &s), "{text}");
    }
}
