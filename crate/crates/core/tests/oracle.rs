mod common;

use common::*;
use fsbasis::combinatorics::{Setup, WeightVector};
use fsbasis::oracle::{graded_rank, sector_rank, CocycleTable, Oracle, RelationConfig, RelationKind, verify_relations};
use fsbasis::qseries::{full_character, CharacterMethod};

#[test]
fn basis_in_every_small_sector() {
    for rank in 1..=2 {
        let oracle = Oracle::new(rank);
        for s in Setup::all_modules(rank).unwrap() {
            for d in 0..=6 {
                for w in WeightVector::all_up_to_length(rank, d) {
                    let rec = sector_rank(&oracle, &s, &w, d).unwrap();
                    assert!(rec.triple.is_basis(), "module {} weight {w} degree {d}: {:?}", s.module(), rec.triple);
                }
            }
        }
    }
}

#[test]
fn ranks_reproduce_the_character() {
    for rank in 1..=2 {
        let oracle = Oracle::new(rank);
        for s in Setup::all_modules(rank).unwrap() {
            let (ch, _) = full_character(&s, 6, CharacterMethod::Fermionic).unwrap();
            for d in 0..=6u32 {
                let t = graded_rank(&oracle, &s, d, None).unwrap();
                assert_eq!(num_bigint::BigInt::from(t.rank_all_pbw), ch.coeff(d as usize), "degree {d}");
            }
        }
    }
}

#[test]
fn relation_suite_and_negative_control() {
    for rank in 1..=2 {
        let report = verify_relations(&Oracle::new(rank), RelationConfig::new(6, 3));
        assert!(report.passed(), "rank {rank}: {:?}", report.failure);
    }
    let bad = Oracle::with_cocycle(2, CocycleTable::standard(2).with_value(2, 1, 1));
    let report = verify_relations(&bad, RelationConfig::new(6, 3));
    assert_eq!(report.failure.map(|f| f.kind), Some(RelationKind::Interaction { i: 1, j: 2 }));
}

#[test]
fn highest_weight_vectors_are_killed_at_the_initial_depths() {
    for rank in 1..=3 {
        let oracle = Oracle::new(rank);
        for r in 0..=rank {
            let v = oracle.highest_weight_vector(r);
            for c in 1..=rank {
                let killed = oracle.apply_x(c, -1, &v).is_zero();
                assert_eq!(killed, c <= r, "rank {rank} module {r} color {c}");
            }
        }
    }
}

#[test]
fn brute_admissible_images_independent() {
    let oracle = Oracle::new(2);
    let s = setup(2, 1);
    let mut images = Vec::new();
    for f in all_factor_multisets(2, 5) {
        if admissible_by_definition(&f, 2, 1) {
            images.push(oracle.apply_monomial(&to_monomial(&f, &s), &s));
        }
    }
    assert!(images.iter().all(|v| !v.is_zero()));
}
