//! Ranks of oracle images of monomial families.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{FockState, FockVector, Oracle, SectorCache, SectorKey, SectorRecord};
use crate::combinatorics::{admissible_of_weight, pbw_monomials, Monomial, Setup, WeightVector};
use crate::error::Result;
use crate::linalg::rank_rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RankTriple {
    /// Number of admissible monomials.
    pub count_admissible: usize,
    /// Rank of their images `b v_r`.
    pub rank_admissible: usize,
    /// Rank of the images of all PBW monomials.
    pub rank_all_pbw: usize,
}

impl RankTriple {
    /// Admissible images are independent and span.
    pub fn is_basis(&self) -> bool {
        self.count_admissible == self.rank_admissible && self.rank_admissible == self.rank_all_pbw
    }
}

impl std::ops::Add for RankTriple {
    type Output = RankTriple;

    fn add(self, o: RankTriple) -> RankTriple {
        RankTriple {
            count_admissible: self.count_admissible + o.count_admissible,
            rank_admissible: self.rank_admissible + o.rank_admissible,
            rank_all_pbw: self.rank_all_pbw + o.rank_all_pbw,
        }
    }
}

fn images(oracle: &Oracle, setup: &Setup, monomials: &[Monomial]) -> Vec<FockVector> {
    monomials.iter().map(|b| oracle.apply_monomial(b, setup)).collect()
}

/// Rank of vectors over the union of their supports; also returns that support.
fn rank_of(vectors: &[FockVector]) -> (usize, Vec<FockState>) {
    let mut index: BTreeMap<FockState, usize> = BTreeMap::new();
    for v in vectors {
        for s in v.states() {
            let next = index.len();
            index.entry(s.clone()).or_insert(next);
        }
    }
    let rows: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigRational::zero(); index.len()];
            for (s, c) in v.iter() {
                row[index[s]] = c.clone();
            }
            row
        })
        .collect();
    let mut states: Vec<(usize, FockState)> = index.into_iter().map(|(s, i)| (i, s)).collect();
    states.sort();
    (rank_rational(&rows), states.into_iter().map(|(_, s)| s).collect())
}

/// Rank data of the `(weight, degree)` sector of `W(Lambda_r)`.
pub fn sector_rank(oracle: &Oracle, setup: &Setup, weight: &WeightVector, degree: u32) -> Result<SectorRecord> {
    weight.check_rank(setup)?;
    let admissible: Vec<Monomial> = admissible_of_weight(setup, weight, degree)
        .into_iter()
        .filter(|b| b.degree() == degree)
        .collect();
    let pbw = pbw_monomials(weight, degree);
    let adm_images = images(oracle, setup, &admissible);
    let pbw_images = images(oracle, setup, &pbw);
    let (rank_admissible, _) = rank_of(&adm_images);
    let (rank_all_pbw, states) = rank_of(&pbw_images);
    let mut states: Vec<String> = states.iter().map(ToString::to_string).collect();
    states.sort();
    Ok(SectorRecord {
        key: SectorKey::new(setup, weight, degree),
        triple: RankTriple {
            count_admissible: admissible.len(),
            rank_admissible,
            rank_all_pbw,
        },
        states,
    })
}

fn weights_for(setup: &Setup, degree: u32, weight: Option<&WeightVector>) -> Result<Vec<WeightVector>> {
    match weight {
        Some(w) => {
            w.check_rank(setup)?;
            Ok(vec![w.clone()])
        }
        None => Ok(WeightVector::all_up_to_length(setup.rank(), degree)),
    }
}

/// Rank triple in degree `degree`, for one weight or summed over all weights.
pub fn graded_rank(oracle: &Oracle, setup: &Setup, degree: u32, weight: Option<&WeightVector>) -> Result<RankTriple> {
    let mut total = RankTriple::default();
    for w in weights_for(setup, degree, weight)? {
        total = total + sector_rank(oracle, setup, &w, degree)?.triple;
    }
    Ok(total)
}

/// [`sector_rank`] through `cache`.
pub fn sector_rank_cached(
    oracle: &Oracle,
    setup: &Setup,
    weight: &WeightVector,
    degree: u32,
    cache: &mut SectorCache,
) -> Result<SectorRecord> {
    if let Some(rec) = cache.get(&SectorKey::new(setup, weight, degree)) {
        return Ok(rec.clone());
    }
    let rec = sector_rank(oracle, setup, weight, degree)?;
    cache.insert(rec.clone());
    Ok(rec)
}

/// As [`graded_rank`], reading and filling `cache`.
pub fn graded_rank_with_cache(
    oracle: &Oracle,
    setup: &Setup,
    degree: u32,
    weight: Option<&WeightVector>,
    cache: &mut SectorCache,
) -> Result<RankTriple> {
    let mut total = RankTriple::default();
    for w in weights_for(setup, degree, weight)? {
        total = total + sector_rank_cached(oracle, setup, &w, degree, cache)?.triple;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sectors_are_bases() {
        let o = Oracle::new(1);
        for r in 0..=1 {
            let setup = Setup::new(1, r).unwrap();
            for d in 0..=6 {
                let t = graded_rank(&o, &setup, d, None).unwrap();
                assert!(t.is_basis(), "r={r} d={d} {t:?}");
            }
        }
    }

    #[test]
    fn rank_two_sector() {
        let o = Oracle::new(2);
        let setup = Setup::new(2, 1).unwrap();
        let w = WeightVector(vec![1, 1]);
        let rec = sector_rank(&o, &setup, &w, 4).unwrap();
        assert!(rec.triple.is_basis(), "{:?}", rec.triple);
        assert!(rec.triple.count_admissible > 0);
    }

    #[test]
    fn annihilated_sector_is_empty() {
        // x1(-1) kills v_1 in rank one
        let o = Oracle::new(1);
        let setup = Setup::new(1, 1).unwrap();
        let rec = sector_rank(&o, &setup, &WeightVector(vec![1]), 1).unwrap();
        assert_eq!(rec.triple, RankTriple::default());
    }
}
