//! Brute-force references written straight from the definitions, sharing no
//! code with the library's enumerators.

#![allow(dead_code)]

use fsbasis::combinatorics::{Factor, Monomial, Setup};

/// Every multiset of factors `x_c(-d)`, `1 <= c <= rank`, of total degree
/// exactly `degree`, as `(color, depth)` lists.
pub fn all_factor_multisets(rank: usize, degree: u32) -> Vec<Vec<(usize, u32)>> {
    // factors enumerated in a fixed total order to avoid repeats
    let mut kinds = Vec::new();
    for depth in 1..=degree {
        for color in 1..=rank {
            kinds.push((color, depth));
        }
    }
    fn rec(kinds: &[(usize, u32)], from: usize, left: u32, cur: &mut Vec<(usize, u32)>, out: &mut Vec<Vec<(usize, u32)>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in from..kinds.len() {
            let (c, d) = kinds[k];
            if d > left {
                break;
            }
            cur.push((c, d));
            rec(kinds, k, left - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&kinds, 0, degree, &mut Vec::new(), &mut out);
    out
}

/// Difference and initial conditions checked literally.
pub fn admissible_by_definition(factors: &[(usize, u32)], rank: usize, module: usize) -> bool {
    for j in 1..=rank {
        let mut depths: Vec<u32> = factors.iter().filter(|f| f.0 == j).map(|f| f.1).collect();
        depths.sort_unstable();
        for w in depths.windows(2) {
            if w[1] < w[0] + 2 {
                return false;
            }
        }
        if let Some(&smallest) = depths.first() {
            let below = factors.iter().filter(|f| f.0 < j).count() as u32;
            let delta = u32::from(j <= module);
            if smallest < 1 + below + delta {
                return false;
            }
        }
    }
    true
}

/// Coefficients `q^0..=q^order` of the full character, by counting.
pub fn brute_character(rank: usize, module: usize, order: u32) -> Vec<u64> {
    (0..=order)
        .map(|d| {
            all_factor_multisets(rank, d)
                .iter()
                .filter(|f| admissible_by_definition(f, rank, module))
                .count() as u64
        })
        .collect()
}

/// Number of partitions of `n` into parts whose residues mod 5 lie in `residues`.
pub fn partitions_with_residues(n: u32, residues: &[u32]) -> u64 {
    let parts: Vec<u32> = (1..=n).filter(|p| residues.contains(&(p % 5))).collect();
    let mut ways = vec![0u64; n as usize + 1];
    ways[0] = 1;
    for p in parts {
        for total in p as usize..=n as usize {
            ways[total] += ways[total - p as usize];
        }
    }
    ways[n as usize]
}

pub fn to_monomial(factors: &[(usize, u32)], setup: &Setup) -> Monomial {
    Monomial::new(factors.iter().map(|&(c, d)| Factor::new(c, d)), setup).expect("valid factors")
}

pub fn setup(rank: usize, module: usize) -> Setup {
    Setup::new(rank, module).expect("valid setup")
}
