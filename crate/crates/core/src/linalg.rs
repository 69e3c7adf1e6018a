//! Exact linear algebra over `Q` and `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Rows may have different lengths; missing entries are zero.
pub fn rank_fraction_free(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut rows {
        row.resize(ncols, BigInt::zero());
    }
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for c in col..ncols {
                // Sylvester's identity keeps the division exact
                let v = &pivot * &row[c] - &factor * &pivot_row[c];
                row[c] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Scales a rational row by the lcm of its denominators.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Exact rank of rational rows.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    rank_fraction_free(rows.iter().map(|r| clear_denominators(r)).collect())
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    for row in &mut rows {
        row.resize(ncols, BigRational::zero());
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(rank_fraction_free(vec![]), 0);
        assert_eq!(rank_fraction_free(ints(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_fraction_free(ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
        assert_eq!(rank_fraction_free(ints(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])), 3);
        assert_eq!(rank_fraction_free(ints(&[&[0, 3], &[0, 5], &[7, 0]])), 2);
    }

    #[test]
    fn rational_rank() {
        let rows = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 1)]];
        assert_eq!(rank_rational(&rows), 1);
    }

    #[test]
    fn rref_basic() {
        let rows = vec![
            vec![q(0, 1), q(2, 1), q(4, 1)],
            vec![q(1, 1), q(1, 1), q(1, 1)],
            vec![q(1, 1), q(3, 1), q(5, 1)],
        ];
        let (r, piv) = rref(rows, 3);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r[0], vec![q(1, 1), q(0, 1), q(-1, 1)]);
        assert_eq!(r[1], vec![q(0, 1), q(1, 1), q(2, 1)]);
    }
}
