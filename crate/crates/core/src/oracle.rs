//! Brute-force reference implementations for small sizes.
//!
//! Nothing here reuses the enumerator, the canonical-form search or the
//! exact linear algebra; the only shared piece is the row predicate, which is
//! covered by its own table tests. Matrices are handled as plain nested
//! vectors until the final result.

use std::collections::BTreeSet;

use crate::enumerate::is_admissible_row;
use crate::error::{Result, ShadowError};
use crate::matrix::SkewIntMatrix;

pub const ORACLE_MAX_N: usize = 4;

type Grid = Vec<Vec<i64>>;

/// Every basic shade of size `n`, found by scanning all `5^(n(n−1)/2)` skew
/// matrices and every permutation of each.
pub fn brute_force_basic_shades(n: usize) -> Result<BTreeSet<SkewIntMatrix>> {
    if n == 0 {
        return Err(ShadowError::SizeOutOfRange(0));
    }
    if n > ORACLE_MAX_N {
        return Err(ShadowError::OracleLimit(n, ORACLE_MAX_N));
    }
    let perms = all_permutations(n);
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 5usize.pow(cells.len() as u32);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut a = vec![vec![0i64; n]; n];
        let mut rest = code;
        for &(i, j) in &cells {
            let v = (rest % 5) as i64 - 2;
            rest /= 5;
            a[i][j] = v;
            a[j][i] = -v;
        }
        let rows_ok = a.iter().all(|row| {
            let row: Vec<i8> = row.iter().map(|&v| v as i8).collect();
            is_admissible_row(&row).unwrap_or(false)
        });
        if !rows_ok || leibniz_det(&a) != 0 {
            continue;
        }
        let neg: Grid = a.iter().map(|r| r.iter().map(|v| -v).collect()).collect();
        let min_a = perms.iter().map(|p| permuted(&a, p)).min().expect("n ≥ 1");
        let min_neg = perms
            .iter()
            .map(|p| permuted(&neg, p))
            .min()
            .expect("n ≥ 1");
        if min_a == a && a <= min_neg {
            out.insert(SkewIntMatrix::from_rows(&a)?);
        }
    }
    Ok(out)
}

/// Exhaustive search for a symmetric `C` with entries in `0..=bound`,
/// nonzero columns and `A C = 0`. `None` means "none within the bound".
pub fn brute_force_ps3(a: &SkewIntMatrix, bound: u64) -> Result<Option<Vec<Vec<u64>>>> {
    let n = a.n();
    if n > ORACLE_MAX_N {
        return Err(ShadowError::OracleLimit(n, ORACLE_MAX_N));
    }
    let a: Grid = a.to_rows();
    let mut c = vec![vec![0u64; n]; n];
    Ok(fill(&a, &mut c, bound, 0, 0).then_some(c))
}

/// Fills the upper triangle row by row; once row `i` is done, column `i` is
/// complete and can be checked.
fn fill(a: &Grid, c: &mut Vec<Vec<u64>>, bound: u64, i: usize, j: usize) -> bool {
    let n = a.len();
    if i == n {
        return true;
    }
    if j == n {
        let column_ok = (0..n).any(|k| c[k][i] != 0)
            && (0..n).all(|r| (0..n).map(|k| a[r][k] * c[k][i] as i64).sum::<i64>() == 0);
        return column_ok && fill(a, c, bound, i + 1, i + 1);
    }
    for v in 0..=bound {
        c[i][j] = v;
        c[j][i] = v;
        if fill(a, c, bound, i, j + 1) {
            return true;
        }
    }
    c[i][j] = 0;
    c[j][i] = 0;
    false
}

fn permuted(a: &Grid, p: &[usize]) -> Grid {
    p.iter()
        .map(|&i| p.iter().map(|&j| a[i][j]).collect())
        .collect()
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in all_permutations(n - 1) {
        for pos in 0..n {
            let mut p = smaller.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Determinant as a signed sum over permutations.
fn leibniz_det(a: &Grid) -> i64 {
    let n = a.len();
    all_permutations(n)
        .iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            sign * (0..n).map(|i| a[i][p[i]]).product::<i64>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        assert_eq!(all_permutations(4).len(), 24);
        let set: BTreeSet<_> = all_permutations(4).into_iter().collect();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn leibniz_matches_known_values() {
        let regular = vec![
            vec![0, -1, 1, 1],
            vec![1, 0, -1, 1],
            vec![-1, 1, 0, -1],
            vec![-1, -1, 1, 0],
        ];
        assert_eq!(leibniz_det(&regular), 1);
        assert_eq!(leibniz_det(&vec![vec![0, 2], vec![-2, 0]]), 4);
    }

    #[test]
    fn small_sizes() {
        let one = brute_force_basic_shades(1).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one.contains(&SkewIntMatrix::zero(1).unwrap()));
        assert_eq!(brute_force_basic_shades(3).unwrap().len(), 5);
        assert_eq!(
            brute_force_basic_shades(5),
            Err(ShadowError::OracleLimit(5, 4))
        );
    }

    #[test]
    fn ps3_examples() {
        let zero = SkewIntMatrix::zero(3).unwrap();
        let w = brute_force_ps3(&zero, 1).unwrap().unwrap();
        assert!(crate::classifier::witness_is_valid(&zero, &w));

        let markov = crate::classifier::markov();
        let w = brute_force_ps3(&markov, 1).unwrap().unwrap();
        assert_eq!(w, vec![vec![1; 3]; 3]);

        // bound 0 leaves only the zero matrix, whose columns vanish
        assert_eq!(brute_force_ps3(&markov, 0).unwrap(), None);
    }
}
