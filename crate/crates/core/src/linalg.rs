//! Exact integer linear algebra: fraction-free (Bareiss) rank and rational solves.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Rank over ℚ of an integer matrix given as rows.
///
/// Runs Bareiss elimination in `i128` and restarts in arbitrary precision if an
/// intermediate minor overflows.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(&mut a) {
        Some(rank) => rank,
        None => bareiss_rank_bigint(rows),
    }
}

fn bareiss_i128(a: &mut [Vec<i128>]) -> Option<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor == 0 && pivot == prev {
                continue;
            }
            for j in col + 1..ncols {
                let lhs = pivot.checked_mul(row[j])?;
                let rhs = factor.checked_mul(pivot_row[j])?;
                row[j] = lhs.checked_sub(rhs)? / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Arbitrary-precision Bareiss rank.
pub fn bareiss_rank_bigint(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            if factor.is_zero() && pivot == prev {
                continue;
            }
            for j in col + 1..ncols {
                row[j] = (&pivot * &row[j] - &factor * &pivot_row[j]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Coefficients `x` with `Σ x_k · vectors[k] = target`, if `vectors` are linearly
/// independent and `target` lies in their rational span.
pub fn solve_in_span(vectors: &[Vec<i64>], target: &[i64]) -> Option<Vec<Ratio<i128>>> {
    let k = vectors.len();
    let n = target.len();
    if vectors.iter().any(|v| v.len() != n) {
        return None;
    }
    // Augmented n × (k+1) system: column c is vectors[c].
    let mut m: Vec<Vec<Ratio<i128>>> = (0..n)
        .map(|i| {
            let mut row: Vec<Ratio<i128>> = vectors
                .iter()
                .map(|v| Ratio::from_integer(v[i] as i128))
                .collect();
            row.push(Ratio::from_integer(target[i] as i128));
            row
        })
        .collect();
    let mut pivot_cols = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            // Dependent generators.
            return None;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, &p) in row.iter_mut().zip(&pivot_row).take(k + 1) {
                    *x -= p * f;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|c| m[c][k]).collect())
}

/// Nonnegative integer coefficients expressing `target` over independent `vectors`.
pub fn nonnegative_integer_coefficients(vectors: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let x = solve_in_span(vectors, target)?;
    x.iter()
        .map(|q| {
            if q.is_integer() && !q.is_negative() {
                i64::try_from(q.to_integer()).ok()
            } else {
                None
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(bareiss_rank(&[]), 0);
        assert_eq!(bareiss_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(bareiss_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(
            bareiss_rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]),
            2
        );
        assert_eq!(
            bareiss_rank(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            3
        );
        assert_eq!(bareiss_rank(&[vec![0, 1], vec![1, 0], vec![1, 1]]), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Huge entries overflow i128 products quickly.
        let big = i64::MAX / 3;
        let m = vec![
            vec![big, big - 1, 7, 3],
            vec![big - 5, big, 11, 13],
            vec![17, big - 2, big, 19],
            vec![23, 29, big - 7, big],
        ];
        assert_eq!(bareiss_rank(&m), 4);
        assert_eq!(bareiss_rank_bigint(&m), 4);
        let dependent = vec![m[0].clone(), m[0].clone(), m[1].clone()];
        assert_eq!(bareiss_rank(&dependent), 2);
    }

    #[test]
    fn span_solve() {
        let gens = vec![vec![1, 0, 0], vec![0, 1, 0]];
        assert_eq!(
            nonnegative_integer_coefficients(&gens, &[3, 5, 0]),
            Some(vec![3, 5])
        );
        assert_eq!(nonnegative_integer_coefficients(&gens, &[3, 5, 1]), None);
        assert_eq!(nonnegative_integer_coefficients(&gens, &[-1, 0, 0]), None);
        let gens = vec![vec![2, 0]];
        assert_eq!(nonnegative_integer_coefficients(&gens, &[1, 0]), None);
        assert_eq!(
            nonnegative_integer_coefficients(&gens, &[4, 0]),
            Some(vec![2])
        );
        assert_eq!(solve_in_span(&[vec![1, 1], vec![2, 2]], &[1, 1]), None);
        assert_eq!(nonnegative_integer_coefficients(&[], &[0, 0]), Some(vec![]));
    }
}
