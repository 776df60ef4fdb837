//! Exact rank of small integer matrices.

use num_integer::Integer;

/// Rank by fraction-free elimination; rows are rescaled by their content
/// after every step so entries stay small.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            let p = prow[col];
            for (x, &y) in row.iter_mut().zip(prow.iter()) {
                *x = *x * p - y * factor;
            }
            let content = row.iter().fold(0i128, |g, &x| g.gcd(&x));
            if content > 1 {
                row.iter_mut().for_each(|x| *x /= content);
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the affine hull of `points`; `None` when empty.
pub fn affine_dim<'a, I>(points: I) -> Option<usize>
where
    I: IntoIterator<Item = &'a [i64]>,
{
    let mut iter = points.into_iter();
    let base = iter.next()?;
    let diffs: Vec<Vec<i64>> = iter
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank(&diffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(rank(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]), 2);
        assert_eq!(
            rank(&[vec![0, 0, 3], vec![0, 2, 0], vec![5, 0, 0], vec![1, 1, 1]]),
            3
        );
    }

    #[test]
    fn affine_dims() {
        let pts: Vec<Vec<i64>> = vec![vec![1, 1], vec![2, 2], vec![3, 3]];
        assert_eq!(affine_dim(pts.iter().map(Vec::as_slice)), Some(1));
        let tri: Vec<Vec<i64>> = vec![vec![1, 1], vec![2, 1], vec![2, 2]];
        assert_eq!(affine_dim(tri.iter().map(Vec::as_slice)), Some(2));
        let single: Vec<Vec<i64>> = vec![vec![7, 7, 7]];
        assert_eq!(affine_dim(single.iter().map(Vec::as_slice)), Some(0));
        assert_eq!(affine_dim(std::iter::empty()), None);
    }

    // Brute-force rank over the rationals via determinants of all square
    // minors, for tiny matrices.
    fn det(m: &[Vec<i128>]) -> i128 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn minor_rank(rows: &[Vec<i64>]) -> usize {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        (1..=nr.min(nc))
            .rev()
            .find(|&k| {
                subsets(nr, k).iter().any(|rs| {
                    subsets(nc, k).iter().any(|cs| {
                        let m: Vec<Vec<i128>> = rs
                            .iter()
                            .map(|&r| cs.iter().map(|&c| rows[r][c] as i128).collect())
                            .collect();
                        det(&m) != 0
                    })
                })
            })
            .unwrap_or(0)
    }

    proptest! {
        #[test]
        fn matches_minor_rank(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 1..5)) {
            prop_assert_eq!(rank(&rows), minor_rank(&rows));
        }
    }
}
