//! Smith normal form of small integer matrices.

/// Diagonal of the Smith normal form (absolute values, zeros dropped), each
/// entry dividing the next.
pub fn smith_diagonal(rows: &[Vec<i64>], ncols: usize) -> Vec<u64> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = a.len();
    let mut diag = Vec::new();
    for t in 0..nrows.min(ncols) {
        loop {
            let pivot = (t..nrows)
                .flat_map(|i| (t..ncols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return finish(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..nrows {
                let f = a[i][t] / p;
                if f != 0 {
                    for j in t..ncols {
                        a[i][j] -= f * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..ncols {
                let f = a[t][j] / p;
                if f != 0 {
                    for i in t..nrows {
                        a[i][j] -= f * a[i][t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..ncols {
                        a[t][j] += a[i][j];
                    }
                }
                None => {
                    diag.push(p.unsigned_abs() as u64);
                    break;
                }
            }
        }
    }
    finish(diag)
}

fn finish(diag: Vec<u64>) -> Vec<u64> {
    diag.into_iter().filter(|&d| d != 0).collect()
}

/// Invariant factors (entries greater than one) of `Z/l1 x Z/l2 x ...`.
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let n = orders.len();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { orders[i] as i64 } else { 0 })
                .collect()
        })
        .collect();
    smith_diagonal(&rows, n)
        .into_iter()
        .filter(|&d| d > 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_forms() {
        assert_eq!(invariant_factors(&[2, 2, 5]), vec![2, 10]);
        assert_eq!(invariant_factors(&[8, 5]), vec![40]);
        assert_eq!(invariant_factors(&[4, 6]), vec![2, 12]);
        let rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(smith_diagonal(&rows, 3), vec![2, 6, 12]);
    }
}
