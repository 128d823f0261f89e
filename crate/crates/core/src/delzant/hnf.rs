//! Row-style Hermite normal form over ℤ, used to put ℤ-modules of exponent
//! vectors into a canonical basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Hermite normal form of the row span of `rows`.
///
/// The result has no zero rows; pivots are positive and strictly move right
/// from row to row, and every entry above a pivot lies in `[0, pivot)`.
pub fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        // Euclid down the column until one row holds the gcd.
        loop {
            let nz: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz
                .iter()
                .min_by(|&&a, &&b| rows[a][c].abs().cmp(&rows[b][c].abs()))
                .expect("nonempty");
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().take(r) {
            let q = row[c].div_floor(&pivot_row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &q * p;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Column index of the first nonzero entry.
pub fn pivot(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_example() {
        let h = hermite_normal_form(m(&[&[2, 4], &[3, 5], &[0, 0]]));
        // span{(2,4),(3,5)} = span{(1,1),(0,2)}
        assert_eq!(h, m(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn basis_independent() {
        let a = hermite_normal_form(m(&[&[1, 0, 3], &[0, 1, 5]]));
        let b = hermite_normal_form(m(&[&[1, 1, 8], &[2, 1, 11], &[3, 2, 19]]));
        assert_eq!(a, b);
    }

    #[test]
    fn reduces_above_pivots() {
        let h = hermite_normal_form(m(&[&[1, 7], &[0, 3]]));
        assert_eq!(h, m(&[&[1, 1], &[0, 3]]));
    }
}
