//! Integer row reduction over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn sub_multiple(m: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (t, s) = if target < source {
        let (lo, hi) = m.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Brings `m` to row echelon form over the columns `0..pivot_cols` using
/// unimodular row operations only. With `hermite` set, pivots are made
/// positive and the entries above each pivot are reduced into `[0, pivot)`.
///
/// Returns the rank, i.e. the number of leading nonzero rows after reduction.
pub(crate) fn echelon(m: &mut [Vec<BigInt>], pivot_cols: usize, hermite: bool) -> usize {
    let n = m.len();
    let mut pivot = 0;
    for col in 0..pivot_cols {
        if pivot == n {
            break;
        }
        loop {
            // Euclid on the column: smallest nonzero magnitude, lowest index on ties.
            let best = (pivot..n)
                .filter(|&i| !m[i][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            m.swap(pivot, best);
            let mut clean = true;
            for i in pivot + 1..n {
                if !m[i][col].is_zero() {
                    let q = m[i][col].div_floor(&m[pivot][col]);
                    sub_multiple(m, i, pivot, &q);
                    if !m[i][col].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if m[pivot][col].is_zero() {
            continue;
        }
        if hermite {
            if m[pivot][col].is_negative() {
                for x in m[pivot].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..pivot {
                if !m[i][col].is_zero() {
                    let q = m[i][col].div_floor(&m[pivot][col]);
                    sub_multiple(m, i, pivot, &q);
                }
            }
        }
        pivot += 1;
    }
    pivot
}

/// Rank over the rationals of an integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    echelon(&mut m, width, false)
}

/// Basis of `{ v in Z^ncols : rows * v = 0 }` in Hermite normal form.
///
/// The transpose of the matrix is augmented with the identity and reduced;
/// the identity part of the rows whose matrix part vanished spans the kernel
/// because every operation applied is unimodular.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let d = rows.len();
    let mut m: Vec<Vec<BigInt>> = (0..ncols)
        .map(|c| {
            let mut v: Vec<BigInt> = rows.iter().map(|row| BigInt::from(row[c])).collect();
            v.extend((0..ncols).map(|k| if k == c { BigInt::one() } else { BigInt::zero() }));
            v
        })
        .collect();
    let rank = echelon(&mut m, d, false);
    let mut kernel: Vec<Vec<BigInt>> = m.split_off(rank).into_iter().map(|row| row[d..].to_vec()).collect();
    let k = echelon(&mut kernel, ncols, true);
    debug_assert_eq!(k, kernel.len());
    kernel
        .into_iter()
        .map(|row| row.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect())
        .collect()
}
