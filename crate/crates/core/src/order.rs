//! Term orders given by integer matrices.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::lattice;
use crate::monomial::ExponentVector;
use crate::semigroup::GradingVector;

/// A matrix term order: `u < v` iff the first nonzero entry of
/// `rows * (v - u)` is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderMatrix {
    rows: Vec<Vec<i64>>,
    num_vars: usize,
    lowest_var: Option<usize>,
}

impl OrderMatrix {
    /// Wraps arbitrary rows without checking the term-order conditions;
    /// see [`OrderMatrix::is_term_order`] and [`OrderMatrix::validated`].
    pub fn from_rows(rows: Vec<Vec<i64>>, num_vars: usize) -> Result<Self> {
        if let Some(row) = rows.iter().find(|row| row.len() != num_vars) {
            return Err(Error::LengthMismatch { expected: num_vars, found: row.len() });
        }
        Ok(OrderMatrix { rows, num_vars, lowest_var: None })
    }

    pub fn validated(rows: Vec<Vec<i64>>, num_vars: usize) -> Result<Self> {
        let ord = Self::from_rows(rows, num_vars)?;
        if !ord.is_term_order() {
            return Err(Error::InvalidOrder);
        }
        Ok(ord)
    }

    /// Degree reverse lexicographic order for `weights` with `X_lowest`
    /// (1-based) as the lowest variable. The rows are the weights, `-e_i`,
    /// then `-e_r, -e_{r-1}, ...` skipping `i`.
    pub fn degrevlex_lowest(lowest: usize, weights: &GradingVector) -> Result<Self> {
        let r = weights.len();
        if lowest == 0 || lowest > r {
            return Err(Error::IndexOutOfRange { index: lowest, len: r });
        }
        let neg_unit = |j: usize| {
            let mut row = vec![0; r];
            row[j] = -1;
            row
        };
        let mut rows = Vec::with_capacity(r);
        rows.push(weights.as_slice().to_vec());
        rows.push(neg_unit(lowest - 1));
        rows.extend((0..r).rev().filter(|&j| j != lowest - 1).take(r.saturating_sub(2)).map(neg_unit));
        Ok(OrderMatrix { rows, num_vars: r, lowest_var: Some(lowest) })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// 1-based index of the designated lowest variable, if any.
    pub fn lowest_var(&self) -> Option<usize> {
        self.lowest_var
    }

    /// Full rank, and every variable compares above `1`.
    pub fn is_term_order(&self) -> bool {
        let positive_columns = (0..self.num_vars).all(|j| {
            self.rows.iter().map(|row| row[j]).find(|&x| x != 0).is_some_and(|x| x > 0)
        });
        positive_columns && lattice::rank(&self.rows) == self.num_vars
    }

    pub fn compare(&self, u: &ExponentVector, v: &ExponentVector) -> Ordering {
        debug_assert_eq!(u.len(), self.num_vars);
        debug_assert_eq!(v.len(), self.num_vars);
        let (u, v) = (u.as_slice(), v.as_slice());
        for row in &self.rows {
            let diff: i128 = row
                .iter()
                .zip(u.iter().zip(v))
                .map(|(&w, (&a, &b))| w as i128 * (a - b) as i128)
                .sum();
            match diff.cmp(&0) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn try_compare(&self, u: &ExponentVector, v: &ExponentVector) -> Result<Ordering> {
        for w in [u, v] {
            if w.len() != self.num_vars {
                return Err(Error::LengthMismatch { expected: self.num_vars, found: w.len() });
            }
        }
        Ok(self.compare(u, v))
    }
}
