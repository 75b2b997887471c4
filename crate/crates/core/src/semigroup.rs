//! The defining matrix of the semigroup and the maps attached to it.

use std::fmt;

use crate::error::{Error, Result};
use crate::fiber;
use crate::lattice;
use crate::monomial::ExponentVector;

/// An element of the semigroup, as a vector in `N^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemigroupDegree(Vec<i64>);

impl SemigroupDegree {
    pub fn new(coords: Vec<i64>) -> Self {
        SemigroupDegree(coords)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn checked_add(&self, other: &SemigroupDegree) -> Result<SemigroupDegree> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &SemigroupDegree) -> Result<SemigroupDegree> {
        self.zip_with(other, i64::checked_sub)
    }

    fn zip_with(&self, other: &SemigroupDegree, op: fn(i64, i64) -> Option<i64>) -> Result<SemigroupDegree> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow))
            .collect::<Result<_>>()
            .map(SemigroupDegree)
    }
}

impl fmt::Display for SemigroupDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Positive weights `(d_1, ..., d_r)` making the ideal homogeneous.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingVector(Vec<i64>);

impl GradingVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Basis of the kernel lattice `ker_Z(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis(Vec<Vec<i64>>);

impl LatticeBasis {
    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

/// A validated `d x r` matrix with nonnegative entries and no zero column.
/// Its columns generate the semigroup; column `i` is the degree of `X_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModelMatrix {
    rows: Vec<Vec<i64>>,
    weights: GradingVector,
}

impl ModelMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        if rows.is_empty() || ncols == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::RaggedMatrix { row: i, expected: ncols, found: row.len() });
            }
            if let Some((j, &value)) = row.iter().enumerate().find(|(_, &x)| x < 0) {
                return Err(Error::NegativeEntry { row: i, col: j, value });
            }
        }
        let mut weights = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let sum = rows
                .iter()
                .try_fold(0i64, |acc, row| acc.checked_add(row[j]))
                .ok_or(Error::Overflow)?;
            if sum == 0 {
                return Err(Error::ZeroColumn { col: j });
            }
            weights.push(sum);
        }
        Ok(ModelMatrix { rows, weights: GradingVector(weights) })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Number of rows `d`.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns `r`, i.e. of variables.
    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.rows[row][col]
    }

    pub fn column(&self, col: usize) -> SemigroupDegree {
        SemigroupDegree(self.rows.iter().map(|row| row[col]).collect())
    }

    pub fn weights(&self) -> &GradingVector {
        &self.weights
    }

    fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols() {
            return Err(Error::LengthMismatch { expected: self.cols(), found: v.len() });
        }
        self.rows
            .iter()
            .map(|row| {
                row.iter().zip(v).try_fold(0i64, |acc, (&a, &x)| {
                    a.checked_mul(x).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow)
                })
            })
            .collect()
    }

    /// `A * u`, the degree of the monomial `X^u`.
    pub fn degree_of(&self, u: &ExponentVector) -> Result<SemigroupDegree> {
        self.apply(u.as_slice()).map(SemigroupDegree)
    }

    pub fn in_kernel(&self, w: &[i64]) -> Result<bool> {
        Ok(self.apply(w)?.iter().all(|&x| x == 0))
    }

    pub fn parse_degree(&self, coords: Vec<i64>) -> Result<SemigroupDegree> {
        if coords.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), found: coords.len() });
        }
        Ok(SemigroupDegree(coords))
    }

    /// Hermite-normal-form basis of the integer kernel of `A`.
    pub fn lattice_kernel(&self) -> Result<LatticeBasis> {
        lattice::integer_kernel(&self.rows, self.cols()).map(LatticeBasis)
    }

    pub fn rank(&self) -> usize {
        lattice::rank(&self.rows)
    }

    /// The `(d + r) x 2r` matrix with columns `(a_i, e_i)` followed by `(0, e_i)`.
    pub fn lawrence_lift(&self) -> ModelMatrix {
        let (d, r) = (self.dim(), self.cols());
        let mut rows = Vec::with_capacity(d + r);
        for row in &self.rows {
            let mut lifted = row.clone();
            lifted.resize(2 * r, 0);
            rows.push(lifted);
        }
        for i in 0..r {
            let mut unit = vec![0; 2 * r];
            unit[i] = 1;
            unit[r + i] = 1;
            rows.push(unit);
        }
        ModelMatrix::new(rows).expect("Lawrence lifting of a valid model is valid")
    }

    /// `b <= a` in the semigroup order: `a - b` lies in the semigroup, not
    /// merely in the nonnegative orthant.
    pub fn degree_leq(&self, b: &SemigroupDegree, a: &SemigroupDegree) -> Result<bool> {
        let diff = a.checked_sub(b)?;
        if !diff.is_nonnegative() {
            return Ok(false);
        }
        Ok(fiber::in_semigroup(self, &diff))
    }
}

impl fmt::Display for ModelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.dim(), self.cols())?;
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}
