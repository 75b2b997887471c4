//! Monomials as exponent vectors and pure-difference binomials.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{GradingVector, ModelMatrix, SemigroupDegree};

/// Exponent vector `u` of the monomial `X^u`.
///
/// The derived ordering is plain lexicographic on the exponents, so `X_1`
/// ranks above `X_2` and so on. Monomials of equal weighted degree (for
/// example, the two terms of a homogeneous binomial or the elements of one
/// fiber) are canonically ordered by it; use [`graded_cmp`] across degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    /// Panics if an exponent is negative.
    pub fn new(exps: Vec<i64>) -> Self {
        assert!(exps.iter().all(|&e| e >= 0), "negative exponent in {exps:?}");
        ExponentVector(exps)
    }

    pub fn one(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    /// The variable `X_{index+1}` (zero-based index).
    pub fn variable(len: usize, index: usize) -> Self {
        let mut v = vec![0; len];
        v[index] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &GradingVector) -> i64 {
        self.0.iter().zip(weights.as_slice()).map(|(e, w)| e * w).sum()
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &ExponentVector) -> Option<ExponentVector> {
        other.divides(self).then(|| self.div_unchecked(other))
    }

    pub(crate) fn div_unchecked(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self * num / den` without materialising the product.
    pub(crate) fn mul_div(&self, num: &ExponentVector, den: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&num.0)
                .zip(&den.0)
                .map(|((a, n), d)| a + n - d)
                .collect(),
        )
    }

    pub(crate) fn exponent_mut(&mut self, index: usize) -> &mut i64 {
        &mut self.0[index]
    }

    /// Zero-based indices of the variables occurring in the monomial.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, _)| i).collect()
    }

    pub fn shares_variable(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).any(|(&a, &b)| a != 0 && b != 0)
    }
}

/// Componentwise minimum of a nonempty family of monomials.
pub fn gcd_monomials<'a, I>(family: I) -> Result<ExponentVector>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut iter = family.into_iter();
    let first = iter.next().ok_or(Error::EmptySet)?.clone();
    iter.try_fold(first, |acc, u| {
        if u.len() != acc.len() {
            return Err(Error::LengthMismatch { expected: acc.len(), found: u.len() });
        }
        Ok(acc.gcd(u))
    })
}

/// Graded lexicographic comparison: weighted degree first, then lex.
pub fn graded_cmp(weights: &GradingVector, u: &ExponentVector, v: &ExponentVector) -> Ordering {
    u.weighted_degree(weights)
        .cmp(&v.weighted_degree(weights))
        .then_with(|| u.cmp(v))
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A pure-difference binomial `X^plus - X^minus` of the semigroup ideal,
/// stored in canonical orientation: `plus` is the lexicographically larger
/// term. Both terms have the same degree, so lex agrees with graded lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Binomial {
    /// Builds `X^u - X^v` after checking homogeneity against the model.
    pub fn new(model: &ModelMatrix, u: ExponentVector, v: ExponentVector) -> Result<Self> {
        if u == v {
            return Err(Error::EqualTerms);
        }
        if model.degree_of(&u)? != model.degree_of(&v)? {
            return Err(Error::NotHomogeneous);
        }
        Ok(Self::from_terms(u, v))
    }

    /// Canonically oriented binomial from two terms the caller knows to be
    /// distinct and of equal degree.
    pub(crate) fn from_terms(u: ExponentVector, v: ExponentVector) -> Self {
        debug_assert_ne!(u, v);
        if u > v {
            Binomial { plus: u, minus: v }
        } else {
            Binomial { plus: v, minus: u }
        }
    }

    /// `X^{w+} - X^{w-}` for a nonzero kernel vector `w`.
    pub fn from_vector(model: &ModelMatrix, w: &[i64]) -> Result<Self> {
        if w.len() != model.cols() {
            return Err(Error::LengthMismatch { expected: model.cols(), found: w.len() });
        }
        if w.iter().all(|&x| x == 0) {
            return Err(Error::ZeroVector);
        }
        if !model.in_kernel(w)? {
            return Err(Error::NotInKernel);
        }
        let plus = ExponentVector(w.iter().map(|&x| x.max(0)).collect());
        let minus = ExponentVector(w.iter().map(|&x| (-x).max(0)).collect());
        Ok(Self::from_terms(plus, minus))
    }

    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    /// The exponent vector `plus - minus`, an element of the kernel lattice.
    pub fn to_vector(&self) -> Vec<i64> {
        self.plus.0.iter().zip(&self.minus.0).map(|(a, b)| a - b).collect()
    }

    pub fn gcd(&self) -> ExponentVector {
        self.plus.gcd(&self.minus)
    }

    /// Both terms divided by their gcd. The degree drops by the degree of
    /// the gcd; a binomial with coprime terms is returned unchanged.
    pub fn divide_by_gcd(&self) -> Binomial {
        let g = self.gcd();
        if g.is_one() {
            return self.clone();
        }
        Binomial::from_terms(self.plus.div_unchecked(&g), self.minus.div_unchecked(&g))
    }

    pub fn is_primitive(&self) -> bool {
        !self.plus.shares_variable(&self.minus)
    }

    pub fn degree(&self, model: &ModelMatrix) -> Result<SemigroupDegree> {
        model.degree_of(&self.plus)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// Sorts binomials for output: descending graded lex on `plus`, then on `minus`.
pub fn sort_for_display(binomials: &mut [Binomial], weights: &GradingVector) {
    binomials.sort_by(|a, b| {
        graded_cmp(weights, &b.plus, &a.plus).then_with(|| b.minus.cmp(&a.minus))
    });
}
