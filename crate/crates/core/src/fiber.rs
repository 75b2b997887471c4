//! Fibers of the degree map and their Eliahou complexes.
//!
//! The complex on a fiber has a face for every subset of monomials with a
//! nontrivial common divisor. Only its 1-skeleton is stored: two monomials
//! are joined iff their supports meet. Higher faces are answered by gcd
//! queries on demand.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::{gcd_monomials, ExponentVector};
use crate::semigroup::{ModelMatrix, SemigroupDegree};

pub const DEFAULT_FIBER_CAP: usize = 1_000_000;

/// All monomials of one degree, greatest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    degree: SemigroupDegree,
    monomials: Vec<ExponentVector>,
}

impl Fiber {
    pub fn degree(&self) -> &SemigroupDegree {
        &self.degree
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.monomials.binary_search_by(|m| u.cmp(m)).is_ok()
    }
}

/// Depth-first search over the variables in index order. `visit` returns
/// `false` to stop the search early.
struct Search<'a> {
    model: &'a ModelMatrix,
    /// `reachable[i][j]`: some column `>= i` has a positive entry in row `j`.
    reachable: Vec<Vec<bool>>,
}

impl<'a> Search<'a> {
    fn new(model: &'a ModelMatrix) -> Self {
        let (d, r) = (model.dim(), model.cols());
        let mut reachable = vec![vec![false; d]; r + 1];
        for i in (0..r).rev() {
            reachable[i] = (0..d).map(|j| reachable[i + 1][j] || model.entry(j, i) > 0).collect();
        }
        Search { model, reachable }
    }

    fn run<F: FnMut(&[i64]) -> bool>(&self, target: &[i64], visit: &mut F) {
        let mut residual = target.to_vec();
        let mut current = vec![0i64; self.model.cols()];
        self.descend(0, &mut residual, &mut current, visit);
    }

    fn descend<F: FnMut(&[i64]) -> bool>(
        &self,
        var: usize,
        residual: &mut [i64],
        current: &mut [i64],
        visit: &mut F,
    ) -> bool {
        let model = self.model;
        if var == model.cols() {
            if residual.iter().all(|&x| x == 0) {
                return visit(current);
            }
            return true;
        }
        if residual.iter().zip(&self.reachable[var]).any(|(&x, &ok)| x > 0 && !ok) {
            return true;
        }
        let bound = (0..model.dim())
            .filter(|&j| model.entry(j, var) > 0)
            .map(|j| residual[j] / model.entry(j, var))
            .min()
            .expect("columns are nonzero");
        for e in (0..=bound).rev() {
            for (j, x) in residual.iter_mut().enumerate() {
                *x -= e * model.entry(j, var);
            }
            current[var] = e;
            let go_on = self.descend(var + 1, residual, current, visit);
            for (j, x) in residual.iter_mut().enumerate() {
                *x += e * model.entry(j, var);
            }
            if !go_on {
                current[var] = 0;
                return false;
            }
        }
        current[var] = 0;
        true
    }
}

/// Every `u` in `N^r` with `A u = degree`. Aborts with
/// [`Error::FiberCapExceeded`] once more than `cap` monomials are found.
pub fn enumerate_fiber(model: &ModelMatrix, degree: &SemigroupDegree, cap: usize) -> Result<Fiber> {
    if degree.len() != model.dim() {
        return Err(Error::LengthMismatch { expected: model.dim(), found: degree.len() });
    }
    let mut monomials = Vec::new();
    if degree.is_nonnegative() {
        let mut exceeded = false;
        Search::new(model).run(degree.as_slice(), &mut |u| {
            if monomials.len() == cap {
                exceeded = true;
                return false;
            }
            monomials.push(ExponentVector::new(u.to_vec()));
            true
        });
        if exceeded {
            return Err(Error::FiberCapExceeded { cap });
        }
    }
    // The search emits larger exponents of earlier variables first.
    debug_assert!(monomials.windows(2).all(|w| w[0] > w[1]));
    monomials.sort_by(|a, b| b.cmp(a));
    Ok(Fiber { degree: degree.clone(), monomials })
}

/// Whether the degree is a sum of columns.
pub fn in_semigroup(model: &ModelMatrix, degree: &SemigroupDegree) -> bool {
    if degree.len() != model.dim() || !degree.is_nonnegative() {
        return false;
    }
    let mut found = false;
    Search::new(model).run(degree.as_slice(), &mut |_| {
        found = true;
        false
    });
    found
}

/// The Eliahou complex of a fiber, kept as its 1-skeleton.
#[derive(Clone, Debug)]
pub struct NablaComplex {
    fiber: Fiber,
    /// For each variable, the fiber indices of the monomials it divides.
    by_variable: Vec<Vec<usize>>,
}

impl NablaComplex {
    pub fn new(fiber: Fiber) -> Self {
        let r = fiber.monomials.first().map(ExponentVector::len).unwrap_or(0);
        let mut by_variable = vec![Vec::new(); r];
        for (idx, u) in fiber.monomials.iter().enumerate() {
            for (var, &e) in u.as_slice().iter().enumerate() {
                if e > 0 {
                    by_variable[var].push(idx);
                }
            }
        }
        NablaComplex { fiber, by_variable }
    }

    pub fn fiber(&self) -> &Fiber {
        &self.fiber
    }

    pub fn num_vertices(&self) -> usize {
        self.fiber.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.fiber.monomials[i].shares_variable(&self.fiber.monomials[j])
    }

    /// Index pairs `(i, j)`, `i < j`, of the 1-faces.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.num_vertices();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn degree_of_vertex(&self, i: usize) -> usize {
        (0..self.num_vertices()).filter(|&j| self.has_edge(i, j)).count()
    }

    /// Connected components as sorted index lists, ordered by first index.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for holders in &self.by_variable {
            if let Some((&first, rest)) = holders.split_first() {
                for &other in rest {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for i in 0..n {
            let root = find(&mut parent, i);
            if slot[root] == usize::MAX {
                slot[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[root]].push(i);
        }
        groups
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    /// Monomials sharing no variable with any other monomial of the fiber.
    pub fn isolated_vertices(&self) -> Vec<ExponentVector> {
        let mut touched = vec![false; self.num_vertices()];
        for holders in self.by_variable.iter().filter(|h| h.len() > 1) {
            for &i in holders {
                touched[i] = true;
            }
        }
        self.fiber
            .monomials
            .iter()
            .zip(touched)
            .filter(|(_, t)| !t)
            .map(|(u, _)| u.clone())
            .collect()
    }
}

/// A set of monomials is a face iff its gcd is not `1`.
pub fn is_face<'a, I>(family: I) -> Result<bool>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    Ok(!gcd_monomials(family)?.is_one())
}

/// For a 1-face `{u, v}`: no other monomial `w` of `monomials` satisfies
/// `gcd(u, v, w) = gcd(u, v)`, i.e. none is divisible by `gcd(u, v)`.
pub fn triple_condition(u: &ExponentVector, v: &ExponentVector, monomials: &[ExponentVector]) -> Result<bool> {
    let g = u.gcd(v);
    if g.is_one() {
        return Err(Error::NotAFace);
    }
    Ok(!monomials.iter().any(|w| w != u && w != v && g.divides(w)))
}

/// Support sets, useful for output and for the three-way edge agreement.
pub fn supports(fiber: &Fiber) -> Vec<BTreeSet<usize>> {
    fiber.monomials.iter().map(ExponentVector::support).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn model(rows: &[&[i64]]) -> ModelMatrix {
        ModelMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn deg(v: &[i64]) -> SemigroupDegree {
        SemigroupDegree::new(v.to_vec())
    }

    fn complex_of(monomials: &[&[i64]]) -> NablaComplex {
        let mut ms: Vec<_> = monomials.iter().map(|m| ev(m)).collect();
        ms.sort_by(|a, b| b.cmp(a));
        NablaComplex::new(Fiber { degree: deg(&[0]), monomials: ms })
    }

    #[test]
    fn unit_fiber() {
        let f = enumerate_fiber(&model(&[&[1, 1, 1]]), &deg(&[1]), DEFAULT_FIBER_CAP).unwrap();
        assert_eq!(f.monomials(), &[ev(&[1, 0, 0]), ev(&[0, 1, 0]), ev(&[0, 0, 1])]);
        let nabla = NablaComplex::new(f);
        assert!(nabla.edges().is_empty());
        assert_eq!(nabla.component_count(), 3);
        assert_eq!(nabla.isolated_vertices().len(), 3);
    }

    #[test]
    fn zero_degree_and_empty_fibers() {
        let a = model(&[&[2, 3]]);
        let f = enumerate_fiber(&a, &deg(&[0]), 10).unwrap();
        assert_eq!(f.monomials(), &[ev(&[0, 0])]);
        assert!(enumerate_fiber(&a, &deg(&[1]), 10).unwrap().is_empty());
        assert!(enumerate_fiber(&a, &deg(&[-1]), 10).unwrap().is_empty());
        assert!(enumerate_fiber(&a, &deg(&[1, 1]), 10).is_err());
    }

    #[test]
    fn fiber_of_six_over_two_three() {
        let f = enumerate_fiber(&model(&[&[2, 3]]), &deg(&[6]), 10).unwrap();
        assert_eq!(f.monomials(), &[ev(&[3, 0]), ev(&[0, 2])]);
        let nabla = NablaComplex::new(f);
        assert_eq!(nabla.connected_components(), vec![vec![0], vec![1]]);
        assert_eq!(nabla.isolated_vertices(), vec![ev(&[3, 0]), ev(&[0, 2])]);
    }

    #[test]
    fn cap_is_enforced() {
        let a = model(&[&[1, 1, 1]]);
        assert_eq!(enumerate_fiber(&a, &deg(&[3]), 9), Err(Error::FiberCapExceeded { cap: 9 }));
        assert_eq!(enumerate_fiber(&a, &deg(&[3]), 10).unwrap().len(), 10);
    }

    #[test]
    fn path_complex() {
        let n = complex_of(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        assert_eq!(n.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(n.component_count(), 1);
        assert!(n.isolated_vertices().is_empty());
        let n = complex_of(&[&[1, 1, 0], &[0, 1, 1]]);
        assert!(n.isolated_vertices().is_empty());
    }

    #[test]
    fn faces() {
        assert!(is_face([&ev(&[1, 0])]).unwrap());
        let tri = [ev(&[1, 1, 0]), ev(&[0, 1, 1]), ev(&[1, 0, 1])];
        assert!(is_face([&tri[0], &tri[1]]).unwrap());
        assert!(!is_face(&tri).unwrap());
        assert!(is_face([&ev(&[0, 1, 2, 1]), &ev(&[1, 0, 1, 2])]).unwrap());
        let empty: Vec<ExponentVector> = vec![];
        assert_eq!(is_face(&empty), Err(Error::EmptySet));
    }

    #[test]
    fn triple_condition_examples() {
        let (a, b, c) = (ev(&[1, 1, 0, 0]), ev(&[1, 0, 1, 0]), ev(&[1, 0, 0, 1]));
        assert!(triple_condition(&a, &b, &[a.clone(), b.clone()]).unwrap());
        assert!(!triple_condition(&a, &b, &[a.clone(), b.clone(), c.clone()]).unwrap());
        assert_eq!(
            triple_condition(&ev(&[1, 0]), &ev(&[0, 1]), &[]),
            Err(Error::NotAFace)
        );
    }
}
