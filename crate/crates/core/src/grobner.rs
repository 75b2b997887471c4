//! Buchberger's algorithm for ideals generated by pure-difference binomials.
//!
//! Reducing a binomial by binomials only ever rewrites one term into another
//! monomial, so every intermediate polynomial is again a pure-difference
//! binomial or zero. Terms are therefore reduced independently as monomials.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::monomial::{Binomial, ExponentVector};
use crate::order::OrderMatrix;
use crate::semigroup::GradingVector;

/// A binomial `lead - trail` with `lead` above `trail` in the active order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedBinomial {
    pub lead: ExponentVector,
    pub trail: ExponentVector,
}

impl OrientedBinomial {
    /// Orients `u - v`; `None` when the terms coincide.
    pub fn new(u: ExponentVector, v: ExponentVector, order: &OrderMatrix) -> Option<Self> {
        match order.compare(&u, &v) {
            Ordering::Greater => Some(OrientedBinomial { lead: u, trail: v }),
            Ordering::Less => Some(OrientedBinomial { lead: v, trail: u }),
            Ordering::Equal => None,
        }
    }

    pub fn from_binomial(b: &Binomial, order: &OrderMatrix) -> Self {
        Self::new(b.plus().clone(), b.minus().clone(), order).expect("binomial terms are distinct")
    }

    pub fn to_binomial(&self) -> Binomial {
        Binomial::from_terms(self.lead.clone(), self.trail.clone())
    }
}

/// Result of reducing a binomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Zero,
    Binomial(OrientedBinomial),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrobnerBasis {
    elements: Vec<OrientedBinomial>,
    order: OrderMatrix,
    reduced: bool,
}

impl GrobnerBasis {
    /// The empty basis of the zero ideal.
    pub fn empty(order: OrderMatrix) -> Self {
        GrobnerBasis { elements: Vec::new(), order, reduced: true }
    }

    pub fn elements(&self) -> &[OrientedBinomial] {
        &self.elements
    }

    pub fn order(&self) -> &OrderMatrix {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in canonical (order-independent) orientation.
    pub fn binomials(&self) -> Vec<Binomial> {
        self.elements.iter().map(OrientedBinomial::to_binomial).collect()
    }

    pub fn canonical_set(&self) -> BTreeSet<Binomial> {
        self.elements.iter().map(OrientedBinomial::to_binomial).collect()
    }

    pub fn normal_form(&self, u: &ExponentVector) -> ExponentVector {
        normal_form(u, &self.elements)
    }

    /// Whether `X^u - X^v` lies in the ideal. Exact when the basis is a
    /// Gröbner basis.
    pub fn contains(&self, u: &ExponentVector, v: &ExponentVector) -> bool {
        self.normal_form(u) == self.normal_form(v)
    }

    pub fn contains_binomial(&self, b: &Binomial) -> bool {
        self.contains(b.plus(), b.minus())
    }
}

/// Rewrites `u` by leading terms of `basis` until no lead divides it.
pub fn normal_form(u: &ExponentVector, basis: &[OrientedBinomial]) -> ExponentVector {
    let mut current = u.clone();
    while let Some(g) = basis.iter().find(|g| g.lead.divides(&current)) {
        current = current.mul_div(&g.trail, &g.lead);
    }
    current
}

/// Normal form of `X^u - X^v` with respect to `basis`.
pub fn reduce(u: &ExponentVector, v: &ExponentVector, basis: &GrobnerBasis) -> Reduction {
    reduce_with(u, v, &basis.elements, &basis.order)
}

fn reduce_with(
    u: &ExponentVector,
    v: &ExponentVector,
    basis: &[OrientedBinomial],
    order: &OrderMatrix,
) -> Reduction {
    let (nu, nv) = (normal_form(u, basis), normal_form(v, basis));
    match OrientedBinomial::new(nu, nv, order) {
        Some(b) => Reduction::Binomial(b),
        None => Reduction::Zero,
    }
}

/// `lcm/lead_f * f - lcm/lead_g * g`, which reduces to the binomial between
/// the two lifted trails.
pub fn s_binomial(f: &OrientedBinomial, g: &OrientedBinomial, order: &OrderMatrix) -> Reduction {
    let lcm = f.lead.lcm(&g.lead);
    let left = f.trail.mul_div(&lcm, &f.lead);
    let right = g.trail.mul_div(&lcm, &g.lead);
    match OrientedBinomial::new(left, right, order) {
        Some(b) => Reduction::Binomial(b),
        None => Reduction::Zero,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs whose lcm is divisible by a third lead whose pairs with
    /// both members were already treated.
    pub chain_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { chain_criterion: true }
    }
}

pub fn buchberger(gens: &[Binomial], order: &OrderMatrix) -> GrobnerBasis {
    buchberger_with(gens, order, BuchbergerOptions::default())
}

/// Gröbner basis of the ideal generated by `gens`, with the normal
/// selection strategy: pairs are treated by increasing weighted degree of
/// their lcm (first row of the order), ties broken by pair index.
pub fn buchberger_with(gens: &[Binomial], order: &OrderMatrix, opts: BuchbergerOptions) -> GrobnerBasis {
    let weights = &order.rows()[0];
    let wdeg = |u: &ExponentVector| -> i64 { u.as_slice().iter().zip(weights).map(|(a, w)| a * w).sum() };

    let mut basis: Vec<OrientedBinomial> = Vec::new();
    let mut pending: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
    let mut pending_pairs: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<OrientedBinomial>,
                    pending: &mut BTreeSet<(i64, usize, usize)>,
                    pending_pairs: &mut HashSet<(usize, usize)>,
                    h: OrientedBinomial| {
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pending.insert((wdeg(&g.lead.lcm(&h.lead)), i, k));
            pending_pairs.insert((i, k));
        }
        basis.push(h);
    };

    let mut sorted: Vec<OrientedBinomial> =
        gens.iter().map(|b| OrientedBinomial::from_binomial(b, order)).collect();
    sorted.sort_by(|a, b| {
        wdeg(&a.lead).cmp(&wdeg(&b.lead)).then_with(|| order.compare(&a.lead, &b.lead))
    });
    for g in sorted {
        if let Reduction::Binomial(h) = reduce_with(&g.lead, &g.trail, &basis, order) {
            push(&mut basis, &mut pending, &mut pending_pairs, h);
        }
    }

    while let Some(entry) = pending.pop_first() {
        let (_, i, j) = entry;
        pending_pairs.remove(&(i, j));
        let (f, g) = (&basis[i], &basis[j]);
        if !f.lead.shares_variable(&g.lead) {
            continue;
        }
        if opts.chain_criterion {
            let lcm = f.lead.lcm(&g.lead);
            let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
            let redundant = basis.iter().enumerate().any(|(k, h)| {
                k != i
                    && k != j
                    && h.lead.divides(&lcm)
                    && !pending_pairs.contains(&key(i, k))
                    && !pending_pairs.contains(&key(j, k))
            });
            if redundant {
                continue;
            }
        }
        let s = s_binomial(f, g, order);
        if let Reduction::Binomial(s) = s {
            if let Reduction::Binomial(h) = reduce_with(&s.lead, &s.trail, &basis, order) {
                push(&mut basis, &mut pending, &mut pending_pairs, h);
            }
        }
    }

    GrobnerBasis { elements: basis, order: order.clone(), reduced: false }
}

/// The unique reduced Gröbner basis, sorted by increasing lead.
pub fn reduce_gb(basis: &GrobnerBasis) -> GrobnerBasis {
    if basis.reduced {
        return basis.clone();
    }
    let order = &basis.order;
    let mut candidates = basis.elements.clone();
    candidates.sort_by(|a, b| order.compare(&a.lead, &b.lead));
    // Minimal leads: drop any element whose lead is a multiple of an
    // earlier (smaller or equal) lead.
    let mut minimal: Vec<OrientedBinomial> = Vec::new();
    for g in candidates {
        if !minimal.iter().any(|m| m.lead.divides(&g.lead)) {
            minimal.push(g);
        }
    }
    let elements: Vec<OrientedBinomial> = minimal
        .iter()
        .map(|g| OrientedBinomial { lead: g.lead.clone(), trail: normal_form(&g.trail, &minimal) })
        .collect();
    debug_assert!(elements.iter().all(|g| order.compare(&g.lead, &g.trail) == Ordering::Greater));
    GrobnerBasis { elements, order: order.clone(), reduced: true }
}

pub fn reduced_basis(gens: &[Binomial], order: &OrderMatrix) -> GrobnerBasis {
    reduce_gb(&buchberger(gens, order))
}

pub fn ideal_membership(b: &Binomial, reduced: &GrobnerBasis) -> bool {
    reduced.contains_binomial(b)
}

/// Generators of `(I : X_i^inf)` for `I = <gens>` homogeneous with respect
/// to `weights`: the reduced basis under the order with `X_i` lowest, with
/// the common power of `X_i` divided out of each element.
pub fn saturate_variable(gens: &[Binomial], lowest: usize, weights: &GradingVector) -> Vec<Binomial> {
    let order = OrderMatrix::degrevlex_lowest(lowest, weights).expect("variable index in range");
    let gb = reduced_basis(gens, &order);
    let idx = lowest - 1;
    let mut out: BTreeSet<Binomial> = BTreeSet::new();
    for g in gb.elements() {
        let k = g.lead.as_slice()[idx].min(g.trail.as_slice()[idx]);
        let (mut lead, mut trail) = (g.lead.clone(), g.trail.clone());
        *lead.exponent_mut(idx) -= k;
        *trail.exponent_mut(idx) -= k;
        out.insert(Binomial::from_terms(lead, trail));
    }
    out.into_iter().collect()
}

/// `(I : (X_1 ... X_r)^inf)`, saturating one variable at a time.
pub fn saturate_full(gens: &[Binomial], weights: &GradingVector) -> Vec<Binomial> {
    let mut current = gens.to_vec();
    for i in 1..=weights.len() {
        current = saturate_variable(&current, i, weights);
    }
    current
}
