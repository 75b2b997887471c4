//! Brute-force cross-checks and algebraic invariants on small models.

mod common;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_core::fiber::{enumerate_fiber, in_semigroup, DEFAULT_FIBER_CAP};
use toric_core::grobner::{self, BuchbergerOptions};
use toric_core::indispensable::{all_orders_reduced_gb_check, indispensable_below_in};
use toric_core::{
    Analysis, Binomial, ExponentVector, GrobnerBasis, ModelMatrix, NablaComplex, OrderMatrix, SemigroupDegree,
    Verdict,
};

/// Every nonnegative vector of length `r` with entries summing to at most `total`.
fn monomials_up_to(r: usize, total: i64) -> Vec<ExponentVector> {
    fn go(r: usize, left: i64, prefix: &mut Vec<i64>, out: &mut Vec<ExponentVector>) {
        if prefix.len() == r {
            out.push(ExponentVector::new(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            go(r, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, total, &mut Vec::new(), &mut out);
    out
}

/// All `u` in the box `0 <= u_j <= min_i b_i / a_ij` with `A u = b`.
fn box_fiber(model: &ModelMatrix, b: &SemigroupDegree) -> BTreeSet<ExponentVector> {
    let r = model.cols();
    let bounds: Vec<i64> = (0..r)
        .map(|j| {
            (0..model.dim())
                .filter(|&i| model.entry(i, j) > 0)
                .map(|i| b.as_slice()[i] / model.entry(i, j))
                .min()
                .unwrap()
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut u = vec![0i64; r];
    loop {
        let v = ExponentVector::new(u.clone());
        if &model.degree_of(&v).unwrap() == b {
            out.insert(v);
        }
        let mut k = 0;
        while k < r && u[k] == bounds[k] {
            u[k] = 0;
            k += 1;
        }
        if k == r {
            return out;
        }
        u[k] += 1;
    }
}

/// Reduce `v` against an echelon basis, failing on a non-integral coefficient.
fn in_lattice(basis: &[Vec<i64>], v: &[i64]) -> bool {
    let mut rest = v.to_vec();
    for b in basis {
        let p = b.iter().position(|&x| x != 0).unwrap();
        if rest[p] % b[p] != 0 {
            return false;
        }
        let c = rest[p] / b[p];
        for (x, y) in rest.iter_mut().zip(b) {
            *x -= c * y;
        }
    }
    rest.iter().all(|&x| x == 0)
}

fn model_strategy(max_d: usize, max_r: usize, max_entry: i64) -> impl Strategy<Value = ModelMatrix> {
    (1..=max_d, 2..=max_r)
        .prop_flat_map(move |(d, r)| prop::collection::vec(prop::collection::vec(0..=max_entry, r), d))
        .prop_filter_map("zero column", |rows| ModelMatrix::new(rows).ok())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- lattice

#[test]
fn kernel_of_two_three_by_scanning_pairs() {
    let m = model(&[&[2, 3]]);
    let scanned: Vec<(i64, i64)> =
        (-9..=9).flat_map(|p| (-9..=9).map(move |q| (p, q))).filter(|&(p, q)| 2 * p + 3 * q == 0).collect();
    let basis = m.lattice_kernel().unwrap();
    assert_eq!(basis.rank(), 1);
    let b = &basis.vectors()[0];
    assert!(b == &vec![3, -2] || b == &vec![-3, 2]);
    for (p, q) in scanned {
        assert_eq!(p % 3, 0);
        assert!(in_lattice(basis.vectors(), &[p, q]));
    }
}

#[test]
fn kernel_contains_every_small_kernel_vector() {
    let mut rng = rng(1);
    for _ in 0..40 {
        let d = rng.gen_range(1..=2);
        let r = rng.gen_range(2..=4);
        let m = random_model(&mut rng, d, r, 3);
        let basis = m.lattice_kernel().unwrap();
        assert_eq!(basis.rank(), r - m.rank());
        for b in basis.vectors() {
            assert!(m.in_kernel(b).unwrap());
        }
        let span: Vec<i64> = (-3..=3).collect();
        let mut w = vec![-3i64; r];
        loop {
            if m.in_kernel(&w).unwrap() {
                assert!(in_lattice(basis.vectors(), &w), "{w:?} missing for {m}");
            }
            let mut k = 0;
            while k < r && w[k] == *span.last().unwrap() {
                w[k] = -3;
                k += 1;
            }
            if k == r {
                break;
            }
            w[k] += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lawrence_lift_is_a_valid_model(m in model_strategy(3, 5, 3)) {
        let lift = m.lawrence_lift();
        prop_assert_eq!(lift.dim(), m.dim() + m.cols());
        prop_assert_eq!(lift.cols(), 2 * m.cols());
        prop_assert!(ModelMatrix::new(lift.rows().to_vec()).is_ok());
        prop_assert_eq!(lift.lattice_kernel().unwrap().rank(), m.lattice_kernel().unwrap().rank());
        for b in m.lattice_kernel().unwrap().vectors() {
            let mut lifted = b.clone();
            lifted.extend(b.iter().map(|x| -x));
            prop_assert!(lift.in_kernel(&lifted).unwrap());
        }
    }

    #[test]
    fn grading_is_compatible(m in model_strategy(3, 5, 3), seed in any::<u64>()) {
        let mut rng = rng(seed);
        let u = ExponentVector::new((0..m.cols()).map(|_| rng.gen_range(0..4)).collect());
        let a = m.degree_of(&u).unwrap();
        prop_assert_eq!(u.weighted_degree(m.weights()), a.as_slice().iter().sum::<i64>());
    }

    #[test]
    fn primitive_binomials_have_disjoint_terms(m in model_strategy(2, 4, 3), seed in any::<u64>()) {
        let mut rng = rng(seed);
        let basis = m.lattice_kernel().unwrap();
        prop_assume!(basis.rank() > 0);
        let mut w = vec![0i64; m.cols()];
        for b in basis.vectors() {
            let c: i64 = rng.gen_range(-2..=2);
            for (x, y) in w.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        prop_assume!(w.iter().any(|&x| x != 0));
        let b = Binomial::from_vector(&m, &w).unwrap();
        let p = b.divide_by_gcd();
        prop_assert!(p.is_primitive());
        prop_assert!(!p.plus().shares_variable(p.minus()));
        prop_assert_eq!(p.to_vector(), b.to_vector());
    }
}

// ---------------------------------------------------------------- semigroup order

#[test]
fn semigroup_order_is_a_partial_order() {
    let mut rng = rng(2);
    for _ in 0..20 {
        let m = random_model(&mut rng, 2, 3, 3);
        let degrees: Vec<SemigroupDegree> = monomials_up_to(3, 2).iter().map(|u| m.degree_of(u).unwrap()).collect();
        for a in &degrees {
            assert!(m.degree_leq(a, a).unwrap());
            for b in &degrees {
                let ab = m.degree_leq(a, b).unwrap();
                let ba = m.degree_leq(b, a).unwrap();
                if ab && ba {
                    assert_eq!(a, b);
                }
                for c in &degrees {
                    if ab && m.degree_leq(b, c).unwrap() {
                        assert!(m.degree_leq(a, c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn semigroup_order_is_not_the_orthant_order() {
    let m = model(&[&[2, 3]]);
    assert!(!m.degree_leq(&deg(&[0]), &deg(&[1])).unwrap());
    assert!(!in_semigroup(&m, &deg(&[1])));
    assert!(m.degree_leq(&deg(&[2]), &deg(&[5])).unwrap());
}

// ---------------------------------------------------------------- fibers

#[test]
fn fiber_search_matches_box_enumeration() {
    let mut rng = rng(3);
    for _ in 0..60 {
        let d = rng.gen_range(1..=3);
        let r = rng.gen_range(2..=5);
        let m = random_model(&mut rng, d, r, 3);
        let u = ExponentVector::new((0..r).map(|_| rng.gen_range(0..3)).collect());
        let b = m.degree_of(&u).unwrap();
        let fiber = enumerate_fiber(&m, &b, DEFAULT_FIBER_CAP).unwrap();
        let listed: BTreeSet<ExponentVector> = fiber.monomials().iter().cloned().collect();
        assert_eq!(listed.len(), fiber.len(), "duplicates");
        assert_eq!(listed, box_fiber(&m, &b), "{m} at {b}");
        assert!(fiber.monomials().windows(2).all(|w| w[0] > w[1]));
        // A degree just off the semigroup.
        let mut off = b.as_slice().to_vec();
        off[0] += 1;
        let off = SemigroupDegree::new(off);
        assert_eq!(enumerate_fiber(&m, &off, DEFAULT_FIBER_CAP).unwrap().len(), box_fiber(&m, &off).len());
    }
}

#[test]
fn fibers_add() {
    let mut rng = rng(4);
    for _ in 0..20 {
        let m = random_model(&mut rng, 2, 4, 2);
        let a = m.degree_of(&ExponentVector::new((0..4).map(|_| rng.gen_range(0..2)).collect())).unwrap();
        let b = m.degree_of(&ExponentVector::new((0..4).map(|_| rng.gen_range(0..2)).collect())).unwrap();
        let sum = enumerate_fiber(&m, &a.checked_add(&b).unwrap(), DEFAULT_FIBER_CAP).unwrap();
        for u in enumerate_fiber(&m, &a, DEFAULT_FIBER_CAP).unwrap().monomials() {
            for v in enumerate_fiber(&m, &b, DEFAULT_FIBER_CAP).unwrap().monomials() {
                assert!(sum.contains(&u.mul(v)));
            }
        }
    }
}

#[test]
fn edges_gcds_and_supports_agree() {
    let mut rng = rng(5);
    for _ in 0..40 {
        let m = random_model(&mut rng, 2, 5, 3);
        let u = ExponentVector::new((0..5).map(|_| rng.gen_range(0..3)).collect());
        let nabla = NablaComplex::new(enumerate_fiber(&m, &m.degree_of(&u).unwrap(), DEFAULT_FIBER_CAP).unwrap());
        let ms = nabla.fiber().monomials();
        let mut seen = 0;
        for i in 0..ms.len() {
            for j in 0..ms.len() {
                if i == j {
                    continue;
                }
                let by_gcd = !ms[i].gcd(&ms[j]).is_one();
                let by_support = !ms[i].support().is_disjoint(&ms[j].support());
                assert_eq!(nabla.has_edge(i, j), by_gcd);
                assert_eq!(by_gcd, by_support);
                seen += usize::from(by_gcd && i < j);
            }
            assert_eq!(nabla.degree_of_vertex(i), (0..ms.len()).filter(|&j| j != i && nabla.has_edge(i, j)).count());
        }
        assert_eq!(nabla.edges().len(), seen);
        // Components partition the vertices and no edge crosses them.
        let comps = nabla.connected_components();
        let mut label = vec![usize::MAX; ms.len()];
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                assert_eq!(label[v], usize::MAX);
                label[v] = c;
            }
        }
        assert!(label.iter().all(|&l| l != usize::MAX));
        for (i, j) in nabla.edges() {
            assert_eq!(label[i], label[j]);
        }
    }
}

// ---------------------------------------------------------------- term orders

fn random_exponent(rng: &mut ChaCha8Rng, r: usize) -> ExponentVector {
    ExponentVector::new((0..r).map(|_| rng.gen_range(0..4)).collect())
}

#[test]
fn degrevlex_orders_are_term_orders() {
    let mut rng = rng(6);
    for _ in 0..200 {
        let r = rng.gen_range(1..=8);
        let rows = vec![(0..r).map(|_| rng.gen_range(1..=4)).collect::<Vec<i64>>()];
        let m = ModelMatrix::new(rows).unwrap();
        let i = rng.gen_range(1..=r);
        let order = OrderMatrix::degrevlex_lowest(i, m.weights()).unwrap();
        assert!(order.is_term_order());
        assert_eq!(order.lowest_var(), Some(i));
        assert!(OrderMatrix::validated(order.rows().to_vec(), r).is_ok());
    }
}

#[test]
fn degrevlex_compare_is_a_monomial_order() {
    let mut rng = rng(7);
    for _ in 0..30 {
        let m = random_model(&mut rng, 2, 5, 3);
        let i = rng.gen_range(1..=5);
        let order = OrderMatrix::degrevlex_lowest(i, m.weights()).unwrap();
        let one = ExponentVector::one(5);
        for _ in 0..60 {
            let (u, v, w) = (random_exponent(&mut rng, 5), random_exponent(&mut rng, 5), random_exponent(&mut rng, 5));
            let uv = order.compare(&u, &v);
            assert_eq!(uv == Ordering::Equal, u == v);
            assert_eq!(order.compare(&v, &u), uv.reverse());
            assert_eq!(order.compare(&u.mul(&w), &v.mul(&w)), uv);
            if uv == Ordering::Less && order.compare(&v, &w) == Ordering::Less {
                assert_eq!(order.compare(&u, &w), Ordering::Less);
            }
            if !u.is_one() {
                assert_eq!(order.compare(&one, &u), Ordering::Less);
            }
            // X_i is lowest: among equal weighted degrees more X_i is smaller.
            let (wu, wv) = (u.weighted_degree(m.weights()), v.weighted_degree(m.weights()));
            if wu == wv && u.as_slice()[i - 1] > v.as_slice()[i - 1] {
                assert_eq!(uv, Ordering::Less);
            }
            if wu < wv {
                assert_eq!(uv, Ordering::Less);
            }
        }
    }
}

// ---------------------------------------------------------------- Gröbner bases

/// `I = I_A` checked on every pair of monomials up to the given total degree.
fn assert_is_toric_basis(m: &ModelMatrix, gb: &GrobnerBasis, total: i64) {
    let monomials = monomials_up_to(m.cols(), total);
    let mut by_degree: BTreeMap<SemigroupDegree, Vec<&ExponentVector>> = BTreeMap::new();
    for u in &monomials {
        by_degree.entry(m.degree_of(u).unwrap()).or_default().push(u);
    }
    for u in &monomials {
        let a = m.degree_of(u).unwrap();
        for v in &monomials {
            let same = a == m.degree_of(v).unwrap();
            assert_eq!(gb.contains(u, v), same, "{u} vs {v} for {m}");
        }
    }
}

#[test]
fn toric_basis_decides_membership() {
    let mut rng = rng(8);
    for _ in 0..15 {
        let d = rng.gen_range(1..=2);
        let m = random_model(&mut rng, d, 4, 3);
        let an = Analysis::new(m.clone());
        let gb = an.toric_ideal_basis().unwrap();
        assert!(gb.is_reduced());
        assert_is_toric_basis(&m, gb, 4);
    }
}

#[test]
fn two_three_needs_no_saturation() {
    let m = model(&[&[2, 3]]);
    let gens = vec![Binomial::new(&m, ev(&[3, 0]), ev(&[0, 2])).unwrap()];
    let saturated = grobner::saturate_full(&gens, m.weights());
    assert_eq!(saturated, gens);
    let gb = grobner::reduced_basis(&saturated, &OrderMatrix::degrevlex_lowest(1, m.weights()).unwrap());
    let monomials = monomials_up_to(2, 6);
    for u in &monomials {
        for v in &monomials {
            let (a, b) = (m.degree_of(u).unwrap(), m.degree_of(v).unwrap());
            if a.as_slice()[0] <= 12 && b.as_slice()[0] <= 12 {
                assert_eq!(gb.contains(u, v), a == b);
            }
        }
    }
}

#[test]
fn twisted_cubic_lattice_ideal_is_not_toric_until_saturated() {
    let m = model(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
    let gens: Vec<Binomial> =
        [[1, -2, 1, 0], [0, 1, -2, 1]].iter().map(|w| Binomial::from_vector(&m, w).unwrap()).collect();
    let order = OrderMatrix::degrevlex_lowest(1, m.weights()).unwrap();
    let (u, v) = (ev(&[1, 0, 0, 1]), ev(&[0, 1, 1, 0]));
    assert_eq!(m.degree_of(&u).unwrap(), m.degree_of(&v).unwrap());
    assert!(!grobner::reduced_basis(&gens, &order).contains(&u, &v));
    let saturated = grobner::saturate_full(&gens, m.weights());
    let gb = grobner::reduced_basis(&saturated, &order);
    assert!(gb.contains(&u, &v));
    assert_eq!(gb.len(), 3);
    assert_is_toric_basis(&m, &gb, 4);
}

#[test]
fn reduced_basis_ignores_generator_order_and_chain_criterion() {
    let mut rng = rng(9);
    for _ in 0..20 {
        let m = random_model(&mut rng, 2, 4, 3);
        let an = Analysis::new(m.clone());
        let toric = an.toric_ideal_basis().unwrap();
        let mut gens: Vec<Binomial> = an.markov_basis().unwrap().binomials;
        gens.extend(toric.binomials());
        for i in 1..=m.cols() {
            let order = OrderMatrix::degrevlex_lowest(i, m.weights()).unwrap();
            let reference = grobner::reduced_basis(&gens, &order);
            for _ in 0..5 {
                gens.shuffle(&mut rng);
                assert_eq!(grobner::reduced_basis(&gens, &order), reference);
            }
            let without = grobner::buchberger_with(&gens, &order, BuchbergerOptions { chain_criterion: false });
            assert_eq!(grobner::reduce_gb(&without), reference);
            let with = grobner::buchberger_with(&gens, &order, BuchbergerOptions { chain_criterion: true });
            assert_eq!(grobner::reduce_gb(&with), reference);
        }
    }
}

#[test]
fn saturation_is_idempotent() {
    let mut rng = rng(10);
    for _ in 0..20 {
        let m = random_model(&mut rng, 2, 4, 3);
        let gens: Vec<Binomial> = m
            .lattice_kernel()
            .unwrap()
            .vectors()
            .iter()
            .map(|w| Binomial::from_vector(&m, w).unwrap())
            .collect();
        let once = grobner::saturate_full(&gens, m.weights());
        let twice = grobner::saturate_full(&once, m.weights());
        let order = OrderMatrix::degrevlex_lowest(1, m.weights()).unwrap();
        assert_eq!(
            grobner::reduced_basis(&once, &order).canonical_set(),
            grobner::reduced_basis(&twice, &order).canonical_set()
        );
    }
}

// ---------------------------------------------------------------- indispensability

fn random_analyses(seed: u64, count: usize, d: usize, r: usize) -> Vec<Analysis> {
    let mut rng = rng(seed);
    (0..count).map(|_| Analysis::new(random_model(&mut rng, d, r, 3))).collect()
}

#[test]
fn both_methods_and_the_capturing_degree_agree() {
    for an in random_analyses(11, 25, 2, 4) {
        let comb = an.indispensable_binomials_combinatorial().unwrap();
        assert_eq!(comb, an.indispensable_binomials_grobner().unwrap(), "{}", an.model());
        let degrees = an.minimal_degrees().unwrap();
        if degrees.is_empty() {
            continue;
        }
        let total = degrees.iter().skip(1).fold(degrees[0].degree.clone(), |acc, r| acc.checked_add(&r.degree).unwrap());
        match an.nabla(&total) {
            Ok(nabla) if nabla.num_vertices() <= 5000 => {
                assert_eq!(indispensable_below_in(&nabla).unwrap(), comb, "{} at {total}", an.model())
            }
            _ => {}
        }
    }
}

#[test]
fn indispensables_lie_in_every_generating_set() {
    for an in random_analyses(12, 25, 2, 4) {
        let comb = an.indispensable_binomials_combinatorial().unwrap();
        let markov = an.markov_basis().unwrap().canonical_set();
        assert!(comb.is_subset(&markov));
        for i in 1..=an.model().cols() {
            assert!(comb.is_subset(&an.grobner_lowest(i).unwrap().canonical_set()));
        }
        let monomials = an.indispensable_monomials().unwrap();
        for b in &comb {
            assert!(monomials.contains(b.plus()) && monomials.contains(b.minus()));
        }
        if !an.toric_ideal_basis().unwrap().is_empty() {
            assert!(!monomials.is_empty());
        }
        if all_orders_reduced_gb_check(&an.markov_basis().unwrap().binomials, an.model()) {
            assert_eq!(an.uniqueness_verdict().unwrap(), Verdict::Unique);
        }
        match an.uniqueness_verdict().unwrap() {
            Verdict::Unique => assert_eq!(comb, markov),
            Verdict::NotUnique { witness } => {
                let rep = an.minimal_degrees().unwrap().into_iter().find(|r| r.degree == witness).unwrap();
                assert!(!rep.indispensable);
            }
        }
    }
}

#[test]
fn markov_counts_do_not_depend_on_representatives() {
    for an in random_analyses(13, 20, 2, 4) {
        let markov = an.markov_basis().unwrap();
        let mut alternative = Vec::new();
        let mut counts: BTreeMap<SemigroupDegree, usize> = BTreeMap::new();
        for rep in an.minimal_degrees().unwrap() {
            let nabla = an.nabla(&rep.degree).unwrap();
            let ms = nabla.fiber().monomials();
            // Largest monomial of each component, joined in a path.
            let reps: Vec<&ExponentVector> = nabla.connected_components().iter().map(|c| &ms[c[0]]).collect();
            for pair in reps.windows(2) {
                alternative.push(Binomial::new(an.model(), pair[0].clone(), pair[1].clone()).unwrap());
            }
            counts.insert(rep.degree.clone(), reps.len() - 1);
        }
        assert_eq!(markov.degree_counts(), counts);
        assert_eq!(alternative.len(), markov.binomials.len());
        let order = an.toric_ideal_basis().unwrap().order().clone();
        assert_eq!(
            grobner::reduced_basis(&alternative, &order).canonical_set(),
            an.toric_ideal_basis().unwrap().canonical_set()
        );
    }
}

#[test]
fn markov_basis_elements_are_toric() {
    for an in random_analyses(14, 20, 3, 5) {
        for b in an.markov_basis().unwrap().binomials {
            let (p, q) = (an.model().degree_of(b.plus()).unwrap(), an.model().degree_of(b.minus()).unwrap());
            assert_eq!(p, q);
        }
    }
}

/// Monomials occurring as a term of every minimal generating set, found by
/// enumerating, at each minimal degree, every set of `c - 1` fiber pairs
/// that joins the `c` components.
fn monomials_in_every_generating_set(an: &Analysis) -> BTreeSet<ExponentVector> {
    let mut out = BTreeSet::new();
    for rep in an.minimal_degrees().unwrap() {
        let nabla = an.nabla(&rep.degree).unwrap();
        let ms = nabla.fiber().monomials();
        let n = ms.len();
        let mut label = vec![0; n];
        for (c, comp) in nabla.connected_components().iter().enumerate() {
            for &v in comp {
                label[v] = c;
            }
        }
        let c = rep.component_count;
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| label[i] != label[j]).collect();
        let mut common: Option<BTreeSet<usize>> = None;
        for mask in 0u64..(1 << pairs.len()) {
            if mask.count_ones() as usize != c - 1 {
                continue;
            }
            let chosen: Vec<(usize, usize)> =
                (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| pairs[k]).collect();
            let mut parent: Vec<usize> = (0..c).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                if p[x] == x { x } else { let r = find(p, p[x]); p[x] = r; r }
            }
            let mut joins = 0;
            for &(i, j) in &chosen {
                let (a, b) = (find(&mut parent, label[i]), find(&mut parent, label[j]));
                if a != b {
                    parent[a] = b;
                    joins += 1;
                }
            }
            if joins != c - 1 {
                continue;
            }
            let terms: BTreeSet<usize> = chosen.iter().flat_map(|&(i, j)| [i, j]).collect();
            common = Some(match common {
                None => terms,
                Some(prev) => prev.intersection(&terms).copied().collect(),
            });
        }
        out.extend(common.unwrap_or_default().into_iter().map(|i| ms[i].clone()));
    }
    out
}

#[test]
fn indispensable_monomials_of_one_one_one_by_spanning_trees() {
    let an = Analysis::new(model(&[&[1, 1, 1]]));
    let expected: BTreeSet<ExponentVector> = [ev(&[1, 0, 0]), ev(&[0, 1, 0]), ev(&[0, 0, 1])].into();
    assert_eq!(monomials_in_every_generating_set(&an), expected);
    assert_eq!(an.indispensable_monomials().unwrap(), expected);
    assert_eq!(an.indispensable_monomials_at(&deg(&[1])).unwrap(), expected);
}

#[test]
fn indispensable_monomials_by_spanning_trees() {
    let mut checked = 0;
    for an in random_analyses(15, 60, 2, 4) {
        let small = an
            .minimal_degrees()
            .unwrap()
            .iter()
            .all(|r| r.fiber_size <= 6);
        if !small {
            continue;
        }
        assert_eq!(an.indispensable_monomials().unwrap(), monomials_in_every_generating_set(&an), "{}", an.model());
        checked += 1;
    }
    assert!(checked >= 10, "only {checked} models were small enough");
}
