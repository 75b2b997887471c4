//! Minimal degrees, Markov bases and indispensability.
//!
//! Two independent routes decide which binomials are indispensable: the
//! combinatorial one reads it off the Eliahou complexes of the minimal
//! degrees, the algebraic one intersects the reduced Gröbner bases for the
//! degree reverse lexicographic orders with each variable lowest in turn.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fiber::{enumerate_fiber, Fiber, NablaComplex, DEFAULT_FIBER_CAP};
use crate::grobner::{reduced_basis, saturate_full, GrobnerBasis};
use crate::monomial::{graded_cmp, Binomial, ExponentVector};
use crate::order::OrderMatrix;
use crate::semigroup::{ModelMatrix, SemigroupDegree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest fiber that may be materialised.
    pub fiber_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { fiber_cap: DEFAULT_FIBER_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: SemigroupDegree,
    pub fiber_size: usize,
    pub component_count: usize,
    pub minimal: bool,
    pub indispensable: bool,
    pub quasi_indispensable: bool,
}

impl DegreeReport {
    pub fn from_complex(nabla: &NablaComplex) -> Self {
        let fiber_size = nabla.num_vertices();
        let component_count = nabla.component_count();
        let minimal = component_count >= 2;
        DegreeReport {
            degree: nabla.fiber().degree().clone(),
            fiber_size,
            component_count,
            minimal,
            indispensable: fiber_size == 2 && component_count == 2,
            quasi_indispensable: fiber_size >= 2 && !nabla.isolated_vertices().is_empty(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovBasis {
    pub binomials: Vec<Binomial>,
    /// Degree of each binomial, in the same order.
    pub degrees: Vec<SemigroupDegree>,
}

impl MarkovBasis {
    pub fn canonical_set(&self) -> BTreeSet<Binomial> {
        self.binomials.iter().cloned().collect()
    }

    /// Number of generators per degree.
    pub fn degree_counts(&self) -> BTreeMap<SemigroupDegree, usize> {
        let mut counts = BTreeMap::new();
        for d in &self.degrees {
            *counts.entry(d.clone()).or_insert(0) += 1;
        }
        counts
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Unique,
    /// A minimal degree that is not indispensable.
    NotUnique { witness: SemigroupDegree },
}

impl Verdict {
    pub fn is_unique(&self) -> bool {
        matches!(self, Verdict::Unique)
    }
}

/// Cached analysis of one model. Expensive intermediate results (the toric
/// basis and the minimal-degree reports) are computed once per instance.
#[derive(Debug)]
pub struct Analysis {
    model: ModelMatrix,
    config: Config,
    toric: OnceLock<GrobnerBasis>,
    minimal: OnceLock<Vec<(DegreeReport, NablaComplex)>>,
}

impl Analysis {
    pub fn new(model: ModelMatrix) -> Self {
        Self::with_config(model, Config::default())
    }

    pub fn with_config(model: ModelMatrix, config: Config) -> Self {
        Analysis { model, config, toric: OnceLock::new(), minimal: OnceLock::new() }
    }

    pub fn model(&self) -> &ModelMatrix {
        &self.model
    }

    pub fn order_lowest(&self, i: usize) -> Result<OrderMatrix> {
        OrderMatrix::degrevlex_lowest(i, self.model.weights())
    }

    pub fn fiber(&self, degree: &SemigroupDegree) -> Result<Fiber> {
        enumerate_fiber(&self.model, degree, self.config.fiber_cap)
    }

    pub fn nabla(&self, degree: &SemigroupDegree) -> Result<NablaComplex> {
        self.fiber(degree).map(NablaComplex::new)
    }

    /// Reduced Gröbner basis of the toric ideal with `X_1` lowest, from a
    /// kernel lattice basis saturated by every variable.
    pub fn toric_ideal_basis(&self) -> Result<&GrobnerBasis> {
        if let Some(gb) = self.toric.get() {
            return Ok(gb);
        }
        let kernel = self.model.lattice_kernel()?;
        let gens = kernel
            .vectors()
            .iter()
            .map(|w| Binomial::from_vector(&self.model, w))
            .collect::<Result<Vec<_>>>()?;
        let saturated = saturate_full(&gens, self.model.weights());
        let gb = reduced_basis(&saturated, &self.order_lowest(1)?);
        for b in gb.binomials() {
            debug_assert_eq!(self.model.degree_of(b.plus())?, self.model.degree_of(b.minus())?);
        }
        Ok(self.toric.get_or_init(|| gb))
    }

    /// Reduced Gröbner basis of the toric ideal with `X_i` lowest (1-based).
    pub fn grobner_lowest(&self, i: usize) -> Result<GrobnerBasis> {
        let base = self.toric_ideal_basis()?;
        let order = self.order_lowest(i)?;
        if &order == base.order() {
            return Ok(base.clone());
        }
        Ok(reduced_basis(&base.binomials(), &order))
    }

    /// Degrees of the toric basis elements. A homogeneous generating set has
    /// at least `dim Tor_1(k, k[A])_a` elements of each degree `a`, so this
    /// set contains every minimal degree.
    pub fn candidate_degrees(&self) -> Result<Vec<SemigroupDegree>> {
        let gb = self.toric_ideal_basis()?;
        let mut degrees: Vec<SemigroupDegree> = gb
            .elements()
            .iter()
            .map(|g| self.model.degree_of(&g.lead))
            .collect::<Result<BTreeSet<_>>>()?
            .into_iter()
            .collect();
        let weight = |d: &SemigroupDegree| -> i64 {
            // Every column sum is the weight, so `sum(a)` is the weighted degree.
            d.as_slice().iter().sum()
        };
        degrees.sort_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)));
        Ok(degrees)
    }

    fn minimal_complexes(&self) -> Result<&[(DegreeReport, NablaComplex)]> {
        if let Some(m) = self.minimal.get() {
            return Ok(m);
        }
        let candidates = self.candidate_degrees()?;
        let analysed = candidates
            .par_iter()
            .map(|d| {
                let nabla = self.nabla(d)?;
                Ok((DegreeReport::from_complex(&nabla), nabla))
            })
            .collect::<Result<Vec<_>>>()?;
        let minimal = analysed.into_iter().filter(|(rep, _)| rep.minimal).collect();
        Ok(self.minimal.get_or_init(|| minimal))
    }

    /// Reports for the degrees whose complex is disconnected.
    pub fn minimal_degrees(&self) -> Result<Vec<DegreeReport>> {
        Ok(self.minimal_complexes()?.iter().map(|(rep, _)| rep.clone()).collect())
    }

    /// One minimal binomial generating set. At each minimal degree the
    /// smallest monomial of every component is joined to the smallest
    /// monomial of the fiber.
    pub fn markov_basis(&self) -> Result<MarkovBasis> {
        let mut binomials = Vec::new();
        let mut degrees = Vec::new();
        for (rep, nabla) in self.minimal_complexes()? {
            let monomials = nabla.fiber().monomials();
            // Smallest = last in the fiber's descending order.
            let mut reps: Vec<&ExponentVector> = nabla
                .connected_components()
                .iter()
                .map(|c| &monomials[*c.iter().max().expect("components are nonempty")])
                .collect();
            reps.sort();
            let (root, others) = reps.split_first().expect("minimal degrees have two components");
            for other in others {
                binomials.push(Binomial::from_terms((*other).clone(), (*root).clone()));
                degrees.push(rep.degree.clone());
            }
            debug_assert_eq!(others.len(), rep.component_count - 1);
        }
        self.check_generates(&binomials)?;
        Ok(MarkovBasis { binomials, degrees })
    }

    fn check_generates(&self, gens: &[Binomial]) -> Result<()> {
        let toric = self.toric_ideal_basis()?;
        if toric.is_empty() && gens.is_empty() {
            return Ok(());
        }
        for g in gens {
            if !toric.contains_binomial(g) {
                return Err(Error::GenerationCheckFailed(format!("{g} is not in the toric ideal")));
            }
        }
        let regenerated = reduced_basis(gens, toric.order());
        if regenerated.canonical_set() != toric.canonical_set() {
            return Err(Error::GenerationCheckFailed("Markov basis does not generate the toric ideal".into()));
        }
        Ok(())
    }

    /// Binomials of the minimal degrees whose fiber is exactly two coprime
    /// monomials.
    pub fn indispensable_binomials_combinatorial(&self) -> Result<BTreeSet<Binomial>> {
        Ok(self
            .minimal_complexes()?
            .iter()
            .filter(|(rep, _)| rep.indispensable)
            .map(|(_, nabla)| {
                let m = nabla.fiber().monomials();
                Binomial::from_terms(m[0].clone(), m[1].clone())
            })
            .collect())
    }

    /// Indispensable binomials of every degree below `a`, read off the
    /// 1-faces of the complex at `a` whose gcd divides no third monomial,
    /// together with `a`'s own binomial if `a` is indispensable.
    pub fn indispensable_below(&self, a: &SemigroupDegree) -> Result<BTreeSet<Binomial>> {
        let nabla = self.nabla(a)?;
        indispensable_below_in(&nabla)
    }

    /// Binomials lying, up to sign, in the reduced basis for every order
    /// with some variable lowest.
    pub fn indispensable_binomials_grobner(&self) -> Result<BTreeSet<Binomial>> {
        let base = self.toric_ideal_basis()?.canonical_set();
        let r = self.model.cols();
        let sets = (2..=r)
            .into_par_iter()
            .map(|i| self.grobner_lowest(i).map(|gb| gb.canonical_set()))
            .collect::<Result<Vec<_>>>()?;
        Ok(sets.iter().fold(base, |acc, s| acc.intersection(s).cloned().collect()))
    }

    /// Isolated vertices of the complexes of the minimal degrees.
    pub fn indispensable_monomials(&self) -> Result<BTreeSet<ExponentVector>> {
        Ok(self
            .minimal_complexes()?
            .iter()
            .filter(|(rep, _)| rep.fiber_size >= 2)
            .flat_map(|(_, nabla)| nabla.isolated_vertices())
            .collect())
    }

    pub fn indispensable_monomials_at(&self, a: &SemigroupDegree) -> Result<BTreeSet<ExponentVector>> {
        let fiber = self.fiber(a)?;
        indispensable_monomials_in(&fiber)
    }

    pub fn uniqueness_verdict(&self) -> Result<Verdict> {
        let markov = self.markov_basis()?.canonical_set();
        let indispensable = self.indispensable_binomials_combinatorial()?;
        if markov == indispensable {
            return Ok(Verdict::Unique);
        }
        let witness = self
            .minimal_complexes()?
            .iter()
            .find(|(rep, _)| !rep.indispensable)
            .map(|(rep, _)| rep.degree.clone())
            .ok_or_else(|| Error::GenerationCheckFailed("no witness for non-uniqueness".into()))?;
        Ok(Verdict::NotUnique { witness })
    }
}

/// See [`Analysis::indispensable_below`].
pub fn indispensable_below_in(nabla: &NablaComplex) -> Result<BTreeSet<Binomial>> {
    let monomials = nabla.fiber().monomials();
    if monomials.is_empty() {
        return Err(Error::EmptyFiber);
    }
    let mut out = BTreeSet::new();
    if monomials.len() == 2 && !nabla.has_edge(0, 1) {
        out.insert(Binomial::from_terms(monomials[0].clone(), monomials[1].clone()));
    }
    for (i, j) in nabla.edges() {
        let g = monomials[i].gcd(&monomials[j]);
        let shared = monomials
            .iter()
            .enumerate()
            .any(|(k, w)| k != i && k != j && g.divides(w));
        if !shared {
            out.insert(Binomial::from_terms(monomials[i].div_unchecked(&g), monomials[j].div_unchecked(&g)));
        }
    }
    Ok(out)
}

/// For each `u` in the fiber and each divisibility-maximal element `g` of
/// `{ gcd(u, w) : w in fiber, w != u }`, the monomial `u / g`.
pub fn indispensable_monomials_in(fiber: &Fiber) -> Result<BTreeSet<ExponentVector>> {
    let monomials = fiber.monomials();
    if monomials.is_empty() {
        return Err(Error::EmptyFiber);
    }
    let mut out = BTreeSet::new();
    for (i, u) in monomials.iter().enumerate() {
        let gcds: BTreeSet<ExponentVector> = monomials
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| u.gcd(w))
            .collect();
        for g in &gcds {
            let maximal = !gcds.iter().any(|h| h != g && g.divides(h));
            if maximal {
                out.insert(u.div_unchecked(g));
            }
        }
    }
    Ok(out)
}

/// Uniqueness of the minimal generating set of the Lawrence lifting.
pub fn lawrence_uniqueness(model: &ModelMatrix, config: Config) -> Result<Verdict> {
    Analysis::with_config(model.lawrence_lift(), config).uniqueness_verdict()
}

/// Whether `gens` is already the reduced Gröbner basis of the ideal it
/// generates for every order with some variable lowest.
pub fn all_orders_reduced_gb_check(gens: &[Binomial], model: &ModelMatrix) -> bool {
    let wanted: BTreeSet<Binomial> = gens.iter().cloned().collect();
    if wanted.len() != gens.len() {
        return false;
    }
    (1..=model.cols()).into_par_iter().all(|i| {
        let order = OrderMatrix::degrevlex_lowest(i, model.weights()).expect("index in range");
        reduced_basis(gens, &order).canonical_set() == wanted
    })
}

/// Binomials sorted for output, by descending graded lex.
pub fn sorted_for_display(model: &ModelMatrix, set: impl IntoIterator<Item = Binomial>) -> Vec<Binomial> {
    let mut v: Vec<Binomial> = set.into_iter().collect();
    crate::monomial::sort_for_display(&mut v, model.weights());
    v
}

pub fn monomials_for_display(model: &ModelMatrix, set: impl IntoIterator<Item = ExponentVector>) -> Vec<ExponentVector> {
    let mut v: Vec<ExponentVector> = set.into_iter().collect();
    v.sort_by(|a, b| graded_cmp(model.weights(), b, a));
    v
}
