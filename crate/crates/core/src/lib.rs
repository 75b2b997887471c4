//! Toric ideals of nonnegative integer matrices: fibers, Eliahou complexes,
//! minimal Markov bases and indispensable binomials and monomials.
//!
//! Indispensable binomials are computed two ways, from the complexes of the
//! minimal degrees and from the reduced Gröbner bases with each variable
//! lowest, and the two answers are expected to agree.

pub mod error;
pub mod fiber;
pub mod grobner;
pub mod indispensable;
mod lattice;
pub mod monomial;
pub mod order;
pub mod semigroup;

pub use error::{Error, Result};
pub use fiber::{enumerate_fiber, Fiber, NablaComplex};
pub use grobner::{GrobnerBasis, OrientedBinomial};
pub use indispensable::{Analysis, Config, DegreeReport, MarkovBasis, Verdict};
pub use monomial::{Binomial, ExponentVector};
pub use order::OrderMatrix;
pub use semigroup::{GradingVector, LatticeBasis, ModelMatrix, SemigroupDegree};
