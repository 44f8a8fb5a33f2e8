//! Standard bases of polynomial ideals with respect to Newton orderings —
//! total orderings refining the filtration by a Newton polyhedron, which in
//! general are not semigroup orderings — together with zero-dimensional
//! standard-basis conversion between local orderings by linear algebra, and
//! their application to Milnor numbers and singularity spectra of isolated
//! hypersurface singularities with nondegenerate principal part.
//!
//! All arithmetic is exact over the rationals.

pub mod arith;
pub mod cones;
pub mod convert;
pub mod engine;
pub mod error;
pub mod oracles;
pub mod orderings;
pub mod polytope;
pub mod spectrum;

pub use arith::{ExpVec, HPolynomial, Polynomial, Rat, Term};
pub use convert::{ConversionResult, EliminationMatrix, StaircaseDecomposition};
pub use engine::{BasisCandidate, EngineBudget, LeadMonomialSet};
pub use error::{Error, Result};
pub use orderings::{LinearForm, NewtonOrdering, NormalityCertificate, OrderingClass, SemigroupOrdering};
pub use polytope::{Facet, NewtonPolyhedron, Nondegeneracy};
pub use spectrum::{JacobianIdeal, SpectrumOptions, SpectrumResult};
