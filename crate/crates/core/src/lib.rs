//! Particle bases of principal subspaces of level one `sl(l+1)^` modules:
//! admissible monomials, characters, straightening and a lattice-VOA oracle.

pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod qseries;
pub mod straightening;

pub use combinatorics::{Factor, Monomial, Setup, WeightVector};
pub use error::{Error, Result};
pub use qseries::QSeries;
pub use straightening::LinComb;
