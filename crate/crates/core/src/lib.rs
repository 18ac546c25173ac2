//! Exact-arithmetic toolkit for 0/1-polytopes.
//!
//! All geometry is carried out over arbitrary-precision integers and
//! rationals. The crate is organised bottom-up:
//!
//! - [`exact`]: big scalars, dense matrices, fraction-free determinants and an
//!   exact simplex solver.
//! - [`polytope`]: vertex sets of 0/1-polytopes, the symmetry group of the
//!   cube, canonical forms and membership predicates.
//! - [`hull`]: vertex-to-facet conversion (Fourier–Motzkin with redundancy
//!   filtering and an independent span oracle), faces, graphs and volumes.
//! - [`generators`]: named families (cubes, cross polytopes, cut/correlation
//!   polytopes, sums, ...) and exhaustive classification.
//! - [`randlab`]: exact and Monte-Carlo statistics of random 0/1-matrices.
//! - [`extremal`]: the Williamson bijection, the Alon–Vũ ill-conditioned
//!   matrices and the resulting huge-coefficient and flat simplices.
//! - [`pm_io`]: reader/writer for the polymake-style `.poly` section format.

pub mod error;
pub mod exact;
pub mod extremal;
pub mod generators;
pub mod hull;
pub mod pm_io;
pub mod polytope;
pub mod randlab;

pub use error::{Error, Result};
pub use exact::{Int, Rat};
pub use hull::{HRep, Inequality};
pub use polytope::VertexSet01;
