//! The Williamson 0/1 ↔ ±1 bijection, the Alon–Vũ ill-conditioned
//! matrices, and the huge-coefficient and flat simplices built from them.

mod alon_vu;
mod chi;
mod simplices;
mod williamson;

pub use alon_vu::{alon_vu, subset_order, AlonVuBundle, SubsetOrder, ALON_VU_MAX_M};
pub use chi::{chi, chi_witness, diamond, orient_chi_witness, ChiWitness, Corner};
pub use simplices::{
    flat_simplex_distance_sq, huge_coefficient_simplex, triang_lower_bound, verify_huge_facet,
    HugeCoefficientSimplex, TRIANG_SEARCH_MAX,
};
pub use williamson::{canonicalize_pm1, williamson, williamson_inverse};

use crate::error::Result;
use crate::exact::IntMat;

/// The 0/1-matrix of order `n − 1` attached to an Alon–Vũ ±1-matrix by
/// sign normalization and the inverse Williamson map.
pub fn alon_vu_01(bundle: &AlonVuBundle) -> Result<IntMat> {
    williamson_inverse(&canonicalize_pm1(&bundle.a)?)
}
