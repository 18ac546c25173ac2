//! Named families of 0/1-polytopes and exhaustive classification.

mod classify;
mod cut;
mod family;
mod sum;

use crate::error::{guard, Error, Result};
use crate::polytope::{coord_bit, VertexSet01, Word, MAX_DIM};

pub use classify::{
    classify, key_to_vertex_set, simplicial_2d_search, Simplicial2dClass, CLASSIFY_MAX_DIM,
};
pub use cut::{
    correlation_polytope, cut_polytope, gamma, gamma_inverse, gamma_inverse_point, gamma_point,
    metric_polytope, CutVertexIndexing, MetricSystem,
};
pub use family::{family_fd, family_fd_free_positions};
pub use sum::centered_sum;

/// Largest dimension for which families with `2^d`-ish vertex counts are
/// materialised.
pub const MAX_ENUM_DIM: usize = 24;

fn check_dim(what: &str, d: usize, min: usize) -> Result<()> {
    if d < min || d > MAX_DIM {
        return Err(Error::InvalidInput(format!(
            "{what}: dimension {d} outside {min}..={MAX_DIM}"
        )));
    }
    Ok(())
}

fn unit(d: usize, i: usize) -> Word {
    coord_bit(d, i)
}

fn ones(d: usize) -> Word {
    if d == MAX_DIM {
        Word::MAX
    } else {
        (1 << d) - 1
    }
}

/// All `2^d` vertices of the unit cube.
pub fn cube(d: usize) -> Result<VertexSet01> {
    check_dim("cube", d, 1)?;
    guard("cube dimension", d as u64, MAX_ENUM_DIM as u64)?;
    VertexSet01::from_words(d, 0..1 << d)
}

/// `Δ_{n-1} = conv{e_1, .., e_n}` in `ℝ^n`.
pub fn simplex_standard(n: usize) -> Result<VertexSet01> {
    check_dim("standard simplex", n, 1)?;
    VertexSet01::from_words(n, (0..n).map(|i| unit(n, i)))
}

/// `Δ'_n = conv{0, e_1, .., e_n}` in `ℝ^n`.
pub fn simplex_corner(n: usize) -> Result<VertexSet01> {
    check_dim("corner simplex", n, 1)?;
    VertexSet01::from_words(n, std::iter::once(0).chain((0..n).map(|i| unit(n, i))))
}

/// `conv{e_1, .., e_d, 1-e_1, .., 1-e_d}`; needs `d ≥ 3` to have `2d`
/// distinct vertices.
pub fn cross_polytope(d: usize) -> Result<VertexSet01> {
    check_dim("cross polytope", d, 3)?;
    let units = (0..d).map(|i| unit(d, i));
    let co = (0..d).map(|i| ones(d) ^ unit(d, i));
    VertexSet01::from_words(d, units.chain(co))
}

/// All 0/1-vectors of even weight.
pub fn half_cube(d: usize) -> Result<VertexSet01> {
    check_dim("half cube", d, 1)?;
    guard("half cube dimension", d as u64, MAX_ENUM_DIM as u64)?;
    VertexSet01::from_words(d, (0..1 << d).filter(|w: &Word| w.count_ones() % 2 == 0))
}
