use fixedbitset::FixedBitSet;

use crate::error::{guard, Error, Result};
use crate::hull::{combinatorial_key, incidence, vrep_to_hrep};
use crate::polytope::{affine_dim, canonical_key, for_each_image, CanonicalKey, VertexSet01, Word};

/// Largest dimension accepted by [`classify`].
pub const CLASSIFY_MAX_DIM: usize = 4;

/// Vertex set encoded by a canonical key.
pub fn key_to_vertex_set(key: &CanonicalKey) -> Result<VertexSet01> {
    let n = 1usize << key.dim;
    let words = (0..n)
        .filter(|&p| key.bits >> (n - 1 - p) & 1 == 1)
        .map(|p| p as Word);
    VertexSet01::from_words(key.dim, words.collect::<Vec<_>>())
}

/// Canonical keys of all full-dimensional 0/1-polytopes in `ℝ^d` up to
/// 0/1-equivalence, in increasing key order.
///
/// Every vertex subset of the cube is visited once: the first unvisited
/// subset of an orbit is expanded to the whole orbit, which is marked, and
/// the orbit minimum is its canonical key.
pub fn classify(d: usize) -> Result<Vec<CanonicalKey>> {
    if d == 0 {
        return Err(Error::InvalidInput("classification needs d >= 1".into()));
    }
    guard("classification dimension", d as u64, CLASSIFY_MAX_DIM as u64)?;
    let n = 1usize << d;
    let total = 1usize << n;
    let mut visited = FixedBitSet::with_capacity(total);
    let mut keys = Vec::new();
    for bits in 1..total {
        if visited.contains(bits) {
            continue;
        }
        let mut min = u64::MAX;
        for_each_image(d, bits as u64, |img| {
            visited.insert(img as usize);
            min = min.min(img);
        });
        let key = CanonicalKey { dim: d, bits: min };
        if affine_dim(&key_to_vertex_set(&key)?) == d {
            keys.push(key);
        }
    }
    keys.sort();
    Ok(keys)
}

/// A simplicial `d`-polytope with `2d` vertices found by
/// [`simplicial_2d_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplicial2dClass {
    pub key: CanonicalKey,
    pub facets: usize,
    /// Combinatorially equivalent to the cross polytope.
    pub combinatorial_cross: bool,
    /// The vertex set is invariant under `x ↦ 1 − x`.
    pub centrally_symmetric: bool,
    /// 0/1-equivalent to `conv{e_i, 1 − e_i}`.
    pub standard_cross: bool,
}

/// Every class of [`classify`] with `2d` vertices whose facets are all
/// simplices, compared with the cross polytope (`3 ≤ d ≤ 4`). Findings are
/// reported as computed; nothing is assumed about the answer.
pub fn simplicial_2d_search(d: usize) -> Result<Vec<Simplicial2dClass>> {
    if d < 3 {
        return Err(Error::InvalidInput("the search needs d >= 3".into()));
    }
    let cross_p = super::cross_polytope(d)?;
    let cross = canonical_key(&cross_p)?;
    let cross_comb = combinatorial_key(&incidence(&cross_p, &vrep_to_hrep(&cross_p)?))?;
    let all = (1 << d) - 1;
    let mut out = Vec::new();
    for key in classify(d)? {
        if key.bits.count_ones() as usize != 2 * d {
            continue;
        }
        let p = key_to_vertex_set(&key)?;
        let h = vrep_to_hrep(&p)?;
        let inc = incidence(&p, &h);
        if inc.facet_vertices.iter().all(|f| f.count_ones(..) == d) {
            out.push(Simplicial2dClass {
                key,
                facets: h.facets.len(),
                combinatorial_cross: combinatorial_key(&inc)? == cross_comb,
                centrally_symmetric: p.words().iter().all(|&w| p.contains_word(w ^ all)),
                standard_cross: key == cross,
            });
        }
    }
    Ok(out)
}
