use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::IncidenceMatrix;
use crate::error::{guard, Error, Result};
use crate::exact::binomial;
use crate::polytope::VertexSet01;

/// Default bound on the number of vertex subsets tested by [`neighborliness`].
pub const DEFAULT_SUBSET_LIMIT: u64 = 5_000_000;
/// Default bound on the number of faces generated by [`simpliciality`].
pub const DEFAULT_FACE_LIMIT: u64 = 500_000;

/// Vertices on every facet containing `s`; all vertices if no facet does.
/// `s` is (the vertex set of) a face iff the result equals `s`.
pub fn smallest_face(inc: &IncidenceMatrix, s: &FixedBitSet) -> FixedBitSet {
    let n = inc.n_vertices();
    let mut common = FixedBitSet::with_capacity(inc.n_facets());
    common.insert_range(..);
    for v in s.ones() {
        common.intersect_with(&inc.vertex_facets[v]);
    }
    let mut face = FixedBitSet::with_capacity(n);
    face.insert_range(..);
    for f in common.ones() {
        face.intersect_with(&inc.facet_vertices[f]);
    }
    face
}

fn is_face(inc: &IncidenceMatrix, s: &FixedBitSet) -> bool {
    smallest_face(inc, s) == *s
}

/// Largest `k` such that every set of at most `k` vertices is a face.
/// A simplex returns its vertex count.
pub fn neighborliness(inc: &IncidenceMatrix, limit: u64) -> Result<usize> {
    let n = inc.n_vertices();
    let mut budget = limit;
    for k in 1..n {
        let count = binomial(n as u64, k as u64);
        guard("neighborliness subsets", count, budget)?;
        budget -= count;
        let mut subset: Vec<usize> = (0..k).collect();
        let mut set = FixedBitSet::with_capacity(n);
        loop {
            set.clear();
            subset.iter().for_each(|&v| set.insert(v));
            if !is_face(inc, &set) {
                return Ok(k - 1);
            }
            let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
                break;
            };
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
    Ok(n)
}

/// Largest `s` such that every face of dimension `s` is a simplex. Returns
/// `dim` for a simplex and `dim - 1` for a simplicial polytope.
pub fn simpliciality(p: &VertexSet01, inc: &IncidenceMatrix, limit: u64) -> Result<usize> {
    if inc.facet_vertices.len() != inc.n_facets() || p.len() != inc.n_vertices() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            found: inc.n_vertices(),
        });
    }
    let dim = p.subset_affine_dim(&p.all_indices());
    if p.len() == dim + 1 {
        return Ok(dim);
    }
    // proper faces are the nonempty intersections of facets
    let mut faces: HashSet<FixedBitSet> = HashSet::new();
    let mut queue: Vec<FixedBitSet> = Vec::new();
    for f in &inc.facet_vertices {
        if faces.insert(f.clone()) {
            queue.push(f.clone());
        }
    }
    let mut min_bad = dim;
    while let Some(face) = queue.pop() {
        let fd = p.subset_affine_dim(&face);
        if face.count_ones(..) != fd + 1 {
            min_bad = min_bad.min(fd);
        }
        for g in &inc.facet_vertices {
            let mut h = face.clone();
            h.intersect_with(g);
            if h.count_ones(..) == 0 || faces.contains(&h) {
                continue;
            }
            guard("face lattice size", faces.len() as u64 + 1, limit)?;
            faces.insert(h.clone());
            queue.push(h);
        }
    }
    Ok(min_bad - 1)
}
