use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};

use super::IncidenceMatrix;
use crate::error::Result;
use crate::exact::{det, det_i64, Int, IntMat};
use crate::polytope::VertexSet01;

/// `d!·Vol_d(conv P)` for a full-dimensional `P`, computed from a pulling
/// triangulation: each face is coned from its first vertex over the facets
/// of that face not containing it. Lower-dimensional sets have volume 0.
pub fn normalized_volume(p: &VertexSet01, inc: &IncidenceMatrix) -> Result<Int> {
    let d = p.dim();
    let all = p.all_indices();
    if p.subset_affine_dim(&all) < d {
        return Ok(Int::zero());
    }
    let mut simplices = Vec::new();
    pull(p, inc, &all, d, &mut Vec::new(), &mut simplices);
    let rows = p.int_rows();
    let mut total = Int::zero();
    for s in simplices {
        let base = &rows[s[0]];
        let mut flat = Vec::with_capacity(d * d);
        for &v in &s[1..] {
            flat.extend(rows[v].iter().zip(base).map(|(a, b)| a - b));
        }
        let vol = match det_i64(&flat, d) {
            Some(x) => Int::from(x.abs()),
            None => {
                let m = IntMat::from_fn(d, d, |i, j| Int::from(flat[i * d + j]));
                det(&m)?.abs()
            }
        };
        total += vol;
    }
    Ok(total)
}

fn pull(
    p: &VertexSet01,
    inc: &IncidenceMatrix,
    face: &FixedBitSet,
    k: usize,
    apexes: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if face.count_ones(..) == k + 1 {
        let mut s = apexes.clone();
        s.extend(face.ones());
        out.push(s);
        return;
    }
    let apex = face.ones().next().expect("nonempty face");
    let mut subfaces = BTreeSet::new();
    for g in &inc.facet_vertices {
        if g.contains(apex) {
            continue;
        }
        let mut h = face.clone();
        h.intersect_with(g);
        if h.count_ones(..) >= k && p.subset_affine_dim(&h) + 1 == k {
            subfaces.insert(h.ones().collect::<Vec<_>>());
        }
    }
    apexes.push(apex);
    for sub in subfaces {
        let mut h = FixedBitSet::with_capacity(p.len());
        sub.iter().for_each(|&v| h.insert(v));
        pull(p, inc, &h, k - 1, apexes, out);
    }
    apexes.pop();
}
