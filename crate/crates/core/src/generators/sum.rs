use crate::error::{Error, Result};
use crate::polytope::{affine_dim, is_centered, VertexSet01, Word, MAX_DIM};

fn low_bits(k: usize) -> Word {
    if k == MAX_DIM {
        Word::MAX
    } else {
        (1 << k) - 1
    }
}

/// The 0/1 sum of two centered full-dimensional polytopes: `P1` is embedded
/// with its last coordinate repeated over the new coordinates, `P2` with the
/// complement of its first coordinate repeated over the old ones. Dimensions
/// add and facet counts multiply.
pub fn centered_sum(p1: &VertexSet01, p2: &VertexSet01) -> Result<VertexSet01> {
    let (d1, d2) = (p1.dim(), p2.dim());
    if d1 + d2 > MAX_DIM {
        return Err(Error::InvalidInput(format!(
            "sum dimension {} exceeds {MAX_DIM}",
            d1 + d2
        )));
    }
    for (name, p) in [("first", p1), ("second", p2)] {
        let dim = affine_dim(p);
        if dim != p.dim() {
            return Err(Error::NotCentered(format!(
                "{name} summand has dimension {dim} in R^{}, expected full-dimensional",
                p.dim()
            )));
        }
        if !is_centered(p)? {
            return Err(Error::NotCentered(format!(
                "{name} summand does not contain 1/2*1 in its interior"
            )));
        }
    }
    let first = p1.words().iter().map(|&v| {
        let tail = if v & 1 == 1 { low_bits(d2) } else { 0 };
        v << d2 | tail
    });
    let second = p2.words().iter().map(|&w| {
        let lead = if w >> (d2 - 1) & 1 == 0 { low_bits(d1) << d2 } else { 0 };
        lead | w
    });
    VertexSet01::from_words(d1 + d2, first.chain(second).collect::<Vec<_>>())
}
