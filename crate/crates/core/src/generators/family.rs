use super::MAX_ENUM_DIM;
use crate::error::{guard, Error, Result};
use crate::polytope::{coord_bit, VertexSet01, Word};

fn fixed_top(d: usize) -> [Word; 4] {
    let top = 1; // e_d
    let all = (1 << d) - 1;
    let e1 = coord_bit(d, 0);
    // in: e_d and 1; out: e_d + e_1 and 1 - e_1
    [top, all, top | e1, all ^ e1]
}

fn check(d: usize) -> Result<()> {
    if d < 3 {
        return Err(Error::InvalidInput(format!("family needs d >= 3, got {d}")));
    }
    guard("family dimension", d as u64, MAX_ENUM_DIM as u64)
}

/// Top-facet vertices whose membership is free, in increasing word order
/// (`2^{d-1} - 4` of them).
pub fn family_fd_free_positions(d: usize) -> Result<Vec<Word>> {
    check(d)?;
    let fixed = fixed_top(d);
    Ok((0..1 << d)
        .filter(|w: &Word| w & 1 == 1 && !fixed.contains(w))
        .collect())
}

/// The member of the family selected by one bit per free position: the
/// bottom facet of the cube, `e_d` and `1`, plus the selected free vertices.
pub fn family_fd(d: usize, selector: &[bool]) -> Result<VertexSet01> {
    let free = family_fd_free_positions(d)?;
    if selector.len() != free.len() {
        return Err(Error::DimensionMismatch {
            expected: free.len(),
            found: selector.len(),
        });
    }
    let [e_d, all, _, _] = fixed_top(d);
    let bottom = (0..1 << d).filter(|w: &Word| w & 1 == 0);
    let chosen = free
        .iter()
        .zip(selector)
        .filter(|(_, &s)| s)
        .map(|(&w, _)| w);
    VertexSet01::from_words(d, bottom.chain([e_d, all]).chain(chosen).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::affine_dim;

    #[test]
    fn three_dimensional_member() {
        assert!(family_fd_free_positions(3).unwrap().is_empty());
        let p = family_fd(3, &[]).unwrap();
        assert_eq!(p.to_string(), "{000 001 010 100 110 111}");
        assert_eq!(affine_dim(&p), 3);
    }

    #[test]
    fn four_dimensional_members() {
        let free = family_fd_free_positions(4).unwrap();
        assert_eq!(free, vec![0b0011, 0b0101, 0b1011, 0b1101]);
        for sel in 0..16u32 {
            let bits: Vec<bool> = (0..4).map(|i| sel >> i & 1 == 1).collect();
            let p = family_fd(4, &bits).unwrap();
            assert_eq!(affine_dim(&p), 4);
            assert!((0..16).step_by(2).all(|w| p.contains_word(w)));
        }
        assert!(family_fd(4, &[true]).is_err());
    }
}
