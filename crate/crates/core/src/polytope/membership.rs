use num_traits::{One, Signed, Zero};

use super::VertexSet01;
use crate::error::{Error, Result};
use crate::exact::{rat, LpOutcome, LpProblem, Mat, Rat};

/// Exact test whether `x` lies in the convex hull of the vertices.
pub fn contains_point(p: &VertexSet01, x: &[Rat]) -> Result<bool> {
    Ok(convex_weights(p, x)?.is_some())
}

/// Convex combination weights expressing `x`, if it lies in `conv(P)`.
pub fn convex_weights(p: &VertexSet01, x: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let d = p.dim();
    if x.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: x.len(),
        });
    }
    let n = p.len();
    let a = Mat::from_fn(d + 1, n, |i, j| {
        if i == d || p.coord(j, i) {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let mut b = x.to_vec();
    b.push(Rat::one());
    match LpProblem::feasibility(a, b).solve()? {
        LpOutcome::Optimal { x, .. } => Ok(Some(x)),
        _ => Ok(None),
    }
}

/// True iff `½·1` is a convex combination of all vertices with strictly
/// positive weights, i.e. lies in the relative interior.
///
/// Solves `max t` subject to `½·1 = Σ (μ_i + t) v_i`, `Σ (μ_i + t) = 1`,
/// `μ, t ≥ 0`.
pub fn is_centered(p: &VertexSet01) -> Result<bool> {
    let (d, n) = (p.dim(), p.len());
    let col_sums: Vec<i64> = (0..d)
        .map(|i| (0..n).filter(|&j| p.coord(j, i)).count() as i64)
        .collect();
    let a = Mat::from_fn(d + 1, n + 1, |i, j| match (i == d, j == n) {
        (false, false) => Rat::from_integer(i64::from(p.coord(j, i)).into()),
        (false, true) => rat(col_sums[i], 1),
        (true, false) => Rat::one(),
        (true, true) => rat(n as i64, 1),
    });
    let mut b = vec![rat(1, 2); d];
    b.push(Rat::one());
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    match LpProblem::maximize(a, b, c).solve()? {
        LpOutcome::Optimal { value, .. } => Ok(value.is_positive()),
        LpOutcome::Infeasible => Ok(false),
        LpOutcome::Unbounded => Err(Error::Invariant(
            "centering program cannot be unbounded".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(d: usize) -> Vec<Rat> {
        vec![rat(1, 2); d]
    }

    #[test]
    fn square_membership() {
        let sq = VertexSet01::from_strs(&["00", "01", "10", "11"]).unwrap();
        assert!(contains_point(&sq, &half(2)).unwrap());
        assert!(contains_point(&sq, &[rat(1, 1), rat(0, 1)]).unwrap());
        assert!(!contains_point(&sq, &[rat(2, 1), rat(0, 1)]).unwrap());
        assert!(contains_point(&sq, &[rat(1, 1)]).is_err());
        assert!(is_centered(&sq).unwrap());
    }

    #[test]
    fn tetrahedron_weights_are_uniform() {
        let t = VertexSet01::from_strs(&["000", "011", "101", "110"]).unwrap();
        let w = convex_weights(&t, &half(3)).unwrap().unwrap();
        assert_eq!(w, vec![rat(1, 4); 4]);
        assert!(is_centered(&t).unwrap());
    }

    #[test]
    fn boundary_center_is_not_centered() {
        // triangle {00,10,01} has ½·1 on its hypotenuse
        let t = VertexSet01::from_strs(&["00", "10", "01"]).unwrap();
        assert!(contains_point(&t, &half(2)).unwrap());
        assert!(!is_centered(&t).unwrap());
        // prism over that triangle
        let prism =
            VertexSet01::from_strs(&["000", "100", "010", "001", "101", "011"]).unwrap();
        assert!(!is_centered(&prism).unwrap());
    }
}
