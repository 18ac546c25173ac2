use num_traits::{One, Zero};

use super::MAX_ENUM_DIM;
use crate::error::{guard, Error, Result};
use crate::exact::{rat, Rat};
use crate::hull::{HRep, Inequality};
use crate::polytope::{coord_bit, VertexSet01, Word, MAX_DIM};

/// Coordinates of the cut polytope of `K_n`: edge `{i, j}` (`i < j`,
/// 0-based nodes) is coordinate number `k` in lexicographic pair order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutVertexIndexing {
    pub n: usize,
}

impl CutVertexIndexing {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 || n * (n - 1) / 2 > MAX_DIM {
            return Err(Error::InvalidInput(format!("cut polytope of K_{n}")));
        }
        Ok(CutVertexIndexing { n })
    }

    pub fn dim(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        debug_assert!(j < self.n && i != j);
        // pairs starting with a < i come first
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    }

    /// Cut vector `δ(S)` of the node set `S` (bit `i` of `s` = node `i`).
    pub fn cut_word(&self, s: u64) -> Word {
        let d = self.dim();
        let mut w = 0;
        for (k, (i, j)) in self.pairs().into_iter().enumerate() {
            if (s >> i & 1) != (s >> j & 1) {
                w |= coord_bit(d, k);
            }
        }
        w
    }
}

/// `CUT(n)`: the `2^{n-1}` cut vectors `δ(S)` with `S` avoiding the last node.
pub fn cut_polytope(n: usize) -> Result<VertexSet01> {
    let idx = CutVertexIndexing::new(n)?;
    guard("cut polytope nodes", n as u64, MAX_ENUM_DIM as u64)?;
    VertexSet01::from_words(idx.dim(), (0..1u64 << (n - 1)).map(|s| idx.cut_word(s)))
}

/// `COR(n)`: the rank-one matrices `x xᵗ`, `x ∈ {0,1}^n`, flattened row by row.
pub fn correlation_polytope(n: usize) -> Result<VertexSet01> {
    if n == 0 || n * n > MAX_DIM {
        return Err(Error::InvalidInput(format!("correlation polytope of order {n}")));
    }
    let d = n * n;
    let words = (0..1u64 << n).map(|x| {
        let mut w = 0;
        for i in 0..n {
            for j in 0..n {
                if x >> i & 1 == 1 && x >> j & 1 == 1 {
                    w |= coord_bit(d, i * n + j);
                }
            }
        }
        w
    });
    VertexSet01::from_words(d, words)
}

/// Image of a point of `ℝ^{(n-1)²}` under the affine map
/// `δ_ij = x_ii - x_ij + x_jj - x_ji` (`i < j < n-1`), `δ_{i,n-1} = x_ii`.
pub fn gamma_point(x: &[Rat], n: usize) -> Result<Vec<Rat>> {
    let idx = CutVertexIndexing::new(n)?;
    let m = n - 1;
    if x.len() != m * m {
        return Err(Error::DimensionMismatch {
            expected: m * m,
            found: x.len(),
        });
    }
    let at = |i: usize, j: usize| &x[i * m + j];
    Ok(idx
        .pairs()
        .into_iter()
        .map(|(i, j)| {
            if j == m {
                at(i, i).clone()
            } else {
                at(i, i) - at(i, j) + at(j, j) - at(j, i)
            }
        })
        .collect())
}

/// Symmetric matrix point with `x_ii = δ_{i,n-1}` and
/// `x_ij = ½(δ_{i,n-1} + δ_{j,n-1} - δ_ij)`.
pub fn gamma_inverse_point(delta: &[Rat], n: usize) -> Result<Vec<Rat>> {
    let idx = CutVertexIndexing::new(n)?;
    if delta.len() != idx.dim() {
        return Err(Error::DimensionMismatch {
            expected: idx.dim(),
            found: delta.len(),
        });
    }
    let m = n - 1;
    let half = rat(1, 2);
    let mut x = vec![Rat::zero(); m * m];
    for i in 0..m {
        for j in 0..m {
            let di = &delta[idx.pair_index(i, m)];
            x[i * m + j] = if i == j {
                di.clone()
            } else {
                let dj = &delta[idx.pair_index(j, m)];
                (di + dj - &delta[idx.pair_index(i, j)]) * &half
            };
        }
    }
    Ok(x)
}

fn word_to_rats(d: usize, w: Word) -> Vec<Rat> {
    (0..d)
        .map(|i| {
            if w & coord_bit(d, i) != 0 {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
        .collect()
}

fn rats_to_word(x: &[Rat]) -> Result<Word> {
    let d = x.len();
    let mut w = 0;
    for (i, v) in x.iter().enumerate() {
        if v.is_one() {
            w |= coord_bit(d, i);
        } else if !v.is_zero() {
            return Err(Error::InvalidInput(format!("coordinate {i} is {v}, not 0/1")));
        }
    }
    Ok(w)
}

/// Maps a vertex of `COR(n-1)` to the corresponding vertex of `CUT(n)`.
pub fn gamma(corr: Word, n: usize) -> Result<Word> {
    let m = n.checked_sub(1).filter(|&m| m >= 1).ok_or_else(|| {
        Error::InvalidInput(format!("gamma needs n >= 2, got {n}"))
    })?;
    let d = m * m;
    let x = word_to_rats(d, corr);
    let diag: u64 = (0..m).fold(0, |s, i| if x[i * m + i].is_one() { s | 1 << i } else { s });
    let expected = correlation_word(m, diag);
    if corr != expected {
        return Err(Error::InvalidInput(
            "point is not a vertex of the correlation polytope".into(),
        ));
    }
    rats_to_word(&gamma_point(&x, n)?)
}

/// Maps a vertex of `CUT(n)` back to the vertex of `COR(n-1)`.
pub fn gamma_inverse(cut: Word, n: usize) -> Result<Word> {
    let idx = CutVertexIndexing::new(n)?;
    let d = idx.dim();
    let m = n - 1;
    let s: u64 = (0..m).fold(0, |s, i| {
        if cut & coord_bit(d, idx.pair_index(i, m)) != 0 {
            s | 1 << i
        } else {
            s
        }
    });
    if idx.cut_word(s) != cut {
        return Err(Error::InvalidInput("point is not a cut vector".into()));
    }
    rats_to_word(&gamma_inverse_point(&word_to_rats(d, cut), n)?)
}

fn correlation_word(m: usize, x: u64) -> Word {
    let d = m * m;
    let mut w = 0;
    for i in 0..m {
        for j in 0..m {
            if x >> i & 1 == 1 && x >> j & 1 == 1 {
                w |= coord_bit(d, i * m + j);
            }
        }
    }
    w
}

/// The triangle and box inequalities defining the metric polytope `MET(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSystem {
    pub n: usize,
    /// Per triple `i<j<k`: the three rows `x_ab ≤ x_ac + x_bc` and
    /// `x_ij + x_ik + x_jk ≤ 2`.
    pub triangle: Vec<Inequality>,
    /// `x_e ≥ 0` and `1 - x_e ≥ 0` for every edge.
    pub bounds: Vec<Inequality>,
}

impl MetricSystem {
    pub fn dim(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn rows(&self) -> impl Iterator<Item = &Inequality> {
        self.triangle.iter().chain(&self.bounds)
    }

    /// The system as an (in general redundant) H-description.
    pub fn to_hrep(&self) -> HRep {
        HRep {
            ambient: self.dim(),
            equations: Vec::new(),
            facets: self.rows().cloned().collect(),
        }
    }

    pub fn satisfied_by(&self, w: Word) -> bool {
        self.rows().all(|r| r.eval_word(w) >= 0.into())
    }

    /// All 0/1-points satisfying the system.
    pub fn integer_points(&self) -> Result<VertexSet01> {
        let d = self.dim();
        guard("metric polytope integer points", d as u64, MAX_ENUM_DIM as u64)?;
        VertexSet01::from_words(d, (0..1 << d).filter(|&w| self.satisfied_by(w)))
    }
}

pub fn metric_polytope(n: usize) -> Result<MetricSystem> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("metric polytope needs n >= 3, got {n}")));
    }
    let idx = CutVertexIndexing::new(n)?;
    let d = idx.dim();
    let row = |c0: i64, terms: &[(usize, i64)]| {
        let mut r = vec![0i64; d + 1];
        r[0] = c0;
        for &(k, c) in terms {
            r[1 + k] = c;
        }
        Inequality::from_i64(&r)
    };
    let mut triangle = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (idx.pair_index(i, j), idx.pair_index(i, k), idx.pair_index(j, k));
                triangle.push(row(0, &[(a, -1), (b, 1), (c, 1)])?);
                triangle.push(row(0, &[(a, 1), (b, -1), (c, 1)])?);
                triangle.push(row(0, &[(a, 1), (b, 1), (c, -1)])?);
                triangle.push(row(2, &[(a, -1), (b, -1), (c, -1)])?);
            }
        }
    }
    let mut bounds = Vec::new();
    for e in 0..d {
        bounds.push(row(0, &[(e, 1)])?);
        bounds.push(row(1, &[(e, -1)])?);
    }
    Ok(MetricSystem {
        n,
        triangle,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::affine_dim;

    #[test]
    fn pair_order() {
        let idx = CutVertexIndexing::new(4).unwrap();
        let pairs = idx.pairs();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            assert_eq!(idx.pair_index(i, j), k);
            assert_eq!(idx.pair_index(j, i), k);
        }
        // complementary node sets give the same cut
        assert_eq!(idx.cut_word(0b0011), idx.cut_word(0b1100));
    }

    #[test]
    fn small_cut_polytopes() {
        assert_eq!(cut_polytope(3).unwrap().to_string(), "{000 011 101 110}");
        let c4 = cut_polytope(4).unwrap();
        assert_eq!((c4.dim(), c4.len(), affine_dim(&c4)), (6, 8, 6));
        let c2 = cut_polytope(2).unwrap();
        assert_eq!(c2.to_string(), "{0 1}");
    }

    #[test]
    fn correlation_dims() {
        assert_eq!(correlation_polytope(1).unwrap().to_string(), "{0 1}");
        let c2 = correlation_polytope(2).unwrap();
        assert_eq!((c2.len(), affine_dim(&c2)), (4, 3));
        assert_eq!(affine_dim(&correlation_polytope(3).unwrap()), 6);
    }

    #[test]
    fn gamma_on_small_vertices() {
        let n = 4;
        let idx = CutVertexIndexing::new(n).unwrap();
        assert_eq!(gamma(0, n).unwrap(), 0);
        // x = e_1: only x_11 = 1, the first of 9 coordinates
        let e1 = coord_bit(9, 0);
        assert_eq!(gamma(e1, n).unwrap(), idx.cut_word(0b1));
        assert!(gamma(coord_bit(9, 1), n).is_err());
        assert!(gamma_inverse(0b100000, n).is_err());
    }

    #[test]
    fn metric_rows() {
        let m = metric_polytope(3).unwrap();
        assert_eq!(m.triangle.len(), 4);
        assert_eq!(m.bounds.len(), 6);
        let m4 = metric_polytope(4).unwrap();
        assert_eq!(m4.triangle.len(), 16);
        assert_eq!(m4.integer_points().unwrap(), cut_polytope(4).unwrap());
    }
}
