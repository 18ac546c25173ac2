use num_traits::{One, Zero};

use super::{coord_bit, VertexSet01, Word};
use crate::error::Result;
use crate::exact::{nullspace, primitive_int_row, rref, Int, Mat, Rat};

/// Affine dimension of the vertex set.
pub fn affine_dim(p: &VertexSet01) -> usize {
    p.subset_affine_dim(&p.all_indices())
}

/// The affine hull of a point set as a reduced system of equations.
///
/// Each equation is stored as `(c0, c1, .., cd)` meaning
/// `c0 + c1 x1 + .. + cd xd = 0`. The system is in reduced row echelon form
/// over the coordinate columns: equation `k` has coefficient 1 at coordinate
/// `pivots[k]` and 0 at every other pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHull {
    ambient: usize,
    equations: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl AffineHull {
    /// `points` must be nonempty, all of length `ambient`.
    pub fn of_points(ambient: usize, points: &[Vec<Rat>]) -> Self {
        let m = Mat::from_fn(points.len(), ambient + 1, |i, j| {
            if j < ambient {
                points[i][j].clone()
            } else {
                Rat::one()
            }
        });
        let kernel = nullspace(&m);
        if kernel.is_empty() {
            return AffineHull {
                ambient,
                equations: Vec::new(),
                pivots: Vec::new(),
            };
        }
        let r = rref(&Mat::from_rows(kernel).expect("kernel rows are rectangular"));
        let mut equations = Vec::with_capacity(r.pivots.len());
        for (k, _) in r.pivots.iter().enumerate() {
            let row = r.matrix.row(k);
            let mut eq = Vec::with_capacity(ambient + 1);
            eq.push(row[ambient].clone());
            eq.extend_from_slice(&row[..ambient]);
            equations.push(eq);
        }
        debug_assert!(r.pivots.iter().all(|&p| p < ambient));
        AffineHull {
            ambient,
            equations,
            pivots: r.pivots,
        }
    }

    pub fn of_vertices(p: &VertexSet01) -> Self {
        let pts: Vec<Vec<Rat>> = p
            .int_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| Rat::from_integer(Int::from(x))).collect())
            .collect();
        Self::of_points(p.dim(), &pts)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn equations(&self) -> &[Vec<Rat>] {
        &self.equations
    }

    /// Equations scaled to primitive integer rows (pivot coefficient positive).
    pub fn equations_int(&self) -> Vec<Vec<Int>> {
        self.equations.iter().map(|e| primitive_int_row(e)).collect()
    }

    /// Adds multiples of the equations to an affine functional `(c0, c)` so
    /// that it vanishes on every pivot coordinate. Two functionals agree on
    /// the hull iff their reductions are equal.
    pub fn reduce(&self, row: &[Rat]) -> Vec<Rat> {
        let mut out = row.to_vec();
        for (eq, &p) in self.equations.iter().zip(&self.pivots) {
            let f = out[1 + p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, e) in out.iter_mut().zip(eq) {
                if !e.is_zero() {
                    *x -= &f * e;
                }
            }
        }
        out
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| {
            let v: Rat = e[0].clone() + e[1..].iter().zip(x).map(|(a, b)| a * b).sum::<Rat>();
            v.is_zero()
        })
    }
}

/// How a lower-dimensional copy was obtained: the deleted coordinates are
/// affine functions of the kept ones on the affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullDimRecord {
    pub ambient: usize,
    pub kept: Vec<usize>,
    pub deleted: Vec<usize>,
    /// For each deleted coordinate, `(c0, c1, ..)` with
    /// `x_deleted = c0 + sum_j c_j y_j` where `y` are the kept coordinates.
    pub reconstruction: Vec<Vec<Rat>>,
}

impl FullDimRecord {
    pub fn is_identity(&self) -> bool {
        self.deleted.is_empty()
    }

    pub fn project(&self, x: &[Rat]) -> Vec<Rat> {
        self.kept.iter().map(|&i| x[i].clone()).collect()
    }

    pub fn lift(&self, y: &[Rat]) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.ambient];
        for (&i, v) in self.kept.iter().zip(y) {
            x[i] = v.clone();
        }
        for (&i, r) in self.deleted.iter().zip(&self.reconstruction) {
            x[i] = r[0].clone() + r[1..].iter().zip(y).map(|(a, b)| a * b).sum::<Rat>();
        }
        x
    }

    pub fn project_word(&self, w: Word) -> Word {
        let k = self.kept.len();
        let mut out = 0;
        for (j, &i) in self.kept.iter().enumerate() {
            if w & coord_bit(self.ambient, i) != 0 {
                out |= coord_bit(k, j);
            }
        }
        out
    }
}

/// Deletes the pivot coordinates of the affine hull, which leaves an affinely
/// isomorphic full-dimensional 0/1-polytope.
pub fn make_full_dimensional(p: &VertexSet01) -> Result<(VertexSet01, FullDimRecord)> {
    let hull = AffineHull::of_vertices(p);
    let d = p.dim();
    let deleted = hull.pivots().to_vec();
    let kept: Vec<usize> = (0..d).filter(|i| !deleted.contains(i)).collect();
    let reconstruction = hull
        .equations()
        .iter()
        .map(|eq| {
            let mut r = Vec::with_capacity(kept.len() + 1);
            r.push(-eq[0].clone());
            r.extend(kept.iter().map(|&j| -eq[1 + j].clone()));
            r
        })
        .collect();
    let record = FullDimRecord {
        ambient: d,
        kept,
        deleted,
        reconstruction,
    };
    if record.kept.is_empty() {
        // A single point: keep it as the one point of the 1-cube's origin.
        let q = VertexSet01::from_words(1, [0])?;
        return Ok((q, record));
    }
    let q = VertexSet01::from_words(
        record.kept.len(),
        p.words().iter().map(|&w| record.project_word(w)),
    )?;
    Ok((q, record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn simplex_in_three_space() {
        let p = VertexSet01::from_strs(&["100", "010", "001"]).unwrap();
        assert_eq!(affine_dim(&p), 2);
        let (q, rec) = make_full_dimensional(&p).unwrap();
        assert_eq!(q, VertexSet01::from_strs(&["00", "10", "01"]).unwrap());
        assert_eq!(rec.deleted, vec![0]);
        let lifted = rec.lift(&[rat(0, 1), rat(0, 1)]);
        assert_eq!(lifted, vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn full_dimensional_is_identity() {
        let p = VertexSet01::from_strs(&["000", "011", "101", "110"]).unwrap();
        let (q, rec) = make_full_dimensional(&p).unwrap();
        assert!(rec.is_identity());
        assert_eq!(q, p);
    }

    #[test]
    fn single_point() {
        let p = VertexSet01::from_strs(&["101"]).unwrap();
        assert_eq!(affine_dim(&p), 0);
        let (_, rec) = make_full_dimensional(&p).unwrap();
        assert_eq!(rec.deleted.len(), 3);
        assert_eq!(rec.lift(&[]), vec![rat(1, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn reduce_identifies_functionals() {
        let p = VertexSet01::from_strs(&["100", "010", "001"]).unwrap();
        let h = AffineHull::of_vertices(&p);
        // x1 >= 0 and 1 - x2 - x3 >= 0 agree on the hull x1 + x2 + x3 = 1
        let a = h.reduce(&[rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
        let b = h.reduce(&[rat(1, 1), rat(0, 1), rat(-1, 1), rat(-1, 1)]);
        assert_eq!(a, b);
        assert_eq!(h.equations_int()[0], vec![Int::from(-1), 1.into(), 1.into(), 1.into()]);
    }
}
