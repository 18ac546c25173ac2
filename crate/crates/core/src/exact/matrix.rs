use std::fmt;

use num_traits::{One, Zero};

use super::{make_primitive, Int, Rat};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMat = Mat<Int>;
pub type RatMat = Mat<Rat>;

impl<T: Clone> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// The matrix with row `r` and column `c` deleted.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        Mat {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.get(row_order[i], col_order[j]).clone()
        })
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl IntMat {
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rat(&self) -> RatMat {
        self.map(|x| Rat::from_integer(x.clone()))
    }
}

impl<T: fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

pub fn mat_mul<T>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>>
where
    T: Clone + Zero + for<'x> std::ops::AddAssign<&'x T>,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            expected: a.cols,
            found: b.rows,
        });
    }
    Ok(Mat::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = T::zero();
        for k in 0..a.cols {
            acc += &(a.get(i, k) * b.get(k, j));
        }
        acc
    }))
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every intermediate entry is a minor of the input, so the exact divisions
/// never leave the integers.
pub fn det(m: &IntMat) -> Result<Int> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Int::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Reduced row echelon form over the rationals.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: RatMat,
    /// Pivot column of each nonzero row, in increasing order.
    pub pivots: Vec<usize>,
}

pub fn rref(m: &RatMat) -> Rref {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    let matrix = if r == 0 {
        Mat {
            rows: 0,
            cols,
            data: Vec::new(),
        }
    } else {
        Mat::from_rows(a).expect("rectangular")
    };
    Rref { matrix, pivots }
}

pub fn rank(m: &RatMat) -> usize {
    rref(m).pivots.len()
}

/// Rank of an integer matrix by fraction-free row reduction.
pub fn rank_int(rows: &[Vec<Int>]) -> usize {
    let mut a: Vec<Vec<Int>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let (pv, f) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                let v = &a[i][j] * &pv - &f * &a[r][j];
                a[i][j] = v;
            }
            make_primitive(&mut a[i]);
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Basis of the right null space `{x : m x = 0}`.
pub fn nullspace(m: &RatMat) -> Vec<Vec<Rat>> {
    let Rref { matrix, pivots } = rref(m);
    let cols = m.cols;
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// Null space basis scaled to primitive integer vectors.
pub fn int_nullspace(m: &IntMat) -> Vec<Vec<Int>> {
    nullspace(&m.to_rat())
        .iter()
        .map(|v| super::primitive_int_row(v))
        .collect()
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn rat_inverse(m: &RatMat) -> Result<RatMat> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let aug = Mat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let Rref { matrix, pivots } = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(Mat::from_fn(n, n, |i, j| matrix.get(i, n + j).clone()))
}

/// Integer adjugate together with the determinant. Entry `(j, i)` of the
/// adjugate is `(-1)^(i+j) det(M_ij)`, so `M * adj = det * I`.
pub fn inverse_adjugate(m: &IntMat) -> Result<(IntMat, Int)> {
    let d = det(m)?;
    let n = m.rows;
    if n == 0 {
        return Ok((Mat::zeros(0, 0), d));
    }
    if !d.is_zero() {
        let inv = rat_inverse(&m.to_rat())?;
        let dr = Rat::from_integer(d.clone());
        let mut adj = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = inv.get(i, j) * &dr;
                if !v.is_integer() {
                    return Err(Error::Invariant("adjugate entry is not integral".into()));
                }
                adj.push(v.to_integer());
            }
        }
        return Ok((Mat { rows: n, cols: n, data: adj }, d));
    }
    if n == 1 {
        return Ok((Mat::identity(1), d));
    }
    let mut adj = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let c = det(&m.minor(i, j))?;
            adj.set(j, i, if (i + j) % 2 == 0 { c } else { -c });
        }
    }
    Ok((adj, d))
}
