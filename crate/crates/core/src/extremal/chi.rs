use num_traits::{One, Signed, Zero};

use super::williamson::{check_01, check_square};
use crate::error::{Error, Result};
use crate::exact::{det, inverse_adjugate, Int, IntMat, Rat};

/// Largest absolute entry of `A⁻¹` together with the minor realising it:
/// `χ(A) = |det A_{row,col}| / |det A|` (0-based deleted row and column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiWitness {
    pub value: Rat,
    pub row: usize,
    pub col: usize,
}

pub fn chi_witness(a: &IntMat) -> Result<ChiWitness> {
    check_square(a)?;
    let (adj, d) = inverse_adjugate(a)?;
    if d.is_zero() {
        return Err(Error::Singular);
    }
    let n = a.rows();
    let mut best = (Int::zero(), 0, 0);
    for i in 0..n {
        for j in 0..n {
            let v = adj.get(i, j).abs();
            if v > best.0 {
                // adjugate entry (i, j) is the cofactor of entry (j, i)
                best = (v, j, i);
            }
        }
    }
    Ok(ChiWitness {
        value: Rat::new(best.0, d.abs()),
        row: best.1,
        col: best.2,
    })
}

/// `χ(A) = max |(A⁻¹)_ij|`.
pub fn chi(a: &IntMat) -> Result<Rat> {
    Ok(chi_witness(a)?.value)
}

/// Where [`orient_chi_witness`] puts the extremal cofactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corner {
    First,
    Last,
}

/// Permutes rows and columns of `a` so that `χ(a) = |det a_{cc}/det a|` for
/// the corner `c`. The deleted row and column move to the corner; all
/// other rows and columns keep their relative order.
pub fn orient_chi_witness(a: &IntMat, corner: Corner) -> Result<IntMat> {
    let w = chi_witness(a)?;
    let n = a.rows();
    let order = |k: usize| -> Vec<usize> {
        let rest = (0..n).filter(|&t| t != k);
        match corner {
            Corner::First => std::iter::once(k).chain(rest).collect(),
            Corner::Last => rest.chain(std::iter::once(k)).collect(),
        }
    };
    let out = a.permuted(&order(w.row), &order(w.col));
    let c = match corner {
        Corner::First => 0,
        Corner::Last => n - 1,
    };
    if n > 1 {
        let corner_ratio = Rat::new(det(&out.minor(c, c))?.abs(), det(&out)?.abs());
        if corner_ratio != w.value {
            return Err(Error::Invariant("reoriented witness lost its cofactor".into()));
        }
    }
    Ok(out)
}

/// `A ◇ B = [[A, 0], [E, B]]` where `E` has a single 1 in its first row and
/// last column, so `det(A◇B) = det A · det B`.
pub fn diamond(a: &IntMat, b: &IntMat) -> Result<IntMat> {
    let n1 = check_01(a)?;
    let n2 = check_01(b)?;
    if det(a)?.is_zero() || det(b)?.is_zero() {
        return Err(Error::Singular);
    }
    let n = n1 + n2;
    Ok(IntMat::from_fn(n, n, |i, j| match (i < n1, j < n1) {
        (true, true) => a.get(i, j).clone(),
        (true, false) => Int::zero(),
        (false, false) => b.get(i - n1, j - n1).clone(),
        (false, true) => {
            if i == n1 && j == n1 - 1 {
                Int::one()
            } else {
                Int::zero()
            }
        }
    }))
}
