use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, IntMat};

pub(crate) fn check_square(m: &IntMat) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    Ok(m.rows())
}

pub(crate) fn check_01(m: &IntMat) -> Result<usize> {
    let n = check_square(m)?;
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if !v.is_zero() && !v.is_one() {
                return Err(Error::InvalidInput(format!(
                    "entry ({}, {}) = {v} is not 0/1",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(n)
}

fn check_pm1(m: &IntMat) -> Result<usize> {
    let n = check_square(m)?;
    for i in 0..n {
        for j in 0..n {
            if !m.get(i, j).abs().is_one() {
                return Err(Error::InvalidInput(format!(
                    "entry ({}, {}) = {} is not ±1",
                    i + 1,
                    j + 1,
                    m.get(i, j)
                )));
            }
        }
    }
    Ok(n)
}

/// `A ↦ [[1, 1ᵗ], [1, J − 2A]]`, a `(d+1)×(d+1)` ±1-matrix with
/// `det = (−2)^d det A`.
pub fn williamson(a: &IntMat) -> Result<IntMat> {
    let d = check_01(a)?;
    Ok(IntMat::from_fn(d + 1, d + 1, |i, j| {
        if i == 0 || j == 0 {
            Int::one()
        } else {
            Int::one() - Int::from(2) * a.get(i - 1, j - 1)
        }
    }))
}

/// Inverse of [`williamson`]; the first row and column must be all `+1`.
pub fn williamson_inverse(ah: &IntMat) -> Result<IntMat> {
    let n = check_pm1(ah)?;
    if n < 2 {
        return Err(Error::InvalidInput("need at least a 2x2 matrix".into()));
    }
    for k in 0..n {
        if !ah.get(0, k).is_one() || !ah.get(k, 0).is_one() {
            return Err(Error::InvalidInput(
                "first row and column must be all +1".into(),
            ));
        }
    }
    Ok(IntMat::from_fn(n - 1, n - 1, |i, j| {
        (Int::one() - ah.get(i + 1, j + 1)) / Int::from(2)
    }))
}

/// Negates columns, then rows, so that the first row and column become all
/// `+1`: the representative of the orbit under row and column sign changes.
pub fn canonicalize_pm1(m: &IntMat) -> Result<IntMat> {
    let n = check_pm1(m)?;
    let col_sign: Vec<bool> = (0..n).map(|j| m.get(0, j).is_negative()).collect();
    let row_sign: Vec<bool> = (0..n)
        .map(|i| m.get(i, 0).is_negative() != col_sign[0])
        .collect();
    Ok(IntMat::from_fn(n, n, |i, j| {
        let v = m.get(i, j).clone();
        if col_sign[j] != row_sign[i] {
            -v
        } else {
            v
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::det;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[Vec<i64>]) -> IntMat {
        IntMat::from_i64(rows).unwrap()
    }

    #[test]
    fn small_cases() {
        let w = williamson(&m(&[vec![0]])).unwrap();
        assert_eq!(w, m(&[vec![1, 1], vec![1, 1]]));
        let w = williamson(&m(&[vec![1]])).unwrap();
        assert_eq!(w, m(&[vec![1, 1], vec![1, -1]]));
        assert_eq!(det(&w).unwrap(), Int::from(-2));
        let w = williamson(&IntMat::identity(2)).unwrap();
        assert_eq!(det(&w).unwrap(), Int::from(4));
    }

    #[test]
    fn round_trip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let d = rng.random_range(1..=5);
            let a = IntMat::from_fn(d, d, |_, _| Int::from(rng.random_range(0..2)));
            let w = williamson(&a).unwrap();
            let scale = Int::from(-2).pow(d as u32);
            assert_eq!(det(&w).unwrap(), scale * det(&a).unwrap());
            // random sign changes are undone by canonicalization
            let rs: Vec<bool> = (0..=d).map(|_| rng.random()).collect();
            let cs: Vec<bool> = (0..=d).map(|_| rng.random()).collect();
            let s = IntMat::from_fn(d + 1, d + 1, |i, j| {
                let v = w.get(i, j).clone();
                if rs[i] != cs[j] { -v } else { v }
            });
            let back = williamson_inverse(&canonicalize_pm1(&s).unwrap()).unwrap();
            assert_eq!(back, a);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(williamson(&m(&[vec![2]])).is_err());
        assert!(williamson_inverse(&m(&[vec![1, -1], vec![1, 1]])).is_err());
        assert!(williamson_inverse(&m(&[vec![1, 0], vec![1, 1]])).is_err());
        assert!(canonicalize_pm1(&m(&[vec![0, 1]])).is_err());
    }
}
