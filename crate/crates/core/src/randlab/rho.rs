use num_traits::Signed;

use super::singular::last_row_cofactors;
use crate::error::{guard, Error, Result};
use crate::exact::{det, det_i64, Int, IntMat};

/// Largest order handled by [`rho_search`].
pub const RHO_SEARCH_MAX: usize = 6;

/// Maximal `|det|` of an `n×n` 0/1-matrix together with a matrix reaching it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoResult {
    pub n: usize,
    pub value: Int,
    pub witness: Vec<Vec<u8>>,
}

fn to_rows(words: &[u64], n: usize) -> Vec<Vec<u8>> {
    words
        .iter()
        .map(|w| (0..n).map(|j| (w >> (n - 1 - j) & 1) as u8).collect())
        .collect()
}

fn verify(words: &[u64], n: usize, value: &Int) -> Result<Vec<Vec<u8>>> {
    let rows = to_rows(words, n);
    let m = IntMat::from_fn(n, n, |i, j| Int::from(rows[i][j]));
    if det(&m)?.abs() != *value {
        return Err(Error::Invariant(format!(
            "witness determinant differs from {value}"
        )));
    }
    Ok(rows)
}

/// Exhaustive maximal determinant.
///
/// Row order only affects the sign and repeated rows give zero, so the
/// first `n-1` rows range over strictly increasing nonzero rows. For fixed
/// first rows the determinant is linear in the last row with cofactor
/// vector `c`, maximised by taking the positive (or the negative) entries.
pub fn rho_search(n: usize) -> Result<RhoResult> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix order must be positive".into()));
    }
    guard("maximal determinant order", n as u64, RHO_SEARCH_MAX as u64)?;
    let top = (1u64 << n) - 1;
    let k = n - 1;
    let mut prefix: Vec<u64> = (1..=k as u64).collect();
    let mut best = -1i64;
    let mut witness = vec![0u64; n];
    loop {
        let c = last_row_cofactors(&prefix, n);
        let pos: i64 = c.iter().filter(|&&x| x > 0).sum();
        let neg: i64 = -c.iter().filter(|&&x| x < 0).sum::<i64>();
        let v = pos.max(neg);
        if v > best {
            best = v;
            let take_pos = pos >= neg;
            let last = (0..n)
                .filter(|&j| if take_pos { c[j] > 0 } else { c[j] < 0 })
                .fold(0u64, |acc, j| acc | 1 << (n - 1 - j));
            witness[..k].copy_from_slice(&prefix);
            witness[k] = last;
        }
        // next strictly increasing prefix with entries in 1..=top
        let Some(i) = (0..k).rev().find(|&i| prefix[i] < top - (k - 1 - i) as u64) else {
            break;
        };
        prefix[i] += 1;
        for j in i + 1..k {
            prefix[j] = prefix[j - 1] + 1;
        }
    }
    let value = Int::from(best);
    let witness = verify(&witness, n, &value)?;
    Ok(RhoResult { n, value, witness })
}

/// Oracle: the determinant of every `n×n` 0/1-matrix (`n ≤ 5`).
pub fn rho_brute_force(n: usize) -> Result<RhoResult> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix order must be positive".into()));
    }
    guard("brute-force maximal determinant order", n as u64, 5)?;
    let mut best = (-1i64, 0u64);
    let mut m = vec![0i64; n * n];
    for code in 0..1u64 << (n * n) {
        for (k, x) in m.iter_mut().enumerate() {
            *x = (code >> (n * n - 1 - k) & 1) as i64;
        }
        let d = det_i64(&m, n).expect("small 0/1 determinants fit").abs();
        if d > best.0 {
            best = (d, code);
        }
    }
    let rows: Vec<u64> = (0..n)
        .map(|i| best.1 >> (n * (n - 1 - i)) & ((1 << n) - 1))
        .collect();
    let value = Int::from(best.0);
    let witness = verify(&rows, n, &value)?;
    Ok(RhoResult { n, value, witness })
}

/// Published maximal determinants for `n ≤ 16`; `None` where the value is
/// only conjectured (`n = 14`) or beyond the table.
pub fn rho_table(n: usize) -> Option<Int> {
    const TABLE: [i64; 16] = [
        1, 1, 2, 3, 5, 9, 32, 56, 144, 320, 1458, 3645, 9477, -1, 131072, 327680,
    ];
    match n {
        1..=16 if TABLE[n - 1] > 0 => Some(Int::from(TABLE[n - 1])),
        _ => None,
    }
}

/// `ρ ≤ 2(√(n+1)/2)^{n+1}` checked as `ρ²·4^{n+1} ≤ 4·(n+1)^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadamardCheck {
    pub n: usize,
    pub lhs: Int,
    pub rhs: Int,
    pub holds: bool,
}

pub fn hadamard_verdict(n: usize, rho: &Int) -> HadamardCheck {
    let e = n as u32 + 1;
    let lhs = rho * rho * Int::from(4).pow(e);
    let rhs = Int::from(4) * Int::from(n + 1).pow(e);
    let holds = lhs <= rhs;
    HadamardCheck { n, lhs, rhs, holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let expect = [1, 1, 2, 3];
        for n in 1..=4 {
            let r = rho_search(n).unwrap();
            assert_eq!(r.value, Int::from(expect[n - 1]));
            assert_eq!(r.value, rho_brute_force(n).unwrap().value);
        }
        assert!(rho_search(7).is_err());
    }

    #[test]
    fn hadamard() {
        let h = hadamard_verdict(3, &Int::from(2));
        assert_eq!((h.lhs.clone(), h.rhs.clone()), (Int::from(1024), Int::from(1024)));
        assert!(h.holds);
        assert!(hadamard_verdict(1, &Int::from(1)).holds);
        assert!(!hadamard_verdict(1, &Int::from(2)).holds);
    }

    #[test]
    fn table() {
        assert_eq!(rho_table(6), Some(Int::from(9)));
        assert_eq!(rho_table(14), None);
        assert_eq!(rho_table(17), None);
    }
}
