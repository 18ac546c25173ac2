use rand::Rng;

use super::{McEstimate, SeededRng};
use crate::error::{guard, Error, Result};
use crate::exact::{det, det_i64, Int, IntMat, Rat};

/// Largest order for which [`exact_md`] enumerates (5 takes 2^20 prefixes).
pub const EXACT_MD_MAX: usize = 5;

fn flat(rows: &[u64], d: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(d * d);
    for r in rows {
        out.extend((0..d).map(|j| (r >> (d - 1 - j) & 1) as i64));
    }
    out
}

fn det_flat(m: &[i64], n: usize) -> Int {
    match det_i64(m, n) {
        Some(v) => Int::from(v),
        None => det(&IntMat::from_fn(n, n, |i, j| Int::from(m[i * n + j])))
            .expect("square by construction"),
    }
}

/// Whether the 0/1-matrix with the given rows (bit `d-1-j` = column `j`)
/// is singular.
pub fn singular_01(rows: &[u64], d: usize) -> bool {
    use num_traits::Zero;
    det_flat(&flat(rows, d), d).is_zero()
}

/// Signed cofactors of the last row for the first `d-1` rows: the
/// determinant with last row `r` is `Σ r_j c_j`.
pub(crate) fn last_row_cofactors(prefix: &[u64], d: usize) -> Vec<i64> {
    let full = flat(prefix, d);
    let k = d - 1;
    let mut minor = vec![0i64; k * k];
    (0..d)
        .map(|j| {
            for i in 0..k {
                for (t, col) in (0..d).filter(|&col| col != j).enumerate() {
                    minor[i * k + t] = full[i * d + col];
                }
            }
            let m = det_i64(&minor, k).expect("0/1 minors of order < 8 fit in i64");
            if (k + j) % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

/// Number of singular `d×d` 0/1-matrices, counted by enumerating the first
/// `d-1` rows and solving for the last row through its cofactor vector.
pub fn exact_md(d: usize) -> Result<Int> {
    if d == 0 {
        return Err(Error::InvalidInput("matrix order must be positive".into()));
    }
    guard("exact singular count order", d as u64, EXACT_MD_MAX as u64)?;
    let prefixes = 1u64 << (d * (d - 1));
    let row_mask = (1u64 << d) - 1;
    let mut total: u64 = 0;
    let mut prefix = vec![0u64; d - 1];
    for code in 0..prefixes {
        for (i, r) in prefix.iter_mut().enumerate() {
            *r = code >> (i * d) & row_mask;
        }
        let c = last_row_cofactors(&prefix, d);
        for r in 0..=row_mask {
            let s: i64 = (0..d)
                .filter(|&j| r >> (d - 1 - j) & 1 == 1)
                .map(|j| c[j])
                .sum();
            if s == 0 {
                total += 1;
            }
        }
    }
    Ok(Int::from(total))
}

/// Oracle for small orders: a determinant for every matrix.
pub fn exact_md_brute_force(d: usize) -> Result<Int> {
    if d == 0 {
        return Err(Error::InvalidInput("matrix order must be positive".into()));
    }
    guard("brute-force singular count order", d as u64, 4)?;
    let row_mask = (1u64 << d) - 1;
    let mut count = 0u64;
    let mut rows = vec![0u64; d];
    for code in 0..1u64 << (d * d) {
        for (i, r) in rows.iter_mut().enumerate() {
            *r = code >> (i * d) & row_mask;
        }
        if singular_01(&rows, d) {
            count += 1;
        }
    }
    Ok(Int::from(count))
}

/// Fraction of sampled uniform `d×d` 0/1-matrices that are singular.
pub fn estimate_pd(d: usize, trials: u64, rng: &SeededRng) -> Result<McEstimate> {
    if d == 0 || d > 64 {
        return Err(Error::InvalidInput(format!("matrix order {d} outside 1..=64")));
    }
    if trials == 0 {
        return Err(Error::InvalidInput("at least one trial is required".into()));
    }
    let mask = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
    let hits: u64 = rng
        .run_chunks(trials, |r, count| {
            let mut rows = vec![0u64; d];
            let mut hits = 0u64;
            for _ in 0..count {
                rows.iter_mut().for_each(|x| *x = r.random::<u64>() & mask);
                if singular_01(&rows, d) {
                    hits += 1;
                }
            }
            hits
        })
        .into_iter()
        .sum();
    Ok(McEstimate::from_counts(trials, hits))
}

/// `d² / 2^d`, the lower bound on the singularity probability.
pub fn komlos_lower_bound(d: usize) -> Rat {
    Rat::new(Int::from(d * d), Int::from(1u8) << d)
}
