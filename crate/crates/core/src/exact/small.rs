//! Machine-integer fast paths. Both routines are exact: they detect overflow
//! and either report it or fall back to big integers.

use super::{rank_int, Int};

/// Fraction-free determinant of a row-major `n x n` matrix in `i128`
/// arithmetic. Returns `None` if an intermediate value overflows.
pub fn det_i64(m: &[i64], n: usize) -> Option<i64> {
    debug_assert_eq!(m.len(), n * n);
    if n == 0 {
        return Some(1);
    }
    let mut stack = [0i128; 64];
    let mut heap: Vec<i128>;
    let a: &mut [i128] = if n <= 8 {
        &mut stack[..n * n]
    } else {
        heap = vec![0i128; n * n];
        &mut heap[..]
    };
    for (dst, &src) in a.iter_mut().zip(m) {
        *dst = src as i128;
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let f = a[i * n + k];
            for j in k + 1..n {
                let lhs = a[i * n + j].checked_mul(pivot)?;
                let rhs = f.checked_mul(a[k * n + j])?;
                a[i * n + j] = lhs.checked_sub(rhs)? / prev;
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1];
    let d = if negate { -d } else { d };
    i64::try_from(d).ok()
}

/// Rank of a small integer matrix; falls back to big integers on overflow.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    match rank_checked(rows) {
        Some(r) => r,
        None => rank_int(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect::<Vec<_>>(),
        ),
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn rank_checked(rows: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let pv = a[r][c];
        for i in r + 1..a.len() {
            let f = a[i][c];
            if f == 0 {
                continue;
            }
            let mut g = 0;
            for j in c..cols {
                let v = a[i][j].checked_mul(pv)?.checked_sub(f.checked_mul(a[r][j])?)?;
                a[i][j] = v;
                g = gcd(g, v);
            }
            if g > 1 {
                for x in &mut a[i][c..] {
                    *x /= g;
                }
            }
        }
        r += 1;
    }
    Some(r)
}
