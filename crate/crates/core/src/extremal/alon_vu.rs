use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{guard, Error, Result};
use crate::exact::{binomial, det, mat_mul, rat, rat_int, Int, IntMat, Rat, RatMat};

/// Largest `m` accepted by [`alon_vu`] (matrices of order `2^m`).
pub const ALON_VU_MAX_M: usize = 6;

/// An ordering `α_1, .., α_n` of all subsets of `{1, .., m}` with
/// nondecreasing sizes and consecutive symmetric differences of size at
/// most 2. Element `t` of `[m]` is bit `t - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetOrder {
    pub m: usize,
    pub sets: Vec<u32>,
}

impl SubsetOrder {
    pub fn n(&self) -> usize {
        self.sets.len()
    }

    /// Elements of `α_{i+1}` (0-based `i`), in increasing order.
    pub fn elements(&self, i: usize) -> Vec<usize> {
        (0..self.m).filter(|t| self.sets[i] >> t & 1 == 1).map(|t| t + 1).collect()
    }

    /// Checks every invariant of the ordering.
    pub fn validate(&self) -> Result<()> {
        let n = 1usize << self.m;
        let mut seen = vec![false; n];
        if self.sets.len() != n {
            return Err(Error::Invariant(format!("{} sets, expected {n}", self.sets.len())));
        }
        for &s in &self.sets {
            if s as usize >= n || std::mem::replace(&mut seen[s as usize], true) {
                return Err(Error::Invariant(format!("set {s:#b} repeated or out of range")));
            }
        }
        if self.sets[0] != 0 {
            return Err(Error::Invariant("ordering does not start with the empty set".into()));
        }
        for w in self.sets.windows(2) {
            if w[0].count_ones() > w[1].count_ones() || (w[0] ^ w[1]).count_ones() > 2 {
                return Err(Error::Invariant(format!(
                    "consecutive sets {:#b}, {:#b} violate the ordering",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }
}

/// Revolving-door ordering of the `k`-subsets of `{0, .., n-1}`: starts at
/// `{0, .., k-1}`, ends at `{0, .., k-2, n-1}`.
fn revolving_door(n: usize, k: usize) -> Vec<u32> {
    if k == 0 {
        return vec![0];
    }
    if k == n {
        return vec![(1u32 << n) - 1];
    }
    let mut out = revolving_door(n - 1, k);
    out.extend(revolving_door(n - 1, k - 1).into_iter().rev().map(|s| s | 1 << (n - 1)));
    out
}

/// Levels by cardinality, each a revolving-door sequence relabelled so that
/// its first set contains the last set of the previous level.
pub fn subset_order(m: usize) -> Result<SubsetOrder> {
    if m == 0 {
        return Err(Error::InvalidInput("subset ordering needs m >= 1".into()));
    }
    guard("subset ordering size", m as u64, 20)?;
    let mut sets = vec![0u32];
    for k in 1..=m {
        let prev = *sets.last().expect("nonempty");
        let extra = (0..m).find(|t| prev >> t & 1 == 0).expect("previous level is not full");
        let target = prev | 1 << extra;
        // relabel {0..k-1} onto `target` and the rest onto its complement
        let mut relabel = Vec::with_capacity(m);
        relabel.extend((0..m).filter(|t| target >> t & 1 == 1));
        relabel.extend((0..m).filter(|t| target >> t & 1 == 0));
        for s in revolving_door(m, k) {
            sets.push((0..m).filter(|t| s >> t & 1 == 1).fold(0, |acc, t| acc | 1 << relabel[t]));
        }
    }
    let order = SubsetOrder { m, sets };
    order.validate()?;
    Ok(order)
}

/// The ill-conditioned ±1-matrix `A = LQ` of order `n = 2^m` and the data
/// certifying that column `i₀` of `A⁻¹` is huge. Indices are 0-based.
#[derive(Clone, Debug)]
pub struct AlonVuBundle {
    pub m: usize,
    pub n: usize,
    pub order: SubsetOrder,
    /// `q_ij = (−1)^{|α_i ∩ α_j|}`.
    pub q: IntMat,
    pub l: RatMat,
    pub a: IntMat,
    /// First index with `|α_{i₀}| = 3` (`1 + m + C(m,2)` 0-based).
    pub i0: usize,
    /// Solution of `Lx = e_{i₀}`.
    pub x: Vec<Rat>,
    /// `y = Qx/n`, column `i₀` of `A⁻¹`.
    pub y: Vec<Rat>,
    pub det_a: Int,
    /// `x_n/(2n)`.
    pub column_bound: Rat,
    /// Whether `|y_i| > x_n/(2n)` for every `i`.
    pub column_bound_holds: bool,
    /// `Π_{k=3..m} (2^{k−1} − 2)^{C(m,k)}`, a strict lower bound on `x_n`.
    pub product_bound: Int,
    /// `N − M` with `2^{N−M} ≤ product_bound`.
    pub log2_bound: f64,
}

impl AlonVuBundle {
    /// `χ(A) = max |y_i|` over the certified column.
    pub fn column_max(&self) -> Rat {
        self.y.iter().map(|v| v.abs()).max().expect("nonempty column")
    }
}

fn fail(what: String) -> Error {
    Error::Invariant(what)
}

/// Members of `F_i` (0-based `i ≥ 1`) as indices into the ordering.
fn f_set(order: &SubsetOrder, i: usize) -> Vec<usize> {
    let prev = order.sets[i - 1];
    let cur = order.sets[i];
    let delta = prev ^ cur;
    let union = prev | cur;
    (0..order.n())
        .filter(|&s| {
            let a = order.sets[s];
            if delta.count_ones() == 2 {
                a & !union == 0 && (a & delta).count_ones() == 1
            } else {
                a & !cur == 0
            }
        })
        .collect()
}

/// Builds the bundle and checks every invariant, returning
/// [`Error::Invariant`] on the first violation.
pub fn alon_vu(m: usize) -> Result<AlonVuBundle> {
    if m < 3 {
        return Err(Error::InvalidInput("the construction needs m >= 3".into()));
    }
    guard("Alon–Vũ exponent", m as u64, ALON_VU_MAX_M as u64)?;
    let order = subset_order(m)?;
    let n = order.n();
    let sets = &order.sets;

    let q = IntMat::from_fn(n, n, |i, j| {
        if (sets[i] & sets[j]).count_ones() % 2 == 0 {
            Int::one()
        } else {
            -Int::one()
        }
    });
    let q2 = mat_mul(&q, &q)?;
    if q2 != IntMat::from_fn(n, n, |i, j| if i == j { Int::from(n) } else { Int::zero() }) {
        return Err(fail("Q² ≠ nI".into()));
    }
    let det_q = det(&q)?;
    if det_q != Int::from(2).pow((m * n / 2) as u32) {
        return Err(fail(format!("det Q = {det_q}, expected n^(n/2)")));
    }

    let mut l = RatMat::zeros(n, n);
    l.set(0, 0, Rat::one());
    let mut f_sets = vec![Vec::new()];
    for i in 1..n {
        let k = sets[i].count_ones();
        let f = f_set(&order, i);
        if f.len() != 1 << k || !f.contains(&i) || !f.contains(&(i - 1)) {
            return Err(fail(format!("F_{} has the wrong shape", i + 1)));
        }
        let half = rat(1, 1 << (k - 1));
        for &j in &f {
            if j > i {
                return Err(fail(format!("L is not lower triangular in row {}", i + 1)));
            }
            let v = if j == i - 1 { &half - Rat::one() } else { half.clone() };
            l.set(i, j, v);
        }
        f_sets.push(f);
    }

    let a_rat = mat_mul(&l, &q.to_rat())?;
    let mut a = IntMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = a_rat.get(i, j);
            if !v.is_integer() || !v.to_integer().abs().is_one() {
                return Err(fail(format!("a_{},{} = {v} is not ±1", i + 1, j + 1)));
            }
            a.set(i, j, v.to_integer());
        }
    }
    let det_a = det(&a)?;
    if det_a != Int::from(2).pow(n as u32 - 1) {
        return Err(fail(format!("det A = {det_a}, expected 2^(n-1)")));
    }

    let i0 = 1 + m + binomial(m as u64, 2) as usize;
    if sets[i0].count_ones() != 3 || sets[i0 - 1].count_ones() != 2 {
        return Err(fail("α_{i₀} is not the first 3-set".into()));
    }

    // forward substitution
    let mut x = vec![Rat::zero(); n];
    for i in 0..n {
        let mut s = if i == i0 { Rat::one() } else { Rat::zero() };
        for j in 0..i {
            s -= l.get(i, j) * &x[j];
        }
        x[i] = s / l.get(i, i);
    }
    if x[i0] != rat_int(4) || x[..i0].iter().any(|v| !v.is_zero()) {
        return Err(fail(format!("x_{{i₀}} = {}, expected 4 after zeros", x[i0])));
    }
    for i in i0 + 1..n {
        let k = sets[i].count_ones();
        let p = 1i64 << (k - 1);
        // x_i = (2^{k−1} − 1)x_{i−1} − Σ_{F_i∖{α_i, α_{i−1}}} x_j
        let mut r = rat_int(p - 1) * &x[i - 1];
        for &j in &f_sets[i] {
            if j != i && j != i - 1 {
                r -= &x[j];
            }
        }
        if r != x[i] {
            return Err(fail(format!("recursion disagrees with L at index {}", i + 1)));
        }
        if !x[i].is_positive() || x[i] <= rat_int(p - 2) * &x[i - 1] {
            return Err(fail(format!("x_{} violates the growth bound", i + 1)));
        }
    }

    let x_n = x[n - 1].clone();
    let mut product_bound = Int::one();
    let mut m_sum = 0.0;
    for k in 3..=m {
        let c = binomial(m as u64, k as u64);
        product_bound *= Int::from((1i64 << (k - 1)) - 2).pow(c as u32);
        m_sum += 2.0 * c as f64 / (1u64 << (k - 2)) as f64;
    }
    if x_n <= rat_int(product_bound.clone()) {
        return Err(fail(format!("x_n = {x_n} does not exceed {product_bound}")));
    }
    let n_exp = (m * n / 2) as f64 - n as f64 - binomial(m as u64, 2) as f64;
    let log2_bound = n_exp - m_sum;
    let log2_product = product_bound.to_f64().expect("finite").log2();
    if log2_product + 1e-9 < log2_bound {
        return Err(fail("product bound is below 2^(N−M)".into()));
    }

    let nr = Rat::from_integer(Int::from(n));
    let y: Vec<Rat> = (0..n)
        .map(|i| {
            let mut s = Rat::zero();
            for j in 0..n {
                s += &x[j] * Rat::from_integer(q.get(i, j).clone());
            }
            s / &nr
        })
        .collect();
    for i in 0..n {
        let mut s = Rat::zero();
        for j in 0..n {
            s += &y[j] * Rat::from_integer(a.get(i, j).clone());
        }
        let want = if i == i0 { Rat::one() } else { Rat::zero() };
        if s != want {
            return Err(fail(format!("A·y ≠ e_i₀ in row {}", i + 1)));
        }
    }
    let column_bound = &x_n / (Rat::from_integer(Int::from(2 * n)));
    let column_bound_holds = y.iter().all(|v| v.abs() > column_bound);

    Ok(AlonVuBundle {
        m,
        n,
        order,
        q,
        l,
        a,
        i0,
        x,
        y,
        det_a,
        column_bound,
        column_bound_holds,
        product_bound,
        log2_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orderings() {
        assert_eq!(subset_order(1).unwrap().sets, vec![0, 1]);
        let o = subset_order(2).unwrap();
        let sizes: Vec<u32> = o.sets.iter().map(|s| s.count_ones()).collect();
        assert_eq!(sizes, vec![0, 1, 1, 2]);
        for m in 1..=8 {
            subset_order(m).unwrap().validate().unwrap();
        }
        let bad = SubsetOrder { m: 2, sets: vec![0, 1, 3, 2] };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn revolving_door_ends() {
        let r = revolving_door(5, 3);
        assert_eq!(r.len(), 10);
        assert_eq!(r[0], 0b00111);
        assert_eq!(*r.last().unwrap(), 0b10011);
        for w in r.windows(2) {
            assert_eq!((w[0] ^ w[1]).count_ones(), 2);
        }
    }

    #[test]
    fn small_bundle() {
        let b = alon_vu(3).unwrap();
        assert_eq!(b.n, 8);
        assert_eq!(b.det_a, Int::from(128));
        assert_eq!(b.x[b.i0], rat_int(4));
        assert_eq!(b.i0, 7);
        assert!(alon_vu(2).is_err());
    }
}
