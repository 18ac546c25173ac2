//! Exact scalars, dense linear algebra and linear programming.

mod lp;
mod matrix;
mod small;

pub use lp::{LpOutcome, LpProblem};
pub use matrix::{
    det, int_nullspace, inverse_adjugate, mat_mul, nullspace, rank, rank_int, rat_inverse, rref,
    IntMat, Mat, RatMat, Rref,
};
pub use small::{det_i64, rank_i64};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: impl Into<Int>) -> Rat {
    Rat::from_integer(v.into())
}

/// Divides an integer row by the gcd of its entries. Zero rows are left alone.
pub fn make_primitive(row: &mut [Int]) {
    let mut g = Int::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// Scales a rational row by a positive factor so it becomes a primitive
/// integer row (direction and orientation are preserved).
pub fn primitive_int_row(row: &[Rat]) -> Vec<Int> {
    let mut l = Int::one();
    for x in row {
        l = l.lcm(x.denom());
    }
    let mut out: Vec<Int> = row
        .iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect();
    make_primitive(&mut out);
    out
}

pub fn abs_max(values: &[Int]) -> Int {
    values.iter().map(|v| v.abs()).max().unwrap_or_else(Int::zero)
}

pub fn factorial(n: u64) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
