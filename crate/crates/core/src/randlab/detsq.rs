use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use super::SeededRng;
use crate::error::{guard, Error, Result};
use crate::exact::{det, det_i64, Int, IntMat, Rat};

/// Largest order enumerated exhaustively by [`expected_det_sq`].
pub const DETSQ_EXHAUSTIVE_MAX: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignModel {
    /// Entries uniform in {0, 1}.
    ZeroOne,
    /// Entries uniform in {-1, +1}.
    PlusMinusOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetSqMode {
    Exhaustive,
    MonteCarlo { trials: u64, seed: u64 },
}

/// Sample mean of a nonnegative quantity.
#[derive(Clone, Debug, PartialEq)]
pub struct McMean {
    pub trials: u64,
    /// Exact sample mean.
    pub mean: Rat,
    /// Standard error of the mean from the sample variance.
    pub stderr: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DetSqResult {
    Exact(Rat),
    Estimate(McMean),
}

fn det_sq(bits: u64, n: usize, model: SignModel) -> Int {
    let m: Vec<i64> = (0..n * n)
        .map(|k| {
            let b = (bits >> k & 1) as i64;
            match model {
                SignModel::ZeroOne => b,
                SignModel::PlusMinusOne => 2 * b - 1,
            }
        })
        .collect();
    let d = match det_i64(&m, n) {
        Some(v) => Int::from(v),
        None => det(&IntMat::from_fn(n, n, |i, j| Int::from(m[i * n + j])))
            .expect("square by construction"),
    };
    &d * &d
}

/// Mean of `det(M)²` over uniformly random `n×n` matrices of the given
/// model, either exactly (all `2^{n²}` matrices) or by sampling.
pub fn expected_det_sq(n: usize, mode: DetSqMode, model: SignModel) -> Result<DetSqResult> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix order must be positive".into()));
    }
    match mode {
        DetSqMode::Exhaustive => {
            guard("exhaustive det² order", n as u64, DETSQ_EXHAUSTIVE_MAX as u64)?;
            let count = 1u64 << (n * n);
            let sum: Int = (0..count).map(|b| det_sq(b, n, model)).sum();
            Ok(DetSqResult::Exact(Rat::new(sum, Int::from(count))))
        }
        DetSqMode::MonteCarlo { trials, seed } => {
            if trials == 0 {
                return Err(Error::InvalidInput("at least one trial is required".into()));
            }
            if n * n > 64 {
                return Err(Error::InvalidInput(format!("order {n} too large for sampling")));
            }
            let rng = SeededRng::new(seed);
            let mask = if n * n == 64 { u64::MAX } else { (1u64 << (n * n)) - 1 };
            let parts = rng.run_chunks(trials, |r, k| {
                let (mut s, mut s2) = (Int::zero(), Int::zero());
                for _ in 0..k {
                    let v = det_sq(r.random::<u64>() & mask, n, model);
                    s2 += &v * &v;
                    s += v;
                }
                (s, s2)
            });
            let (mut s, mut s2) = (Int::zero(), Int::zero());
            for (a, b) in parts {
                s += a;
                s2 += b;
            }
            let t = Int::from(trials);
            let mean = Rat::new(s, t.clone());
            let m = mean.to_f64().unwrap_or(f64::NAN);
            let ex2 = Rat::new(s2, t).to_f64().unwrap_or(f64::NAN);
            let var = (ex2 - m * m).max(0.0);
            Ok(DetSqResult::Estimate(McMean {
                trials,
                mean,
                stderr: (var / trials as f64).sqrt(),
            }))
        }
    }
}
