//! Exact enumeration and Monte-Carlo estimation for random 0/1 and ±1
//! matrices, maximal determinants, and random 0/1-polytopes.

mod detsq;
mod experiment;
mod rho;
mod singular;

use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exact::{Int, Rat};

pub use detsq::{expected_det_sq, DetSqMode, DetSqResult, McMean, SignModel, DETSQ_EXHAUSTIVE_MAX};
pub use experiment::{random_polytope_experiment, PolytopeReport, UNIFORMITY_SUBSET_LIMIT};
pub use rho::{hadamard_verdict, rho_brute_force, rho_search, rho_table, HadamardCheck, RhoResult, RHO_SEARCH_MAX};
pub use singular::{
    estimate_pd, exact_md, exact_md_brute_force, komlos_lower_bound, singular_01, EXACT_MD_MAX,
};

/// Samples per substream. Sample `i` always comes from substream
/// `i / CHUNK`, so results do not depend on how chunks are scheduled.
pub const CHUNK: u64 = 4096;

/// A 64-bit seed expanded into independent counter-addressed substreams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeededRng {
    pub seed: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng { seed }
    }

    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }

    /// Runs `f(rng, count)` on consecutive chunks of `trials` samples and
    /// returns the per-chunk results in chunk order.
    pub fn run_chunks<T, F>(&self, trials: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&mut ChaCha8Rng, u64) -> T + Sync,
    {
        let chunks = trials.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let count = CHUNK.min(trials - c * CHUNK);
                f(&mut self.stream(c), count)
            })
            .collect()
    }
}

/// A Monte-Carlo proportion.
#[derive(Clone, Debug, PartialEq)]
pub struct McEstimate {
    pub trials: u64,
    pub hits: u64,
    /// Exactly `hits / trials`.
    pub estimate: Rat,
    /// `sqrt(p(1-p)/trials)` at the observed `p`.
    pub stderr: f64,
}

impl McEstimate {
    pub fn from_counts(trials: u64, hits: u64) -> Self {
        assert!(trials > 0 && hits <= trials, "invalid counts {hits}/{trials}");
        let p = hits as f64 / trials as f64;
        McEstimate {
            trials,
            hits,
            estimate: Rat::new(Int::from(hits), Int::from(trials)),
            stderr: (p * (1.0 - p) / trials as f64).sqrt(),
        }
    }

    pub fn value(&self) -> f64 {
        self.estimate.to_f64().unwrap_or(f64::NAN)
    }

    /// Whether the estimate lies within `k` standard errors of `reference`,
    /// using the standard error implied by the reference probability.
    pub fn agrees_with(&self, reference: f64, k: f64) -> bool {
        let sigma = (reference * (1.0 - reference) / self.trials as f64).sqrt();
        let diff = (self.value() - reference).abs();
        if sigma == 0.0 {
            diff == 0.0
        } else {
            diff <= k * sigma
        }
    }
}

impl std::fmt::Display for McEstimate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}/{} = {:.6} (stderr {:.6})",
            self.hits,
            self.trials,
            self.value(),
            self.stderr
        )
    }
}
