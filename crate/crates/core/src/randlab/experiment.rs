use rand::Rng;

use super::{McEstimate, SeededRng};
use crate::error::{Error, Result};
use crate::exact::{binomial, rank_i64, rat};
use crate::polytope::{contains_point, VertexSet01, Word, MAX_DIM};

/// Largest number of `(d+1)`-subsets examined per trial for the uniformity
/// rate; beyond it the rate is not reported.
pub const UNIFORMITY_SUBSET_LIMIT: u64 = 10_000;

/// Rates observed over random point sets of `n` uniform 0/1-vectors in `ℝ^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolytopeReport {
    pub d: usize,
    pub n: usize,
    pub trials: u64,
    /// All `n` points distinct.
    pub distinct: McEstimate,
    /// The points span `ℝ^d` affinely (for `n = d+1`: a `d`-simplex).
    pub spanning: McEstimate,
    /// `½·1` lies in the convex hull.
    pub containment: McEstimate,
    /// Every `d+1` of the points are affinely independent; `None` when the
    /// subset count exceeds [`UNIFORMITY_SUBSET_LIMIT`].
    pub uniformity: Option<McEstimate>,
}

impl PolytopeReport {
    /// One `key=value` record per line.
    pub fn to_kv(&self) -> String {
        let mut out = format!("d={}\nn={}\ntrials={}\n", self.d, self.n, self.trials);
        let mut line = |k: &str, e: Option<&McEstimate>| match e {
            Some(e) => out.push_str(&format!(
                "{k}_hits={}\n{k}_rate={:.6}\n{k}_stderr={:.6}\n",
                e.hits,
                e.value(),
                e.stderr
            )),
            None => out.push_str(&format!("{k}_rate=n/a\n")),
        };
        line("distinct", Some(&self.distinct));
        line("spanning", Some(&self.spanning));
        line("containment", Some(&self.containment));
        line("uniformity", self.uniformity.as_ref());
        out
    }
}

fn affine_rank(points: &[Word], d: usize) -> usize {
    let Some((&base, rest)) = points.split_first() else {
        return 0;
    };
    let rows: Vec<Vec<i64>> = rest
        .iter()
        .map(|&w| {
            (0..d)
                .map(|i| (w >> i & 1) as i64 - (base >> i & 1) as i64)
                .collect()
        })
        .collect();
    rank_i64(&rows)
}

fn all_subsets_independent(points: &[Word], d: usize) -> bool {
    let (n, k) = (points.len(), d + 1);
    if n < k {
        return affine_rank(points, d) + 1 == n;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf = vec![0; k];
    loop {
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = points[i];
        }
        if affine_rank(&buf, d) != d {
            return false;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn random_polytope_experiment(
    d: usize,
    n: usize,
    trials: u64,
    rng: &SeededRng,
) -> Result<PolytopeReport> {
    if d == 0 || d > MAX_DIM || n == 0 {
        return Err(Error::InvalidInput(format!("experiment with d={d}, n={n}")));
    }
    if trials == 0 {
        return Err(Error::InvalidInput("at least one trial is required".into()));
    }
    let uniform = binomial(n as u64, d as u64 + 1) <= UNIFORMITY_SUBSET_LIMIT;
    let mask: Word = if d == MAX_DIM { Word::MAX } else { (1 << d) - 1 };
    let half = vec![rat(1, 2); d];
    let parts = rng.run_chunks(trials, |r, count| -> Result<[u64; 4]> {
        let mut c = [0u64; 4];
        let mut pts = vec![0; n];
        for _ in 0..count {
            pts.iter_mut().for_each(|w| *w = r.random::<u128>() & mask);
            let mut sorted = pts.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() == n {
                c[0] += 1;
            }
            if affine_rank(&sorted, d) == d {
                c[1] += 1;
            }
            let set = VertexSet01::from_words(d, sorted)?;
            if contains_point(&set, &half)? {
                c[2] += 1;
            }
            if uniform && all_subsets_independent(&pts, d) {
                c[3] += 1;
            }
        }
        Ok(c)
    });
    let mut total = [0u64; 4];
    for p in parts {
        let p = p?;
        for (t, x) in total.iter_mut().zip(p) {
            *t += x;
        }
    }
    Ok(PolytopeReport {
        d,
        n,
        trials,
        distinct: McEstimate::from_counts(trials, total[0]),
        spanning: McEstimate::from_counts(trials, total[1]),
        containment: McEstimate::from_counts(trials, total[2]),
        uniformity: uniform.then(|| McEstimate::from_counts(trials, total[3])),
    })
}
