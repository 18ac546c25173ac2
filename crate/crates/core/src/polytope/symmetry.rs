use std::fmt;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{coord_bit, VertexSet01, Word};
use crate::error::{guard, Error, Result};

/// Largest dimension for which canonical keys are computed (group order
/// 2^6 * 6! = 46080).
pub const CANONICAL_MAX_DIM: usize = 6;

/// A symmetry of the unit cube: coordinate `i` moves to position `perm[i]`,
/// then the coordinates in `mask` are complemented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeSymmetry {
    perm: Vec<usize>,
    mask: Word,
}

impl CubeSymmetry {
    /// `mask` uses the vertex word encoding of dimension `perm.len()`.
    pub fn new(perm: Vec<usize>, mask: Word) -> Result<Self> {
        let d = perm.len();
        if d == 0 || d > super::MAX_DIM {
            return Err(Error::InvalidInput(format!("symmetry of dimension {d}")));
        }
        let mut seen = vec![false; d];
        for &p in &perm {
            if p >= d || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidInput(format!(
                    "{perm:?} is not a permutation of 0..{d}"
                )));
            }
        }
        if d < super::MAX_DIM && mask >> d != 0 {
            return Err(Error::InvalidInput(format!("mask {mask:#b} exceeds {d} bits")));
        }
        Ok(CubeSymmetry { perm, mask })
    }

    pub fn identity(d: usize) -> Self {
        CubeSymmetry {
            perm: (0..d).collect(),
            mask: 0,
        }
    }

    /// Complements the coordinates set in `mask`; `switching(d, v)` maps the
    /// vertex `v` to the origin.
    pub fn switching(d: usize, mask: Word) -> Result<Self> {
        Self::new((0..d).collect(), mask)
    }

    pub fn random<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Self {
        let mut perm: Vec<usize> = (0..d).collect();
        perm.shuffle(rng);
        let mask = if d == super::MAX_DIM {
            rng.random::<u128>()
        } else {
            rng.random::<u128>() & ((1 << d) - 1)
        };
        CubeSymmetry { perm, mask }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn mask(&self) -> Word {
        self.mask
    }

    pub fn apply_word(&self, w: Word) -> Word {
        let d = self.dim();
        let mut y = 0;
        for (i, &p) in self.perm.iter().enumerate() {
            if w & coord_bit(d, i) != 0 {
                y |= coord_bit(d, p);
            }
        }
        y ^ self.mask
    }
}

pub fn apply_symmetry(p: &VertexSet01, g: &CubeSymmetry) -> Result<VertexSet01> {
    if g.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: g.dim(),
        });
    }
    VertexSet01::from_words(p.dim(), p.words().iter().map(|&w| g.apply_word(w)))
}

/// Lexicographically least characteristic vector over the symmetry orbit.
///
/// Bit `2^d - 1 - w` of `bits` is set iff vertex `w` is present, so reading
/// the `2^d` bits from the most significant end lists vertices
/// `0, 1, .., 2^d - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    pub dim: usize,
    pub bits: u64,
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 1usize << self.dim;
        for p in 0..n {
            let b = (self.bits >> (n - 1 - p)) & 1;
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

/// Every group element as a permutation of the `2^d` cube points,
/// flattened (`2^d` entries per element).
fn point_maps(d: usize) -> &'static [u8] {
    static CACHE: [OnceLock<Vec<u8>>; CANONICAL_MAX_DIM + 1] =
        [const { OnceLock::new() }; CANONICAL_MAX_DIM + 1];
    CACHE[d].get_or_init(|| {
        let n = 1usize << d;
        let perms = permutations(d);
        let mut out = Vec::with_capacity(perms.len() * n * n);
        for perm in perms {
            for mask in 0..n as Word {
                let g = CubeSymmetry {
                    perm: perm.clone(),
                    mask,
                };
                out.extend((0..n as Word).map(|w| g.apply_word(w) as u8));
            }
        }
        out
    })
}

fn char_bits(d: usize, words: impl Iterator<Item = Word>) -> u64 {
    let n = 1u32 << d;
    words.fold(0u64, |acc, w| acc | 1u64 << (n - 1 - w as u32))
}

/// Calls `f` with the characteristic vector of every image of `bits` under
/// the symmetry group (images repeat when the stabilizer is nontrivial).
pub fn for_each_image(d: usize, bits: u64, mut f: impl FnMut(u64)) {
    let n = 1usize << d;
    let points: Vec<usize> = (0..n).filter(|&p| bits >> (n - 1 - p) & 1 == 1).collect();
    for map in point_maps(d).chunks_exact(n) {
        let img = points
            .iter()
            .fold(0u64, |acc, &p| acc | 1u64 << (n - 1 - map[p] as usize));
        f(img);
    }
}

/// Least characteristic vector in the orbit of `bits` (dimension `d <= 6`).
pub fn orbit_min(d: usize, bits: u64) -> u64 {
    let mut best = u64::MAX;
    for_each_image(d, bits, |img| best = best.min(img));
    best
}

pub fn canonical_key(p: &VertexSet01) -> Result<CanonicalKey> {
    let d = p.dim();
    guard("canonical key dimension", d as u64, CANONICAL_MAX_DIM as u64)?;
    let bits = char_bits(d, p.words().iter().copied());
    Ok(CanonicalKey {
        dim: d,
        bits: orbit_min(d, bits),
    })
}

pub fn is_01_equivalent(p: &VertexSet01, q: &VertexSet01) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    if p.len() != q.len() {
        return Ok(false);
    }
    Ok(canonical_key(p)? == canonical_key(q)?)
}

/// Sorted multiset of pairwise squared Euclidean distances. Equal
/// fingerprints mean congruence is not excluded; they do not prove it.
pub fn congruence_fingerprint(p: &VertexSet01) -> Vec<u64> {
    let w = p.words();
    let mut out = Vec::with_capacity(w.len() * w.len().saturating_sub(1) / 2);
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            out.push(u64::from((w[i] ^ w[j]).count_ones()));
        }
    }
    out.sort_unstable();
    out
}
