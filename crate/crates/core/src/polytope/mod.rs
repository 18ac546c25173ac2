//! Vertex sets of 0/1-polytopes.
//!
//! A vertex is stored as a `u128` word with coordinate 1 in the most
//! significant of the `d` used bits, so sorting words numerically sorts
//! vertices lexicographically by coordinates.

mod affine;
mod membership;
mod symmetry;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use affine::{affine_dim, make_full_dimensional, AffineHull, FullDimRecord};
pub use membership::{contains_point, convex_weights, is_centered};
pub use symmetry::{
    apply_symmetry, canonical_key, congruence_fingerprint, for_each_image, is_01_equivalent,
    orbit_min,
    CanonicalKey, CubeSymmetry, CANONICAL_MAX_DIM,
};

pub type Word = u128;

pub const MAX_DIM: usize = 128;

/// Word bit holding coordinate `i` (0-based) in dimension `dim`.
#[inline]
pub fn coord_bit(dim: usize, i: usize) -> Word {
    1 << (dim - 1 - i)
}

pub fn word_from_coords(coords: &[u8]) -> Result<Word> {
    if coords.len() > MAX_DIM {
        return Err(Error::InvalidInput(format!(
            "dimension {} exceeds {MAX_DIM}",
            coords.len()
        )));
    }
    let d = coords.len();
    let mut w = 0;
    for (i, &c) in coords.iter().enumerate() {
        match c {
            0 => {}
            1 => w |= coord_bit(d, i),
            other => {
                return Err(Error::InvalidInput(format!(
                    "coordinate {i} is {other}, expected 0 or 1"
                )))
            }
        }
    }
    Ok(w)
}

pub fn word_to_string(dim: usize, w: Word) -> String {
    (0..dim)
        .map(|i| if w & coord_bit(dim, i) != 0 { '1' } else { '0' })
        .collect()
}

/// Parses a string such as `"0110"` into a word.
pub fn word_from_str(s: &str) -> Result<Word> {
    let coords: Vec<u8> = s
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::InvalidInput(format!("bad bit character {c:?} in {s:?}"))),
        })
        .collect::<Result<_>>()?;
    word_from_coords(&coords)
}

/// A nonempty, duplicate-free set of 0/1-vectors in dimension `dim`, kept in
/// increasing word order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet01 {
    dim: usize,
    words: Vec<Word>,
}

impl VertexSet01 {
    /// Builds a vertex set; duplicate words are merged.
    pub fn from_words(dim: usize, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidInput(format!(
                "ambient dimension {dim} outside 1..={MAX_DIM}"
            )));
        }
        let mut words: Vec<Word> = words.into_iter().collect();
        if let Some(&w) = words.iter().find(|&&w| dim < MAX_DIM && w >> dim != 0) {
            return Err(Error::InvalidInput(format!(
                "word {w:#b} has more than {dim} bits"
            )));
        }
        words.sort_unstable();
        words.dedup();
        if words.is_empty() {
            return Err(Error::InvalidInput("empty vertex set".into()));
        }
        Ok(VertexSet01 { dim, words })
    }

    pub fn from_coords<R: AsRef<[u8]>>(dim: usize, rows: &[R]) -> Result<Self> {
        let mut words = Vec::with_capacity(rows.len());
        for r in rows {
            let r = r.as_ref();
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            words.push(word_from_coords(r)?);
        }
        Self::from_words(dim, words)
    }

    pub fn from_strs(strs: &[&str]) -> Result<Self> {
        let dim = strs.first().map_or(0, |s| s.len());
        if let Some(bad) = strs.iter().find(|s| s.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        Self::from_words(dim, strs.iter().map(|s| word_from_str(s)).collect::<Result<Vec<_>>>()?)
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn coord(&self, v: usize, i: usize) -> bool {
        self.words[v] & coord_bit(self.dim, i) != 0
    }

    pub fn coords(&self, v: usize) -> Vec<u8> {
        (0..self.dim).map(|i| u8::from(self.coord(v, i))).collect()
    }

    pub fn int_rows(&self) -> Vec<Vec<i64>> {
        (0..self.len())
            .map(|v| (0..self.dim).map(|i| i64::from(self.coord(v, i))).collect())
            .collect()
    }

    pub fn index_of(&self, w: Word) -> Option<usize> {
        self.words.binary_search(&w).ok()
    }

    pub fn contains_word(&self, w: Word) -> bool {
        self.index_of(w).is_some()
    }

    /// The vertices selected by `set` (indices into this vertex list).
    pub fn subset(&self, set: &FixedBitSet) -> Result<VertexSet01> {
        Self::from_words(self.dim, set.ones().map(|i| self.words[i]))
    }

    pub fn index_set(&self, words: &[Word]) -> Result<FixedBitSet> {
        let mut s = FixedBitSet::with_capacity(self.len());
        for &w in words {
            let i = self.index_of(w).ok_or_else(|| {
                Error::InvalidInput(format!("{} is not a vertex", word_to_string(self.dim, w)))
            })?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn all_indices(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        s.insert_range(..);
        s
    }

    /// Affine dimension of the vertex subset `set`.
    pub fn subset_affine_dim(&self, set: &FixedBitSet) -> usize {
        let mut it = set.ones();
        let Some(first) = it.next() else {
            return 0;
        };
        let base = self.words[first];
        let rows: Vec<Vec<i64>> = it
            .map(|v| {
                let w = self.words[v];
                (0..self.dim)
                    .map(|i| {
                        let b = coord_bit(self.dim, i);
                        i64::from(w & b != 0) - i64::from(base & b != 0)
                    })
                    .collect()
            })
            .collect();
        crate::exact::rank_i64(&rows)
    }
}

impl fmt::Display for VertexSet01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .words
            .iter()
            .map(|&w| word_to_string(self.dim, w))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

impl fmt::Debug for VertexSet01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet01(d={}, {})", self.dim, self)
    }
}
