//! Facet descriptions of 0/1-polytopes and the combinatorics derived from
//! them.
//!
//! Two independent routes compute facets: Fourier–Motzkin elimination of the
//! lifted simplex ([`vrep_to_hrep`]) and enumeration of hyperplanes spanned
//! by vertex subsets ([`facets_by_span`]). Both return the same normal forms.

mod combinatorial;
mod faces;
mod fm;
mod graph;
mod volume;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};

use crate::error::{guard, Error, Result};
use crate::exact::{binomial, nullspace, primitive_int_row, rank_i64, Int, Mat, Rat};
use crate::polytope::{affine_dim, coord_bit, AffineHull, VertexSet01, Word};

pub use combinatorial::{combinatorial_key, COMBINATORIAL_MAX};
pub use faces::{
    neighborliness, simpliciality, smallest_face, DEFAULT_FACE_LIMIT, DEFAULT_SUBSET_LIMIT,
};
pub use fm::fm_eliminate;
pub use graph::{
    connectivity_at_least, diameter, expansion_holds, graph, holt_klee, vertex_connectivity,
    PolyGraph, EXPANSION_MAX_VERTICES,
};
pub use volume::normalized_volume;

/// Default bound on the number of vertex subsets enumerated by
/// [`facets_by_span`].
pub const DEFAULT_SPAN_LIMIT: u64 = 2_000_000;

/// `c0 + Σ coeffs[i]·x_i ≥ 0` (or `= 0` when used as an equation), stored
/// as a primitive integer row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub c0: Int,
    pub coeffs: Vec<Int>,
}

impl Inequality {
    /// Builds from a row `(c0, c1, .., cd)` of integers, dividing by the gcd.
    pub fn from_row(row: &[Int]) -> Result<Self> {
        let rat: Vec<Rat> = row.iter().cloned().map(Rat::from_integer).collect();
        Ok(normalize(&rat)?.0)
    }

    pub fn from_i64(row: &[i64]) -> Result<Self> {
        Self::from_row(&row.iter().map(|&x| Int::from(x)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn row(&self) -> Vec<Int> {
        std::iter::once(self.c0.clone())
            .chain(self.coeffs.iter().cloned())
            .collect()
    }

    pub fn rat_row(&self) -> Vec<Rat> {
        self.row().into_iter().map(Rat::from_integer).collect()
    }

    /// Value of the affine functional at a cube vertex.
    pub fn eval_word(&self, w: Word) -> Int {
        let d = self.dim();
        let mut v = self.c0.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if w & coord_bit(d, i) != 0 {
                v += c;
            }
        }
        v
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut v = Rat::from_integer(self.c0.clone());
        for (c, xi) in self.coeffs.iter().zip(x) {
            v += xi * c;
        }
        v
    }

    pub fn greatest_coefficient(&self) -> Int {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }

    /// Vertices of `p` on which the functional vanishes.
    pub fn tight_set(&self, p: &VertexSet01) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(p.len());
        for (i, &w) in p.words().iter().enumerate() {
            if self.eval_word(w).is_zero() {
                s.insert(i);
            }
        }
        s
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c0)?;
        for c in &self.coeffs {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Scales a rational row `(c0, c1, .., cd)` to a primitive integer row
/// without changing its orientation. Returns it with its greatest
/// coefficient `max |c_i|` over `i ≥ 1`.
pub fn normalize(raw: &[Rat]) -> Result<(Inequality, Int)> {
    if raw.len() < 2 || raw[1..].iter().all(Zero::is_zero) {
        return Err(Error::InvalidInput(
            "inequality has no nonzero variable coefficient".into(),
        ));
    }
    let mut row = primitive_int_row(raw).into_iter();
    let c0 = row.next().expect("nonempty row");
    let ineq = Inequality {
        c0,
        coeffs: row.collect(),
    };
    let g = ineq.greatest_coefficient();
    Ok((ineq, g))
}

/// Affine hull equations plus one inequality per facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub ambient: usize,
    pub equations: Vec<Inequality>,
    pub facets: Vec<Inequality>,
}

impl HRep {
    /// Dimension of the described polytope.
    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn greatest_coefficient(&self) -> Int {
        self.facets
            .iter()
            .map(Inequality::greatest_coefficient)
            .max()
            .unwrap_or_else(Int::zero)
    }

    pub fn contains_word(&self, w: Word) -> bool {
        self.equations.iter().all(|e| e.eval_word(w).is_zero())
            && self.facets.iter().all(|f| !f.eval_word(w).is_negative())
    }
}

/// Reduces an affine functional modulo the hull equations and scales it to
/// the unique primitive representative.
pub(crate) fn facet_normal_form(hull: &AffineHull, row: &[Rat]) -> Result<Inequality> {
    let reduced = hull.reduce(row);
    normalize(&reduced)
        .map(|(i, _)| i)
        .map_err(|_| Error::Invariant("facet functional is constant on the affine hull".into()))
}

fn hull_equations(hull: &AffineHull) -> Vec<Inequality> {
    hull.equations_int()
        .into_iter()
        .map(|r| {
            let mut it = r.into_iter();
            let c0 = it.next().expect("nonempty");
            Inequality {
                c0,
                coeffs: it.collect(),
            }
        })
        .collect()
}

/// Facet description by Fourier–Motzkin elimination of the lifted simplex,
/// filtering redundant rows after every step.
pub fn vrep_to_hrep(p: &VertexSet01) -> Result<HRep> {
    let hull = AffineHull::of_vertices(p);
    let rows = fm::lifted_elimination(p)?;
    let mut facets = BTreeSet::new();
    for r in rows {
        let rat: Vec<Rat> = r.into_iter().map(Rat::from_integer).collect();
        facets.insert(facet_normal_form(&hull, &rat)?);
    }
    Ok(HRep {
        ambient: p.dim(),
        equations: hull_equations(&hull),
        facets: facets.into_iter().collect(),
    })
}

/// Keeps the candidates that define facets of `conv(P)`, one per facet.
pub fn redundancy_filter(candidates: &[Inequality], p: &VertexSet01) -> Result<Vec<Inequality>> {
    let hull = AffineHull::of_vertices(p);
    let dim = hull.dimension();
    let mut out = BTreeSet::new();
    for (index, c) in candidates.iter().enumerate() {
        if c.dim() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: c.dim(),
            });
        }
        if let Some(vertex) = p.words().iter().position(|&w| c.eval_word(w).is_negative()) {
            return Err(Error::InvalidCandidate { index, vertex });
        }
        let tight = c.tight_set(p);
        if dim == 0 || tight.count_ones(..) < dim || p.subset_affine_dim(&tight) != dim - 1 {
            continue;
        }
        out.insert(facet_normal_form(&hull, &c.rat_row())?);
    }
    Ok(out.into_iter().collect())
}

/// Facet description by enumerating affinely independent `dim(P)`-subsets
/// of vertices and keeping the valid hyperplanes through them.
pub fn facets_by_span(p: &VertexSet01, limit: u64) -> Result<HRep> {
    let hull = AffineHull::of_vertices(p);
    let dim = hull.dimension();
    let (d, n) = (p.dim(), p.len());
    let equations = hull_equations(&hull);
    if dim == 0 {
        return Ok(HRep {
            ambient: d,
            equations,
            facets: Vec::new(),
        });
    }
    guard("span subsets", binomial(n as u64, dim as u64), limit)?;
    let rows = p.int_rows();
    let mut facets = BTreeSet::new();
    let mut seen_tight: HashSet<FixedBitSet> = HashSet::new();
    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        let lifted: Vec<Vec<i64>> = subset
            .iter()
            .map(|&v| std::iter::once(1).chain(rows[v].iter().copied()).collect())
            .collect();
        if rank_i64(&lifted) == dim {
            if let Some(ineq) = span_facet(p, &hull, &lifted, &mut seen_tight)? {
                facets.insert(ineq);
            }
        }
        // next combination in lexicographic order
        let Some(i) = (0..dim).rev().find(|&i| subset[i] < n - dim + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..dim {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(HRep {
        ambient: d,
        equations,
        facets: facets.into_iter().collect(),
    })
}

fn span_facet(
    p: &VertexSet01,
    hull: &AffineHull,
    lifted: &[Vec<i64>],
    seen_tight: &mut HashSet<FixedBitSet>,
) -> Result<Option<Inequality>> {
    let m = Mat::from_fn(lifted.len(), lifted[0].len(), |i, j| {
        Rat::from_integer(Int::from(lifted[i][j]))
    });
    let Some(normal) = nullspace(&m)
        .into_iter()
        .map(|v| hull.reduce(&v))
        .find(|v| v[1..].iter().any(|x| !x.is_zero()))
    else {
        return Err(Error::Invariant(
            "spanned hyperplane coincides with the affine hull".into(),
        ));
    };
    let (mut ineq, _) = normalize(&normal)?;
    let values: Vec<Int> = p.words().iter().map(|&w| ineq.eval_word(w)).collect();
    let has_pos = values.iter().any(Signed::is_positive);
    let has_neg = values.iter().any(Signed::is_negative);
    if has_pos && has_neg {
        return Ok(None);
    }
    if has_neg {
        ineq.c0 = -ineq.c0;
        ineq.coeffs.iter_mut().for_each(|c| *c = -&*c);
    }
    let tight = ineq.tight_set(p);
    if !seen_tight.insert(tight.clone()) {
        return Ok(None);
    }
    if p.subset_affine_dim(&tight) + 1 != hull.dimension() {
        return Err(Error::Invariant("spanned facet has wrong dimension".into()));
    }
    Ok(Some(ineq))
}

/// Vertex–facet incidences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    /// For each vertex, the facets it lies on.
    pub vertex_facets: Vec<FixedBitSet>,
    /// For each facet, the vertices on it.
    pub facet_vertices: Vec<FixedBitSet>,
}

impl IncidenceMatrix {
    pub fn n_vertices(&self) -> usize {
        self.vertex_facets.len()
    }

    pub fn n_facets(&self) -> usize {
        self.facet_vertices.len()
    }

    pub fn get(&self, v: usize, f: usize) -> bool {
        self.vertex_facets[v].contains(f)
    }
}

pub fn incidence(p: &VertexSet01, h: &HRep) -> IncidenceMatrix {
    let facet_vertices: Vec<FixedBitSet> = h.facets.iter().map(|f| f.tight_set(p)).collect();
    let mut vertex_facets = vec![FixedBitSet::with_capacity(h.facets.len()); p.len()];
    for (f, set) in facet_vertices.iter().enumerate() {
        for v in set.ones() {
            vertex_facets[v].insert(f);
        }
    }
    IncidenceMatrix {
        vertex_facets,
        facet_vertices,
    }
}

/// Convenience: facets of `conv(P)` with the dimension of `P`.
pub fn hull_with_dim(p: &VertexSet01) -> Result<(HRep, usize)> {
    let h = vrep_to_hrep(p)?;
    let dim = affine_dim(p);
    if h.dim() != dim {
        return Err(Error::Invariant(format!(
            "hull dimension {} differs from affine dimension {dim}",
            h.dim()
        )));
    }
    Ok((h, dim))
}
