use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::chi::{chi_witness, orient_chi_witness, Corner};
use super::williamson::check_01;
use crate::error::{Error, Result};
use crate::exact::{det, factorial, Int, IntMat, Rat};
use crate::hull::{vrep_to_hrep, Inequality};
use crate::polytope::{VertexSet01, MAX_DIM};
use crate::randlab::{rho_search, rho_table};

/// Largest order for which [`triang_lower_bound`] computes `ρ_d` by search
/// instead of taking it from the published table.
pub const TRIANG_SEARCH_MAX: usize = 5;

/// `c_j = (−1)^j det(V with column j deleted)` for a `(d−1)×d` matrix `V`:
/// `u·c = det[u; V]` for every `u`.
fn cofactor_normal(v: &IntMat) -> Result<Vec<Int>> {
    let d = v.cols();
    let mut c = Vec::with_capacity(d);
    for j in 0..d {
        let cols: Vec<usize> = (0..d).filter(|&t| t != j).collect();
        let rows: Vec<usize> = (0..v.rows()).collect();
        let sub = IntMat::from_fn(d - 1, d - 1, |r, s| v.get(rows[r], cols[s]).clone());
        let x = det(&sub)?;
        c.push(if j % 2 == 0 { x } else { -x });
    }
    Ok(c)
}

/// The simplex `conv{0, e_1, rows of V}` with `V = (A, e_1)` built from a
/// reoriented χ-witness `A`, and its facet through the rows of `V`.
#[derive(Clone, Debug)]
pub struct HugeCoefficientSimplex {
    /// The source with its extremal cofactor moved to position `(1,1)`.
    pub source: IntMat,
    pub chi: Rat,
    pub simplex: VertexSet01,
    /// `cᵗx ≥ 0`, primitive, taken from the cofactors of `V`.
    pub facet: Inequality,
}

pub fn huge_coefficient_simplex(source: &IntMat) -> Result<HugeCoefficientSimplex> {
    let k = check_01(source)?;
    let d = k + 1;
    if d > MAX_DIM {
        return Err(Error::InvalidInput(format!("simplex dimension {d} exceeds {MAX_DIM}")));
    }
    let w = chi_witness(source)?;
    let a = orient_chi_witness(source, Corner::First)?;
    let v = IntMat::from_fn(k, d, |i, j| {
        if j < k {
            a.get(i, j).clone()
        } else if i == 0 {
            Int::one()
        } else {
            Int::zero()
        }
    });
    let mut c = cofactor_normal(&v)?;
    if c[0].is_negative() {
        c.iter_mut().for_each(|x| *x = -x.clone());
    }
    if c[0].is_zero() {
        return Err(Error::Invariant("e_1 lies on the hyperplane".into()));
    }
    if Rat::new(c[0].abs(), c[d - 1].abs()) != w.value {
        return Err(Error::Invariant("|c_1/c_d| differs from χ".into()));
    }
    let row: Vec<Int> = std::iter::once(Int::zero()).chain(c).collect();
    let facet = Inequality::from_row(&row)?;

    let mut coords: Vec<Vec<u8>> = vec![vec![0; d]];
    let mut e1 = vec![0u8; d];
    e1[0] = 1;
    coords.push(e1);
    for i in 0..k {
        coords.push((0..d).map(|j| u8::from(v.get(i, j).is_one())).collect());
    }
    let simplex = VertexSet01::from_coords(d, &coords)?;
    if simplex.len() != d + 1 {
        return Err(Error::Invariant("simplex has repeated vertices".into()));
    }
    Ok(HugeCoefficientSimplex {
        source: a,
        chi: w.value,
        simplex,
        facet,
    })
}

/// Recomputes the facets of the simplex with the vertex-to-facet
/// conversion and checks that the cofactor facet is among them, exactly.
pub fn verify_huge_facet(h: &HugeCoefficientSimplex) -> Result<()> {
    let hrep = vrep_to_hrep(&h.simplex)?;
    if !hrep.equations.is_empty() || hrep.facets.len() != h.simplex.dim() + 1 {
        return Err(Error::Invariant("simplex is not full-dimensional".into()));
    }
    if !hrep.facets.contains(&h.facet) {
        return Err(Error::Invariant(format!(
            "cofactor facet {} not produced by the hull",
            h.facet
        )));
    }
    Ok(())
}

/// Squared distance of the first row `v_1` of `A` from the hyperplane
/// spanned by `0` and the other rows: `(v_1ᵗc)²/‖c‖²` with `c` the
/// cofactor normal of rows `2..d`.
pub fn flat_simplex_distance_sq(a: &IntMat) -> Result<Rat> {
    let d = check_01(a)?;
    let rest = IntMat::from_fn(d - 1, d, |i, j| a.get(i + 1, j).clone());
    let c = if d == 1 { vec![Int::one()] } else { cofactor_normal(&rest)? };
    let norm: Int = c.iter().map(|x| x * x).sum();
    if norm.is_zero() {
        return Err(Error::InvalidInput("rows 2..d do not span a hyperplane".into()));
    }
    let dot: Int = (0..d).map(|j| a.get(0, j) * &c[j]).sum();
    if dot.is_zero() {
        return Err(Error::Singular);
    }
    Ok(Rat::new(&dot * &dot, norm))
}

/// `⌈d!/ρ_d⌉`, a (weak) lower bound on the number of simplices in any
/// triangulation of the `d`-cube.
pub fn triang_lower_bound(d: usize) -> Result<Int> {
    if d == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    let rho = if d <= TRIANG_SEARCH_MAX {
        rho_search(d)?.value
    } else {
        rho_table(d).ok_or_else(|| {
            Error::InvalidInput(format!("maximal determinant for order {d} is not known"))
        })?
    };
    Ok(factorial(d as u64).div_ceil(&rho))
}
