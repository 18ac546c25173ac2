use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{make_primitive, rank_i64, Int};
use crate::polytope::VertexSet01;

/// One Fourier–Motzkin step on rows `(c0, c1, .., cm)` read as
/// `c0 + Σ c_i x_i ≥ 0`: eliminates variable `var` (0-based), keeping the
/// rows that do not involve it and combining every row with a positive
/// coefficient with every row with a negative one.
pub fn fm_eliminate(rows: &[Vec<Int>], var: usize) -> Vec<Vec<Int>> {
    let c = var + 1;
    let mut out = Vec::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for r in rows {
        if r[c].is_positive() {
            pos.push(r);
        } else if r[c].is_negative() {
            neg.push(r);
        } else {
            out.push(drop_column(r.clone(), c));
        }
    }
    for p in &pos {
        for q in &neg {
            out.push(drop_column(combine(p, q, c), c));
        }
    }
    out
}

fn drop_column(mut r: Vec<Int>, c: usize) -> Vec<Int> {
    r.remove(c);
    make_primitive(&mut r);
    r
}

/// `(-q_c)·p + p_c·q`, which has a zero in column `c`.
fn combine(p: &[Int], q: &[Int], c: usize) -> Vec<Int> {
    let (a, b) = (-&q[c], p[c].clone());
    p.iter().zip(q).map(|(x, y)| &a * x + &b * y).collect()
}

struct Row {
    coef: Vec<Int>,
    tight: FixedBitSet,
}

/// The lifted system for `conv(P)`: variables `x` (d of them) and weights
/// `y` (one per vertex) with `x = Σ y_j v_j`, `Σ y_j = 1`, `y ≥ 0`.
/// Every intermediate system describes the projection of the lifted
/// simplex, whose vertices are the points `(v_j, e_j[..k])`; the filter
/// keeps only rows whose tight points span a facet of that projection.
struct Lifted<'a> {
    p: &'a VertexSet01,
    pts: Vec<Vec<i64>>,
}

impl Lifted<'_> {
    fn value(&self, row: &[Int], k: usize, j: usize) -> Int {
        let d = self.p.dim();
        let mut v = row[0].clone();
        for (i, &x) in self.pts[j].iter().enumerate() {
            if x != 0 {
                v += &row[1 + i];
            }
        }
        if j < k {
            v += &row[1 + d + j];
        }
        v
    }

    /// Projected point `j` with `k` weight coordinates.
    fn point(&self, k: usize, j: usize) -> impl Iterator<Item = i64> + '_ {
        self.pts[j]
            .iter()
            .copied()
            .chain((0..k).map(move |i| i64::from(i == j)))
    }

    fn affine_dim(&self, k: usize, set: impl Iterator<Item = usize>) -> usize {
        let idx: Vec<usize> = set.collect();
        let Some((&first, rest)) = idx.split_first() else {
            return 0;
        };
        let base: Vec<i64> = self.point(k, first).collect();
        let rows: Vec<Vec<i64>> = rest
            .iter()
            .map(|&j| self.point(k, j).zip(&base).map(|(a, b)| a - b).collect())
            .collect();
        rank_i64(&rows)
    }

    fn tight(&self, row: &[Int], k: usize) -> Result<FixedBitSet> {
        let n = self.pts.len();
        let mut s = FixedBitSet::with_capacity(n);
        for j in 0..n {
            let v = self.value(row, k, j);
            if v.is_negative() {
                return Err(Error::Invariant(
                    "eliminated system is violated by a lifted vertex".into(),
                ));
            }
            if v.is_zero() {
                s.insert(j);
            }
        }
        Ok(s)
    }

    /// Keeps one row per facet of the projection with `k` weights.
    fn filter(&self, rows: Vec<Row>, k: usize) -> Vec<Row> {
        let n = self.pts.len();
        let dim = self.affine_dim(k, 0..n);
        if dim == 0 {
            return Vec::new();
        }
        let mut dims: HashMap<FixedBitSet, bool> = HashMap::new();
        let mut out = Vec::new();
        for r in rows {
            if r.tight.count_ones(..) < dim || dims.contains_key(&r.tight) {
                continue;
            }
            let ok = self.affine_dim(k, r.tight.ones()) == dim - 1;
            dims.insert(r.tight.clone(), ok);
            if ok {
                out.push(r);
            }
        }
        out
    }
}

/// Runs the elimination and returns facet-defining rows `(c0, c1, .., cd)`
/// of `conv(P)` (not yet reduced modulo the affine hull).
pub(crate) fn lifted_elimination(p: &VertexSet01) -> Result<Vec<Vec<Int>>> {
    let (d, n) = (p.dim(), p.len());
    let lifted = Lifted {
        p,
        pts: p.int_rows(),
    };
    let width = 1 + d + n;
    let mut eqs: Vec<Vec<Int>> = Vec::with_capacity(d + 1);
    for i in 0..d {
        let mut e = vec![Int::zero(); width];
        e[1 + i] = Int::from(1);
        for j in 0..n {
            if lifted.pts[j][i] != 0 {
                e[1 + d + j] = Int::from(-1);
            }
        }
        eqs.push(e);
    }
    let mut e = vec![Int::from(1); width];
    e[0] = Int::from(-1);
    e[1..=d].iter_mut().for_each(|x| *x = Int::zero());
    eqs.push(e);

    let mut rows: Vec<Row> = (0..n)
        .map(|j| {
            let mut coef = vec![Int::zero(); width];
            coef[1 + d + j] = Int::from(1);
            let mut tight = FixedBitSet::with_capacity(n);
            tight.insert_range(..);
            tight.set(j, false);
            Row { coef, tight }
        })
        .collect();
    rows = lifted.filter(rows, n);

    for k in (0..n).rev() {
        let c = 1 + d + k;
        if let Some(ei) = eqs.iter().position(|e| !e[c].is_zero()) {
            let e = eqs.swap_remove(ei);
            let (ev, sign) = (e[c].abs(), if e[c].is_positive() { 1 } else { -1 });
            let subst = |r: &mut Vec<Int>| {
                if r[c].is_zero() {
                    return;
                }
                let f = &r[c] * Int::from(sign);
                for (x, y) in r.iter_mut().zip(&e) {
                    *x = &*x * &ev - &f * y;
                }
            };
            for r in eqs.iter_mut() {
                subst(r);
            }
            for r in rows.iter_mut() {
                subst(&mut r.coef);
            }
        } else {
            let dim_next = lifted.affine_dim(k, 0..n);
            let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
            for r in rows {
                if r.coef[c].is_positive() {
                    pos.push(r);
                } else if r.coef[c].is_negative() {
                    neg.push(r);
                } else {
                    keep.push(r);
                }
            }
            let mut seen: HashMap<FixedBitSet, ()> =
                keep.iter().map(|r| (r.tight.clone(), ())).collect();
            for a in &pos {
                for b in &neg {
                    let mut t = a.tight.clone();
                    t.intersect_with(&b.tight);
                    if t.count_ones(..) < dim_next || seen.contains_key(&t) {
                        continue;
                    }
                    seen.insert(t.clone(), ());
                    keep.push(Row {
                        coef: combine(&a.coef, &b.coef, c),
                        tight: t,
                    });
                }
            }
            rows = keep;
        }
        for r in eqs.iter_mut() {
            r.truncate(c);
            make_primitive(r);
        }
        eqs.retain(|r| r.iter().any(|x| !x.is_zero()));
        for r in rows.iter_mut() {
            r.coef.truncate(c);
            make_primitive(&mut r.coef);
        }
        if cfg!(debug_assertions) {
            for r in &rows {
                if lifted.tight(&r.coef, k)? != r.tight {
                    return Err(Error::Invariant("tight set bookkeeping drifted".into()));
                }
            }
        }
        rows = lifted.filter(rows, k);
    }
    Ok(rows.into_iter().map(|r| r.coef).collect())
}
