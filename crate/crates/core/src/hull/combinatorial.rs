use super::IncidenceMatrix;
use crate::error::{guard, Result};

/// Largest vertex (and facet) count accepted by [`combinatorial_key`].
pub const COMBINATORIAL_MAX: usize = 64;

const LEAF_LIMIT: u64 = 2_000_000;

/// Bipartite incidence graph: nodes `0..nv` are vertices, `nv..nv+nf`
/// facets.
struct Bipartite {
    nv: usize,
    rows: Vec<u64>,
    nbrs: Vec<Vec<usize>>,
}

impl Bipartite {
    /// Replaces colors by the rank of (color, sorted neighbour colors) until
    /// the partition is stable. Ranks respect the old order, so the
    /// refinement commutes with relabelling.
    fn refine(&self, colors: &mut Vec<usize>) {
        let mut classes = count_classes(colors);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = self
                .nbrs
                .iter()
                .enumerate()
                .map(|(v, nb)| {
                    let mut s: Vec<usize> = nb.iter().map(|&u| colors[u]).collect();
                    s.sort_unstable();
                    (colors[v], s)
                })
                .collect();
            let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            for (v, sig) in sigs.iter().enumerate() {
                colors[v] = sorted.binary_search(&sig).expect("signature present");
            }
            let now = count_classes(colors);
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn leaf(&self, colors: &[usize]) -> Vec<u64> {
        let mut vorder: Vec<usize> = (0..self.nv).collect();
        vorder.sort_by_key(|&v| colors[v]);
        let mut forder: Vec<usize> = (self.nv..colors.len()).collect();
        forder.sort_by_key(|&f| colors[f]);
        vorder
            .iter()
            .map(|&v| {
                forder.iter().enumerate().fold(0u64, |m, (j, &f)| {
                    if self.rows[v] >> (f - self.nv) & 1 == 1 {
                        m | 1 << (63 - j)
                    } else {
                        m
                    }
                })
            })
            .collect()
    }

    fn search(
        &self,
        colors: Vec<usize>,
        best: &mut Option<Vec<u64>>,
        leaves: &mut u64,
    ) -> Result<()> {
        let n = colors.len();
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c] += 1;
        }
        let Some(cell) = (0..n).find(|&c| counts[c] > 1) else {
            *leaves += 1;
            guard("incidence labelling leaves", *leaves, LEAF_LIMIT)?;
            let leaf = self.leaf(&colors);
            if best.as_ref().is_none_or(|b| leaf < *b) {
                *best = Some(leaf);
            }
            return Ok(());
        };
        for x in (0..n).filter(|&v| colors[v] == cell) {
            let mut c = colors.clone();
            for (v, col) in c.iter_mut().enumerate() {
                if *col > cell || (*col == cell && v != x) {
                    *col += 1;
                }
            }
            self.refine(&mut c);
            self.search(c, best, leaves)?;
        }
        Ok(())
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut seen = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Canonical string of the vertex–facet incidence structure: equal for two
/// incidence matrices iff they agree up to reordering vertices and facets.
pub fn combinatorial_key(inc: &IncidenceMatrix) -> Result<String> {
    let (nv, nf) = (inc.n_vertices(), inc.n_facets());
    guard("incidence vertices", nv as u64, COMBINATORIAL_MAX as u64)?;
    guard("incidence facets", nf as u64, COMBINATORIAL_MAX as u64)?;
    let rows: Vec<u64> = inc
        .vertex_facets
        .iter()
        .map(|s| s.ones().fold(0u64, |m, f| m | 1 << f))
        .collect();
    let mut nbrs = vec![Vec::new(); nv + nf];
    for (v, s) in inc.vertex_facets.iter().enumerate() {
        for f in s.ones() {
            nbrs[v].push(nv + f);
            nbrs[nv + f].push(v);
        }
    }
    let g = Bipartite { nv, rows, nbrs };
    let mut colors: Vec<usize> = (0..nv + nf).map(|i| usize::from(i >= nv)).collect();
    g.refine(&mut colors);
    let mut best = None;
    let mut leaves = 0;
    g.search(colors, &mut best, &mut leaves)?;
    let mut key = format!("{nv}x{nf}:");
    for row in best.unwrap_or_default() {
        key.push_str(&format!("{:016x}", row));
    }
    Ok(key)
}
