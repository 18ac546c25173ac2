use std::collections::{HashSet, VecDeque};

use fixedbitset::FixedBitSet;

use super::IncidenceMatrix;
use crate::error::{guard, Error, Result};
use crate::exact::Int;
use crate::polytope::{coord_bit, VertexSet01, Word};

/// Largest vertex count accepted by [`expansion_holds`].
pub const EXPANSION_MAX_VERTICES: usize = 20;

/// Vertex–edge graph of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyGraph {
    /// Dimension of the polytope.
    pub dim: usize,
    pub ambient: usize,
    pub words: Vec<Word>,
    pub adj: Vec<FixedBitSet>,
}

impl PolyGraph {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n()).all(|v| self.degree(v) + 1 == self.n())
    }
}

/// Two vertices span an edge iff the smallest face containing both has no
/// other vertex.
pub fn graph(p: &VertexSet01, inc: &IncidenceMatrix) -> PolyGraph {
    let n = p.len();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for u in 0..n {
        for v in u + 1..n {
            let mut common = inc.vertex_facets[u].clone();
            common.intersect_with(&inc.vertex_facets[v]);
            let mut face = FixedBitSet::with_capacity(n);
            face.insert_range(..);
            for f in common.ones() {
                face.intersect_with(&inc.facet_vertices[f]);
                if face.count_ones(..) == 2 {
                    break;
                }
            }
            if face.count_ones(..) == 2 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    PolyGraph {
        dim: p.subset_affine_dim(&p.all_indices()),
        ambient: p.dim(),
        words: p.words().to_vec(),
        adj,
    }
}

/// Largest shortest-path distance between two vertices.
pub fn diameter(g: &PolyGraph) -> Result<usize> {
    let n = g.n();
    let mut best = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for v in g.adj[u].ones() {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        let ecc = *dist.iter().max().expect("nonempty graph");
        if ecc == usize::MAX {
            return Err(Error::Invariant("polytope graph is disconnected".into()));
        }
        best = best.max(ecc);
    }
    Ok(best)
}

/// Unit vertex capacities via node splitting; `arcs` lists directed arcs.
struct SplitNetwork {
    n: usize,
    cap: Vec<i32>,
}

impl SplitNetwork {
    fn new(n: usize, arcs: impl Iterator<Item = (usize, usize)>, s: usize, t: usize) -> Self {
        let m = 2 * n;
        let mut cap = vec![0i32; m * m];
        for v in 0..n {
            let c = if v == s || v == t { n as i32 } else { 1 };
            cap[(2 * v) * m + 2 * v + 1] = c;
        }
        for (u, v) in arcs {
            cap[(2 * u + 1) * m + 2 * v] = 1;
        }
        SplitNetwork { n, cap }
    }

    /// Number of internally vertex-disjoint `s`-`t` paths, stopping at `limit`.
    fn flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let m = 2 * self.n;
        let (src, sink) = (2 * s, 2 * t + 1);
        let mut flow = 0;
        while flow < limit {
            let mut prev = vec![usize::MAX; m];
            prev[src] = src;
            let mut q = VecDeque::from([src]);
            while let Some(u) = q.pop_front() {
                if u == sink {
                    break;
                }
                for v in 0..m {
                    if prev[v] == usize::MAX && self.cap[u * m + v] > 0 {
                        prev[v] = u;
                        q.push_back(v);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut v = sink;
            while v != src {
                let u = prev[v];
                self.cap[u * m + v] -= 1;
                self.cap[v * m + u] += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }
}

fn local_connectivity(g: &PolyGraph, s: usize, t: usize, limit: usize) -> usize {
    let arcs = (0..g.n()).flat_map(|u| g.adj[u].ones().map(move |v| (u, v)));
    SplitNetwork::new(g.n(), arcs, s, t).flow(s, t, limit)
}

/// Vertex connectivity (a complete graph on `n` vertices counts as `n - 1`).
pub fn vertex_connectivity(g: &PolyGraph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    for s in 0..n {
        for t in s + 1..n {
            if !g.adj[s].contains(t) {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
    }
    best
}

pub fn connectivity_at_least(g: &PolyGraph, k: usize) -> bool {
    let n = g.n();
    if n < k + 1 {
        return false;
    }
    for s in 0..n {
        for t in s + 1..n {
            if !g.adj[s].contains(t) && local_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Checks for `dim` vertex-disjoint paths from the minimum to the maximum of
/// a generic linear objective that increase the objective along every edge.
pub fn holt_klee(g: &PolyGraph, objective: &[Int]) -> Result<bool> {
    if objective.len() != g.ambient {
        return Err(Error::DimensionMismatch {
            expected: g.ambient,
            found: objective.len(),
        });
    }
    let values: Vec<Int> = g
        .words
        .iter()
        .map(|&w| {
            objective
                .iter()
                .enumerate()
                .filter(|&(i, _)| w & coord_bit(g.ambient, i) != 0)
                .map(|(_, c)| c.clone())
                .sum()
        })
        .collect();
    let distinct: HashSet<&Int> = values.iter().collect();
    if distinct.len() != values.len() {
        return Err(Error::InvalidInput(
            "objective is not generic: two vertices share a value".into(),
        ));
    }
    let n = g.n();
    if n == 1 {
        return Ok(g.dim == 0);
    }
    let s = (0..n).min_by(|&a, &b| values[a].cmp(&values[b])).expect("nonempty");
    let t = (0..n).max_by(|&a, &b| values[a].cmp(&values[b])).expect("nonempty");
    let arcs = (0..n).flat_map(|u| {
        let values = &values;
        g.adj[u]
            .ones()
            .filter(move |&v| values[u] < values[v])
            .map(move |v| (u, v))
    });
    let mut net = SplitNetwork::new(n, arcs, s, t);
    Ok(net.flow(s, t, g.dim) >= g.dim)
}

/// Checks `|E(S, S̄)| ≥ min(|S|, |S̄|)` for every bipartition of the vertices.
pub fn expansion_holds(g: &PolyGraph) -> Result<bool> {
    let n = g.n();
    guard("expansion vertex count", n as u64, EXPANSION_MAX_VERTICES as u64)?;
    if n < 2 {
        return Ok(true);
    }
    let adj: Vec<u32> = g
        .adj
        .iter()
        .map(|s| s.ones().fold(0u32, |m, v| m | 1 << v))
        .collect();
    let full = (1u32 << n) - 1;
    // the last vertex is always outside S, so each bipartition is seen once
    for s in 1..(1u32 << (n - 1)) {
        let size = s.count_ones();
        let need = size.min(n as u32 - size);
        let mut cut = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cut += (adj[v] & !s & full).count_ones();
        }
        if cut < need {
            return Ok(false);
        }
    }
    Ok(true)
}
