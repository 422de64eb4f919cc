//! Exact canonical labeling for small graphs.
//!
//! Individualization-refinement search over equitable partitions: the
//! canonical key is the minimum adjacency encoding over all orderings
//! compatible with the refinement, and automorphisms discovered at
//! equal-encoding leaves prune symmetric branches. Equal keys hold exactly
//! when the graphs are isomorphic.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Label-invariant key: two graphs get equal keys iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: usize,
    enc: Vec<u64>,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Hard cap on search-tree nodes; generous for n <= 12 once the automorphism
/// pruning kicks in.
const NODE_CAP: usize = 200_000;

pub fn canonical_form(g: &Graph, limit: usize) -> Result<CanonicalKey> {
    canonical_relabeling(g, limit).map(|(key, _)| key)
}

/// Returns the key plus the vertex order realizing it: position `i` of the
/// canonical graph holds vertex `order[i]` of `g`.
pub fn canonical_relabeling(g: &Graph, limit: usize) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.n();
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "canonical labeling of {n} vertices exceeds limit {limit}"
        )));
    }
    if n == 0 {
        return Ok((CanonicalKey { n, enc: Vec::new() }, Vec::new()));
    }
    let mut search = Search {
        g,
        n,
        best: None,
        autos: Vec::new(),
        nodes: 0,
    };
    let mut colors = vec![0usize; n];
    refine(g, &mut colors);
    search.run(colors, &mut Vec::new())?;
    let (enc, order) = search.best.expect("search visits at least one leaf");
    Ok((CanonicalKey { n, enc }, order))
}

/// The canonical representative itself (the graph relabeled into key order).
pub fn canonical_graph(g: &Graph, limit: usize) -> Result<Graph> {
    let (_, order) = canonical_relabeling(g, limit)?;
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Ok(g.relabel(&pos))
}

/// A vertex bijection `a -> b` when the graphs are isomorphic.
pub fn find_isomorphism(a: &Graph, b: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() {
        return Ok(None);
    }
    let (ka, order_a) = canonical_relabeling(a, limit)?;
    let (kb, order_b) = canonical_relabeling(b, limit)?;
    if ka != kb {
        return Ok(None);
    }
    let mut perm = vec![0usize; a.n()];
    for i in 0..a.n() {
        perm[order_a[i]] = order_b[i];
    }
    debug_assert!(a
        .edges()
        .iter()
        .all(|&(u, v)| b.has_edge(perm[u], perm[v])));
    Ok(Some(perm))
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
    nodes: usize,
}

impl Search<'_> {
    fn run(&mut self, colors: Vec<usize>, fixed: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_CAP {
            return Err(Error::ResourceLimit(
                "canonical labeling search tree too large".into(),
            ));
        }
        let cell = first_nonsingleton_cell(&colors);
        let Some(cell) = cell else {
            self.leaf(&colors);
            return Ok(());
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() {
                let uf = self.orbits_fixing(fixed);
                if tried.iter().any(|&u| uf.find(u) == uf.find(v)) {
                    continue;
                }
            }
            let mut child = colors.clone();
            individualize(self.g, &mut child, v);
            fixed.push(v);
            self.run(child, fixed)?;
            fixed.pop();
            tried.push(v);
        }
        Ok(())
    }

    fn leaf(&mut self, colors: &[usize]) {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| colors[v]);
        let enc = encode(self.g, &order);
        match &self.best {
            None => self.best = Some((enc, order)),
            Some((best_enc, best_order)) => {
                if enc < *best_enc {
                    self.best = Some((enc, order));
                } else if enc == *best_enc {
                    // equal encodings expose an automorphism
                    let mut auto = vec![0usize; self.n];
                    for i in 0..self.n {
                        auto[best_order[i]] = order[i];
                    }
                    debug_assert!(self
                        .g
                        .edges()
                        .iter()
                        .all(|&(u, v)| self.g.has_edge(auto[u], auto[v])));
                    self.autos.push(auto);
                }
            }
        }
    }

    /// Vertex orbits under the discovered automorphisms that fix the current
    /// individualization path pointwise. Pruning with a subgroup is sound;
    /// it only skips branches proven isomorphic to one already explored.
    fn orbits_fixing(&self, fixed: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for auto in &self.autos {
            if fixed.iter().all(|&f| auto[f] == f) {
                for v in 0..self.n {
                    uf.union(v, auto[v]);
                }
            }
        }
        uf
    }
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut enc = Vec::with_capacity((n * n / 2).div_ceil(64).max(1));
    let mut word = 0u64;
    let mut used = 0;
    for i in 0..n {
        for j in i + 1..n {
            word = (word << 1) | g.has_edge(order[i], order[j]) as u64;
            used += 1;
            if used == 64 {
                enc.push(word);
                word = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        // left-align the tail so word comparison stays lexicographic
        enc.push(word << (64 - used));
    }
    enc
}

fn first_nonsingleton_cell(colors: &[usize]) -> Option<Vec<usize>> {
    let k = colors.iter().max().map_or(0, |&m| m + 1);
    for c in 0..k {
        let cell: Vec<usize> = (0..colors.len()).filter(|&v| colors[v] == c).collect();
        if cell.len() > 1 {
            return Some(cell);
        }
    }
    None
}

/// Splits `v` off as the first fragment of its cell, then re-refines.
fn individualize(g: &Graph, colors: &mut [usize], v: usize) {
    for c in colors.iter_mut() {
        *c = *c * 2 + 1;
    }
    colors[v] -= 1; // v sorts just before the rest of its old cell
    normalize(colors);
    refine(g, colors);
}

/// Equitable refinement: iterate splitting by per-color neighbour counts
/// until stable. Cell order is derived from (old color, count signature), so
/// it is label-invariant.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = colors.len();
    loop {
        let k = colors.iter().max().map_or(0, |&m| m + 1);
        let mut sigs: Vec<(usize, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut counts = vec![0u32; k];
            for w in g.neighbors_bits(v).iter_ones() {
                counts[colors[w]] += 1;
            }
            sigs.push((colors[v], counts));
        }
        let mut sorted: Vec<&(usize, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == k {
            break;
        }
        for v in 0..n {
            colors[v] = sorted.binary_search(&&sigs[v]).unwrap();
        }
    }
}

/// Re-indexes colors to 0..k preserving order.
fn normalize(colors: &mut [usize]) {
    let mut values: Vec<usize> = colors.to_vec();
    values.sort_unstable();
    values.dedup();
    for c in colors.iter_mut() {
        *c = values.binary_search(c).unwrap();
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
