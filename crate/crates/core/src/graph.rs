//! Undirected simple graphs with bit-packed adjacency rows, the named graph
//! families, local complementation and the structural predicates the
//! local-equivalence arguments lean on.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// An undirected simple graph on vertices `0..n`.
///
/// The adjacency is symmetric with a zero diagonal; one packed bit row per
/// vertex. Values are immutable once built and cheap to hash, which the orbit
/// searches rely on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BitVec>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BitVec::zeros(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidParam(format!("self-loop at {u}")));
            }
            g.adj[u].set(v, true);
            g.adj[v].set(u, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].get(v)
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].toggle(v);
        self.adj[v].toggle(u);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones()
    }

    pub fn neighbors_bits(&self, v: usize) -> &BitVec {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v].iter_ones().collect()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter_ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones()).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|r| r.is_zero())
    }

    /// Adjacency matrix over GF(2).
    pub fn adjacency_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.n, self.adj.clone())
    }

    /// Complements the induced subgraph on the neighbourhood of `v`; all
    /// other adjacencies are unchanged. Self-inverse at every vertex.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut g = self.clone();
        let nv = self.adj[v].clone();
        for u in nv.iter_ones() {
            g.adj[u].xor_assign(&nv);
            // xor with the neighbourhood also toggled the diagonal bit
            g.adj[u].set(u, false);
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = BitVec::zeros(self.n);
        let mut queue = VecDeque::from([0usize]);
        seen.set(0, true);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter_ones() {
                if !seen.get(w) {
                    seen.set(w, true);
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// All degree-1 vertices.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Deletes every current leaf in a single pass (not iterated); remaining
    /// vertices are relabeled in order.
    pub fn remove_leaves(&self) -> Graph {
        let leaves = self.leaves();
        let keep: Vec<usize> = (0..self.n).filter(|v| !leaves.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Deletes vertex `v`; vertices above it shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Subgraph induced on `keep` (in the given order, relabeled 0..).
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].set(j, true);
                    g.adj[j].set(i, true);
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.adj[perm[u]].set(perm[v], true);
            g.adj[perm[v]].set(perm[u], true);
        }
        g
    }

    /// True iff the graph contains a cycle of length 3 or 4.
    pub fn has_short_cycle(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                let common = self.adj[u].and(&self.adj[v]).count_ones();
                // a triangle needs an edge plus one common neighbour; a
                // quadrilateral needs two common neighbours of any pair
                if common >= 2 || (common >= 1 && self.has_edge(u, v)) {
                    return true;
                }
            }
        }
        false
    }

    /// A 2-colouring by BFS layering, or `None` when an odd cycle exists.
    /// The first class contains vertex 0 (and the lowest-index vertex of
    /// every other connected component).
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![None::<bool>; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.adj[u].iter_ones() {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        let side = |want: bool| {
            (0..self.n)
                .filter(|&v| color[v] == Some(want))
                .collect::<Vec<_>>()
        };
        Some((side(false), side(true)))
    }

    /// One hub adjacent to all others, every other vertex of degree 1.
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && (0..self.n).any(|hub| {
                self.degree(hub) == self.n - 1
                    && (0..self.n).all(|v| v == hub || self.degree(v) == 1)
            })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The graph families named throughout the analysis, with their canonical
/// vertex labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Hub 0 adjacent to leaves 1..n-1; n >= 2.
    Star { n: usize },
    /// All pairs adjacent; n >= 1.
    Complete { n: usize },
    /// Left block 0..m, right block m..m+n, all cross edges; m, n >= 1.
    Biclique { m: usize, n: usize },
    /// Hubs 0 and 1 adjacent; hub 0 carries ceil((n-2)/2) leaves and hub 1
    /// the rest, so the n-vertex binary star has n-1 edges; n >= 2.
    BinaryStar { n: usize },
    /// Alias for `Biclique` under the asymmetric naming convention.
    GeneralizedBiclique { m: usize, n: usize },
    /// `columns` columns of `per_column` vertices; complete bipartite
    /// connections between adjacent columns; columns >= 2, per_column >= 1.
    CrazyGraph { columns: usize, per_column: usize },
    /// Complete core 0..core with leaf core+i appended to core vertex i.
    RepeaterComplete { core: usize },
    /// Biclique core with one leaf per core vertex, labeled as in
    /// `RepeaterComplete`.
    RepeaterBiclique { m: usize, n: usize },
    /// `RepeaterComplete` with the leaf of core vertex 0 removed.
    ImperfectRepeaterComplete { core: usize },
    /// `RepeaterBiclique` with the leaves of left vertex 0 and right vertex 0
    /// (= core vertex m) removed.
    ImperfectRepeaterBiclique { m: usize, n: usize },
    /// 0-1-2-...-(n-1); n >= 1.
    Path { n: usize },
    /// Cycle on n >= 3 vertices.
    Cycle { n: usize },
}

/// Builds the requested family member; rejects out-of-range parameters.
pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    let param = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParam(format!("{spec:?}: {msg}")))
        }
    };
    match spec {
        Star { n } => {
            param(n >= 2, "need n >= 2")?;
            Graph::from_edges(n, &(1..n).map(|v| (0, v)).collect::<Vec<_>>())
        }
        Complete { n } => {
            param(n >= 1, "need n >= 1")?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)
        }
        Biclique { m, n } | GeneralizedBiclique { m, n } => {
            param(m >= 1 && n >= 1, "need m, n >= 1")?;
            let edges: Vec<_> = (0..m)
                .flat_map(|u| (m..m + n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(m + n, &edges)
        }
        BinaryStar { n } => {
            param(n >= 2, "need n >= 2")?;
            let first = (n - 2).div_ceil(2);
            let mut edges = vec![(0, 1)];
            for (i, leaf) in (2..n).enumerate() {
                edges.push((if i < first { 0 } else { 1 }, leaf));
            }
            Graph::from_edges(n, &edges)
        }
        CrazyGraph { columns, per_column } => {
            param(columns >= 2 && per_column >= 1, "need columns >= 2, per_column >= 1")?;
            let m = per_column;
            let mut edges = Vec::new();
            for col in 0..columns - 1 {
                for a in 0..m {
                    for b in 0..m {
                        edges.push((col * m + a, (col + 1) * m + b));
                    }
                }
            }
            Graph::from_edges(columns * m, &edges)
        }
        RepeaterComplete { core } => {
            param(core >= 2, "need core >= 2")?;
            let mut edges: Vec<_> = (0..core)
                .flat_map(|u| (u + 1..core).map(move |v| (u, v)))
                .collect();
            edges.extend((0..core).map(|i| (i, core + i)));
            Graph::from_edges(2 * core, &edges)
        }
        RepeaterBiclique { m, n } => {
            param(m >= 1 && n >= 1, "need m, n >= 1")?;
            let core = m + n;
            let mut edges: Vec<_> = (0..m)
                .flat_map(|u| (m..core).map(move |v| (u, v)))
                .collect();
            edges.extend((0..core).map(|i| (i, core + i)));
            Graph::from_edges(2 * core, &edges)
        }
        ImperfectRepeaterComplete { core } => {
            param(core >= 2, "need core >= 2")?;
            let mut edges: Vec<_> = (0..core)
                .flat_map(|u| (u + 1..core).map(move |v| (u, v)))
                .collect();
            // leaves only for core vertices 1..core
            edges.extend((1..core).map(|i| (i, core + i - 1)));
            Graph::from_edges(2 * core - 1, &edges)
        }
        ImperfectRepeaterBiclique { m, n } => {
            param(m >= 1 && n >= 1, "need m, n >= 1")?;
            let core = m + n;
            let mut edges: Vec<_> = (0..m)
                .flat_map(|u| (m..core).map(move |v| (u, v)))
                .collect();
            // every core vertex except left 0 and right 0 (= vertex m) keeps
            // its leaf
            let mut next = core;
            for i in 0..core {
                if i != 0 && i != m {
                    edges.push((i, next));
                    next += 1;
                }
            }
            Graph::from_edges(2 * core - 2, &edges)
        }
        Path { n } => {
            param(n >= 1, "need n >= 1")?;
            Graph::from_edges(n, &(0..n.saturating_sub(1)).map(|v| (v, v + 1)).collect::<Vec<_>>())
        }
        Cycle { n } => {
            param(n >= 3, "need n >= 3")?;
            let mut edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
            edges.push((0, n - 1));
            Graph::from_edges(n, &edges)
        }
    }
}

impl Graph {
    pub fn star(n: usize) -> Result<Graph> {
        make_family(FamilySpec::Star { n })
    }
    pub fn complete(n: usize) -> Result<Graph> {
        make_family(FamilySpec::Complete { n })
    }
    pub fn biclique(m: usize, n: usize) -> Result<Graph> {
        make_family(FamilySpec::Biclique { m, n })
    }
    pub fn binary_star(n: usize) -> Result<Graph> {
        make_family(FamilySpec::BinaryStar { n })
    }
    pub fn crazy_graph(columns: usize, per_column: usize) -> Result<Graph> {
        make_family(FamilySpec::CrazyGraph { columns, per_column })
    }
    pub fn repeater_complete(core: usize) -> Result<Graph> {
        make_family(FamilySpec::RepeaterComplete { core })
    }
    pub fn repeater_biclique(m: usize, n: usize) -> Result<Graph> {
        make_family(FamilySpec::RepeaterBiclique { m, n })
    }
    pub fn path(n: usize) -> Result<Graph> {
        make_family(FamilySpec::Path { n })
    }
    pub fn cycle(n: usize) -> Result<Graph> {
        make_family(FamilySpec::Cycle { n })
    }
}

const JSON_FORMAT: &str = "graphstate/1";

#[derive(Serialize, Deserialize)]
struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<String>,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Emits `{"format": "graphstate/1", "n": ..., "edges": [[u,v], ...]}`
    /// with `u < v` and the edge list sorted lexicographically.
    pub fn to_json_string(&self) -> String {
        let file = GraphFile {
            format: Some(JSON_FORMAT.to_string()),
            n: self.n,
            edges: self.edges(),
        };
        serde_json::to_string(&file).expect("graph serialization cannot fail")
    }

    pub fn from_json_str(text: &str) -> Result<Graph> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph json: {e}")))?;
        if let Some(fmt) = &file.format {
            if fmt != JSON_FORMAT {
                return Err(Error::Parse(format!("unsupported format {fmt:?}")));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &file.edges {
            if u >= v {
                return Err(Error::Parse(format!("edge [{u},{v}] must have u < v")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::Parse(format!("duplicate edge [{u},{v}]")));
            }
        }
        Graph::from_edges(file.n, &file.edges)
    }

    /// Undirected DOT text with all vertices declared.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_edge_counts() {
        assert_eq!(Graph::star(10).unwrap().edge_count(), 9);
        assert_eq!(Graph::complete(6).unwrap().edge_count(), 15);
        assert_eq!(Graph::biclique(3, 5).unwrap().edge_count(), 15);
        assert_eq!(Graph::binary_star(10).unwrap().edge_count(), 9);
        assert_eq!(Graph::repeater_complete(10).unwrap().edge_count(), 55);
        assert_eq!(Graph::repeater_biclique(5, 5).unwrap().edge_count(), 35);
        // the complete-core repeater carries n(n-2)/4 more edges than the
        // biclique-core repeater on the same number of qubits
        assert_eq!(55 - 35, 10 * (10 - 2) / 4);
        assert_eq!(Graph::crazy_graph(3, 3).unwrap().edge_count(), 18);
        assert_eq!(Graph::path(2).unwrap().edge_count(), 1);
        assert_eq!(Graph::cycle(5).unwrap().edge_count(), 5);
    }

    #[test]
    fn family_parameter_validation() {
        assert!(Graph::star(1).is_err());
        assert!(Graph::biclique(0, 3).is_err());
        assert!(Graph::crazy_graph(1, 3).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(make_family(FamilySpec::ImperfectRepeaterComplete { core: 1 }).is_err());
    }

    #[test]
    fn binary_star_shape() {
        let g = Graph::binary_star(6).unwrap();
        assert!(g.has_edge(0, 1));
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.leaves().len(), 4);
        // odd total: hub 0 takes the extra leaf
        let g5 = Graph::binary_star(5).unwrap();
        assert_eq!(g5.degree(0), 3);
        assert_eq!(g5.degree(1), 2);
        assert_eq!(g5.edge_count(), 4);
    }

    #[test]
    fn local_complement_star_is_complete() {
        let star = Graph::star(6).unwrap();
        let complete = Graph::complete(6).unwrap();
        assert_eq!(star.local_complement(0).unwrap(), complete);
        assert_eq!(complete.local_complement(0).unwrap(), star);
    }

    #[test]
    fn local_complement_at_leaf_is_identity() {
        let g = Graph::repeater_complete(4).unwrap();
        for leaf in g.leaves() {
            assert_eq!(g.local_complement(leaf).unwrap(), g);
        }
    }

    #[test]
    fn local_complement_involution_and_degree() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        for v in 0..6 {
            let lc = g.local_complement(v).unwrap();
            assert_eq!(lc.local_complement(v).unwrap(), g);
            assert_eq!(lc.degree(v), g.degree(v));
            assert_eq!(lc.n(), g.n());
        }
        assert!(g.local_complement(6).is_err());
    }

    #[test]
    fn short_cycle_detection() {
        assert!(Graph::complete(4).unwrap().has_short_cycle());
        assert!(Graph::biclique(3, 3).unwrap().has_short_cycle());
        assert!(!Graph::binary_star(5).unwrap().has_short_cycle());
        assert!(!Graph::path(6).unwrap().has_short_cycle());
        assert!(Graph::cycle(4).unwrap().has_short_cycle());
        assert!(!Graph::cycle(5).unwrap().has_short_cycle());
        assert!(Graph::cycle(3).unwrap().has_short_cycle());
    }

    #[test]
    fn bipartition_examples() {
        let (a, b) = Graph::biclique(3, 5).unwrap().bipartition().unwrap();
        assert_eq!(a, vec![0, 1, 2]);
        assert_eq!(b, vec![3, 4, 5, 6, 7]);
        assert!(Graph::complete(3).unwrap().bipartition().is_none());
        // crazy graph: odd columns (1-indexed) on the side of vertex 0
        let (a, b) = Graph::crazy_graph(3, 2).unwrap().bipartition().unwrap();
        assert_eq!(a, vec![0, 1, 4, 5]);
        assert_eq!(b, vec![2, 3]);
    }

    #[test]
    fn leaves_and_removal() {
        let g = Graph::repeater_complete(10).unwrap();
        assert_eq!(g.leaves().len(), 10);
        assert_eq!(g.remove_leaves(), Graph::complete(10).unwrap());
        let k5 = Graph::complete(5).unwrap();
        assert!(k5.leaves().is_empty());
        assert_eq!(k5.remove_leaves(), k5);
        // degenerate: both ends of an edge are leaves
        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.remove_leaves().n(), 0);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = Graph::biclique(2, 3).unwrap();
        let text = g.to_json_string();
        assert!(text.contains("\"format\":\"graphstate/1\""));
        assert_eq!(Graph::from_json_str(&text).unwrap(), g);
        // format key optional on input
        assert_eq!(
            Graph::from_json_str(r#"{"n":3,"edges":[[0,1]]}"#).unwrap(),
            Graph::from_edges(3, &[(0, 1)]).unwrap()
        );
        assert!(Graph::from_json_str(r#"{"n":3,"edges":[[1,0]]}"#).is_err());
        assert!(Graph::from_json_str(r#"{"n":3,"edges":[[0,1],[0,1]]}"#).is_err());
        assert!(Graph::from_json_str(r#"{"format":"other/9","n":1,"edges":[]}"#).is_err());
        assert!(Graph::from_json_str(r#"{"n":2,"edges":[[0,5]]}"#).is_err());
    }

    #[test]
    fn dot_declares_all_vertices() {
        let dot = Graph::from_edges(3, &[(0, 2)]).unwrap().to_dot();
        assert!(dot.contains("  1;\n"));
        assert!(dot.contains("  0 -- 2;\n"));
    }

    #[test]
    fn crazy_graph_is_generalized_biclique_labeled() {
        // columns L, M, R with M fully joined to L and R: identical edge set
        // to the (2m, m) biclique after grouping (L u R | M)
        let crazy = Graph::crazy_graph(3, 3).unwrap();
        let (a, b) = crazy.bipartition().unwrap();
        assert_eq!(a.len(), 6);
        assert_eq!(b.len(), 3);
        for &u in &a {
            for &v in &b {
                assert!(crazy.has_edge(u, v));
            }
        }
    }
}
