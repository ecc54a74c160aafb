//! Loopless multigraph representation with cut, connectivity and distance
//! primitives.
//!
//! Vertices are dense indices `0..n`, edges are dense ids `0..m` in insertion
//! order, and parallel edges are distinct records with equal endpoint pairs.
//! Values are immutable after construction; every operation here is a pure
//! function.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bitset::BitVec;

/// Maximum order for the exhaustive shore scan in [`edge_connectivity`].
pub const SHORE_SCAN_BOUND: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("no path between the given edges")]
    Unreachable,
    #[error("graph order {0} exceeds the canonical-form bound {1}")]
    TooLarge(usize, usize),
    #[error("shore must be a nonempty proper subset of the vertices")]
    EmptyOrFullShore,
    #[error("edge endpoints must be distinct vertices below n (got {u}, {v} with n = {n})")]
    BadEdge { u: usize, v: usize, n: usize },
}

/// Set of vertices of one particular graph, with bit-vector semantics.
pub type VertexSet = BitVec;

/// A loopless undirected multigraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // per vertex: (neighbor, edge id)
}

impl MultiGraph {
    /// Builds a graph from an edge list; edge ids follow list order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        assert!(n >= 1, "graph must have at least one vertex");
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u == v || u >= n || v >= n {
                return Err(GraphError::BadEdge { u, v, n });
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(MultiGraph {
            n,
            edges: edges.to_vec(),
            adj,
        })
    }

    /// Panicking constructor for edge lists known to be valid.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::new(n, edges).expect("invalid edge list")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` as `(neighbor, edge id)`, in edge-insertion order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj[u].iter().filter(|&&(w, _)| w == v).count()
    }

    /// Edge ids of the cut `∂(v)`.
    pub fn vertex_cut_edges(&self, v: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.adj[v].iter().map(|&(_, id)| id).collect();
        ids.sort_unstable();
        ids
    }

    /// First edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u]
            .iter()
            .filter(|&&(w, _)| w == v)
            .map(|&(_, id)| id)
            .min()
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        let mut s = BitVec::new(self.n);
        for v in 0..self.n {
            s.set(v, true);
        }
        s
    }

    pub fn vertex_set(&self, members: &[usize]) -> VertexSet {
        let mut s = BitVec::new(self.n);
        for &v in members {
            s.set(v, true);
        }
        s
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).count() == self.n
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        self.component_avoiding(start, &[])
    }

    /// Vertices reachable from `start` without traversing `banned` edges.
    pub fn component_avoiding(&self, start: usize, banned: &[usize]) -> VertexSet {
        let mut seen = BitVec::new(self.n);
        seen.set(start, true);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, id) in &self.adj[v] {
                if !banned.contains(&id) && !seen.get(w) {
                    seen.set(w, true);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&[])
    }

    pub fn components_avoiding(&self, banned: &[usize]) -> Vec<VertexSet> {
        let mut seen = BitVec::new(self.n);
        let mut out = Vec::new();
        for v in 0..self.n {
            if !seen.get(v) {
                let comp = self.component_avoiding(v, banned);
                seen = seen.union(&comp);
                out.push(comp);
            }
        }
        out
    }

    /// Whether the subgraph induced by `x` is connected (true for empty `x`).
    pub fn induces_connected(&self, x: &VertexSet) -> bool {
        let Some(start) = x.iter_ones().next() else {
            return true;
        };
        let mut seen = BitVec::new(self.n);
        seen.set(start, true);
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if x.get(w) && !seen.get(w) {
                    seen.set(w, true);
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == x.count()
    }

    /// BFS distances from `v`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Deletes the listed edges, keeping the remaining ids in order, and
    /// returns the new graph plus a map from new edge ids to old ones.
    pub fn delete_edges(&self, removed: &[usize]) -> (MultiGraph, Vec<usize>) {
        let mut edge_map = Vec::new();
        let mut edges = Vec::new();
        for (id, &e) in self.edges.iter().enumerate() {
            if !removed.contains(&id) {
                edge_map.push(id);
                edges.push(e);
            }
        }
        (MultiGraph::from_edges(self.n, &edges), edge_map)
    }

    /// Deletes the listed vertices (and their edges); surviving vertices are
    /// renumbered in order. Returns the graph, a map from new vertex ids to
    /// old ones, and a map from new edge ids to old ones.
    pub fn delete_vertices(&self, removed: &[usize]) -> (MultiGraph, Vec<usize>, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old] = new;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if relabel[u] != usize::MAX && relabel[v] != usize::MAX {
                edges.push((relabel[u], relabel[v]));
                edge_map.push(id);
            }
        }
        let g = if keep.is_empty() {
            // Represent the null graph as order 1 with no edges is wrong;
            // callers that can produce it use `is_null_deletion` instead.
            MultiGraph::from_edges(1, &[])
        } else {
            MultiGraph::from_edges(keep.len(), &edges)
        };
        (g, keep, edge_map)
    }

    /// True iff the two graphs are equal as labeled multigraphs, ignoring
    /// edge order and endpoint order.
    pub fn same_labeled(&self, other: &MultiGraph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let norm = |g: &MultiGraph| {
            let mut v: Vec<(usize, usize)> =
                g.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            v.sort_unstable();
            v
        };
        norm(self) == norm(other)
    }

    /// Two-coloring of a connected bipartite graph; `None` when nonbipartite.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if color[w] == 2 {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let mut a = BitVec::new(self.n);
        let mut b = BitVec::new(self.n);
        for (v, &side) in color.iter().enumerate() {
            if side == 0 {
                a.set(v, true);
            } else {
                b.set(v, true);
            }
        }
        Some((a, b))
    }
}

impl std::fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A cut `∂(X)` together with its derived flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub shore: VertexSet,
    pub co_shore: VertexSet,
    pub edge_ids: Vec<usize>,
    pub parity: Parity,
    pub is_trivial: bool,
    pub is_bond: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// The cut determined by the shore `x`, with parity, triviality and bond
/// flags. Empty and full shores are legal and give the empty cut.
pub fn cut_of(g: &MultiGraph, x: &VertexSet) -> Cut {
    assert_eq!(x.len(), g.order(), "shore built for a different graph");
    let co = x.complement();
    let mut edge_ids = Vec::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if x.get(u) != x.get(v) {
            edge_ids.push(id);
        }
    }
    let parity = if x.count().is_multiple_of(2) && co.count().is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    };
    let is_trivial = x.count() == 1 || co.count() == 1;
    let is_bond = !edge_ids.is_empty() && g.induces_connected(x) && g.induces_connected(&co);
    Cut {
        shore: x.clone(),
        co_shore: co,
        edge_ids,
        parity,
        is_trivial,
        is_bond,
    }
}

/// The four quadrants of two cuts, plus a flag that is true iff the cuts are
/// laminar (at least one quadrant empty).
pub fn quadrants(g: &MultiGraph, c: &Cut, d: &Cut) -> ([VertexSet; 4], bool) {
    debug_assert_eq!(c.shore.len(), g.order());
    debug_assert_eq!(d.shore.len(), g.order());
    let q = [
        c.shore.intersection(&d.shore),
        c.shore.intersection(&d.co_shore),
        c.co_shore.intersection(&d.shore),
        c.co_shore.intersection(&d.co_shore),
    ];
    let laminar = q.iter().any(|s| s.count() == 0);
    (q, laminar)
}

/// Minimum cut size over nonempty proper shores. Exhaustive for
/// `n <= SHORE_SCAN_BOUND`, max-flow based above.
pub fn edge_connectivity(g: &MultiGraph) -> Result<usize, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::DisconnectedGraph);
    }
    if g.order() == 1 {
        return Ok(usize::MAX);
    }
    if g.order() <= SHORE_SCAN_BOUND {
        return Ok(min_cut_scan(g, |_| true)
            .expect("connected graph has a cut")
            .0);
    }
    // Global min cut as min over t of maxflow(0, t).
    let mut best = usize::MAX;
    for t in 1..g.order() {
        best = best.min(max_flow(g, 0, t));
    }
    Ok(best)
}

/// Minimum `|∂(X)|` over shores accepted by `keep` (given `|X|`), with one
/// witness shore. Scans all 2^(n-1) shores containing vertex 0's complement
/// classes; intended for small graphs.
pub fn min_cut_scan(g: &MultiGraph, keep: impl Fn(usize) -> bool) -> Option<(usize, VertexSet)> {
    let n = g.order();
    assert!(n <= 63, "shore scan needs n <= 63");
    let mut best: Option<(usize, VertexSet)> = None;
    // Fix vertex 0 outside X so each {X, complement} pair is seen once; both
    // orientations are tried through the complement's cardinality filter.
    for mask in 1u64..(1 << (n - 1)) {
        let mut x = BitVec::new(n);
        for v in 1..n {
            if mask >> (v - 1) & 1 == 1 {
                x.set(v, true);
            }
        }
        let size = x.count();
        let co_size = n - size;
        let applies = keep(size) || keep(co_size);
        if !applies {
            continue;
        }
        let mut edges = 0;
        for &(u, v) in g.edges() {
            if x.get(u) != x.get(v) {
                edges += 1;
            }
        }
        let candidate = if keep(size) {
            x.clone()
        } else {
            x.complement()
        };
        if best.as_ref().is_none_or(|(b, _)| edges < *b) {
            best = Some((edges, candidate));
        }
    }
    best
}

/// Edmonds-Karp max flow where each parallel edge has unit capacity.
pub fn max_flow(g: &MultiGraph, s: usize, t: usize) -> usize {
    let n = g.order();
    let mut cap = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        cap[u][v] += 1;
        cap[v][u] += 1;
    }
    let mut flow = 0;
    loop {
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in 0..n {
                if parent[w] == usize::MAX && cap[v][w] > 0 {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        let mut bottleneck = usize::MAX;
        let mut v = t;
        while v != s {
            bottleneck = bottleneck.min(cap[parent[v]][v]);
            v = parent[v];
        }
        let mut v = t;
        while v != s {
            cap[parent[v]][v] -= bottleneck;
            cap[v][parent[v]] += bottleneck;
            v = parent[v];
        }
        flow += bottleneck;
    }
}

/// Whether the graph stays connected after removing every vertex subset of
/// size below `k` (and has more than `k` vertices).
pub fn is_k_vertex_connected(g: &MultiGraph, k: usize) -> bool {
    if g.order() <= k || !g.is_connected() {
        return false;
    }
    fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            start: usize,
            n: usize,
            size: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == size {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, size, cur, out);
                cur.pop();
            }
        }
        rec(0, n, size, &mut cur, &mut out);
        out
    }
    for size in 1..k {
        for del in subsets(g.order(), size) {
            let (h, _, _) = g.delete_vertices(&del);
            if h.order() != g.order() - size || !h.is_connected() {
                return false;
            }
        }
    }
    true
}

/// Shortest path length from an end of `e1` to an end of `e2`; zero iff the
/// edges share a vertex.
pub fn edge_distance(g: &MultiGraph, e1: usize, e2: usize) -> Result<usize, GraphError> {
    assert_ne!(e1, e2, "edge_distance needs distinct edges");
    let (a, b) = g.endpoints(e1);
    let (c, d) = g.endpoints(e2);
    let da = g.bfs_distances(a);
    let db = g.bfs_distances(b);
    let best = [da[c], da[d], db[c], db[d]].into_iter().min().unwrap();
    if best == usize::MAX {
        Err(GraphError::Unreachable)
    } else {
        Ok(best)
    }
}

/// Shortest path length from vertex `v` to an end of edge `e`.
pub fn vertex_edge_distance(g: &MultiGraph, v: usize, e: usize) -> Result<usize, GraphError> {
    let (a, b) = g.endpoints(e);
    let d = g.bfs_distances(v);
    let best = d[a].min(d[b]);
    if best == usize::MAX {
        Err(GraphError::Unreachable)
    } else {
        Ok(best)
    }
}
