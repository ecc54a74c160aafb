//! r-graph recognition via minimum odd cuts, edge-coloring search,
//! perfect-matching multiplication, rainbow triangles and the spanning cubic
//! subgraph extractors.

use thiserror::Error;

use crate::graph::{min_cut_scan, MultiGraph, VertexSet, SHORE_SCAN_BOUND};
use crate::matching::PerfectMatching;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RGraphError {
    #[error("graph has odd order")]
    OddOrder,
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("the given edge set is not a perfect matching")]
    NotPerfectMatching,
    #[error("lemma hypotheses are not satisfied: {0}")]
    PreconditionUnmet(&'static str),
}

/// Witness that a connected r-regular graph has no odd cut below `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RGraphCertificate {
    pub r: usize,
    pub min_odd_cut: usize,
    pub is_3ec: bool,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refusal {
    NotConnected,
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    DegreeTooSmall {
        r: usize,
    },
    OddOrder,
    ThinOddCut {
        shore: VertexSet,
        size: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RGraphVerdict {
    Certified(RGraphCertificate),
    Refused(Refusal),
}

impl RGraphVerdict {
    pub fn certificate(&self) -> Option<&RGraphCertificate> {
        match self {
            RGraphVerdict::Certified(c) => Some(c),
            RGraphVerdict::Refused(_) => None,
        }
    }
}

/// Checks connectivity, r-regularity with r at least three, even order, and
/// that every odd cut has at least r edges. Refusal is a value, not an error.
pub fn certify_rgraph(g: &MultiGraph) -> RGraphVerdict {
    use RGraphVerdict::Refused;
    if !g.is_connected() {
        return Refused(Refusal::NotConnected);
    }
    let r = g.degree(0);
    for v in 0..g.order() {
        if g.degree(v) != r {
            return Refused(Refusal::NotRegular {
                vertex: v,
                degree: g.degree(v),
                expected: r,
            });
        }
    }
    if r < 3 {
        return Refused(Refusal::DegreeTooSmall { r });
    }
    if !g.order().is_multiple_of(2) {
        return Refused(Refusal::OddOrder);
    }
    let (value, shore) = min_odd_cut(g).expect("even order checked");
    if value < r {
        return Refused(Refusal::ThinOddCut { shore, size: value });
    }
    let is_3ec = if g.order() == 2 {
        true
    } else {
        crate::graph::edge_connectivity(g).unwrap_or(0) >= 3
    };
    RGraphVerdict::Certified(RGraphCertificate {
        r,
        min_odd_cut: value,
        is_3ec,
        regular: true,
    })
}

/// Minimum cut over odd shores, with a witness shore. Exhaustive scan for
/// orders up to [`SHORE_SCAN_BOUND`]; the `flow-cuts` feature provides a
/// Gomory-Hu based route beyond it.
pub fn min_odd_cut(g: &MultiGraph) -> Result<(usize, VertexSet), RGraphError> {
    if !g.order().is_multiple_of(2) {
        return Err(RGraphError::OddOrder);
    }
    if g.order() <= SHORE_SCAN_BOUND {
        return Ok(min_cut_scan(g, |size| size % 2 == 1).expect("odd shores exist"));
    }
    #[cfg(feature = "flow-cuts")]
    {
        Ok(flow::min_odd_cut_gomory_hu(g))
    }
    #[cfg(not(feature = "flow-cuts"))]
    panic!(
        "order {} exceeds the odd-cut scan bound; enable the flow-cuts feature",
        g.order()
    );
}

#[cfg(feature = "flow-cuts")]
pub mod flow {
    //! Minimum odd cut through a Gomory-Hu tree: some fundamental tree cut
    //! with an odd shore attains the minimum odd cut, so it suffices to
    //! inspect the n-1 tree cuts.

    use super::*;
    use crate::bitset::BitVec;
    use std::collections::VecDeque;

    /// Weighted graph on supernodes, each a set of original vertices.
    struct SuperGraph {
        members: Vec<Vec<usize>>,
        cap: Vec<Vec<usize>>,
    }

    fn edmonds_karp(cap: &[Vec<usize>], s: usize, t: usize) -> (usize, Vec<bool>) {
        let n = cap.len();
        let mut cap: Vec<Vec<usize>> = cap.to_vec();
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
                let side: Vec<bool> = (0..n).map(|v| parent[v] != usize::MAX).collect();
                return (flow, side);
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

    /// Recursive tree construction with genuine contraction, so every tree
    /// edge records a real minimum cut of the original graph whose shore is
    /// the fundamental cut of that edge in the finished tree.
    fn build(
        g: &SuperGraph,
        terminals: &[usize],
        edges: &mut Vec<(usize, BitVec, usize)>,
        n_orig: usize,
    ) {
        if terminals.len() <= 1 {
            return;
        }
        let (s, t) = (terminals[0], terminals[1]);
        let (value, side) = edmonds_karp(&g.cap, s, t);
        let mut shore = BitVec::new(n_orig);
        for (i, on_s_side) in side.iter().enumerate() {
            if *on_s_side {
                for &v in &g.members[i] {
                    shore.set(v, true);
                }
            }
        }
        edges.push((value, shore, n_orig));

        // Contract the far side into one supernode and recurse on each half.
        for keep_side in [true, false] {
            let kept: Vec<usize> = (0..g.members.len())
                .filter(|&i| side[i] == keep_side)
                .collect();
            let mut members: Vec<Vec<usize>> = kept.iter().map(|&i| g.members[i].clone()).collect();
            let mut merged = Vec::new();
            for (members, _) in g
                .members
                .iter()
                .zip(&side)
                .filter(|(_, s)| **s != keep_side)
            {
                merged.extend(members.iter().cloned());
            }
            members.push(merged);
            let k = members.len();
            let mut cap = vec![vec![0usize; k]; k];
            for (a_new, &a_old) in kept.iter().enumerate() {
                for (b_new, &b_old) in kept.iter().enumerate() {
                    cap[a_new][b_new] = g.cap[a_old][b_old];
                }
                let to_merged: usize = (0..g.members.len())
                    .filter(|&i| side[i] != keep_side)
                    .map(|i| g.cap[a_old][i])
                    .sum();
                cap[a_new][k - 1] = to_merged;
                cap[k - 1][a_new] = to_merged;
            }
            let sub = SuperGraph { members, cap };
            let sub_terminals: Vec<usize> = terminals
                .iter()
                .filter_map(|&term| kept.iter().position(|&i| i == term))
                .collect();
            build(&sub, &sub_terminals, edges, n_orig);
        }
    }

    pub fn min_odd_cut_gomory_hu(g: &MultiGraph) -> (usize, VertexSet) {
        let n = g.order();
        let mut cap = vec![vec![0usize; n]; n];
        for &(u, v) in g.edges() {
            cap[u][v] += 1;
            cap[v][u] += 1;
        }
        let root = SuperGraph {
            members: (0..n).map(|v| vec![v]).collect(),
            cap,
        };
        let terminals: Vec<usize> = (0..n).collect();
        let mut tree_cuts = Vec::new();
        build(&root, &terminals, &mut tree_cuts, n);
        tree_cuts
            .into_iter()
            .filter(|(_, shore, _)| shore.count() % 2 == 1)
            .map(|(value, shore, _)| (value, shore))
            .min_by_key(|(value, _)| *value)
            .expect("even-order graph has odd fundamental cuts")
    }
}

/// Proper edge coloring with colors `0..r`; for r-regular graphs every color
/// class is a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub r: usize,
    pub color_of: Vec<usize>,
}

impl EdgeColoring {
    pub fn class(&self, color: usize) -> Vec<usize> {
        (0..self.color_of.len())
            .filter(|&e| self.color_of[e] == color)
            .collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        (0..self.r).map(|c| self.class(c)).collect()
    }

    /// Class partition with classes and the partition itself sorted, for
    /// comparing colorings up to color permutation.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        let mut p = self.classes();
        p.sort();
        p
    }
}

/// Backtracking search for a proper r-edge-coloring, branching on the edge
/// whose endpoints leave the fewest colors available (ties by edge id).
pub fn r_edge_coloring(g: &MultiGraph, r: usize) -> Result<Option<EdgeColoring>, RGraphError> {
    for v in 0..g.order() {
        if g.degree(v) != r {
            return Err(RGraphError::NotRegular(r));
        }
    }
    let mut colorings = Vec::new();
    search_colorings(g, r, &mut colorings, 1, false);
    Ok(colorings.pop())
}

/// Collects proper r-edge-colorings until `limit` pairwise distinct class
/// partitions are found; used for uniqueness checks.
pub fn distinct_colorings_up_to(
    g: &MultiGraph,
    r: usize,
    limit: usize,
) -> Result<Vec<EdgeColoring>, RGraphError> {
    for v in 0..g.order() {
        if g.degree(v) != r {
            return Err(RGraphError::NotRegular(r));
        }
    }
    let mut colorings = Vec::new();
    search_colorings(g, r, &mut colorings, limit, true);
    Ok(colorings)
}

fn search_colorings(
    g: &MultiGraph,
    r: usize,
    out: &mut Vec<EdgeColoring>,
    limit: usize,
    distinct_partitions: bool,
) {
    if g.size() == 0 {
        return;
    }
    let mut search = ColoringSearch {
        g,
        r,
        color_of: vec![usize::MAX; g.size()],
        used: vec![0; g.order()],
        out,
        limit,
        distinct_partitions,
    };
    search.assign(0);
}

/// Backtracking state for the proper-coloring search. `used[v]` has bit `c`
/// set when some edge at `v` already carries color `c`; color symmetry is
/// broken by allowing a color only when all lower colors appear.
struct ColoringSearch<'a> {
    g: &'a MultiGraph,
    r: usize,
    color_of: Vec<usize>,
    used: Vec<u32>,
    out: &'a mut Vec<EdgeColoring>,
    limit: usize,
    distinct_partitions: bool,
}

impl ColoringSearch<'_> {
    fn assign(&mut self, max_color_used: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        // Most-constrained uncolored edge.
        let mut pick: Option<(usize, usize)> = None; // (free count, edge)
        for (e, &assigned) in self.color_of.iter().enumerate() {
            if assigned != usize::MAX {
                continue;
            }
            let (u, v) = self.g.endpoints(e);
            let free =
                (!(self.used[u] | self.used[v]) & ((1u32 << self.r) - 1)).count_ones() as usize;
            if free == 0 {
                return;
            }
            if pick.is_none_or(|(best, _)| free < best) {
                pick = Some((free, e));
            }
        }
        let Some((_, e)) = pick else {
            let coloring = EdgeColoring {
                r: self.r,
                color_of: self.color_of.clone(),
            };
            if self.distinct_partitions {
                let p = coloring.partition();
                if self.out.iter().any(|c| c.partition() == p) {
                    return;
                }
            }
            self.out.push(coloring);
            return;
        };
        let (u, v) = self.g.endpoints(e);
        let cap = (max_color_used + 1).min(self.r - 1);
        for c in 0..=cap {
            if self.used[u] >> c & 1 == 1 || self.used[v] >> c & 1 == 1 {
                continue;
            }
            self.color_of[e] = c;
            self.used[u] |= 1 << c;
            self.used[v] |= 1 << c;
            self.assign(max_color_used.max(c));
            self.color_of[e] = usize::MAX;
            self.used[u] &= !(1 << c);
            self.used[v] &= !(1 << c);
            if self.out.len() >= self.limit {
                return;
            }
        }
    }
}

/// `g ⊕ (k-1)M`: adds `k - 1` new parallel copies of each matching edge.
/// New ids come after the existing ones, grouped by copied source edge in
/// ascending order. `k = 1` returns the graph unchanged.
pub fn multiply_matching(
    g: &MultiGraph,
    m: &PerfectMatching,
    k: usize,
) -> Result<MultiGraph, RGraphError> {
    assert!(k >= 1, "multiplier must be positive");
    if !m.is_valid_for(g) {
        return Err(RGraphError::NotPerfectMatching);
    }
    let mut edges = g.edges().to_vec();
    for &e in m.edge_ids() {
        for _ in 1..k {
            edges.push(g.endpoints(e));
        }
    }
    Ok(MultiGraph::from_edges(g.order(), &edges))
}

/// A triangle whose induced subgraph has exactly `r` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub vertices: [usize; 3],
    pub induced_edges: Vec<usize>,
}

/// All rainbow triangles: vertex triples that induce exactly `r` edges.
pub fn rainbow_triangles(g: &MultiGraph, r: usize) -> Vec<Triangle> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if g.multiplicity(a, b) == 0 {
                continue;
            }
            for c in (b + 1)..n {
                if g.multiplicity(a, c) == 0 || g.multiplicity(b, c) == 0 {
                    continue;
                }
                let induced: Vec<usize> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(u, v))| [a, b, c].contains(&u) && [a, b, c].contains(&v))
                    .map(|(id, _)| id)
                    .collect();
                if induced.len() == r {
                    out.push(Triangle {
                        vertices: [a, b, c],
                        induced_edges: induced,
                    });
                }
            }
        }
    }
    out
}

/// A spanning subgraph built from color classes, with its edge provenance.
#[derive(Debug, Clone)]
pub struct SpanningCubic {
    pub graph: MultiGraph,
    /// Subgraph edge id -> parent edge id.
    pub edge_map: Vec<usize>,
    /// The color classes whose union forms the subgraph.
    pub classes_used: [usize; 3],
}

fn union_subgraph(g: &MultiGraph, coloring: &EdgeColoring, classes: [usize; 3]) -> SpanningCubic {
    let edge_map: Vec<usize> = (0..g.size())
        .filter(|&e| classes.contains(&coloring.color_of[e]))
        .collect();
    let edges: Vec<(usize, usize)> = edge_map.iter().map(|&e| g.endpoints(e)).collect();
    SpanningCubic {
        graph: MultiGraph::from_edges(g.order(), &edges),
        edge_map,
        classes_used: classes,
    }
}

fn is_3cc_cubic(g: &MultiGraph) -> bool {
    // For 3-regular graphs vertex connectivity equals edge connectivity.
    g.order() == 2 || crate::graph::edge_connectivity(g).is_ok_and(|c| c >= 3)
}

/// Spanning cubic subgraph from three color classes of an r-graph coloring.
///
/// With `e2` given, `e1` and `e2` must be mutually exclusive solitary edges
/// in distinct classes; `M1 ∪ M2 ∪ Mi` is then 3-connected for every third
/// class `i` (pass `class_choice` to pick one). With `e2` absent, `e1` must
/// be solitary; the search finds classes `i, j` with `M1 ∪ Mi ∪ Mj`
/// 3-connected, which exists when the graph is 3-edge-connected.
pub fn cubic_core_for_pair(
    g: &MultiGraph,
    coloring: &EdgeColoring,
    e1: usize,
    e2: Option<usize>,
    class_choice: Option<usize>,
) -> Result<SpanningCubic, RGraphError> {
    let r = coloring.r;
    if r == 3 {
        return Ok(union_subgraph(g, coloring, [0, 1, 2]));
    }
    let ms = crate::matching::enumerate_pms(g)
        .map_err(|_| RGraphError::PreconditionUnmet("matchings not enumerable"))?;
    if !ms.is_solitary(e1) {
        return Err(RGraphError::PreconditionUnmet("first edge is not solitary"));
    }
    let c1 = coloring.color_of[e1];
    match e2 {
        Some(e2) => {
            if !ms.is_solitary(e2) {
                return Err(RGraphError::PreconditionUnmet(
                    "second edge is not solitary",
                ));
            }
            if ms.incidence(e1).intersects(ms.incidence(e2)) {
                return Err(RGraphError::PreconditionUnmet(
                    "edges are not mutually exclusive",
                ));
            }
            let c2 = coloring.color_of[e2];
            if c1 == c2 {
                return Err(RGraphError::PreconditionUnmet("edges share a color class"));
            }
            let third = match class_choice {
                Some(i) => {
                    if i == c1 || i == c2 || i >= r {
                        return Err(RGraphError::PreconditionUnmet("invalid third class"));
                    }
                    i
                }
                None => (0..r).find(|&i| i != c1 && i != c2).unwrap(),
            };
            let sub = union_subgraph(g, coloring, [c1, c2, third]);
            debug_assert!(is_3cc_cubic(&sub.graph));
            Ok(sub)
        }
        None => {
            for i in 0..r {
                for j in (i + 1)..r {
                    if i == c1 || j == c1 {
                        continue;
                    }
                    let sub = union_subgraph(g, coloring, [c1, i, j]);
                    if is_3cc_cubic(&sub.graph) {
                        return Ok(sub);
                    }
                }
            }
            Err(RGraphError::PreconditionUnmet(
                "no 3-connected class union exists",
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::matching::enumerate_pms;

    #[test]
    fn certify_named_graphs() {
        let verdict = certify_rgraph(&families::petersen());
        let cert = verdict.certificate().unwrap();
        assert_eq!(cert.r, 3);
        assert_eq!(cert.min_odd_cut, 3);
        assert!(cert.is_3ec);

        assert!(matches!(
            certify_rgraph(&families::c4()),
            RGraphVerdict::Refused(Refusal::DegreeTooSmall { r: 2 })
        ));

        let k4_minus = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(matches!(
            certify_rgraph(&k4_minus),
            RGraphVerdict::Refused(Refusal::NotRegular { .. })
        ));
    }

    #[test]
    fn theta_is_certified() {
        let cert = certify_rgraph(&families::theta());
        assert!(matches!(cert, RGraphVerdict::Certified(c) if c.r == 3 && c.is_3ec));
    }

    #[test]
    fn min_odd_cut_values() {
        assert_eq!(min_odd_cut(&families::k4()).unwrap().0, 3);
        let glued = crate::cuts::glue(&families::k4(), 0, &families::k4(), 0).unwrap();
        assert_eq!(min_odd_cut(&glued.graph).unwrap().0, 3);
        // A bridge with odd shores pushes the minimum odd cut to one.
        let g =
            MultiGraph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]);
        assert_eq!(min_odd_cut(&g).unwrap().0, 1);
    }

    #[test]
    fn coloring_k4_and_petersen() {
        let coloring = r_edge_coloring(&families::k4(), 3).unwrap().unwrap();
        let ms = enumerate_pms(&families::k4()).unwrap();
        for class in coloring.classes() {
            assert!(ms
                .matchings()
                .iter()
                .any(|m| m.edge_ids() == class.as_slice()));
        }
        assert!(r_edge_coloring(&families::petersen(), 3).unwrap().is_none());
        assert_eq!(
            r_edge_coloring(&families::c6bar(), 4).unwrap_err(),
            RGraphError::NotRegular(4)
        );
    }

    #[test]
    fn multiplied_theta_family_member_is_colorable() {
        let g = families::gen_multiplied(families::MultipliedBase::Theta, &[2, 1, 1], 1).unwrap();
        assert!(r_edge_coloring(&g, 4).unwrap().is_some());
    }

    #[test]
    fn unique_coloring_counts() {
        assert_eq!(
            distinct_colorings_up_to(&families::k4(), 3, 2)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            distinct_colorings_up_to(&families::c6bar(), 3, 2)
                .unwrap()
                .len(),
            1
        );
        // The 4-cycle has a unique 2-edge-coloring.
        assert_eq!(
            distinct_colorings_up_to(&families::c4(), 2, 2)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn multiply_matching_identity_and_growth() {
        let g = families::c6bar();
        let ms = enumerate_pms(&g).unwrap();
        let m = ms.matchings()[0].clone();
        let same = multiply_matching(&g, &m, 1).unwrap();
        assert!(same.same_labeled(&g));
        let doubled = multiply_matching(&g, &m, 2).unwrap();
        assert_eq!(doubled.size(), g.size() + 3);
        assert!(matches!(
            certify_rgraph(&doubled),
            RGraphVerdict::Certified(c) if c.r == 4
        ));
    }

    #[test]
    fn multiply_petersen_gives_4graph() {
        let g = families::petersen();
        let ms = enumerate_pms(&g).unwrap();
        let doubled = multiply_matching(&g, &ms.matchings()[0], 2).unwrap();
        assert!(matches!(
            certify_rgraph(&doubled),
            RGraphVerdict::Certified(c) if c.r == 4
        ));
    }

    #[test]
    fn multiply_rejects_non_matching() {
        let g = families::k4();
        let bogus = PerfectMatching::new(vec![0, 1]);
        assert_eq!(
            multiply_matching(&g, &bogus, 2).unwrap_err(),
            RGraphError::NotPerfectMatching
        );
    }

    #[test]
    fn rainbow_triangles_in_named_graphs() {
        assert_eq!(rainbow_triangles(&families::k4(), 3).len(), 4);
        assert!(rainbow_triangles(&families::petersen(), 3).is_empty());
        // Doubling one triangle edge of the prism makes that triangle induce
        // four edges.
        let g = families::c6bar();
        let ms = enumerate_pms(&g).unwrap();
        let m = ms
            .matchings()
            .iter()
            .find(|m| {
                m.edge_ids().iter().any(|&e| {
                    let (u, v) = g.endpoints(e);
                    g.multiplicity(u, v) == 1
                        && rainbow_triangles(&g, 3)
                            .iter()
                            .any(|t| t.vertices.contains(&u) && t.vertices.contains(&v))
                })
            })
            .unwrap()
            .clone();
        let doubled = multiply_matching(&g, &m, 2).unwrap();
        assert!(!rainbow_triangles(&doubled, 4).is_empty());
    }

    #[test]
    fn cubic_core_trivial_for_r3() {
        let g = families::r8();
        let coloring = r_edge_coloring(&g, 3).unwrap().unwrap();
        let core = cubic_core_for_pair(&g, &coloring, 0, None, None).unwrap();
        assert_eq!(core.graph.size(), g.size());
    }

    #[test]
    fn cubic_core_pair_mode_on_multiplied_prism() {
        // Multiplying one class of the prism leaves two mutually exclusive
        // solitary doubleton edges from the other two classes.
        let g = families::c6bar();
        let coloring3 = r_edge_coloring(&g, 3).unwrap().unwrap();
        let class0 = coloring3.class(0);
        let m = PerfectMatching::new(class0);
        let big = multiply_matching(&g, &m, 2).unwrap();
        let coloring4 = r_edge_coloring(&big, 4).unwrap().unwrap();
        let ms = enumerate_pms(&big).unwrap();
        let solitary: Vec<usize> = ms.solitary_edges();
        let (e1, e2) = {
            let mut pair = None;
            'outer: for &a in &solitary {
                for &b in &solitary {
                    if a < b
                        && !ms.incidence(a).intersects(ms.incidence(b))
                        && coloring4.color_of[a] != coloring4.color_of[b]
                    {
                        pair = Some((a, b));
                        break 'outer;
                    }
                }
            }
            pair.expect("mutually exclusive solitary pair exists")
        };
        for third in 0..4 {
            if third == coloring4.color_of[e1] || third == coloring4.color_of[e2] {
                continue;
            }
            let core = cubic_core_for_pair(&big, &coloring4, e1, Some(e2), Some(third)).unwrap();
            assert!(crate::graph::is_k_vertex_connected(&core.graph, 3));
        }
    }

    #[test]
    fn cubic_core_single_mode_on_nonplanar_4graph() {
        let g = families::nonplanar_4graph();
        let coloring = r_edge_coloring(&g, 4).unwrap().unwrap();
        let ms = enumerate_pms(&g).unwrap();
        let e1 = ms.solitary_edges()[0];
        let core = cubic_core_for_pair(&g, &coloring, e1, None, None).unwrap();
        assert!(is_3cc_cubic(&core.graph));
        // The solitary edge stays solitary in the spanning cubic subgraph.
        let sub_e1 = core.edge_map.iter().position(|&p| p == e1).unwrap();
        let sub_ms = enumerate_pms(&core.graph).unwrap();
        assert!(sub_ms.is_solitary(sub_e1));
    }

    #[cfg(feature = "flow-cuts")]
    #[test]
    fn gomory_hu_odd_cut_matches_scan() {
        for g in [
            families::k4(),
            families::c6bar(),
            families::r8(),
            families::petersen(),
            families::n10(),
            families::staircase3_fixture_a(),
            families::three_graph_14_pattern_one_a(),
        ] {
            let scan = min_cut_scan(&g, |s| s % 2 == 1).unwrap().0;
            let gh = flow::min_odd_cut_gomory_hu(&g);
            assert_eq!(gh.0, scan);
            assert_eq!(gh.1.count() % 2, 1);
        }
    }
}
