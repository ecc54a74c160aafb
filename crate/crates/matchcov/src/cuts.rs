//! Even-2-cut machinery (gluing, marked components, the recursive 2-cut
//! decomposition), cut contractions, splicing, separating and tight cut
//! tests, and brick/brace classification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::bitset::BitVec;
use crate::canon;
use crate::graph::{cut_of, Cut, GraphError, MultiGraph, Parity, VertexSet};
use crate::io;
use crate::matching::{enumerate_pms, has_perfect_matching, is_matching_covered, MatchingError};

/// Shore-scan bound for tight/separating cut searches.
pub const TIGHT_SCAN_BOUND: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutError {
    #[error("cut is not an even 2-cut")]
    NotEven2Cut,
    #[error("graph is not 2-edge-connected of even order")]
    NotTwoConnected,
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("shore must be a nonempty proper subset of the vertices")]
    EmptyOrFullShore,
    #[error("spliced vertices have different degrees")]
    DegreeMismatch,
    #[error("graph order {0} exceeds the scan bound {1}")]
    BoundExceeded(usize, usize),
    #[error("graph order {0} is below the minimum 4")]
    OrderTooSmall(usize),
    #[error("graph is bipartite")]
    Bipartite,
    #[error("lemma hypotheses are not satisfied: {0}")]
    PreconditionUnmet(&'static str),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One side of an even 2-cut, with a marker edge standing in for the cut.
#[derive(Debug, Clone)]
pub struct MarkedComponent {
    pub graph: MultiGraph,
    pub marker_edge: usize,
    /// Component vertex id -> parent vertex id.
    pub vertex_map: Vec<usize>,
    /// Component edge id -> parent edge id; `None` for the marker edge.
    pub edge_map: Vec<Option<usize>>,
    /// The parent cut pair `(f, f')` the marker edge replaces.
    pub replaced: (usize, usize),
}

/// All even 2-cuts, each reported once with the shore containing vertex 0,
/// ordered by their sorted edge pair.
pub fn find_even_2cuts(g: &MultiGraph) -> Vec<Cut> {
    let n = g.order();
    let mut cuts = Vec::new();
    if !n.is_multiple_of(2) {
        return cuts;
    }
    let m = g.size();
    for e in 0..m {
        for f in (e + 1)..m {
            if let Some(shore) = two_cut_shore(g, e, f) {
                if shore.count() % 2 == 0 {
                    let oriented = if shore.get(0) {
                        shore
                    } else {
                        shore.complement()
                    };
                    cuts.push(cut_of(g, &oriented));
                }
            }
        }
    }
    cuts.sort_by_key(|c| c.edge_ids.clone());
    cuts
}

/// Shore X with `∂(X)` exactly `{e, f}`, if one exists.
fn two_cut_shore(g: &MultiGraph, e: usize, f: usize) -> Option<VertexSet> {
    let comps = g.components_avoiding(&[e, f]);
    let locate = |v: usize| comps.iter().position(|c| c.get(v)).unwrap();
    let (eu, ev) = g.endpoints(e);
    let (fu, fv) = g.endpoints(f);
    match comps.len() {
        2 => {
            // Both edges must cross between the two components.
            let crosses = |a: usize, b: usize| locate(a) != locate(b);
            (crosses(eu, ev) && crosses(fu, fv)).then(|| comps[0].clone())
        }
        3 => {
            // Both edges are bridges; the middle component is a shore iff
            // one edge joins it to each outer component.
            let (le, lf) = ((locate(eu), locate(ev)), (locate(fu), locate(fv)));
            if le.0 == le.1 || lf.0 == lf.1 {
                return None;
            }
            let middle = [le.0, le.1]
                .into_iter()
                .find(|c| *c == lf.0 || *c == lf.1)?;
            Some(comps[middle].clone())
        }
        _ => None,
    }
}

/// Splits `g` along an even 2-cut into its two marked components. Each
/// component keeps its vertices in parent order and gains one marker edge
/// joining the end of `f` with the end of `f'` on that side.
pub fn marked_components(
    g: &MultiGraph,
    c: &Cut,
) -> Result<(MarkedComponent, MarkedComponent), CutError> {
    if c.edge_ids.len() != 2 || c.parity != Parity::Even || c.shore.count() == 0 {
        return Err(CutError::NotEven2Cut);
    }
    let (f, f_prime) = (c.edge_ids[0], c.edge_ids[1]);
    let build = |shore: &VertexSet| -> MarkedComponent {
        let vertex_map: Vec<usize> = shore.iter_ones().collect();
        let mut relabel = vec![usize::MAX; g.order()];
        for (new, &old) in vertex_map.iter().enumerate() {
            relabel[old] = new;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if shore.get(u) && shore.get(v) {
                edges.push((relabel[u], relabel[v]));
                edge_map.push(Some(id));
            }
        }
        let side_end = |edge: usize| {
            let (u, v) = g.endpoints(edge);
            if shore.get(u) {
                relabel[u]
            } else {
                relabel[v]
            }
        };
        edges.push((side_end(f), side_end(f_prime)));
        edge_map.push(None);
        let graph = MultiGraph::from_edges(vertex_map.len(), &edges);
        MarkedComponent {
            marker_edge: graph.size() - 1,
            graph,
            vertex_map,
            edge_map,
            replaced: (f, f_prime),
        }
    };
    Ok((build(&c.shore), build(&c.co_shore)))
}

/// Result of gluing two graphs at one edge each.
#[derive(Debug, Clone)]
pub struct Glued {
    pub graph: MultiGraph,
    /// Ids of the two new edges; they form an even 2-cut of `graph`.
    pub cut_edges: (usize, usize),
}

/// Glues `g1` and `g2` at edges `e1`, `e2`: deletes both edges and joins
/// their ends crosswise with two new edges. Vertices of `g2` are shifted by
/// the order of `g1`; surviving edges keep their relative order, and the two
/// new edges come last.
pub fn glue(g1: &MultiGraph, e1: usize, g2: &MultiGraph, e2: usize) -> Result<Glued, CutError> {
    if !g1.order().is_multiple_of(2) || !g2.order().is_multiple_of(2) {
        return Err(CutError::NotTwoConnected);
    }
    let shift = g1.order();
    let (u1, v1) = g1.endpoints(e1);
    let (u2, v2) = g2.endpoints(e2);
    let mut edges = Vec::new();
    for (id, &(u, v)) in g1.edges().iter().enumerate() {
        if id != e1 {
            edges.push((u, v));
        }
    }
    for (id, &(u, v)) in g2.edges().iter().enumerate() {
        if id != e2 {
            edges.push((u + shift, v + shift));
        }
    }
    edges.push((u1, u2 + shift));
    edges.push((v1, v2 + shift));
    let graph = MultiGraph::from_edges(g1.order() + g2.order(), &edges);
    let m = graph.size();
    Ok(Glued {
        graph,
        cut_edges: (m - 2, m - 1),
    })
}

/// Record of recursive even-2-cut splits; leaves carry no even 2-cut.
#[derive(Debug, Clone)]
pub enum DecompositionTree {
    Leaf {
        graph: MultiGraph,
    },
    Split {
        graph: MultiGraph,
        shore: VertexSet,
        cut_edges: (usize, usize),
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn graph(&self) -> &MultiGraph {
        match self {
            DecompositionTree::Leaf { graph } => graph,
            DecompositionTree::Split { graph, .. } => graph,
        }
    }

    pub fn leaves(&self) -> Vec<&MultiGraph> {
        match self {
            DecompositionTree::Leaf { graph } => vec![graph],
            DecompositionTree::Split { left, right, .. } => {
                let mut l = left.leaves();
                l.extend(right.leaves());
                l
            }
        }
    }

    /// Sorted canonical forms of the leaves; the decomposition invariant says
    /// this multiset does not depend on the cut choices.
    pub fn leaf_multiset(&self) -> Result<Vec<Vec<u8>>, GraphError> {
        let mut forms = self
            .leaves()
            .into_iter()
            .map(canon::canonical_form)
            .collect::<Result<Vec<_>, _>>()?;
        forms.sort();
        Ok(forms)
    }

    /// JSON document: splits carry the shore bitmask (hex, bit i = vertex i)
    /// and cut edge ids; leaves embed the graph in edge-list text.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            DecompositionTree::Leaf { graph } => json!({
                "leaf": { "graph": io::write_edgelist(graph) }
            }),
            DecompositionTree::Split {
                shore,
                cut_edges,
                left,
                right,
                ..
            } => {
                let mut mask: u128 = 0;
                for v in shore.iter_ones() {
                    mask |= 1 << v;
                }
                json!({
                    "node": {
                        "shore": format!("{mask:x}"),
                        "cut": [cut_edges.0, cut_edges.1],
                        "left": left.to_json(),
                        "right": right.to_json(),
                    }
                })
            }
        }
    }
}

/// Recursive 2-cut decomposition, splitting on the lexicographically first
/// even 2-cut until every piece is free of them.
pub fn decompose_2cuts(g: &MultiGraph) -> Result<DecompositionTree, CutError> {
    decompose_2cuts_with(g, &mut |_| 0)
}

/// Decomposition with a shuffled cut choice, for checking that the leaf
/// multiset is independent of the choices.
pub fn decompose_2cuts_seeded(g: &MultiGraph, seed: u64) -> Result<DecompositionTree, CutError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    decompose_2cuts_with(g, &mut |k| rng.gen_range(0..k))
}

pub fn decompose_2cuts_with(
    g: &MultiGraph,
    pick: &mut dyn FnMut(usize) -> usize,
) -> Result<DecompositionTree, CutError> {
    if !g.order().is_multiple_of(2) || !g.is_connected() || has_bridge(g) {
        return Err(CutError::NotTwoConnected);
    }
    decompose_rec(g, pick)
}

fn has_bridge(g: &MultiGraph) -> bool {
    (0..g.size()).any(|e| {
        let (u, v) = g.endpoints(e);
        !g.component_avoiding(u, &[e]).get(v)
    })
}

fn decompose_rec(
    g: &MultiGraph,
    pick: &mut dyn FnMut(usize) -> usize,
) -> Result<DecompositionTree, CutError> {
    let cuts = find_even_2cuts(g);
    if cuts.is_empty() {
        return Ok(DecompositionTree::Leaf { graph: g.clone() });
    }
    let cut = &cuts[pick(cuts.len())];
    let (a, b) = marked_components(g, cut)?;
    Ok(DecompositionTree::Split {
        graph: g.clone(),
        shore: cut.shore.clone(),
        cut_edges: (cut.edge_ids[0], cut.edge_ids[1]),
        left: Box::new(decompose_rec(&a.graph, pick)?),
        right: Box::new(decompose_rec(&b.graph, pick)?),
    })
}

/// Result of shrinking a shore to a single vertex.
#[derive(Debug, Clone)]
pub struct ContractResult {
    pub graph: MultiGraph,
    /// The contraction vertex (always the last vertex of `graph`).
    pub contraction_vertex: usize,
    /// Parent vertex id -> contracted vertex id.
    pub vertex_map: Vec<usize>,
    /// Contracted edge id -> parent edge id.
    pub edge_map: Vec<usize>,
    /// Parent edges inside the shore, deleted as loops.
    pub deleted_edges: Vec<usize>,
    /// False when the shore induced a disconnected subgraph.
    pub shore_connected: bool,
}

/// Contracts shore `x` to a single vertex, preserving parallel edges and
/// deleting the edges inside `x`. Kept vertices retain their relative order;
/// the contraction vertex comes last.
pub fn contract(g: &MultiGraph, x: &VertexSet) -> Result<ContractResult, CutError> {
    let size = x.count();
    if size == 0 || size == g.order() {
        return Err(CutError::EmptyOrFullShore);
    }
    let keep: Vec<usize> = (0..g.order()).filter(|&v| !x.get(v)).collect();
    let contraction_vertex = keep.len();
    let mut vertex_map = vec![contraction_vertex; g.order()];
    for (new, &old) in keep.iter().enumerate() {
        vertex_map[old] = new;
    }
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    let mut deleted = Vec::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if x.get(u) && x.get(v) {
            deleted.push(id);
        } else {
            edges.push((vertex_map[u], vertex_map[v]));
            edge_map.push(id);
        }
    }
    Ok(ContractResult {
        graph: MultiGraph::from_edges(contraction_vertex + 1, &edges),
        contraction_vertex,
        vertex_map,
        edge_map,
        deleted_edges: deleted,
        shore_connected: g.induces_connected(x),
    })
}

/// Both contractions of a cut, shore side first.
pub fn cut_contractions(
    g: &MultiGraph,
    c: &Cut,
) -> Result<(ContractResult, ContractResult), CutError> {
    Ok((contract(g, &c.co_shore)?, contract(g, &c.shore)?))
}

/// Result of splicing two graphs at a vertex each.
#[derive(Debug, Clone)]
pub struct Spliced {
    pub graph: MultiGraph,
    /// For each pairing entry, the id of the new joining edge.
    pub joining_edges: Vec<usize>,
    /// `g1` edge id (not at `v1`) -> new edge id.
    pub edge_map_left: Vec<Option<usize>>,
    /// `g2` edge id (not at `v2`) -> new edge id.
    pub edge_map_right: Vec<Option<usize>>,
}

/// Splices `g1` at `v1` with `g2` at `v2` under an explicit bijection
/// between their incident edges, given as `(edge of g1, edge of g2)` pairs.
pub fn splice(
    g1: &MultiGraph,
    v1: usize,
    g2: &MultiGraph,
    v2: usize,
    pairing: &[(usize, usize)],
) -> Result<Spliced, CutError> {
    if g1.degree(v1) != g2.degree(v2) || pairing.len() != g1.degree(v1) {
        return Err(CutError::DegreeMismatch);
    }
    let mut left: Vec<usize> = pairing.iter().map(|&(a, _)| a).collect();
    let mut right: Vec<usize> = pairing.iter().map(|&(_, b)| b).collect();
    left.sort_unstable();
    left.dedup();
    right.sort_unstable();
    right.dedup();
    let d1: Vec<usize> = g1.vertex_cut_edges(v1);
    let d2: Vec<usize> = g2.vertex_cut_edges(v2);
    if left != d1 || right != d2 {
        return Err(CutError::DegreeMismatch);
    }

    let (h1, map1, emap1) = g1.delete_vertices(&[v1]);
    let (h2, map2, emap2) = g2.delete_vertices(&[v2]);
    let shift = h1.order();
    let mut edges: Vec<(usize, usize)> = h1.edges().to_vec();
    let mut edge_map_left = vec![None; g1.size()];
    for (new, &old) in emap1.iter().enumerate() {
        edge_map_left[old] = Some(new);
    }
    let mut edge_map_right = vec![None; g2.size()];
    for (new, &old) in emap2.iter().enumerate() {
        edge_map_right[old] = Some(edges.len() + new);
    }
    edges.extend(h2.edges().iter().map(|&(u, v)| (u + shift, v + shift)));

    let other_end = |g: &MultiGraph, v: usize, e: usize, map: &[usize]| {
        let (a, b) = g.endpoints(e);
        let w = if a == v { b } else { a };
        map.iter()
            .position(|&orig| orig == w)
            .expect("end survives deletion")
    };
    let mut joining = Vec::new();
    for &(a, b) in pairing {
        let ua = other_end(g1, v1, a, &map1);
        let ub = other_end(g2, v2, b, &map2);
        joining.push(edges.len());
        edges.push((ua, ub + shift));
    }
    Ok(Spliced {
        graph: MultiGraph::from_edges(h1.order() + h2.order(), &edges),
        joining_edges: joining,
        edge_map_left,
        edge_map_right,
    })
}

/// Splicing a 3-regular graph with a complete graph on four vertices; the
/// result does not depend on the far vertex or the bijection.
#[derive(Debug, Clone)]
pub struct SplicedK4 {
    pub graph: MultiGraph,
    /// Original edge id -> new edge id (edges at `v` map to their extension).
    pub edge_map: Vec<usize>,
    /// The three new triangle vertices replacing `v`.
    pub triangle_vertices: [usize; 3],
    /// Triangle edge ids, indexed so that `triangle_edges[i]` is the edge
    /// *opposite* the extension of the i-th edge of `∂(v)` (ascending id).
    pub triangle_edges: [usize; 3],
}

pub fn splice_k4(g: &MultiGraph, v: usize) -> Result<SplicedK4, CutError> {
    if g.degree(v) != 3 {
        return Err(CutError::DegreeMismatch);
    }
    let incident = g.vertex_cut_edges(v);
    let (h, vmap, emap) = g.delete_vertices(&[v]);
    let base = h.order();
    let mut edges: Vec<(usize, usize)> = h.edges().to_vec();
    let mut edge_map = vec![usize::MAX; g.size()];
    for (new, &old) in emap.iter().enumerate() {
        edge_map[old] = new;
    }
    // Attach the i-th incident edge to triangle vertex base + i.
    for (i, &e) in incident.iter().enumerate() {
        let (a, b) = g.endpoints(e);
        let w = if a == v { b } else { a };
        let w_new = vmap.iter().position(|&orig| orig == w).unwrap();
        edge_map[e] = edges.len();
        edges.push((w_new, base + i));
    }
    // Triangle edge i joins the two vertices other than base + i.
    let mut triangle_edges = [0usize; 3];
    for (i, slot) in triangle_edges.iter_mut().enumerate() {
        let others: Vec<usize> = (0..3).filter(|&j| j != i).map(|j| base + j).collect();
        *slot = edges.len();
        edges.push((others[0], others[1]));
    }
    Ok(SplicedK4 {
        graph: MultiGraph::from_edges(base + 3, &edges),
        edge_map,
        triangle_vertices: [base, base + 1, base + 2],
        triangle_edges,
    })
}

/// A cut is separating when both of its contractions are matching covered.
pub fn is_separating_cut(g: &MultiGraph, c: &Cut) -> Result<bool, CutError> {
    let verdict = is_matching_covered(g)?;
    if !verdict.covered {
        return Err(CutError::NotMatchingCovered);
    }
    if c.edge_ids.is_empty() {
        return Ok(false);
    }
    let (a, b) = cut_contractions(g, c)?;
    Ok(is_matching_covered(&a.graph)?.covered && is_matching_covered(&b.graph)?.covered)
}

/// A cut is tight when every perfect matching meets it in exactly one edge.
pub fn is_tight_cut(g: &MultiGraph, c: &Cut) -> Result<bool, CutError> {
    let verdict = is_matching_covered(g)?;
    if !verdict.covered {
        return Err(CutError::NotMatchingCovered);
    }
    let ms = enumerate_pms(g)?;
    Ok(ms
        .matchings()
        .iter()
        .all(|m| c.edge_ids.iter().filter(|&&e| m.contains(e)).count() == 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrickBraceKind {
    Brick,
    Brace,
    HasNontrivialTightCut,
    NotMatchingCovered,
}

#[derive(Debug, Clone)]
pub struct BrickBraceVerdict {
    pub kind: BrickBraceKind,
    pub witness: Option<Cut>,
}

/// Searches all shores for a nontrivial tight cut; graphs free of them are
/// braces when bipartite and bricks otherwise.
pub fn classify_brick_brace(g: &MultiGraph) -> Result<BrickBraceVerdict, CutError> {
    let n = g.order();
    if n > TIGHT_SCAN_BOUND {
        return Err(CutError::BoundExceeded(n, TIGHT_SCAN_BOUND));
    }
    if !is_matching_covered(g)?.covered {
        return Ok(BrickBraceVerdict {
            kind: BrickBraceKind::NotMatchingCovered,
            witness: None,
        });
    }
    let ms = enumerate_pms(g)?;
    if n >= 4 {
        // Tight cuts have odd shores (parity), so only scan those.
        for mask in 1u64..(1 << (n - 1)) {
            let mut x = BitVec::new(n);
            for v in 1..n {
                if mask >> (v - 1) & 1 == 1 {
                    x.set(v, true);
                }
            }
            let size = x.count();
            if size.is_multiple_of(2) || size == 1 || size == n - 1 {
                continue;
            }
            let c = cut_of(g, &x);
            if ms
                .matchings()
                .iter()
                .all(|m| c.edge_ids.iter().filter(|&&e| m.contains(e)).count() == 1)
            {
                return Ok(BrickBraceVerdict {
                    kind: BrickBraceKind::HasNontrivialTightCut,
                    witness: Some(c),
                });
            }
        }
    }
    let kind = if g.bipartition().is_some() {
        BrickBraceKind::Brace
    } else {
        BrickBraceKind::Brick
    };
    Ok(BrickBraceVerdict {
        kind,
        witness: None,
    })
}

/// Whether deleting any two distinct vertices leaves a matchable graph.
pub fn is_bicritical(g: &MultiGraph) -> Result<bool, CutError> {
    if g.order() < 4 {
        return Err(CutError::OrderTooSmall(g.order()));
    }
    for u in 0..g.order() {
        for v in (u + 1)..g.order() {
            let (h, _, _) = g.delete_vertices(&[u, v]);
            if !has_perfect_matching(&h) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A removable doubleton whose removal leaves a bipartite graph, along with
/// that graph's color classes (in the original vertex labels).
#[derive(Debug, Clone)]
pub struct NearBipartiteWitness {
    pub doubleton: (usize, usize),
    pub color_a: VertexSet,
    pub color_b: VertexSet,
}

/// Searches the removable classes of size two for one whose removal leaves a
/// bipartite matching covered graph. Color classes are oriented so the first
/// doubleton edge has both ends in `color_a`.
pub fn near_bipartite_witness(g: &MultiGraph) -> Result<Option<NearBipartiteWitness>, CutError> {
    if !is_matching_covered(g)?.covered {
        return Err(CutError::NotMatchingCovered);
    }
    if g.bipartition().is_some() {
        return Err(CutError::Bipartite);
    }
    let analysis = crate::dependence::analyze(g).map_err(|_| CutError::NotMatchingCovered)?;
    for &i in &analysis.removable {
        if analysis.classes[i].len() != 2 {
            continue;
        }
        let (e1, e2) = (analysis.classes[i][0], analysis.classes[i][1]);
        let (h, _) = g.delete_edges(&[e1, e2]);
        if let Some((a, b)) = h.bipartition() {
            if !is_matching_covered(&h)?.covered {
                continue;
            }
            let (u, _) = g.endpoints(e1);
            let (color_a, color_b) = if a.get(u) { (a, b) } else { (b, a) };
            return Ok(Some(NearBipartiteWitness {
                doubleton: (e1, e2),
                color_a,
                color_b,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dependence::{analyze, pattern};
    use crate::families;
    use crate::matching::solitary_edges;

    #[test]
    fn k4_has_no_even_2cut() {
        assert!(find_even_2cuts(&families::k4()).is_empty());
    }

    #[test]
    fn c4_has_two_even_2cuts() {
        let cuts = find_even_2cuts(&families::c4());
        assert_eq!(cuts.len(), 2);
        for c in &cuts {
            assert_eq!(c.parity, Parity::Even);
            assert_eq!(c.shore.count(), 2);
        }
    }

    #[test]
    fn glue_then_split_round_trips() {
        let glued = glue(&families::k4(), 2, &families::k4(), 4).unwrap();
        let cuts = find_even_2cuts(&glued.graph);
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].edge_ids, vec![glued.cut_edges.0, glued.cut_edges.1]);
        let (a, b) = marked_components(&glued.graph, &cuts[0]).unwrap();
        assert!(canon::is_isomorphic(&a.graph, &families::k4()).unwrap());
        assert!(canon::is_isomorphic(&b.graph, &families::k4()).unwrap());
        assert_eq!(crate::graph::edge_connectivity(&glued.graph).unwrap(), 2);
    }

    #[test]
    fn gluing_matching_covered_stays_matching_covered() {
        let glued = glue(&families::c6bar(), 0, &families::r8(), 3).unwrap();
        assert!(is_matching_covered(&glued.graph).unwrap().covered);
    }

    #[test]
    fn c4_marked_components_are_doubled_edges() {
        let g = families::c4();
        let cuts = find_even_2cuts(&g);
        let (a, b) = marked_components(&g, &cuts[0]).unwrap();
        for side in [&a, &b] {
            assert_eq!(side.graph.order(), 2);
            assert_eq!(side.graph.multiplicity(0, 1), 2);
        }
        assert!(canon::is_isomorphic(&a.graph, &b.graph).unwrap());
    }

    #[test]
    fn marked_components_of_glued_rgraph_are_rgraphs() {
        let glued = glue(&families::petersen(), 0, &families::k4(), 0).unwrap();
        let cuts = find_even_2cuts(&glued.graph);
        let (a, b) = marked_components(&glued.graph, &cuts[0]).unwrap();
        for side in [a, b] {
            assert!(matches!(
                crate::rgraph::certify_rgraph(&side.graph),
                crate::rgraph::RGraphVerdict::Certified(c) if c.r == 3
            ));
        }
    }

    #[test]
    fn decompose_k4_is_single_leaf() {
        let tree = decompose_2cuts(&families::k4()).unwrap();
        assert!(matches!(tree, DecompositionTree::Leaf { .. }));
    }

    #[test]
    fn decompose_rejects_bridges() {
        let p4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(decompose_2cuts(&p4).unwrap_err(), CutError::NotTwoConnected);
    }

    #[test]
    fn decompose_three_graph_pieces() {
        // Glued 18-vertex 3-graph: pieces are a triple edge, a complete graph
        // on four vertices, and two triangular prisms.
        let g = families::three_graph_18();
        let tree = decompose_2cuts(&g).unwrap();
        let mut got = tree.leaf_multiset().unwrap();
        let mut want = vec![
            canon::canonical_form(&families::theta()).unwrap(),
            canon::canonical_form(&families::k4()).unwrap(),
            canon::canonical_form(&families::c6bar()).unwrap(),
            canon::canonical_form(&families::c6bar()).unwrap(),
        ];
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn decompose_leaf_multiset_is_choice_independent() {
        let glued = glue(&families::c6bar(), 1, &families::r8(), 5).unwrap();
        let reference = decompose_2cuts(&glued.graph)
            .unwrap()
            .leaf_multiset()
            .unwrap();
        for seed in 0..5 {
            let shuffled = decompose_2cuts_seeded(&glued.graph, seed)
                .unwrap()
                .leaf_multiset()
                .unwrap();
            assert_eq!(shuffled, reference);
        }
    }

    #[test]
    fn contract_pair_in_k4() {
        let g = families::k4();
        let r = contract(&g, &g.vertex_set(&[2, 3])).unwrap();
        assert_eq!(r.graph.order(), 3);
        assert_eq!(r.graph.size(), 5);
        assert_eq!(r.deleted_edges.len(), 1);
        assert_eq!(r.contraction_vertex, 2);
        assert!(r.shore_connected);
    }

    #[test]
    fn contract_to_star() {
        let g = families::petersen();
        let mut x = g.full_vertex_set();
        x.set(0, false);
        let r = contract(&g, &x).unwrap();
        assert_eq!(r.graph.order(), 2);
        assert_eq!(r.graph.size(), 3);
    }

    #[test]
    fn contract_rejects_trivial_shores() {
        let g = families::k4();
        assert_eq!(
            contract(&g, &g.vertex_set(&[])).unwrap_err(),
            CutError::EmptyOrFullShore
        );
        assert_eq!(
            contract(&g, &g.full_vertex_set()).unwrap_err(),
            CutError::EmptyOrFullShore
        );
    }

    #[test]
    fn splicing_two_k4s_gives_prism() {
        let a = families::k4();
        let b = families::k4();
        let d1 = a.vertex_cut_edges(0);
        let d2 = b.vertex_cut_edges(3);
        let pairing: Vec<(usize, usize)> = d1.into_iter().zip(d2).collect();
        let spliced = splice(&a, 0, &b, 3, &pairing).unwrap();
        assert!(canon::is_isomorphic(&spliced.graph, &families::c6bar()).unwrap());
    }

    #[test]
    fn splice_k4_shortcut_matches_generic_splice() {
        let g = families::c6bar();
        let s = splice_k4(&g, 2).unwrap();
        assert_eq!(s.graph.order(), 8);
        assert!(crate::graph::is_k_vertex_connected(&s.graph, 3));
        // Same result through the generic operation.
        let k4 = families::k4();
        let pairing: Vec<(usize, usize)> = g
            .vertex_cut_edges(2)
            .into_iter()
            .zip(k4.vertex_cut_edges(0))
            .collect();
        let generic = splice(&g, 2, &k4, 0, &pairing).unwrap();
        assert!(canon::is_isomorphic(&s.graph, &generic.graph).unwrap());
    }

    #[test]
    fn splice_degree_mismatch() {
        let g = families::c6bar();
        let k4 = families::k4();
        assert!(matches!(
            splice(&g, 0, &k4, 1, &[(0, 0)]),
            Err(CutError::DegreeMismatch)
        ));
    }

    #[test]
    fn trivial_cuts_are_separating_and_tight() {
        let g = families::petersen();
        let c = cut_of(&g, &g.vertex_set(&[4]));
        assert!(is_separating_cut(&g, &c).unwrap());
        assert!(is_tight_cut(&g, &c).unwrap());
    }

    #[test]
    fn petersen_has_separating_5cuts() {
        let g = families::petersen();
        let x = g.vertex_set(&[0, 1, 2, 3, 4]);
        let c = cut_of(&g, &x);
        assert_eq!(c.edge_ids.len(), 5);
        assert!(is_separating_cut(&g, &c).unwrap());
        assert!(!is_tight_cut(&g, &c).unwrap());
    }

    #[test]
    fn even_2cut_is_not_tight() {
        let glued = glue(&families::k4(), 0, &families::k4(), 0).unwrap();
        let cuts = find_even_2cuts(&glued.graph);
        assert!(!is_tight_cut(&glued.graph, &cuts[0]).unwrap());
    }

    #[test]
    fn brick_brace_verdicts() {
        assert_eq!(
            classify_brick_brace(&families::k4()).unwrap().kind,
            BrickBraceKind::Brick
        );
        assert_eq!(
            classify_brick_brace(&families::petersen()).unwrap().kind,
            BrickBraceKind::Brick
        );
        assert_eq!(
            classify_brick_brace(&families::c4()).unwrap().kind,
            BrickBraceKind::Brace
        );
        let glued = glue(&families::k4(), 0, &families::k4(), 0).unwrap();
        assert_eq!(
            classify_brick_brace(&glued.graph).unwrap().kind,
            BrickBraceKind::HasNontrivialTightCut
        );
    }

    #[test]
    fn bicritical_checks() {
        assert!(is_bicritical(&families::k4()).unwrap());
        assert!(!is_bicritical(&families::c4()).unwrap());
        assert!(is_bicritical(&families::petersen()).unwrap());
        assert_eq!(
            is_bicritical(&families::theta()).unwrap_err(),
            CutError::OrderTooSmall(2)
        );
    }

    #[test]
    fn near_bipartite_witnesses() {
        let k4 = families::k4();
        let w = near_bipartite_witness(&k4).unwrap().unwrap();
        let (h, _) = k4.delete_edges(&[w.doubleton.0, w.doubleton.1]);
        assert!(h.bipartition().is_some());

        let c6bar = families::c6bar();
        let w = near_bipartite_witness(&c6bar).unwrap().unwrap();
        let (h, _) = c6bar.delete_edges(&[w.doubleton.0, w.doubleton.1]);
        let (a, b) = h
            .bipartition()
            .expect("doubleton removal leaves a bipartite graph");
        assert_eq!(a.count(), b.count());
        assert!(is_matching_covered(&h).unwrap().covered);

        assert!(near_bipartite_witness(&families::petersen())
            .unwrap()
            .is_none());
    }

    #[test]
    fn solitary_transfer_across_even_2cuts() {
        // An edge of the cut is solitary iff both markers are solitary.
        let glued = glue(&families::k4(), 0, &families::r8(), 2).unwrap();
        let g = &glued.graph;
        let cuts = find_even_2cuts(g);
        for c in &cuts {
            let (a, b) = marked_components(g, c).unwrap();
            let sol_g = solitary_edges(g).unwrap();
            let sol_a = solitary_edges(&a.graph).unwrap();
            let sol_b = solitary_edges(&b.graph).unwrap();
            for &f in &c.edge_ids {
                assert_eq!(
                    sol_g.contains(&f),
                    sol_a.contains(&a.marker_edge) && sol_b.contains(&b.marker_edge)
                );
            }
        }
    }

    #[test]
    fn pattern2_fixture_has_pattern_two() {
        let g = families::pattern2_16_fixture();
        assert_eq!(analyze(&g).unwrap().pattern, pattern(&[2]));
    }
}
