//! Perfect-matching enumeration and the matchability questions built on it:
//! matching covered, matching double covered, uniquely matchable, solitary
//! edges, odd 1-cuts of uniquely matchable graphs, and companions of
//! solitary edges in r-graphs.

use thiserror::Error;

use crate::bitset::BitVec;
use crate::graph::{cut_of, Cut, MultiGraph};
use crate::rgraph;

/// Default order bound for full enumeration.
pub const ENUMERATION_BOUND: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph has odd order")]
    OddOrder,
    #[error("order {0} exceeds the enumeration bound {1}; use the unbounded entry point")]
    BoundExceeded(usize, usize),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not uniquely matchable")]
    NotUniquelyMatchable,
    #[error("edge {0} is unmatchable")]
    UnmatchableEdge(usize),
    #[error("edge {0} is not solitary")]
    NotSolitary(usize),
    #[error("graph is not an r-graph")]
    NotRGraph,
    #[error("graph order {0} is below the minimum 4")]
    OrderTooSmall(usize),
    #[error("graph is not matching covered")]
    NotMatchingCovered,
}

/// A perfect matching, stored as a sorted list of edge ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PerfectMatching {
    edge_ids: Vec<usize>,
}

impl PerfectMatching {
    pub fn new(mut edge_ids: Vec<usize>) -> Self {
        edge_ids.sort_unstable();
        PerfectMatching { edge_ids }
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edge_ids.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// Whether this edge set is a perfect matching of `g`.
    pub fn is_valid_for(&self, g: &MultiGraph) -> bool {
        let mut covered = BitVec::new(g.order());
        for &e in &self.edge_ids {
            if e >= g.size() {
                return false;
            }
            let (u, v) = g.endpoints(e);
            if covered.get(u) || covered.get(v) {
                return false;
            }
            covered.set(u, true);
            covered.set(v, true);
        }
        covered.count() == g.order()
    }
}

/// All perfect matchings of a graph plus per-edge incidence bit vectors.
#[derive(Debug, Clone)]
pub struct MatchingSet {
    matchings: Vec<PerfectMatching>,
    incidence: Vec<BitVec>,
    edge_count: usize,
}

impl MatchingSet {
    fn build(g: &MultiGraph, mut matchings: Vec<PerfectMatching>) -> Self {
        matchings.sort();
        let mut incidence = vec![BitVec::new(matchings.len()); g.size()];
        for (j, m) in matchings.iter().enumerate() {
            for &e in m.edge_ids() {
                incidence[e].set(j, true);
            }
        }
        MatchingSet {
            matchings,
            incidence,
            edge_count: g.size(),
        }
    }

    pub fn matchings(&self) -> &[PerfectMatching] {
        &self.matchings
    }

    pub fn pm_count(&self) -> usize {
        self.matchings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Bit vector over matching indices for one edge.
    pub fn incidence(&self, e: usize) -> &BitVec {
        &self.incidence[e]
    }

    /// Number of perfect matchings containing `e`.
    pub fn degree(&self, e: usize) -> usize {
        self.incidence[e].count()
    }

    pub fn is_matchable(&self, e: usize) -> bool {
        self.degree(e) > 0
    }

    pub fn is_solitary(&self, e: usize) -> bool {
        self.degree(e) == 1
    }

    /// Edge ids with incidence popcount one.
    pub fn solitary_edges(&self) -> Vec<usize> {
        (0..self.edge_count)
            .filter(|&e| self.is_solitary(e))
            .collect()
    }
}

/// Enumerates all perfect matchings; deterministic order (lexicographic by
/// sorted edge-id list). Orders above [`ENUMERATION_BOUND`] are rejected.
pub fn enumerate_pms(g: &MultiGraph) -> Result<MatchingSet, MatchingError> {
    if g.order() > ENUMERATION_BOUND {
        return Err(MatchingError::BoundExceeded(g.order(), ENUMERATION_BOUND));
    }
    enumerate_pms_unbounded(g)
}

/// Enumeration without the order bound; the caller owns the blowup risk.
pub fn enumerate_pms_unbounded(g: &MultiGraph) -> Result<MatchingSet, MatchingError> {
    if !g.order().is_multiple_of(2) {
        return Err(MatchingError::OddOrder);
    }
    let mut found = Vec::new();
    collect_matchings(
        g,
        &mut BitVec::new(g.order()),
        &mut Vec::new(),
        &mut found,
        usize::MAX,
    );
    Ok(MatchingSet::build(g, found))
}

/// Number of perfect matchings, stopping early once `limit` are found.
pub fn count_pms_up_to(g: &MultiGraph, limit: usize) -> usize {
    if !g.order().is_multiple_of(2) {
        return 0;
    }
    let mut found = Vec::new();
    collect_matchings(
        g,
        &mut BitVec::new(g.order()),
        &mut Vec::new(),
        &mut found,
        limit,
    );
    found.len()
}

pub fn has_perfect_matching(g: &MultiGraph) -> bool {
    count_pms_up_to(g, 1) == 1
}

/// Branch on the lowest-indexed uncovered vertex, trying incident edges by
/// ascending id.
fn collect_matchings(
    g: &MultiGraph,
    covered: &mut BitVec,
    chosen: &mut Vec<usize>,
    found: &mut Vec<PerfectMatching>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    let Some(u) = (0..g.order()).find(|&v| !covered.get(v)) else {
        found.push(PerfectMatching::new(chosen.clone()));
        return;
    };
    let mut options: Vec<(usize, usize)> = g
        .incident(u)
        .iter()
        .filter(|&&(w, _)| !covered.get(w))
        .map(|&(w, id)| (id, w))
        .collect();
    options.sort_unstable();
    for (id, w) in options {
        covered.set(u, true);
        covered.set(w, true);
        chosen.push(id);
        collect_matchings(g, covered, chosen, found, limit);
        chosen.pop();
        covered.set(u, false);
        covered.set(w, false);
    }
}

/// Why a graph fails to be matching covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverObstruction {
    Disconnected,
    OrderTooSmall,
    NoPerfectMatching,
    UnmatchableEdge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverVerdict {
    pub covered: bool,
    pub witness: Option<CoverObstruction>,
}

/// Whether `g` is connected, of order at least two, with every edge in some
/// perfect matching; the verdict names an obstruction on failure.
pub fn is_matching_covered(g: &MultiGraph) -> Result<CoverVerdict, MatchingError> {
    let fail = |w| CoverVerdict {
        covered: false,
        witness: Some(w),
    };
    if g.order() < 2 {
        return Ok(fail(CoverObstruction::OrderTooSmall));
    }
    if !g.is_connected() {
        return Ok(fail(CoverObstruction::Disconnected));
    }
    if !g.order().is_multiple_of(2) {
        return Ok(fail(CoverObstruction::NoPerfectMatching));
    }
    let ms = enumerate_pms(g)?;
    if ms.pm_count() == 0 {
        return Ok(fail(CoverObstruction::NoPerfectMatching));
    }
    match (0..g.size()).find(|&e| !ms.is_matchable(e)) {
        Some(e) => Ok(fail(CoverObstruction::UnmatchableEdge(e))),
        None => Ok(CoverVerdict {
            covered: true,
            witness: None,
        }),
    }
}

/// Whether every edge lies in two or more perfect matchings.
pub fn is_matching_double_covered(g: &MultiGraph) -> Result<bool, MatchingError> {
    let verdict = is_matching_covered(g)?;
    if !verdict.covered {
        return Ok(false);
    }
    let ms = enumerate_pms(g)?;
    Ok((0..g.size()).all(|e| ms.degree(e) >= 2))
}

/// Edges lying in exactly one perfect matching.
pub fn solitary_edges(g: &MultiGraph) -> Result<Vec<usize>, MatchingError> {
    let ms = enumerate_pms(g)?;
    if ms.pm_count() == 0 {
        return Err(MatchingError::NoPerfectMatching);
    }
    Ok(ms.solitary_edges())
}

/// Whether the graph has precisely one perfect matching.
pub fn is_uniquely_matchable(g: &MultiGraph) -> bool {
    count_pms_up_to(g, 2) == 1
}

/// Unique-matchability of `g` minus a vertex set, treating the empty
/// remainder (the null graph) as uniquely matchable.
pub fn deletion_uniquely_matchable(g: &MultiGraph, removed: &[usize]) -> bool {
    if removed.len() == g.order() {
        return true;
    }
    let (h, _, _) = g.delete_vertices(removed);
    is_uniquely_matchable(&h)
}

/// For a non-null uniquely matchable graph, an edge of its perfect matching
/// that forms a 1-cut with odd shores. Smallest such edge id is returned.
pub fn kotzig_1cut(g: &MultiGraph) -> Result<usize, MatchingError> {
    if !g.order().is_multiple_of(2) {
        return Err(MatchingError::NotUniquelyMatchable);
    }
    let mut found = Vec::new();
    collect_matchings(
        g,
        &mut BitVec::new(g.order()),
        &mut Vec::new(),
        &mut found,
        2,
    );
    if found.len() != 1 {
        return Err(MatchingError::NotUniquelyMatchable);
    }
    let m = &found[0];
    for &f in m.edge_ids() {
        let (x, _) = g.endpoints(f);
        let shore = g.component_avoiding(x, &[f]);
        if !shore.get(g.endpoints(f).1) && shore.count() % 2 == 1 {
            return Ok(f);
        }
    }
    // Existence is guaranteed for uniquely matchable graphs.
    unreachable!("uniquely matchable graph without an odd 1-cut in its matching")
}

/// Certificate tying a solitary edge of an r-graph to a companion edge and
/// the two laminar odd r-cuts it determines.
#[derive(Debug, Clone)]
pub struct CompanionCertificate {
    pub solitary_edge: usize,
    pub companion: usize,
    pub cut_c: Cut,
    pub cut_d: Cut,
    /// False when the graph has 2-cuts and several odd 1-cuts competed; the
    /// lexicographically first one was chosen.
    pub unique: bool,
}

/// Companion of a solitary edge `e = uv`: an odd 1-cut of `g - u - v`,
/// together with the associated r-cuts. Unique when `g` is 3-edge-connected.
pub fn companion_of(g: &MultiGraph, e: usize) -> Result<CompanionCertificate, MatchingError> {
    if g.order() < 4 {
        return Err(MatchingError::OrderTooSmall(g.order()));
    }
    let cert = match rgraph::certify_rgraph(g) {
        rgraph::RGraphVerdict::Certified(c) => c,
        rgraph::RGraphVerdict::Refused(_) => return Err(MatchingError::NotRGraph),
    };
    let ms = enumerate_pms(g)?;
    if !ms.is_solitary(e) {
        return Err(MatchingError::NotSolitary(e));
    }
    let (u, v) = g.endpoints(e);
    let (h, vertex_map, edge_map) = g.delete_vertices(&[u, v]);

    // Odd 1-cuts of g - u - v, by ascending original edge id.
    let mut companions: Vec<(usize, BitVec)> = Vec::new();
    for (f, &(x, y)) in h.edges().iter().enumerate() {
        let shore = h.component_avoiding(x, &[f]);
        if !shore.get(y) && shore.count() % 2 == 1 {
            companions.push((edge_map[f], shore));
        }
    }
    companions.sort_by_key(|&(id, _)| id);
    let Some((companion, shore_h)) = companions.first().cloned() else {
        return Err(MatchingError::NotSolitary(e));
    };

    // Both shores of the companion, lifted back to g's vertex labels.
    let lift = |side: &BitVec| -> BitVec {
        let mut s = BitVec::new(g.order());
        for hv in side.iter_ones() {
            s.set(vertex_map[hv], true);
        }
        s
    };
    let (hx, _) = h.endpoints(
        edge_map
            .iter()
            .position(|&orig| orig == companion)
            .expect("companion comes from h"),
    );
    let (x_side, y_side) = if shore_h.get(hx) {
        (shore_h.clone(), shore_h.complement())
    } else {
        (shore_h.complement(), shore_h)
    };
    // Deterministic orientation: C gets the shore holding the companion's
    // lower-numbered end in g.
    let (gx, gy) = g.endpoints(companion);
    let (lo, _) = (gx.min(gy), gx.max(gy));
    let x = lift(&x_side);
    let y = lift(&y_side);
    let (x, y) = if x.get(lo) { (x, y) } else { (y, x) };
    let cut_c = cut_of(g, &x);
    let cut_d = cut_of(g, &y);
    debug_assert_eq!(cut_c.edge_ids.len(), cert.r);
    debug_assert_eq!(cut_d.edge_ids.len(), cert.r);
    debug_assert!(!x.intersects(&y));
    debug_assert_eq!(x.count() + y.count() + 2, g.order());
    Ok(CompanionCertificate {
        solitary_edge: e,
        companion,
        cut_c,
        cut_d,
        unique: companions.len() == 1,
    })
}
