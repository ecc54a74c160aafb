//! The dependence relation between edges of a matching covered graph, its
//! equivalence classes and their poset, and the solitary pattern.
//!
//! An edge `e` depends on `f` when every perfect matching through `e` also
//! uses `f`; mutual dependence partitions the edge set, and classes whose
//! edges lie in exactly one matching are the solitary classes. Everything is
//! computed from the incidence bit vectors of a [`MatchingSet`]: `e` depends
//! on `f` iff `incidence(e)` is a subset of `incidence(f)`, so classes are
//! groups of equal incidence vectors.

use std::collections::HashMap;

use thiserror::Error;

use crate::bitset::BitVec;
use crate::cuts::MarkedComponent;
use crate::graph::{Cut, MultiGraph, Parity};
use crate::matching::{enumerate_pms, is_matching_covered, MatchingError, MatchingSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DependenceError {
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("cut is not an even 2-cut")]
    NotEven2Cut,
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

/// Nonincreasing sequence of solitary-class cardinalities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolitaryPattern(Vec<usize>);

impl SolitaryPattern {
    pub fn new(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        SolitaryPattern(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for SolitaryPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Convenience for pattern literals in tests and match arms.
pub fn pattern(sizes: &[usize]) -> SolitaryPattern {
    SolitaryPattern::new(sizes.to_vec())
}

/// Equivalence classes, their poset and the solitary structure of one graph.
#[derive(Debug, Clone)]
pub struct DependenceAnalysis {
    /// Edge ids per class, each sorted; classes ordered by
    /// (size descending, smallest edge id ascending).
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Transitive reduction of the class poset; `(i, j)` means class `i`
    /// depends on class `j` (arrows point at the depended-on class).
    pub hasse: Vec<(usize, usize)>,
    /// Reachability closure of `hasse` (excluding self loops).
    reach: Vec<BitVec>,
    /// Classes no other class depends on.
    pub minimal: Vec<usize>,
    /// Minimal classes whose removal leaves the graph connected.
    pub removable: Vec<usize>,
    /// Classes whose edges lie in exactly one perfect matching.
    pub solitary: Vec<usize>,
    pub pattern: SolitaryPattern,
    /// Cardinality of a largest class, with one witnessing class index.
    pub epsilon: usize,
    pub epsilon_witness: usize,
}

impl DependenceAnalysis {
    /// Whether class `i` depends on class `j` (reflexive).
    pub fn class_depends(&self, i: usize, j: usize) -> bool {
        i == j || self.reach[i].get(j)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// Sorted edge ids of all solitary classes combined.
    pub fn solitary_edges(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .solitary
            .iter()
            .flat_map(|&i| self.classes[i].iter().cloned())
            .collect();
        out.sort_unstable();
        out
    }
}

/// Whether every perfect matching containing `e` also contains `f`.
pub fn depends(ms: &MatchingSet, e: usize, f: usize) -> Result<bool, DependenceError> {
    for x in [e, f] {
        if !ms.is_matchable(x) {
            return Err(MatchingError::UnmatchableEdge(x).into());
        }
    }
    Ok(ms.incidence(e).is_subset(ms.incidence(f)))
}

/// Whether each perfect matching contains at most one of `e` and `f`.
pub fn mutually_exclusive(ms: &MatchingSet, e: usize, f: usize) -> Result<bool, DependenceError> {
    for x in [e, f] {
        if !ms.is_matchable(x) {
            return Err(MatchingError::UnmatchableEdge(x).into());
        }
    }
    Ok(!ms.incidence(e).intersects(ms.incidence(f)))
}

/// Full dependence analysis of a matching covered graph.
pub fn analyze(g: &MultiGraph) -> Result<DependenceAnalysis, DependenceError> {
    let verdict = is_matching_covered(g)?;
    if !verdict.covered {
        return Err(DependenceError::NotMatchingCovered);
    }
    let ms = enumerate_pms(g)?;
    Ok(analyze_with(g, &ms))
}

/// [`analyze`] over an already-enumerated matching set of a matching covered
/// graph.
pub fn analyze_with(g: &MultiGraph, ms: &MatchingSet) -> DependenceAnalysis {
    // Classes are groups of equal incidence vectors.
    let mut groups: HashMap<&BitVec, Vec<usize>> = HashMap::new();
    for e in 0..g.size() {
        groups.entry(ms.incidence(e)).or_default().push(e);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));

    let mut class_of = vec![0usize; g.size()];
    for (i, c) in classes.iter().enumerate() {
        for &e in c {
            class_of[e] = i;
        }
    }

    let k = classes.len();
    let rep: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    // Full relation, then transitive reduction for the Hasse diagram.
    let mut depends_on = vec![BitVec::new(k); k];
    for i in 0..k {
        for j in 0..k {
            if i != j && ms.incidence(rep[i]).is_subset(ms.incidence(rep[j])) {
                depends_on[i].set(j, true);
            }
        }
    }
    let mut hasse = Vec::new();
    for i in 0..k {
        for j in depends_on[i].iter_ones() {
            let via_middle = depends_on[i]
                .iter_ones()
                .any(|m| m != j && depends_on[m].get(j));
            if !via_middle {
                hasse.push((i, j));
            }
        }
    }
    hasse.sort_unstable();

    let minimal: Vec<usize> = (0..k)
        .filter(|&j| (0..k).all(|i| i == j || !depends_on[i].get(j)))
        .collect();
    let removable: Vec<usize> = minimal
        .iter()
        .cloned()
        .filter(|&i| {
            let (h, _) = g.delete_edges(&classes[i]);
            h.is_connected()
        })
        .collect();
    let solitary: Vec<usize> = (0..k).filter(|&i| ms.degree(rep[i]) == 1).collect();
    let pattern = SolitaryPattern::new(solitary.iter().map(|&i| classes[i].len()).collect());
    let epsilon_witness = (0..k).max_by_key(|&i| classes[i].len()).unwrap_or(0);
    let epsilon = classes.get(epsilon_witness).map_or(0, Vec::len);

    DependenceAnalysis {
        classes,
        class_of,
        hasse,
        reach: depends_on,
        minimal,
        removable,
        solitary,
        pattern,
        epsilon,
        epsilon_witness,
    }
}

/// Solitary pattern of a matching covered graph.
pub fn solitary_pattern(g: &MultiGraph) -> Result<SolitaryPattern, DependenceError> {
    Ok(analyze(g)?.pattern)
}

/// How one equivalence class of the parent graph appears inside a marked
/// component of an even 2-cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassImage {
    /// The class contains the cut; its trace plus the marker edge is a class
    /// of the component.
    WithCut { component_class: usize },
    /// The class avoids the cut; its trace is empty or a whole class of the
    /// component.
    Disjoint { component_class: Option<usize> },
}

#[derive(Debug, Clone)]
pub struct Across2Cut {
    /// Image of each parent class (indexed as in the parent analysis) in the
    /// given marked component.
    pub images: Vec<ClassImage>,
    /// Parent class index containing the cut.
    pub cut_class: usize,
    /// Edge ids (in the parent) of the cut class, reassembled from the two
    /// component classes through the marker edges: `(D1-e1)+(D2-e2)+C`.
    pub composed_cut_class: Vec<usize>,
}

/// Maps the equivalence classes of `g` across an even 2-cut into the given
/// marked component, and recomposes the class containing the cut from the
/// marker-edge classes of both components.
pub fn classes_across_2cut(
    g: &MultiGraph,
    c: &Cut,
    side: &MarkedComponent,
    other: &MarkedComponent,
) -> Result<Across2Cut, DependenceError> {
    if c.edge_ids.len() != 2 || c.parity != Parity::Even {
        return Err(DependenceError::NotEven2Cut);
    }
    let parent = analyze(g)?;
    let child = analyze(&side.graph)?;
    let other_child = analyze(&other.graph)?;

    let cut_class = parent.class_of[c.edge_ids[0]];
    debug_assert_eq!(cut_class, parent.class_of[c.edge_ids[1]]);

    // Parent edge id -> child edge id for this side.
    let mut to_child: HashMap<usize, usize> = HashMap::new();
    for (child_e, parent_e) in side.edge_map.iter().enumerate() {
        if let Some(p) = parent_e {
            to_child.insert(*p, child_e);
        }
    }

    let mut images = Vec::with_capacity(parent.classes.len());
    for (i, class) in parent.classes.iter().enumerate() {
        let trace: Vec<usize> = class
            .iter()
            .filter_map(|e| to_child.get(e).cloned())
            .collect();
        if i == cut_class {
            let mut expected = trace.clone();
            expected.push(side.marker_edge);
            expected.sort_unstable();
            let component_class = child.class_of[side.marker_edge];
            debug_assert_eq!(child.classes[component_class], expected);
            images.push(ClassImage::WithCut { component_class });
        } else if let Some(&first) = trace.first() {
            let component_class = child.class_of[first];
            debug_assert_eq!(child.classes[component_class], trace);
            images.push(ClassImage::Disjoint {
                component_class: Some(component_class),
            });
        } else {
            images.push(ClassImage::Disjoint {
                component_class: None,
            });
        }
    }

    // Inverse direction: D = (D1 - e1) + (D2 - e2) + C.
    let mut composed: Vec<usize> = c.edge_ids.clone();
    for (component, analysis) in [(side, &child), (other, &other_child)] {
        let marker_class = analysis.class_of[component.marker_edge];
        for &e in &analysis.classes[marker_class] {
            if e != component.marker_edge {
                composed.push(component.edge_map[e].expect("non-marker edges map to the parent"));
            }
        }
    }
    composed.sort_unstable();
    debug_assert_eq!(composed, parent.classes[cut_class]);

    Ok(Across2Cut {
        images,
        cut_class,
        composed_cut_class: composed,
    })
}

/// Looks up the class index holding a given edge pair, if the pair is one
/// whole class.
pub fn class_index_of_pair(
    analysis: &DependenceAnalysis,
    g: &MultiGraph,
    a: (usize, usize),
    b: (usize, usize),
) -> Option<usize> {
    let ea = g.edge_between(a.0, a.1)?;
    let eb = g.edge_between(b.0, b.1)?;
    let i = analysis.class_of[ea];
    (analysis.class_of[eb] == i && analysis.classes[i].len() == 2).then_some(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts;
    use crate::families;

    fn edge(g: &MultiGraph, u: usize, v: usize) -> usize {
        g.edge_between(u, v).unwrap()
    }

    #[test]
    fn r10_spot_checks() {
        let g = families::r10();
        let ms = enumerate_pms(&g).unwrap();
        let e45 = edge(&g, 4, 5);
        let e23 = edge(&g, 2, 3);
        assert!(depends(&ms, e45, e23).unwrap());
        assert!(!depends(&ms, e23, e45).unwrap());
        let e12 = edge(&g, 1, 2);
        let e09 = edge(&g, 0, 9);
        assert!(depends(&ms, e12, e09).unwrap());
        assert!(depends(&ms, e09, e12).unwrap());
        assert!(depends(&ms, e45, e45).unwrap());
    }

    #[test]
    fn r10_classes_and_minimal() {
        let g = families::r10();
        let a = analyze(&g).unwrap();
        assert_eq!(a.classes.len(), 13);
        let doubletons: Vec<&Vec<usize>> = a.classes.iter().filter(|c| c.len() == 2).collect();
        assert_eq!(doubletons.len(), 2);
        let pair = |u, v, x, y| {
            vec![
                edge(&g, u, v).min(edge(&g, x, y)),
                edge(&g, u, v).max(edge(&g, x, y)),
            ]
        };
        assert!(doubletons.contains(&&pair(1, 2, 0, 9)));
        assert!(doubletons.contains(&&pair(1, 3, 0, 8)));
        let minimal_sets: Vec<Vec<usize>> =
            a.minimal.iter().map(|&i| a.classes[i].clone()).collect();
        assert_eq!(minimal_sets.len(), 4);
        assert!(minimal_sets.contains(&pair(1, 2, 0, 9)));
        assert!(minimal_sets.contains(&pair(1, 3, 0, 8)));
        assert!(minimal_sets.contains(&vec![edge(&g, 4, 5)]));
        assert!(minimal_sets.contains(&vec![edge(&g, 6, 7)]));
    }

    #[test]
    fn r10_hasse_matches_expected_arrows() {
        let g = families::r10();
        let a = analyze(&g).unwrap();
        let class_of_pair = |u: usize, v: usize| a.class_of[edge(&g, u, v)];
        let expected = [
            ((1, 2), (3, 4)),
            ((1, 2), (5, 6)),
            ((1, 2), (7, 8)),
            ((1, 3), (2, 5)),
            ((1, 3), (4, 7)),
            ((1, 3), (6, 9)),
            ((4, 5), (2, 3)),
            ((2, 3), (0, 1)),
            ((6, 7), (8, 9)),
            ((8, 9), (0, 1)),
        ];
        let mut want: Vec<(usize, usize)> = expected
            .iter()
            .map(|&((a1, a2), (b1, b2))| (class_of_pair(a1, a2), class_of_pair(b1, b2)))
            .collect();
        want.sort_unstable();
        assert_eq!(a.hasse, want);
        // Closure picks up the two-step dependencies dropped by the Hasse
        // reduction.
        assert!(a.class_depends(class_of_pair(4, 5), class_of_pair(0, 1)));
        assert!(a.class_depends(class_of_pair(6, 7), class_of_pair(0, 1)));
    }

    #[test]
    fn named_patterns() {
        assert_eq!(
            solitary_pattern(&families::k4()).unwrap(),
            pattern(&[2, 2, 2])
        );
        assert_eq!(
            solitary_pattern(&families::c6bar()).unwrap(),
            pattern(&[2, 2, 2])
        );
        assert_eq!(
            solitary_pattern(&families::r8()).unwrap(),
            pattern(&[2, 2, 1])
        );
        assert_eq!(
            solitary_pattern(&families::n10()).unwrap(),
            pattern(&[2, 1, 1])
        );
        assert_eq!(
            solitary_pattern(&families::theta()).unwrap(),
            pattern(&[1, 1, 1])
        );
        assert!(solitary_pattern(&families::petersen())
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn mutual_exclusion_cases() {
        let g = families::k4();
        let ms = enumerate_pms(&g).unwrap();
        let e01 = edge(&g, 0, 1);
        let e23 = edge(&g, 2, 3);
        assert!(!mutually_exclusive(&ms, e01, e23).unwrap());
        let theta = families::theta();
        let tms = enumerate_pms(&theta).unwrap();
        assert!(mutually_exclusive(&tms, 0, 1).unwrap());

        // The two solitary doubletons of R8 are mutually exclusive as classes.
        let r8 = families::r8();
        let rms = enumerate_pms(&r8).unwrap();
        let a = analyze(&r8).unwrap();
        let doubles: Vec<usize> = a
            .solitary
            .iter()
            .cloned()
            .filter(|&i| a.classes[i].len() == 2)
            .collect();
        assert_eq!(doubles.len(), 2);
        assert!(
            mutually_exclusive(&rms, a.classes[doubles[0]][0], a.classes[doubles[1]][0]).unwrap()
        );
    }

    #[test]
    fn unmatchable_edges_are_rejected() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let ms = enumerate_pms(&g).unwrap();
        assert_eq!(
            depends(&ms, 1, 0).unwrap_err(),
            DependenceError::Matching(MatchingError::UnmatchableEdge(1))
        );
    }

    #[test]
    fn analyze_rejects_non_matching_covered() {
        let p4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            analyze(&p4).unwrap_err(),
            DependenceError::NotMatchingCovered
        );
    }

    #[test]
    fn epsilon_and_witness() {
        let g = families::theta();
        let a = analyze(&g).unwrap();
        assert_eq!(a.epsilon, 1);
        assert_eq!(a.classes[a.epsilon_witness].len(), 1);
        // Gluing two K4s at solitary-doubleton edges gives epsilon = n/2.
        let glued = cuts::glue(&families::k4(), 0, &families::k4(), 0).unwrap();
        let ga = analyze(&glued.graph).unwrap();
        assert_eq!(ga.epsilon, 4);
    }
}
