//! Named graph fixtures, constructive generators for the characterized
//! families, and recognizers matching graphs back to them.
//!
//! Fixture vertex labels follow the conventions used throughout the test
//! suite (e.g. `r10()` is the order-ten staircase drawn as a closed ladder
//! with end vertices 1 and 0). Generators are deterministic; recognizers
//! compare canonical forms against generator output of the same order and
//! regularity, except for the two recursive families which are recognized by
//! their characterizing predicates.

use thiserror::Error;

use crate::canon::{self, CANON_BOUND};
use crate::cuts;
use crate::dependence::{self, DependenceError};
use crate::graph::{vertex_edge_distance, MultiGraph};
use crate::matching::{self, PerfectMatching};
use crate::rgraph::multiply_matching;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("more than {0} multipliers exceed one")]
    CapViolated(usize),
    #[error("staircases need even order at least six")]
    BadOrder,
    #[error("ladder orders must be even and at least two")]
    BadLadder,
    #[error("family index must be between 1 and 5")]
    BadIndex,
    #[error("vertex {0} fails the incidence or distance requirement at its step")]
    IneligibleVertex(usize),
    #[error("edge {0} is not in an equivalence class of half the order")]
    BadGlueEdge(usize),
    #[error("invalid base member for this family")]
    BadBase,
    #[error("graph order {0} exceeds the recognizer bound {1}")]
    TooLarge(usize, usize),
    #[error(transparent)]
    Dependence(#[from] DependenceError),
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

/// Single edge on two vertices.
pub fn k2() -> MultiGraph {
    MultiGraph::from_edges(2, &[(0, 1)])
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> MultiGraph {
    c2_r(3)
}

/// Two vertices joined by `r` parallel edges.
pub fn c2_r(r: usize) -> MultiGraph {
    MultiGraph::from_edges(2, &vec![(0, 1); r])
}

pub fn k4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn c4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
}

/// Triangular prism: triangles 012 and 345 joined by the matching 03/14/25.
pub fn c6bar() -> MultiGraph {
    MultiGraph::from_edges(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

pub fn petersen() -> MultiGraph {
    MultiGraph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0), // outer cycle
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5), // inner pentagram
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9), // spokes
        ],
    )
}

/// The bicorn: triangles 012 and 345 joined through the middle edge 67.
pub fn r8() -> MultiGraph {
    MultiGraph::from_edges(
        8,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 6),
            (2, 7),
            (3, 4),
            (3, 5),
            (4, 5),
            (4, 6),
            (5, 7),
            (6, 7),
        ],
    )
}

/// Order-ten staircase drawn as a closed ladder with end vertices 1 and 0.
pub fn r10() -> MultiGraph {
    MultiGraph::from_edges(
        10,
        &[
            (0, 1),
            (0, 8),
            (0, 9),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 5),
            (3, 4),
            (4, 5),
            (4, 7),
            (5, 6),
            (6, 7),
            (6, 9),
            (7, 8),
            (8, 9),
        ],
    )
}

/// The order-ten graph with solitary pattern (2,1,1): triangles 012 and 345
/// joined through the square 6789.
pub fn n10() -> MultiGraph {
    MultiGraph::from_edges(
        10,
        &[
            (0, 1),
            (0, 2),
            (0, 8),
            (1, 2),
            (1, 6),
            (2, 7),
            (3, 4),
            (3, 5),
            (3, 8),
            (4, 5),
            (4, 9),
            (5, 7),
            (6, 7),
            (6, 9),
            (8, 9),
        ],
    )
}

/// The tricorn: a center joined to three branch vertices, each attached to
/// two consecutive vertices of an outer hexagon.
pub fn tricorn() -> MultiGraph {
    MultiGraph::from_edges(
        10,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (2, 7),
            (3, 8),
            (3, 9),
            (4, 5),
            (4, 9),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
        ],
    )
}

/// The two 12-vertex 3-staircases; they differ in the placement of the
/// second square next to the left triangle.
pub fn staircase3_fixture_a() -> MultiGraph {
    MultiGraph::from_edges(
        12,
        &[
            (4, 11),
            (11, 0),
            (0, 5),
            (10, 11),
            (4, 10),
            (10, 5),
            (4, 9),
            (9, 8),
            (8, 6),
            (0, 6),
            (6, 7),
            (7, 5),
            (8, 1),
            (1, 2),
            (2, 3),
            (3, 7),
            (1, 3),
            (9, 2),
        ],
    )
}

pub fn staircase3_fixture_b() -> MultiGraph {
    MultiGraph::from_edges(
        12,
        &[
            (4, 11),
            (11, 0),
            (0, 10),
            (10, 5),
            (11, 10),
            (5, 4),
            (4, 9),
            (9, 8),
            (8, 6),
            (0, 6),
            (6, 7),
            (7, 5),
            (8, 1),
            (1, 2),
            (2, 3),
            (3, 7),
            (1, 3),
            (9, 2),
        ],
    )
}

/// Order-14 3-staircase whose solitary doubleton is {(3,4), (7,8)} and whose
/// solitary singleton is (5,6).
pub fn staircase14_fixture() -> MultiGraph {
    MultiGraph::from_edges(
        14,
        &[
            (0, 2),
            (2, 3),
            (3, 1),
            (1, 0),
            (2, 4),
            (4, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (7, 9),
            (9, 8),
            (8, 10),
            (10, 11),
            (11, 9),
            (12, 0),
            (12, 13),
            (13, 1),
            (12, 6),
            (5, 10),
            (13, 11),
        ],
    )
}

/// Order-16 3-connected cubic with solitary pattern (2); obtained from
/// [`staircase14_fixture`] by replacing vertex 3 with a triangle {3,14,15}.
/// Its solitary doubleton {(14,3), (7,8)} has its edges at distance four.
pub fn pattern2_16_fixture() -> MultiGraph {
    MultiGraph::from_edges(
        16,
        &[
            (0, 2),
            (3, 1),
            (1, 0),
            (2, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (7, 9),
            (9, 8),
            (8, 10),
            (10, 11),
            (11, 9),
            (12, 0),
            (12, 13),
            (13, 1),
            (12, 6),
            (5, 10),
            (13, 11),
            (14, 15),
            (2, 14),
            (14, 3),
            (3, 15),
            (15, 4),
        ],
    )
}

/// Nonplanar 3-edge-connected 4-graph with solitary pattern (2); its
/// solitary doubleton is {(5,7), (2,0)}.
pub fn nonplanar_4graph() -> MultiGraph {
    MultiGraph::from_edges(
        8,
        &[
            (0, 1),
            (0, 1),
            (1, 3),
            (3, 5),
            (5, 7),
            (6, 7),
            (6, 7),
            (4, 6),
            (2, 4),
            (2, 0),
            (1, 2),
            (3, 4),
            (3, 4),
            (5, 6),
            (0, 7),
            (2, 5),
        ],
    )
}

/// Smallest 3-connected cubic with solitary pattern (1,1): order twelve,
/// solitary singletons (3,4) and (9,10).
pub fn cubic12_pattern_one_one() -> MultiGraph {
    MultiGraph::from_edges(
        12,
        &[
            (0, 3),
            (3, 4),
            (4, 10),
            (10, 11),
            (9, 10),
            (9, 11),
            (8, 11),
            (7, 8),
            (7, 9),
            (6, 7),
            (5, 6),
            (4, 5),
            (3, 5),
            (0, 2),
            (1, 2),
            (0, 1),
            (2, 6),
            (1, 8),
        ],
    )
}

/// Three smallest 3-connected cubics with solitary pattern (1), order 14.
pub fn three_graph_14_pattern_one_a() -> MultiGraph {
    MultiGraph::from_edges(
        14,
        &[
            (0, 2),
            (1, 2),
            (0, 1),
            (2, 3),
            (3, 4),
            (3, 5),
            (5, 8),
            (6, 8),
            (7, 8),
            (0, 6),
            (6, 7),
            (7, 12),
            (11, 12),
            (11, 13),
            (12, 13),
            (5, 9),
            (9, 11),
            (1, 4),
            (4, 10),
            (10, 13),
            (9, 10),
        ],
    )
}

pub fn three_graph_14_pattern_one_b() -> MultiGraph {
    MultiGraph::from_edges(
        14,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (1, 4),
            (3, 4),
            (3, 5),
            (2, 3),
            (5, 6),
            (5, 9),
            (9, 11),
            (11, 12),
            (11, 13),
            (7, 8),
            (8, 10),
            (10, 12),
            (12, 13),
            (9, 10),
            (6, 8),
            (6, 7),
            (0, 7),
            (4, 13),
        ],
    )
}

pub fn three_graph_14_pattern_one_c() -> MultiGraph {
    MultiGraph::from_edges(
        14,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
            (0, 5),
            (6, 9),
            (1, 8),
            (3, 7),
            (7, 11),
            (11, 12),
            (12, 13),
            (11, 13),
            (8, 10),
            (10, 13),
            (7, 8),
            (9, 12),
            (9, 10),
        ],
    )
}

/// 4-regular graph of order ten with solitary pattern (1,1), built by
/// doubling one perfect matching of [`n10`].
pub fn four_graph_10_pattern_one_one() -> MultiGraph {
    MultiGraph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (0, 2),
            (2, 3),
            (3, 4),
            (3, 5),
            (3, 5),
            (5, 6),
            (5, 7),
            (7, 8),
            (7, 9),
            (7, 9),
            (8, 9),
            (1, 4),
            (1, 4),
            (4, 9),
            (6, 8),
            (6, 8),
            (0, 6),
        ],
    )
}

/// 4-regular graph of order six with solitary pattern (2).
pub fn four_graph_6_pattern_two() -> MultiGraph {
    MultiGraph::from_edges(
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 2),
            (1, 2),
            (1, 3),
            (3, 4),
            (4, 5),
            (3, 5),
            (3, 5),
            (2, 4),
            (1, 4),
            (0, 5),
        ],
    )
}

/// 4-regular graph of order eight with solitary pattern (1).
pub fn four_graph_8_pattern_one() -> MultiGraph {
    MultiGraph::from_edges(
        8,
        &[
            (0, 1),
            (1, 3),
            (3, 5),
            (5, 7),
            (5, 7),
            (6, 7),
            (4, 6),
            (2, 4),
            (0, 2),
            (0, 2),
            (1, 2),
            (3, 4),
            (5, 6),
            (0, 7),
            (1, 4),
            (3, 6),
        ],
    )
}

/// An order-18 3-graph that is not 3-edge-connected: a triple edge, a
/// complete graph on four vertices and two triangular prisms glued in a
/// chain. Its 2-cut decomposition has those four graphs as leaves.
pub fn three_graph_18() -> MultiGraph {
    MultiGraph::from_edges(
        18,
        &[
            (2, 3),
            (3, 5),
            (4, 5),
            (2, 4),
            (3, 4),
            (0, 2),
            (6, 7),
            (7, 8),
            (6, 8),
            (8, 9),
            (9, 10),
            (9, 11),
            (10, 11),
            (7, 11),
            (15, 17),
            (15, 16),
            (16, 17),
            (13, 15),
            (13, 14),
            (14, 16),
            (12, 13),
            (12, 14),
            (10, 12),
            (5, 6),
            (0, 1),
            (0, 1),
            (1, 17),
        ],
    )
}

/// Fixture list used by corpus-style tests and the CLI.
pub fn named_fixtures() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("k2", k2()),
        ("theta", theta()),
        ("k4", k4()),
        ("c4", c4()),
        ("c6bar", c6bar()),
        ("r8", r8()),
        ("r10", r10()),
        ("n10", n10()),
        ("petersen", petersen()),
        ("tricorn", tricorn()),
        ("staircase3-12a", staircase3_fixture_a()),
        ("staircase3-12b", staircase3_fixture_b()),
        ("staircase3-14", staircase14_fixture()),
        ("pattern2-16", pattern2_16_fixture()),
        ("nonplanar-4graph", nonplanar_4graph()),
        ("cubic12-pattern-1-1", cubic12_pattern_one_one()),
        ("cubic14-pattern-1-a", three_graph_14_pattern_one_a()),
        ("cubic14-pattern-1-b", three_graph_14_pattern_one_b()),
        ("cubic14-pattern-1-c", three_graph_14_pattern_one_c()),
        ("four-graph-10-pattern-1-1", four_graph_10_pattern_one_one()),
        ("four-graph-6-pattern-2", four_graph_6_pattern_two()),
        ("four-graph-8-pattern-1", four_graph_8_pattern_one()),
        ("three-graph-18", three_graph_18()),
    ]
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Base graphs whose unique proper edge coloring drives [`gen_multiplied`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultipliedBase {
    Theta,
    K4,
    C6bar,
    C4,
}

impl MultipliedBase {
    pub fn graph(self) -> MultiGraph {
        match self {
            MultipliedBase::Theta => theta(),
            MultipliedBase::K4 => k4(),
            MultipliedBase::C6bar => c6bar(),
            MultipliedBase::C4 => c4(),
        }
    }

    /// Color classes of the unique proper edge coloring, as edge ids of
    /// [`MultipliedBase::graph`].
    pub fn color_classes(self) -> Vec<Vec<usize>> {
        match self {
            MultipliedBase::Theta => vec![vec![0], vec![1], vec![2]],
            MultipliedBase::K4 => vec![vec![0, 5], vec![1, 4], vec![2, 3]],
            MultipliedBase::C6bar => vec![vec![0, 3, 8], vec![1, 4, 7], vec![2, 5, 6]],
            MultipliedBase::C4 => vec![vec![0, 2], vec![1, 3]],
        }
    }

    pub fn multiplier_count(self) -> usize {
        self.color_classes().len()
    }
}

/// `base ⊕ (k1-1)M1 ⊕ (k2-1)M2 ⊕ ...` over the base's unique proper edge
/// coloring, with at most `cap` multipliers above one.
pub fn gen_multiplied(
    base: MultipliedBase,
    multipliers: &[usize],
    cap: usize,
) -> Result<MultiGraph, FamilyError> {
    let classes = base.color_classes();
    if multipliers.len() != classes.len() || multipliers.contains(&0) {
        return Err(FamilyError::BadBase);
    }
    if multipliers.iter().filter(|&&k| k > 1).count() > cap {
        return Err(FamilyError::CapViolated(cap));
    }
    let mut g = base.graph();
    for (class, &k) in classes.iter().zip(multipliers) {
        if k > 1 {
            let m = PerfectMatching::new(class.clone());
            g = multiply_matching(&g, &m, k).expect("color class is a matching");
        }
    }
    Ok(g)
}

/// The unique staircase of thickness `t` and even order `n >= 6`: a cycle
/// `0,1,...,n-1` plus `t` copies of the reflection matching (chords `(i, n-i)`
/// and the diameter `(0, n/2)`).
pub fn gen_staircase1(n: usize, t: usize) -> Result<MultiGraph, FamilyError> {
    if n < 6 || !n.is_multiple_of(2) || t < 1 {
        return Err(FamilyError::BadOrder);
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 1..=n / 2 {
        let pair = if i < n / 2 { (i, n - i) } else { (0, n / 2) };
        for _ in 0..t {
            edges.push(pair);
        }
    }
    Ok(MultiGraph::from_edges(n, &edges))
}

/// The unique 3-connected `(t+2)`-regular graph over a 3-dumbbell with
/// ladders of orders `a` and `b` (both even, at least two) and a 3-path
/// bone; total order `a + b + 4`. The rungs and the two outer bone edges
/// carry multiplicity `t`; three single edges close the dumbbell up.
pub fn gen_staircase3(a: usize, b: usize, t: usize) -> Result<MultiGraph, FamilyError> {
    if a < 2 || b < 2 || !a.is_multiple_of(2) || !b.is_multiple_of(2) || t < 1 {
        return Err(FamilyError::BadLadder);
    }
    let n = a + b + 4;
    let (s1, m1, m2, s2) = (a, a + 1, a + 2, a + 3);
    let l2 = a + 4; // first vertex of the second ladder
    let mut edges = Vec::new();
    let ladder = |base: usize, order: usize, edges: &mut Vec<(usize, usize)>| {
        for i in 0..order / 2 {
            for _ in 0..t {
                edges.push((base + 2 * i, base + 2 * i + 1));
            }
        }
        for i in 0..order / 2 - 1 {
            edges.push((base + 2 * i, base + 2 * i + 2));
            edges.push((base + 2 * i + 1, base + 2 * i + 3));
        }
    };
    ladder(0, a, &mut edges);
    ladder(l2, b, &mut edges);
    // Sockets attach to the rung nearest the bone.
    edges.push((s1, a - 2));
    edges.push((s1, a - 1));
    edges.push((s2, l2));
    edges.push((s2, l2 + 1));
    // Bone: outer edges thick, middle edge single.
    for _ in 0..t {
        edges.push((s1, m1));
    }
    edges.push((m1, m2));
    for _ in 0..t {
        edges.push((m2, s2));
    }
    // Closing edges: each mid-bone vertex reaches the far rung of the
    // opposite ladder, and the two remaining far corners are joined.
    edges.push((m1, n - 1));
    edges.push((m2, 1));
    edges.push((0, n - 2));
    Ok(MultiGraph::from_edges(n, &edges))
}

/// The five sporadic 3-connected cubics with solitary pattern (1,1,1):
/// the tricorn, the tricorn with one, two or three grown corners, and a
/// twisted variant of order twelve.
pub fn gen_family_s(index: usize) -> Result<MultiGraph, FamilyError> {
    match index {
        1 => Ok(tricorn()),
        2 => Ok(MultiGraph::from_edges(
            12,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 10),
                (1, 11),
                (4, 10),
                (5, 11),
                (10, 11),
                (2, 6),
                (2, 7),
                (3, 8),
                (3, 9),
                (4, 5),
                (4, 9),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
            ],
        )),
        3 => Ok(MultiGraph::from_edges(
            14,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 10),
                (10, 6),
                (2, 11),
                (11, 7),
                (10, 11),
                (3, 12),
                (12, 8),
                (3, 13),
                (13, 9),
                (12, 13),
                (4, 5),
                (4, 9),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
            ],
        )),
        4 => Ok(MultiGraph::from_edges(
            16,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 10),
                (10, 4),
                (1, 11),
                (11, 5),
                (10, 11),
                (2, 12),
                (12, 6),
                (2, 13),
                (13, 7),
                (12, 13),
                (3, 14),
                (14, 8),
                (3, 15),
                (15, 9),
                (14, 15),
                (4, 5),
                (4, 9),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
            ],
        )),
        5 => Ok(MultiGraph::from_edges(
            12,
            &[
                (0, 1),
                (1, 3),
                (3, 11),
                (11, 9),
                (9, 7),
                (7, 6),
                (6, 2),
                (2, 4),
                (4, 8),
                (8, 10),
                (10, 5),
                (5, 0),
                (8, 6),
                (4, 10),
                (0, 2),
                (5, 11),
                (1, 7),
                (3, 9),
            ],
        )),
        _ => Err(FamilyError::BadIndex),
    }
}

/// Construction trace for the recursive cubic family with solitary
/// pattern (2): a 3-staircase base of order at least twelve, a first splice
/// vertex incident with its solitary doubleton at distance two from its
/// solitary singleton, then further splice vertices each incident with the
/// current solitary doubleton. Step vertices are labeled in the graph as it
/// stands at that step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DTrace {
    pub ladder_a: usize,
    pub ladder_b: usize,
    pub base_vertex: usize,
    pub steps: Vec<usize>,
}

/// Vertices of a 3-staircase eligible as the first splice vertex.
pub fn family_d_base_vertices(base: &MultiGraph) -> Result<Vec<usize>, FamilyError> {
    let analysis = dependence::analyze(base)?;
    let singleton = analysis
        .solitary
        .iter()
        .find(|&&i| analysis.classes[i].len() == 1)
        .map(|&i| analysis.classes[i][0])
        .ok_or(FamilyError::BadBase)?;
    let doubleton = analysis
        .solitary
        .iter()
        .find(|&&i| analysis.classes[i].len() == 2)
        .map(|&i| analysis.classes[i].clone())
        .ok_or(FamilyError::BadBase)?;
    let mut out = Vec::new();
    for &e in &doubleton {
        let (u, v) = base.endpoints(e);
        for w in [u, v] {
            if vertex_edge_distance(base, w, singleton) == Ok(2) && !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Vertices incident with the solitary doubleton of a pattern-(2) graph.
pub fn family_d_step_vertices(g: &MultiGraph) -> Result<Vec<usize>, FamilyError> {
    let analysis = dependence::analyze(g)?;
    let mut out = Vec::new();
    for &i in &analysis.solitary {
        if analysis.classes[i].len() == 2 {
            for &e in &analysis.classes[i] {
                let (u, v) = g.endpoints(e);
                for w in [u, v] {
                    if !out.contains(&w) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Builds a member of the recursive pattern-(2) family from its trace,
/// validating every step's vertex eligibility.
pub fn gen_family_d(trace: &DTrace) -> Result<MultiGraph, FamilyError> {
    if trace.ladder_a + trace.ladder_b + 4 < 12 {
        return Err(FamilyError::BadLadder);
    }
    let base = gen_staircase3(trace.ladder_a, trace.ladder_b, 1)?;
    if !family_d_base_vertices(&base)?.contains(&trace.base_vertex) {
        return Err(FamilyError::IneligibleVertex(trace.base_vertex));
    }
    let mut g = cuts::splice_k4(&base, trace.base_vertex)
        .expect("staircase vertices are cubic")
        .graph;
    for &v in &trace.steps {
        if !family_d_step_vertices(&g)?.contains(&v) {
            return Err(FamilyError::IneligibleVertex(v));
        }
        g = cuts::splice_k4(&g, v)
            .expect("family members are cubic")
            .graph;
    }
    Ok(g)
}

/// Gluing trace for the family of matching covered graphs whose largest
/// equivalence class covers half the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LTrace {
    /// Two vertices with at least two parallel edges.
    C2 { multiplicity: usize },
    /// Underlying complete graph on four vertices; `pair_mults[i]` holds the
    /// multiplicities of the i-th opposite edge pair, and some pair must be
    /// `[1, 1]`.
    K4 { pair_mults: [[usize; 2]; 3] },
    /// Glue the generated children at the given edge ids.
    Glue {
        left: Box<LTrace>,
        right: Box<LTrace>,
        left_edge: usize,
        right_edge: usize,
    },
}

fn k4_base_from_mults(pair_mults: &[[usize; 2]; 3]) -> Result<MultiGraph, FamilyError> {
    if pair_mults.iter().flatten().any(|&m| m == 0) {
        return Err(FamilyError::BadBase);
    }
    if !pair_mults.iter().any(|p| p == &[1, 1]) {
        return Err(FamilyError::BadBase);
    }
    let pairs = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    let mut edges = Vec::new();
    for (pair, mults) in pairs.iter().zip(pair_mults) {
        for (endpoints, &mult) in pair.iter().zip(mults) {
            for _ in 0..mult {
                edges.push(*endpoints);
            }
        }
    }
    Ok(MultiGraph::from_edges(4, &edges))
}

/// Builds a family member from a gluing trace, validating that every glue
/// edge lies in an equivalence class of half the order of its graph.
pub fn gen_family_l(trace: &LTrace) -> Result<MultiGraph, FamilyError> {
    match trace {
        LTrace::C2 { multiplicity } => {
            if *multiplicity < 2 {
                return Err(FamilyError::BadBase);
            }
            Ok(c2_r(*multiplicity))
        }
        LTrace::K4 { pair_mults } => k4_base_from_mults(pair_mults),
        LTrace::Glue {
            left,
            right,
            left_edge,
            right_edge,
        } => {
            let g1 = gen_family_l(left)?;
            let g2 = gen_family_l(right)?;
            for (g, &e) in [(&g1, left_edge), (&g2, right_edge)] {
                if e >= g.size() {
                    return Err(FamilyError::BadGlueEdge(e));
                }
                let analysis = dependence::analyze(g)?;
                if analysis.classes[analysis.class_of[e]].len() != g.order() / 2 {
                    return Err(FamilyError::BadGlueEdge(e));
                }
            }
            Ok(cuts::glue(&g1, *left_edge, &g2, *right_edge)
                .expect("family members have even order")
                .graph)
        }
    }
}

/// The r-regular restriction: bases are the two-vertex graph with `r`
/// parallel edges, or the complete four-vertex graph with two classes
/// multiplied uniformly so that `k1 + k2 + k3 = r` and some `k` equals one.
pub fn gen_family_l_r(r: usize, trace: &LTrace) -> Result<MultiGraph, FamilyError> {
    if r < 3 {
        return Err(FamilyError::BadBase);
    }
    validate_l_r(r, trace)?;
    gen_family_l(trace)
}

fn validate_l_r(r: usize, trace: &LTrace) -> Result<(), FamilyError> {
    match trace {
        LTrace::C2 { multiplicity } => {
            if *multiplicity != r {
                return Err(FamilyError::BadBase);
            }
        }
        LTrace::K4 { pair_mults } => {
            let uniform = pair_mults.iter().all(|p| p[0] == p[1]);
            let total: usize = pair_mults.iter().map(|p| p[0]).sum();
            let ones = pair_mults.iter().filter(|p| p == &&[1, 1]).count();
            if !uniform || total != r || ones == 0 {
                return Err(FamilyError::BadBase);
            }
        }
        LTrace::Glue { left, right, .. } => {
            validate_l_r(r, left)?;
            validate_l_r(r, right)?;
        }
    }
    Ok(())
}

/// Outcome of peeling a graph down to family bases along even 2-cuts inside
/// its largest equivalence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LVerdict {
    Member(LPeel),
    /// The single edge: the one matching covered graph with a half-order
    /// class that is not built by gluing.
    TrivialK2,
    NotMember,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LPeel {
    BaseC2 {
        multiplicity: usize,
    },
    BaseK4,
    Split {
        cut_edges: (usize, usize),
        left: Box<LPeel>,
        right: Box<LPeel>,
    },
}

/// Recognizes members by recursive even-2-cut peeling: the largest class
/// must cover half the order at every level and the leaves must be the two
/// base shapes.
pub fn peel_family_l(g: &MultiGraph) -> Result<LVerdict, FamilyError> {
    let covered = matching::is_matching_covered(g).map_err(DependenceError::from)?;
    if !covered.covered {
        return Ok(LVerdict::NotMember);
    }
    let analysis = dependence::analyze(g)?;
    if analysis.epsilon != g.order() / 2 {
        return Ok(LVerdict::NotMember);
    }
    if g.order() == 2 {
        return Ok(if g.size() >= 2 {
            LVerdict::Member(LPeel::BaseC2 {
                multiplicity: g.size(),
            })
        } else {
            LVerdict::TrivialK2
        });
    }
    let class = &analysis.classes[analysis.epsilon_witness];
    if is_l_k4_base(g) {
        return Ok(LVerdict::Member(LPeel::BaseK4));
    }
    // A half-order class of size three or more contains an even 2-cut.
    let cut = cuts::find_even_2cuts(g)
        .into_iter()
        .find(|c| c.edge_ids.iter().all(|e| class.contains(e)));
    let Some(cut) = cut else {
        return Ok(LVerdict::NotMember);
    };
    let (a, b) = cuts::marked_components(g, &cut).expect("found cut is an even 2-cut");
    let (LVerdict::Member(l), LVerdict::Member(r)) =
        (peel_family_l(&a.graph)?, peel_family_l(&b.graph)?)
    else {
        return Ok(LVerdict::NotMember);
    };
    Ok(LVerdict::Member(LPeel::Split {
        cut_edges: (cut.edge_ids[0], cut.edge_ids[1]),
        left: Box::new(l),
        right: Box::new(r),
    }))
}

fn is_l_k4_base(g: &MultiGraph) -> bool {
    if g.order() != 4 {
        return false;
    }
    let pairs = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    pairs
        .iter()
        .all(|p| p.iter().all(|&(u, v)| g.multiplicity(u, v) >= 1))
        && pairs
            .iter()
            .any(|p| p.iter().all(|&(u, v)| g.multiplicity(u, v) == 1))
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

/// A family membership claim for a specific graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Theta { ks: [usize; 3] },
    K4 { ks: [usize; 3] },
    C4 { ks: [usize; 2] },
    C6bar { ks: [usize; 3] },
    R8,
    R10,
    N10,
    Staircase1 { n: usize, t: usize },
    Staircase3 { a: usize, b: usize, t: usize },
    FamilyS { index: usize },
    FamilyD,
    FamilyL,
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Theta { ks } => write!(f, "theta^({},{},{})", ks[0], ks[1], ks[2]),
            FamilySpec::K4 { ks } => write!(f, "K4^({},{},{})", ks[0], ks[1], ks[2]),
            FamilySpec::C4 { ks } => write!(f, "C4^({},{})", ks[0], ks[1]),
            FamilySpec::C6bar { ks } => write!(f, "C6bar^({},{},{})", ks[0], ks[1], ks[2]),
            FamilySpec::R8 => write!(f, "R8"),
            FamilySpec::R10 => write!(f, "R10"),
            FamilySpec::N10 => write!(f, "N10"),
            FamilySpec::Staircase1 { n, t } => write!(f, "staircase1(n={n}, t={t})"),
            FamilySpec::Staircase3 { a, b, t } => write!(f, "staircase3(a={a}, b={b}, t={t})"),
            FamilySpec::FamilyS { index } => write!(f, "family-S#{index}"),
            FamilySpec::FamilyD => write!(f, "family-D"),
            FamilySpec::FamilyL => write!(f, "family-L"),
        }
    }
}

/// Nonincreasing multiplier triples summing to `r`.
fn triples_summing_to(r: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for k1 in 1..=r {
        for k2 in 1..=k1 {
            if k1 + k2 < r && r - k1 - k2 <= k2 {
                out.push([k1, k2, r - k1 - k2]);
            }
        }
    }
    out
}

/// Matches `g` against the generators of the same order and regularity;
/// the recursive families are recognized by their characterizing predicates.
pub fn recognize(g: &MultiGraph) -> Result<Vec<FamilySpec>, FamilyError> {
    let n = g.order();
    if n > CANON_BOUND {
        return Err(FamilyError::TooLarge(n, CANON_BOUND));
    }
    let form = canon::canonical_form(g).expect("order bound checked");
    let matches_gen = |h: &MultiGraph| canon::canonical_form(h).ok().as_ref() == Some(&form);
    let mut out = Vec::new();

    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let regular = degrees.windows(2).all(|w| w[0] == w[1]);
    let r = degrees[0];

    if regular {
        if n == 2 && r >= 3 {
            let mut ks = [1usize; 3];
            ks[0] = r - 2;
            out.push(FamilySpec::Theta {
                ks: [ks[0].max(1), 1, 1],
            });
        }
        if n == 4 {
            for ks in triples_summing_to(r) {
                if matches_gen(
                    &gen_multiplied(MultipliedBase::K4, &ks, 3).expect("cap 3 admits any triple"),
                ) {
                    out.push(FamilySpec::K4 { ks });
                }
            }
            if r >= 2 {
                for k1 in 1..r {
                    let k2 = r - k1;
                    if k2 > k1 {
                        continue;
                    }
                    if let Ok(h) = gen_multiplied(MultipliedBase::C4, &[k1, k2], 2) {
                        if matches_gen(&h) {
                            out.push(FamilySpec::C4 { ks: [k1, k2] });
                        }
                    }
                }
            }
        }
        if n == 6 && r >= 3 {
            for ks in triples_summing_to(r) {
                if matches_gen(
                    &gen_multiplied(MultipliedBase::C6bar, &ks, 3)
                        .expect("cap 3 admits any triple"),
                ) {
                    out.push(FamilySpec::C6bar { ks });
                }
            }
        }
        if matches_gen(&r8()) {
            out.push(FamilySpec::R8);
        }
        if matches_gen(&r10()) {
            out.push(FamilySpec::R10);
        }
        if matches_gen(&n10()) {
            out.push(FamilySpec::N10);
        }
        if n >= 6 && r >= 3 {
            let t = r - 2;
            if gen_staircase1(n, t).is_ok_and(|h| matches_gen(&h)) {
                out.push(FamilySpec::Staircase1 { n, t });
            }
            if n >= 8 {
                let mut a = 2;
                while a + a + 4 <= n {
                    let b = n - 4 - a;
                    if gen_staircase3(a, b, t).is_ok_and(|h| matches_gen(&h)) {
                        out.push(FamilySpec::Staircase3 { a, b, t });
                    }
                    a += 2;
                }
            }
        }
        if r == 3 {
            for index in 1..=5 {
                if gen_family_s(index).is_ok_and(|h| matches_gen(&h)) {
                    out.push(FamilySpec::FamilyS { index });
                }
            }
        }
    }

    // Recursive families, by their characterizing predicates.
    if regular && r == 3 && crate::graph::is_k_vertex_connected(g, 3) {
        if let Ok(analysis) = dependence::analyze(g) {
            if analysis.pattern == dependence::pattern(&[2]) {
                out.push(FamilySpec::FamilyD);
            }
        }
    }
    if matches!(peel_family_l(g)?, LVerdict::Member(_)) {
        out.push(FamilySpec::FamilyL);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::dependence::{analyze, pattern, solitary_pattern};
    use crate::graph::is_k_vertex_connected;
    use crate::rgraph::{certify_rgraph, RGraphVerdict};

    #[test]
    fn fixtures_are_regular_and_certified() {
        for (name, g) in named_fixtures() {
            if ["k2", "c4"].contains(&name) {
                continue;
            }
            match certify_rgraph(&g) {
                RGraphVerdict::Certified(_) => {}
                RGraphVerdict::Refused(r) => panic!("{name} refused: {r:?}"),
            }
        }
    }

    #[test]
    fn small_staircases_match_named_graphs() {
        assert!(is_isomorphic(&gen_staircase1(6, 1).unwrap(), &c6bar()).unwrap());
        assert!(is_isomorphic(&gen_staircase1(8, 1).unwrap(), &r8()).unwrap());
        assert!(is_isomorphic(&gen_staircase1(10, 1).unwrap(), &r10()).unwrap());
        assert!(is_isomorphic(&gen_staircase3(2, 2, 1).unwrap(), &r8()).unwrap());
        assert!(is_isomorphic(&gen_staircase3(2, 4, 1).unwrap(), &n10()).unwrap());
    }

    #[test]
    fn staircase_regularity_and_uniqueness() {
        for n in [6usize, 8, 10, 12, 14] {
            for t in 1..=3 {
                let g = gen_staircase1(n, t).unwrap();
                assert!((0..n).all(|v| g.degree(v) == t + 2), "n={n} t={t}");
                assert!(matches!(certify_rgraph(&g), RGraphVerdict::Certified(_)));
            }
        }
        assert_eq!(gen_staircase1(4, 1).unwrap_err(), FamilyError::BadOrder);
        assert_eq!(gen_staircase1(7, 1).unwrap_err(), FamilyError::BadOrder);
    }

    #[test]
    fn staircase3_parameters() {
        let g = gen_staircase3(4, 4, 1).unwrap();
        assert_eq!(g.order(), 12);
        assert!((0..12).all(|v| g.degree(v) == 3));
        assert!(is_k_vertex_connected(&g, 3));
        // Unordered parameters give isomorphic graphs.
        assert!(is_isomorphic(
            &gen_staircase3(2, 6, 1).unwrap(),
            &gen_staircase3(6, 2, 1).unwrap()
        )
        .unwrap());
        assert_eq!(gen_staircase3(3, 3, 1).unwrap_err(), FamilyError::BadLadder);
    }

    #[test]
    fn order_12_staircase3_instances_match_fixtures() {
        let generated = [
            gen_staircase3(2, 6, 1).unwrap(),
            gen_staircase3(4, 4, 1).unwrap(),
        ];
        let fixtures = [staircase3_fixture_a(), staircase3_fixture_b()];
        for fx in &fixtures {
            assert!(generated.iter().any(|g| is_isomorphic(g, fx).unwrap()));
        }
        assert!(!is_isomorphic(&fixtures[0], &fixtures[1]).unwrap());
    }

    #[test]
    fn staircase3_count_formula() {
        for (n, want) in [(8, 1), (10, 1), (12, 2), (14, 2), (16, 3)] {
            let mut forms = std::collections::HashSet::new();
            let mut a = 2;
            while a + a + 4 <= n {
                let b = n - 4 - a;
                forms.insert(canon::canonical_form(&gen_staircase3(a, b, 1).unwrap()).unwrap());
                a += 2;
            }
            assert_eq!(forms.len(), want, "order {n}");
            assert_eq!(forms.len(), (n - 6).div_ceil(4));
        }
    }

    #[test]
    fn multiplied_families() {
        let same = gen_multiplied(MultipliedBase::Theta, &[1, 1, 1], 1).unwrap();
        assert!(is_isomorphic(&same, &theta()).unwrap());
        for k in 2..=5 {
            let g = gen_multiplied(MultipliedBase::Theta, &[k, 1, 1], 1).unwrap();
            assert!(matches!(certify_rgraph(&g), RGraphVerdict::Certified(c) if c.r == k + 2));
        }
        let k4_2 = gen_multiplied(MultipliedBase::K4, &[2, 1, 1], 1).unwrap();
        assert_eq!(k4_2.size(), 8);
        assert!(matches!(certify_rgraph(&k4_2), RGraphVerdict::Certified(c) if c.r == 4));
        assert_eq!(
            gen_multiplied(MultipliedBase::K4, &[2, 2, 1], 1).unwrap_err(),
            FamilyError::CapViolated(1)
        );
    }

    #[test]
    fn family_s_members_are_sporadic_pattern_triples() {
        let mut forms = std::collections::HashSet::new();
        for index in 1..=5 {
            let g = gen_family_s(index).unwrap();
            assert!((0..g.order()).all(|v| g.degree(v) == 3), "member {index}");
            assert!(is_k_vertex_connected(&g, 3), "member {index}");
            assert_eq!(
                solitary_pattern(&g).unwrap(),
                pattern(&[1, 1, 1]),
                "member {index}"
            );
            forms.insert(canon::canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 5);
        assert_eq!(gen_family_s(6).unwrap_err(), FamilyError::BadIndex);
        assert_eq!(gen_family_s(1).unwrap().order(), 10);
    }

    #[test]
    fn family_d_generation() {
        let base = gen_staircase3(2, 6, 1).unwrap();
        let eligible = family_d_base_vertices(&base).unwrap();
        assert!(!eligible.is_empty());
        let trace = DTrace {
            ladder_a: 2,
            ladder_b: 6,
            base_vertex: eligible[0],
            steps: vec![],
        };
        let g = gen_family_d(&trace).unwrap();
        assert_eq!(g.order(), 14);
        assert_eq!(solitary_pattern(&g).unwrap(), pattern(&[2]));
        assert!(is_k_vertex_connected(&g, 3));

        // One more splice step stays in the family.
        let step = family_d_step_vertices(&g).unwrap()[0];
        let bigger = gen_family_d(&DTrace {
            steps: vec![step],
            ..trace.clone()
        })
        .unwrap();
        assert_eq!(bigger.order(), 16);
        assert_eq!(solitary_pattern(&bigger).unwrap(), pattern(&[2]));

        // An end of the doubleton at distance one from the singleton grows a
        // staircase instead, so it is rejected for the first step.
        let bad: Vec<usize> = (0..base.order())
            .filter(|v| !eligible.contains(v))
            .collect();
        assert!(gen_family_d(&DTrace {
            base_vertex: bad[0],
            steps: vec![],
            ..trace
        })
        .is_err());
    }

    #[test]
    fn pattern2_fixture_is_a_family_d_output() {
        // The order-16 fixture arises from the order-14 3-staircase by one
        // eligible splice.
        let base = staircase14_fixture();
        let spliced = cuts::splice_k4(&base, 3).unwrap();
        assert!(is_isomorphic(&spliced.graph, &pattern2_16_fixture()).unwrap());
    }

    #[test]
    fn family_l_generation_and_peeling() {
        let single = gen_family_l(&LTrace::C2 { multiplicity: 4 }).unwrap();
        let a = analyze(&single).unwrap();
        assert_eq!(a.epsilon, 1);

        let two_k4 = LTrace::Glue {
            left: Box::new(LTrace::K4 {
                pair_mults: [[1, 1], [1, 1], [1, 1]],
            }),
            right: Box::new(LTrace::K4 {
                pair_mults: [[1, 1], [1, 1], [1, 1]],
            }),
            left_edge: 0,
            right_edge: 0,
        };
        let g = gen_family_l(&two_k4).unwrap();
        assert_eq!(g.order(), 8);
        let a = analyze(&g).unwrap();
        assert_eq!(a.epsilon, 4);
        assert!(matches!(peel_family_l(&g).unwrap(), LVerdict::Member(_)));

        assert!(matches!(peel_family_l(&k2()).unwrap(), LVerdict::TrivialK2));
        assert!(matches!(
            peel_family_l(&petersen()).unwrap(),
            LVerdict::NotMember
        ));
    }

    #[test]
    fn family_l_rejects_bad_glue_edges() {
        // Edge 0 is a copy of a doubled pair, so its class is a singleton,
        // smaller than half the order.
        let bad = LTrace::Glue {
            left: Box::new(LTrace::K4 {
                pair_mults: [[2, 2], [1, 1], [1, 1]],
            }),
            right: Box::new(LTrace::K4 {
                pair_mults: [[1, 1], [1, 1], [1, 1]],
            }),
            left_edge: 0,
            right_edge: 0,
        };
        assert_eq!(gen_family_l(&bad).unwrap_err(), FamilyError::BadGlueEdge(0));
        // A single-edge leaf is not a valid base.
        assert_eq!(
            gen_family_l(&LTrace::C2 { multiplicity: 1 }).unwrap_err(),
            FamilyError::BadBase
        );
    }

    #[test]
    fn family_l_r_members_are_rgraphs() {
        let trace = LTrace::Glue {
            left: Box::new(LTrace::C2 { multiplicity: 4 }),
            right: Box::new(LTrace::K4 {
                pair_mults: [[2, 2], [1, 1], [1, 1]],
            }),
            left_edge: 0,
            // Edge 4 is one of the single-multiplicity opposite pair.
            right_edge: 4,
        };
        let g = gen_family_l_r(4, &trace).unwrap();
        assert!(matches!(certify_rgraph(&g), RGraphVerdict::Certified(c) if c.r == 4));
        let a = analyze(&g).unwrap();
        assert_eq!(a.epsilon, g.order() / 2);
        assert_eq!(gen_family_l_r(3, &trace).unwrap_err(), FamilyError::BadBase);
    }

    #[test]
    fn recognize_r8_matches_three_families() {
        let specs = recognize(&r8()).unwrap();
        assert!(specs.contains(&FamilySpec::R8));
        assert!(specs.contains(&FamilySpec::Staircase1 { n: 8, t: 1 }));
        assert!(specs.contains(&FamilySpec::Staircase3 { a: 2, b: 2, t: 1 }));
    }

    #[test]
    fn recognize_petersen_matches_nothing() {
        assert!(recognize(&petersen()).unwrap().is_empty());
    }

    #[test]
    fn recognize_nonplanar_4graph() {
        // Pattern (2) but 4-regular: outside the cubic recursive family.
        let specs = recognize(&nonplanar_4graph()).unwrap();
        assert!(!specs.contains(&FamilySpec::FamilyD));
        assert_eq!(
            solitary_pattern(&nonplanar_4graph()).unwrap(),
            pattern(&[2])
        );
    }

    #[test]
    fn recognizer_bound() {
        let g = three_graph_18();
        assert_eq!(
            recognize(&g).unwrap_err(),
            FamilyError::TooLarge(18, CANON_BOUND)
        );
    }

    #[test]
    fn figure_fixture_patterns() {
        assert_eq!(
            solitary_pattern(&cubic12_pattern_one_one()).unwrap(),
            pattern(&[1, 1])
        );
        for g in [
            three_graph_14_pattern_one_a(),
            three_graph_14_pattern_one_b(),
            three_graph_14_pattern_one_c(),
        ] {
            assert_eq!(solitary_pattern(&g).unwrap(), pattern(&[1]));
        }
        assert_eq!(
            solitary_pattern(&four_graph_10_pattern_one_one()).unwrap(),
            pattern(&[1, 1])
        );
        assert_eq!(
            solitary_pattern(&four_graph_6_pattern_two()).unwrap(),
            pattern(&[2])
        );
        assert_eq!(
            solitary_pattern(&four_graph_8_pattern_one()).unwrap(),
            pattern(&[1])
        );
    }

    #[test]
    fn staircase14_fixture_is_generated_staircase() {
        let fx = staircase14_fixture();
        assert!(recognize(&fx)
            .unwrap()
            .iter()
            .any(|s| matches!(s, FamilySpec::Staircase3 { .. })));
        assert_eq!(solitary_pattern(&fx).unwrap(), pattern(&[2, 1]));
    }
}
