//! End-to-end classification of input graphs and the theorem-verification
//! harness that checks the characterizations over graph corpora.

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::BitVec;
use crate::canon;
use crate::cuts::{self, BrickBraceKind, DecompositionTree};
use crate::dependence::{self, pattern, DependenceAnalysis, SolitaryPattern};
use crate::families::{self, FamilySpec, LVerdict, MultipliedBase};
use crate::graph::{cut_of, edge_distance, is_k_vertex_connected, MultiGraph};
use crate::io;
use crate::matching::{self, enumerate_pms};
use crate::rgraph::{self, RGraphVerdict};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("corpus bound exceeded: max order {0} for degree {1} is {2}")]
    BoundExceeded(usize, usize, usize),
    #[error("degree must be at least 3")]
    DegreeTooSmall,
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Everything the pipeline can say about one graph.
#[derive(Debug)]
pub struct ClassificationReport {
    pub order: usize,
    pub size: usize,
    pub rgraph: RGraphVerdict,
    pub three_ec: bool,
    pub matching_covered: bool,
    pub analysis: Option<DependenceAnalysis>,
    pub family_matches: Vec<FamilySpec>,
    pub table_row: Option<&'static str>,
    pub decomposition: Option<DecompositionReport>,
}

#[derive(Debug)]
pub struct DecompositionReport {
    pub tree: DecompositionTree,
    /// Solitary edges derived recursively from the pieces through the
    /// marker-edge rules, rather than by direct enumeration.
    pub derived_solitary: Vec<usize>,
}

/// Table row for the solitary pattern of a 3-edge-connected r-graph of order
/// at least four.
fn table_row(p: &SolitaryPattern, cubic: bool) -> Option<&'static str> {
    match p.sizes() {
        [2, 2, 2] => Some("(2,2,2): complete 4-vertex graph or triangular prism"),
        [2, 2, 1] => Some("(2,2,1): the bicorn"),
        [2, 2] => Some("(2,2): staircases of order ten or more"),
        [2, 1, 1] => Some("(2,1,1): the order-ten double-triangle graph"),
        [2, 1] => Some("(2,1): 3-staircases of order twelve or more"),
        [1, 1, 1] => Some("(1,1,1): the five sporadic cubics or the triple edge"),
        [2] if cubic => Some("(2): recursive cubic splicing family"),
        _ => None,
    }
}

/// Runs certification, connectivity, dependence analysis and family
/// recognition. Non-matching-covered input degrades to a structural report;
/// graphs that are not 3-edge-connected get a 2-cut decomposition with
/// recursively derived solitary edges.
pub fn classify(g: &MultiGraph) -> ClassificationReport {
    let rg = rgraph::certify_rgraph(g);
    let three_ec = g.order() >= 2
        && g.is_connected()
        && crate::graph::edge_connectivity(g).is_ok_and(|c| c >= 3);
    let covered = matching::is_matching_covered(g)
        .map(|v| v.covered)
        .unwrap_or(false);
    let analysis = covered.then(|| dependence::analyze(g).ok()).flatten();
    let family_matches = families::recognize(g).unwrap_or_default();
    let cubic = g.order() > 0 && (0..g.order()).all(|v| g.degree(v) == 3);
    let row = match (&analysis, rg.certificate()) {
        (Some(a), Some(_)) if three_ec && g.order() >= 4 => table_row(&a.pattern, cubic),
        _ => None,
    };
    let decomposition = if !three_ec && rg.certificate().is_some() {
        cuts::decompose_2cuts(g).ok().and_then(|tree| {
            solitary_via_decomposition(g)
                .ok()
                .map(|derived| DecompositionReport {
                    tree,
                    derived_solitary: derived,
                })
        })
    } else {
        None
    };
    ClassificationReport {
        order: g.order(),
        size: g.size(),
        rgraph: rg,
        three_ec,
        matching_covered: covered,
        analysis,
        family_matches,
        table_row: row,
        decomposition,
    }
}

/// Solitary edges computed recursively across even 2-cuts: a cut edge is
/// solitary iff both marker edges are; an edge of one side is solitary iff
/// it is solitary there, its unique matching uses the marker, and the other
/// side's marker is solitary.
pub fn solitary_via_decomposition(g: &MultiGraph) -> Result<Vec<usize>, cuts::CutError> {
    let cuts_found = cuts::find_even_2cuts(g);
    let Some(cut) = cuts_found.first() else {
        return matching::solitary_edges(g).map_err(cuts::CutError::from);
    };
    let (a, b) = cuts::marked_components(g, cut)?;
    let mut out = Vec::new();
    let sol_a = solitary_via_decomposition(&a.graph)?;
    let sol_b = solitary_via_decomposition(&b.graph)?;
    let marker_solitary =
        sol_a.binary_search(&a.marker_edge).is_ok() && sol_b.binary_search(&b.marker_edge).is_ok();
    if marker_solitary {
        out.extend(cut.edge_ids.iter().cloned());
    }
    for (side, other, sol_side, sol_other) in [(&a, &b, &sol_a, &sol_b), (&b, &a, &sol_b, &sol_a)] {
        if sol_other.binary_search(&other.marker_edge).is_err() {
            continue;
        }
        let ms = enumerate_pms(&side.graph).map_err(cuts::CutError::from)?;
        for &e in sol_side {
            if e == side.marker_edge {
                continue;
            }
            let j = ms
                .incidence(e)
                .iter_ones()
                .next()
                .expect("solitary edge has a matching");
            if ms.matchings()[j].contains(side.marker_edge) {
                out.push(side.edge_map[e].expect("non-marker edge maps to parent"));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Exhaustive corpus generation
// ---------------------------------------------------------------------------

/// All connected r-regular loopless multigraphs up to isomorphism with even
/// order at most `max_n`, generated by edge-multiplicity backtracking with
/// first-touch vertex ordering and canonical-form rejection.
pub fn exhaustive_small_corpus(max_n: usize, r: usize) -> Result<Vec<MultiGraph>, ClassifyError> {
    if r < 3 {
        return Err(ClassifyError::DegreeTooSmall);
    }
    let bound = if r == 3 { 10 } else { 8 };
    if max_n > bound {
        return Err(ClassifyError::BoundExceeded(max_n, r, bound));
    }
    let mut out = Vec::new();
    let mut n = 2;
    while n <= max_n {
        out.extend(generate_regular(n, r));
        n += 2;
    }
    Ok(out)
}

fn generate_regular(n: usize, r: usize) -> Vec<MultiGraph> {
    let mut gen = RegularGen {
        pairs: (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect(),
        n,
        r,
        deg: vec![0; n],
        edges: Vec::new(),
        seen: std::collections::HashSet::new(),
        found: Vec::new(),
    };
    gen.extend(0, 0);
    gen.found
}

/// Backtracking state for the isomorph-free regular-multigraph generator.
struct RegularGen {
    pairs: Vec<(usize, usize)>,
    n: usize,
    r: usize,
    deg: Vec<usize>,
    edges: Vec<(usize, usize)>,
    seen: std::collections::HashSet<Vec<u8>>,
    found: Vec<MultiGraph>,
}

impl RegularGen {
    fn extend(&mut self, idx: usize, highest_touched: usize) {
        let (n, r) = (self.n, self.r);
        if idx == self.pairs.len() {
            if self.deg.iter().any(|&d| d != r) {
                return;
            }
            let g = MultiGraph::from_edges(n, &self.edges);
            if !g.is_connected() {
                return;
            }
            let form = canon::canonical_form(&g).expect("corpus orders fit the bound");
            if self.seen.insert(form) {
                self.found.push(g);
            }
            return;
        }
        let (i, j) = self.pairs[idx];
        // Entering a new row: the finished vertex must be saturated, and the
        // remaining deficits must be pairable.
        if j == i + 1 {
            if i > 0 && self.deg[i - 1] != r {
                return;
            }
            let remaining: usize = (i..n).map(|v| r - self.deg[v]).sum();
            if !remaining.is_multiple_of(2) {
                return;
            }
        }
        // Deficit of i must be coverable by the pairs still ahead in its row.
        let ahead: usize = (j..n).map(|v| r - self.deg[v]).sum();
        if r - self.deg[i] > ahead {
            return;
        }
        let max_mult = (r - self.deg[i]).min(r - self.deg[j]);
        for mult in 0..=max_mult {
            // Untouched vertices are interchangeable: only the next fresh
            // vertex may receive its first edge.
            if mult > 0 && j > highest_touched + 1 {
                break;
            }
            for _ in 0..mult {
                self.edges.push((i, j));
            }
            self.deg[i] += mult;
            self.deg[j] += mult;
            let new_highest = if mult > 0 {
                highest_touched.max(j)
            } else {
                highest_touched
            };
            self.extend(idx + 1, new_highest);
            self.deg[i] -= mult;
            self.deg[j] -= mult;
            for _ in 0..mult {
                self.edges.pop();
            }
        }
    }
}

/// Generated family members up to order 14 and thickness 3, plus the named
/// fixtures: the standing corpus for the characterization checks.
pub fn default_family_corpus() -> Vec<MultiGraph> {
    let mut out: Vec<MultiGraph> = families::named_fixtures()
        .into_iter()
        .map(|(_, g)| g)
        .collect();
    for t in 1..=3usize {
        let mut n = 6;
        while n <= 14 {
            out.push(families::gen_staircase1(n, t).expect("valid staircase parameters"));
            n += 2;
        }
        let mut a = 2;
        while 2 * a + 4 <= 14 {
            let mut b = a;
            while a + b + 4 <= 14 {
                out.push(families::gen_staircase3(a, b, t).expect("valid ladder parameters"));
                b += 2;
            }
            a += 2;
        }
    }
    for base in [
        MultipliedBase::Theta,
        MultipliedBase::K4,
        MultipliedBase::C6bar,
    ] {
        for k1 in 1..=3usize {
            for k2 in 1..=k1 {
                for k3 in 1..=k2 {
                    if k1 + k2 + k3 <= 5 {
                        out.push(families::gen_multiplied(base, &[k1, k2, k3], 3).unwrap());
                    }
                }
            }
        }
    }
    for k1 in 1..=3usize {
        for k2 in 1..=k1 {
            out.push(families::gen_multiplied(MultipliedBase::C4, &[k1, k2], 2).unwrap());
        }
    }
    for index in 1..=5 {
        out.push(families::gen_family_s(index).unwrap());
    }
    // Small members of the two recursive families.
    for (a, b) in [(2, 6), (4, 4)] {
        let base = families::gen_staircase3(a, b, 1).unwrap();
        for v0 in families::family_d_base_vertices(&base).unwrap() {
            let trace = families::DTrace {
                ladder_a: a,
                ladder_b: b,
                base_vertex: v0,
                steps: vec![],
            };
            out.push(families::gen_family_d(&trace).unwrap());
        }
    }
    let k4_leaf = || {
        Box::new(families::LTrace::K4 {
            pair_mults: [[1, 1], [1, 1], [1, 1]],
        })
    };
    out.push(
        families::gen_family_l(&families::LTrace::Glue {
            left: k4_leaf(),
            right: k4_leaf(),
            left_edge: 0,
            right_edge: 0,
        })
        .unwrap(),
    );
    out.push(
        families::gen_family_l(&families::LTrace::Glue {
            left: Box::new(families::LTrace::C2 { multiplicity: 3 }),
            right: k4_leaf(),
            left_edge: 1,
            right_edge: 3,
        })
        .unwrap(),
    );
    out
}

/// At least ten glued graphs of order at most sixteen, for the
/// decomposition-uniqueness check.
pub fn gluing_corpus() -> Vec<MultiGraph> {
    let theta = families::theta;
    let k4 = families::k4;
    let prism = families::c6bar;
    let r8 = families::r8;
    let glue = |a: &MultiGraph, ea, b: &MultiGraph, eb| cuts::glue(a, ea, b, eb).unwrap().graph;
    let mut out = vec![
        glue(&theta(), 0, &theta(), 1),
        glue(&theta(), 2, &k4(), 0),
        glue(&k4(), 0, &k4(), 5),
        glue(&k4(), 1, &k4(), 1),
        glue(&k4(), 0, &prism(), 0),
        glue(&k4(), 3, &prism(), 6),
        glue(&prism(), 0, &prism(), 8),
        glue(&k4(), 2, &r8(), 4),
        glue(&prism(), 3, &r8(), 11),
        glue(&theta(), 0, &families::r10(), 7),
        glue(&theta(), 1, &families::n10(), 9),
    ];
    // Two-level gluings.
    let inner = glue(&k4(), 0, &k4(), 0);
    out.push(glue(&inner, 0, &k4(), 2));
    out.push(glue(&inner, 3, &theta(), 0));
    out
}

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

/// Checkable statements about corpora. The short codes accepted by
/// [`Check::parse`] are stable identifiers for scripts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    SolitaryBounds,
    HalfOrderExceptions,
    DecompositionUnique,
    StaircasePatterns,
    ThreeStaircasePatterns,
    TripleSingletonPatterns,
    StaircaseCount,
    SolitaryDistance,
    PatternTwoRecursive,
    HalfOrderClass,
    OracleCrossChecks,
    Coloring,
    StructuralCorollaries,
}

impl Check {
    pub fn all() -> [Check; 13] {
        use Check::*;
        [
            SolitaryBounds,
            HalfOrderExceptions,
            DecompositionUnique,
            StaircasePatterns,
            ThreeStaircasePatterns,
            TripleSingletonPatterns,
            StaircaseCount,
            SolitaryDistance,
            PatternTwoRecursive,
            HalfOrderClass,
            OracleCrossChecks,
            Coloring,
            StructuralCorollaries,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Check::SolitaryBounds => "solitary-bounds",
            Check::HalfOrderExceptions => "half-order-exceptions",
            Check::DecompositionUnique => "decomposition-unique",
            Check::StaircasePatterns => "staircase-patterns",
            Check::ThreeStaircasePatterns => "three-staircase-patterns",
            Check::TripleSingletonPatterns => "triple-singleton-patterns",
            Check::StaircaseCount => "staircase-count",
            Check::SolitaryDistance => "solitary-distance",
            Check::PatternTwoRecursive => "pattern-two-recursive",
            Check::HalfOrderClass => "half-order-class",
            Check::OracleCrossChecks => "oracle-crosschecks",
            Check::Coloring => "coloring",
            Check::StructuralCorollaries => "structural-corollaries",
        }
    }

    /// Alternative short codes accepted on the command line.
    pub fn aliases(&self) -> &'static [&'static str] {
        match self {
            Check::SolitaryBounds => &["thm_1_17", "cor_1_68"],
            Check::HalfOrderExceptions => &["thm_1_9"],
            Check::DecompositionUnique => &["thm_1_13"],
            Check::StaircasePatterns => &["thm_2_1"],
            Check::ThreeStaircasePatterns => &["thm_2_7"],
            Check::TripleSingletonPatterns => &["thm_2_15"],
            Check::StaircaseCount => &["prop_2_14"],
            Check::SolitaryDistance => &["thm_3_9", "cor_3_12", "cor_3_13"],
            Check::PatternTwoRecursive => &["thm_4_15"],
            Check::HalfOrderClass => &["thm_5_3", "cor_5_4"],
            Check::OracleCrossChecks => &["prop_1_25", "oracles"],
            Check::Coloring => &["lem_1_53", "cor_1_36"],
            Check::StructuralCorollaries => &["structure"],
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        let norm = s.to_ascii_lowercase().replace(['-', '.'], "_");
        Check::all()
            .into_iter()
            .find(|c| c.name().replace('-', "_") == norm || c.aliases().iter().any(|a| *a == norm))
    }
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub graph: String,
    pub detail: String,
}

#[derive(Debug)]
pub struct VerifyReport {
    pub check: Check,
    pub checked: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.check.name(),
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations.iter().map(|v| serde_json::json!({
                "graph": v.graph,
                "detail": v.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{}: checked {}, skipped {}, violations {}",
            self.check.name(),
            self.checked,
            self.skipped,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "  violation (implementation bug): {}", v.detail)?;
        }
        Ok(())
    }
}

/// Per-graph outcome inside one check.
struct Outcome {
    checked: bool,
    details: Vec<String>,
}

impl Outcome {
    fn skipped() -> Self {
        Outcome {
            checked: false,
            details: Vec::new(),
        }
    }
    fn clean() -> Self {
        Outcome {
            checked: true,
            details: Vec::new(),
        }
    }
    fn violations(details: Vec<String>) -> Self {
        Outcome {
            checked: true,
            details,
        }
    }
}

/// Runs one check over the corpus; per-graph work fans out over a worker
/// pool and reports merge in corpus order.
pub fn verify(check: Check, corpus: &[MultiGraph], shuffles: usize) -> VerifyReport {
    if check == Check::StaircaseCount {
        return staircase_count_report();
    }
    let outcomes: Vec<Outcome> = corpus
        .par_iter()
        .map(|g| run_on_graph(check, g, shuffles))
        .collect();
    let mut report = VerifyReport {
        check,
        checked: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for (g, o) in corpus.iter().zip(outcomes) {
        if o.checked {
            report.checked += 1;
        } else {
            report.skipped += 1;
        }
        for detail in o.details {
            report.violations.push(Violation {
                graph: io::write_edgelist(g),
                detail,
            });
        }
    }
    report
}

fn run_on_graph(check: Check, g: &MultiGraph, shuffles: usize) -> Outcome {
    match check {
        Check::SolitaryBounds => check_solitary_bounds(g),
        Check::HalfOrderExceptions => check_half_order_exceptions(g),
        Check::DecompositionUnique => check_decomposition_unique(g, shuffles),
        Check::StaircasePatterns => check_staircase_patterns(g),
        Check::ThreeStaircasePatterns => check_three_staircase_patterns(g),
        Check::TripleSingletonPatterns => check_triple_singleton_patterns(g),
        Check::StaircaseCount => unreachable!("handled before the fan-out"),
        Check::SolitaryDistance => check_solitary_distance(g),
        Check::PatternTwoRecursive => check_pattern_two(g),
        Check::HalfOrderClass => check_half_order_class(g),
        Check::OracleCrossChecks => check_oracles(g),
        Check::Coloring => check_coloring(g),
        Check::StructuralCorollaries => check_structural(g),
    }
}

/// Certified 3-edge-connected r-graph of order >= 4, with its analysis.
fn three_ec_rgraph(g: &MultiGraph) -> Option<(usize, DependenceAnalysis)> {
    let cert = rgraph::certify_rgraph(g).certificate().cloned()?;
    if !cert.is_3ec || g.order() < 4 {
        return None;
    }
    Some((cert.r, dependence::analyze(g).ok()?))
}

fn allowed_patterns(r: usize) -> Vec<SolitaryPattern> {
    let mut out = vec![
        pattern(&[2, 2]),
        pattern(&[2, 1]),
        pattern(&[1, 1]),
        pattern(&[2]),
        pattern(&[1]),
        pattern(&[]),
    ];
    if r == 3 {
        out.extend([
            pattern(&[2, 2, 2]),
            pattern(&[2, 2, 1]),
            pattern(&[2, 1, 1]),
            pattern(&[1, 1, 1]),
        ]);
    }
    out
}

fn check_solitary_bounds(g: &MultiGraph) -> Outcome {
    let Some((r, a)) = three_ec_rgraph(g) else {
        return Outcome::skipped();
    };
    let mut bad = Vec::new();
    let solitary_edges = a.solitary_edges().len();
    let (edge_cap, class_cap) = if r == 3 { (6, 3) } else { (4, 2) };
    if solitary_edges > edge_cap {
        bad.push(format!(
            "{solitary_edges} solitary edges exceeds {edge_cap} (r = {r})"
        ));
    }
    if a.solitary.len() > class_cap {
        bad.push(format!(
            "{} solitary classes exceeds {class_cap} (r = {r})",
            a.solitary.len()
        ));
    }
    for &i in &a.solitary {
        if a.classes[i].len() > 2 {
            bad.push(format!("solitary class of size {}", a.classes[i].len()));
        }
    }
    if !allowed_patterns(r).contains(&a.pattern) {
        bad.push(format!("pattern {} outside the allowed list", a.pattern));
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}

/// Whether the recognizer places `g` in one of the four families allowed to
/// exceed half the order in solitary edges.
fn is_half_order_exception(g: &MultiGraph) -> bool {
    let Ok(specs) = families::recognize(g) else {
        return false;
    };
    specs.iter().any(|s| match s {
        FamilySpec::Theta { ks } | FamilySpec::K4 { ks } | FamilySpec::C6bar { ks } => {
            ks.iter().filter(|&&k| k > 1).count() <= 1
        }
        FamilySpec::R8 => true,
        _ => false,
    })
}

fn check_half_order_exceptions(g: &MultiGraph) -> Outcome {
    if rgraph::certify_rgraph(g).certificate().is_none() {
        return Outcome::skipped();
    }
    let Ok(sol) = matching::solitary_edges(g) else {
        return Outcome::skipped();
    };
    let exceeds = sol.len() > g.order() / 2;
    let exceptional = is_half_order_exception(g);
    if exceeds == exceptional {
        Outcome::clean()
    } else if exceeds {
        Outcome::violations(vec![format!(
            "{} solitary edges on {} vertices but not an exceptional family member",
            sol.len(),
            g.order()
        )])
    } else {
        Outcome::violations(vec![
            "exceptional family member within the half-order bound".into(),
        ])
    }
}

fn check_decomposition_unique(g: &MultiGraph, shuffles: usize) -> Outcome {
    let Ok(reference) =
        cuts::decompose_2cuts(g).and_then(|t| t.leaf_multiset().map_err(Into::into))
    else {
        return Outcome::skipped();
    };
    let mut bad = Vec::new();
    for seed in 0..shuffles.max(1) as u64 {
        match cuts::decompose_2cuts_seeded(g, seed)
            .and_then(|t| t.leaf_multiset().map_err(Into::into))
        {
            Ok(m) if m == reference => {}
            Ok(_) => bad.push(format!("seed {seed} yields a different leaf multiset")),
            Err(e) => bad.push(format!("seed {seed} failed: {e}")),
        }
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}

fn check_staircase_patterns(g: &MultiGraph) -> Outcome {
    let Some((r, a)) = three_ec_rgraph(g) else {
        return Outcome::skipped();
    };
    let doubletons = a
        .solitary
        .iter()
        .filter(|&&i| a.classes[i].len() == 2)
        .count();
    let lhs = doubletons > 1;
    let specs = families::recognize(g).unwrap_or_default();
    let rhs = specs.iter().any(|s| match s {
        FamilySpec::K4 { ks } => ks.iter().filter(|&&k| k > 1).count() <= 1,
        FamilySpec::Staircase1 { t, .. } => *t == r - 2,
        _ => false,
    });
    let mut bad = Vec::new();
    if lhs != rhs {
        bad.push(format!(
            "two solitary doubletons: {lhs}; staircase/complete-family member: {rhs}"
        ));
    }
    if lhs {
        let is_k4 = canon::is_isomorphic(g, &families::k4()).unwrap_or(false);
        let is_prism = canon::is_isomorphic(g, &families::c6bar()).unwrap_or(false);
        let is_r8 = canon::is_isomorphic(g, &families::r8()).unwrap_or(false);
        let want = if is_k4 || is_prism {
            pattern(&[2, 2, 2])
        } else if is_r8 {
            pattern(&[2, 2, 1])
        } else {
            pattern(&[2, 2])
        };
        if a.pattern != want {
            bad.push(format!("expected pattern {want}, found {}", a.pattern));
        }
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}

fn check_three_staircase_patterns(g: &MultiGraph) -> Outcome {
    let Some((r, a)) = three_ec_rgraph(g) else {
        return Outcome::skipped();
    };
    let has_doubleton = a.solitary.iter().any(|&i| a.classes[i].len() == 2);
    let has_singleton = a.solitary.iter().any(|&i| a.classes[i].len() == 1);
    let lhs = has_doubleton && has_singleton;
    let specs = families::recognize(g).unwrap_or_default();
    let rhs = specs
        .iter()
        .any(|s| matches!(s, FamilySpec::Staircase3 { t, .. } if *t == r - 2));
    let mut bad = Vec::new();
    if lhs != rhs {
        bad.push(format!(
            "doubleton+singleton: {lhs}; 3-staircase member: {rhs}"
        ));
    }
    if lhs {
        let want = if canon::is_isomorphic(g, &families::r8()).unwrap_or(false) {
            pattern(&[2, 2, 1])
        } else if canon::is_isomorphic(g, &families::n10()).unwrap_or(false) {
            pattern(&[2, 1, 1])
        } else {
            pattern(&[2, 1])
        };
        if a.pattern != want {
            bad.push(format!("expected pattern {want}, found {}", a.pattern));
        }
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}

fn check_triple_singleton_patterns(g: &MultiGraph) -> Outcome {
    let Some(cert) = rgraph::certify_rgraph(g).certificate().cloned() else {
        return Outcome::skipped();
    };
    if !cert.is_3ec {
        return Outcome::skipped();
    }
    let Ok(a) = dependence::analyze(g) else {
        return Outcome::skipped();
    };
    let lhs = a.pattern == pattern(&[1, 1, 1]);
    let rhs = canon::is_isomorphic(g, &families::theta()).unwrap_or(false)
        || (1..=5)
            .any(|i| canon::is_isomorphic(g, &families::gen_family_s(i).unwrap()).unwrap_or(false));
    if lhs == rhs {
        Outcome::clean()
    } else {
        Outcome::violations(vec![format!(
            "pattern (1,1,1): {lhs}; sporadic family or triple edge: {rhs}"
        )])
    }
}

fn staircase_count_report() -> VerifyReport {
    let mut violations = Vec::new();
    let mut checked = 0;
    for (n, want) in [(8usize, 1usize), (10, 1), (12, 2), (14, 2), (16, 3)] {
        checked += 1;
        let mut forms = std::collections::HashSet::new();
        let mut a = 2;
        while a + a + 4 <= n {
            let g = families::gen_staircase3(a, n - 4 - a, 1).unwrap();
            forms.insert(canon::canonical_form(&g).unwrap());
            a += 2;
        }
        if forms.len() != want || want != (n - 6).div_ceil(4) {
            violations.push(Violation {
                graph: format!("order {n}"),
                detail: format!("{} distinct 3-staircases, expected {want}", forms.len()),
            });
        }
    }
    VerifyReport {
        check: Check::StaircaseCount,
        checked,
        skipped: 0,
        violations,
    }
}

fn check_solitary_distance(g: &MultiGraph) -> Outcome {
    let Some((_, a)) = three_ec_rgraph(g) else {
        return Outcome::skipped();
    };
    let Ok(ms) = enumerate_pms(g) else {
        return Outcome::skipped();
    };
    let solitary = a.solitary_edges();
    let mut bad = Vec::new();
    let is_theta_like = g.order() == 2;
    for (i, &e1) in solitary.iter().enumerate() {
        for &e2 in &solitary[i + 1..] {
            let d = edge_distance(g, e1, e2).unwrap_or(usize::MAX);
            let exclusive = !ms.incidence(e1).intersects(ms.incidence(e2));
            if exclusive && d > 1 {
                bad.push(format!(
                    "mutually exclusive solitary edges {e1},{e2} at distance {d}"
                ));
            }
            let singleton_involved = [e1, e2]
                .iter()
                .any(|&e| a.classes[a.class_of[e]].len() == 1);
            if singleton_involved && !is_theta_like && g.order() >= 4 && d != 1 {
                bad.push(format!(
                    "solitary pair {e1},{e2} with a singleton at distance {d}, expected 1"
                ));
            }
            if a.pattern != pattern(&[2]) && d > 3 {
                bad.push(format!(
                    "solitary edges {e1},{e2} at distance {d} with pattern {}",
                    a.pattern
                ));
            }
        }
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}

fn check_pattern_two(g: &MultiGraph) -> Outcome {
    let cubic = g.order() >= 4 && (0..g.order()).all(|v| g.degree(v) == 3);
    if !cubic || !is_k_vertex_connected(g, 3) {
        return Outcome::skipped();
    }
    let Ok(a) = dependence::analyze(g) else {
        return Outcome::skipped();
    };
    if a.pattern != pattern(&[2]) {
        return Outcome::clean();
    }
    let recognized = families::recognize(g)
        .map(|specs| specs.contains(&FamilySpec::FamilyD))
        .unwrap_or(false);
    if recognized {
        Outcome::clean()
    } else {
        Outcome::violations(vec![
            "pattern (2) cubic not accepted by the recursive-family recognizer".into(),
        ])
    }
}

fn check_half_order_class(g: &MultiGraph) -> Outcome {
    let Ok(covered) = matching::is_matching_covered(g) else {
        return Outcome::skipped();
    };
    if !covered.covered {
        return Outcome::skipped();
    }
    let Ok(a) = dependence::analyze(g) else {
        return Outcome::skipped();
    };
    let mut bad = Vec::new();
    let half = a.epsilon == g.order() / 2;
    let member = matches!(
        families::peel_family_l(g),
        Ok(LVerdict::Member(_)) | Ok(LVerdict::TrivialK2)
    );
    if half != member {
        bad.push(format!(
            "epsilon = n/2 is {half} but gluing-family peel is {member}"
        ));
    }
    if rgraph::certify_rgraph(g).certificate().is_some() && g.order() >= 6 {
        // A half-order class exists iff the solitary edges form a perfect
        // matching (and then there are exactly n/2 of them). The count alone
        // does not suffice: order-8 staircases of thickness two or more have
        // n/2 solitary edges split across two doubletons.
        let sol = a.solitary_edges();
        let forms_pm = crate::matching::PerfectMatching::new(sol.clone()).is_valid_for(g);
        if half != forms_pm {
            bad.push(format!(
                "epsilon-half {half} but solitary-edges-form-matching {forms_pm}"
            ));
        }
        if half && sol.len() != g.order() / 2 {
            bad.push(format!(
                "half-order class with {} solitary edges on {} vertices",
                sol.len(),
                g.order()
            ));
        }
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}

fn check_oracles(g: &MultiGraph) -> Outcome {
    if g.order() > 12 || !g.order().is_multiple_of(2) {
        return Outcome::skipped();
    }
    let Ok(ms) = enumerate_pms(g) else {
        return Outcome::skipped();
    };
    let mut bad = Vec::new();
    // Solitary iff endpoint deletion leaves a uniquely matchable graph.
    for e in 0..g.size() {
        let (u, v) = g.endpoints(e);
        let direct = ms.is_solitary(e);
        let via_deletion = ms.pm_count() > 0 && matching::deletion_uniquely_matchable(g, &[u, v]);
        if direct != via_deletion {
            bad.push(format!(
                "edge {e}: solitary {direct} but deletion-unique {via_deletion}"
            ));
        }
    }
    // Parity of matching-cut intersections over a shore sample.
    let mut shores: Vec<BitVec> = (0..g.order()).map(|v| g.vertex_set(&[v])).collect();
    shores.extend(cuts::find_even_2cuts(g).into_iter().map(|c| c.shore));
    if g.order() >= 4 {
        shores.push(g.vertex_set(&[0, 1]));
        shores.push(g.vertex_set(&[0, 1, 2]));
    }
    for shore in &shores {
        let c = cut_of(g, shore);
        for m in ms.matchings() {
            let hits = c.edge_ids.iter().filter(|&&e| m.contains(e)).count();
            if hits % 2 != shore.count() % 2 {
                bad.push(format!(
                    "matching meets a cut of shore size {} in {hits} edges",
                    shore.count()
                ));
            }
        }
    }
    // Every uniquely matchable graph yields an odd 1-cut.
    if ms.pm_count() == 1 && matching::kotzig_1cut(g).is_err() {
        bad.push("uniquely matchable graph without an odd 1-cut".into());
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}

fn check_coloring(g: &MultiGraph) -> Outcome {
    let Some(cert) = rgraph::certify_rgraph(g).certificate().cloned() else {
        return Outcome::skipped();
    };
    let Ok(ms) = enumerate_pms(g) else {
        return Outcome::skipped();
    };
    let mut bad = Vec::new();
    let solitary = ms.solitary_edges();
    if !solitary.is_empty() {
        match rgraph::r_edge_coloring(g, cert.r) {
            Ok(Some(coloring)) => {
                for class in coloring.classes() {
                    if !crate::matching::PerfectMatching::new(class.clone()).is_valid_for(g) {
                        bad.push("color class is not a perfect matching".into());
                    }
                }
            }
            Ok(None) => bad.push(format!(
                "r-graph with a solitary edge refused an {}-edge-coloring",
                cert.r
            )),
            Err(e) => bad.push(format!("coloring failed: {e}")),
        }
    }
    // Uniqueness when at least r-1 solitary classes exist.
    if g.order() <= 10 {
        if let Ok(a) = dependence::analyze(g) {
            if a.solitary.len() + 1 >= cert.r {
                if let Ok(colorings) = rgraph::distinct_colorings_up_to(g, cert.r, 2) {
                    if colorings.len() > 1 {
                        bad.push(format!(
                            "{} solitary classes but several distinct colorings",
                            a.solitary.len()
                        ));
                    }
                }
            }
        }
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}

fn check_structural(g: &MultiGraph) -> Outcome {
    let Some(cert) = rgraph::certify_rgraph(g).certificate().cloned() else {
        return Outcome::skipped();
    };
    let Ok(ms) = enumerate_pms(g) else {
        return Outcome::skipped();
    };
    let Ok(a) = dependence::analyze(g) else {
        return Outcome::skipped();
    };
    let mut bad = Vec::new();
    let solitary = ms.solitary_edges();
    // At most r solitary classes in any certified graph.
    if a.solitary.len() > cert.r {
        bad.push(format!(
            "{} solitary classes exceeds r = {}",
            a.solitary.len(),
            cert.r
        ));
    }
    // Two or more solitary classes force 3-connectivity.
    if a.solitary.len() >= 2 && g.order() >= 4 && !is_k_vertex_connected(g, 3) {
        bad.push("two solitary classes in a non-3-connected graph".into());
    }
    // A rainbow triangle bounds the solitary classes by its plain edges.
    for t in rgraph::rainbow_triangles(g, cert.r) {
        let k = t
            .induced_edges
            .iter()
            .filter(|&&e| {
                let (u, v) = g.endpoints(e);
                g.multiplicity(u, v) == 1
            })
            .count();
        if a.solitary.len() > k {
            bad.push(format!(
                "rainbow triangle with {k} plain edges but {} solitary classes",
                a.solitary.len()
            ));
            break;
        }
    }
    if cert.is_3ec && g.order() >= 4 && !solitary.is_empty() {
        // Bricks: no nontrivial tight cut, equivalently 3-connected and
        // bicritical.
        match cuts::classify_brick_brace(g) {
            Ok(v) if v.kind == BrickBraceKind::Brick => {}
            Ok(v) => bad.push(format!("expected a brick, found {:?}", v.kind)),
            Err(e) => bad.push(format!("brick check failed: {e}")),
        }
        match cuts::is_bicritical(g) {
            Ok(true) => {}
            Ok(false) => bad.push("3ec r-graph with a solitary edge is not bicritical".into()),
            Err(e) => bad.push(format!("bicritical check failed: {e}")),
        }
    }
    if !cert.is_3ec {
        // The unique matching of a solitary class contains every 2-cut.
        let two_cuts = cuts::find_even_2cuts(g);
        for &i in &a.solitary {
            let e = a.classes[i][0];
            let j = ms.incidence(e).iter_ones().next().unwrap();
            let m = &ms.matchings()[j];
            for c in &two_cuts {
                if !c.edge_ids.iter().all(|&f| m.contains(f)) {
                    bad.push("solitary class matching misses a 2-cut".into());
                }
            }
        }
    }
    // Simple 3ec r-graphs with r >= 4 are matching double covered.
    let simple = (0..g.order()).all(|u| {
        g.incident(u)
            .iter()
            .all(|&(v, _)| g.multiplicity(u, v) == 1)
    });
    if simple && cert.is_3ec && cert.r >= 4 && !solitary.is_empty() {
        bad.push("simple 3ec r-graph (r >= 4) with a solitary edge".into());
    }
    if bad.is_empty() {
        Outcome::clean()
    } else {
        Outcome::violations(bad)
    }
}
