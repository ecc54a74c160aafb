//! Property tests for the structural invariants, checked against the
//! independent oracles in `common`.

mod common;

use proptest::prelude::*;

use matchcov::bitset::BitVec;
use matchcov::canon;
use matchcov::classify;
use matchcov::dependence;
use matchcov::families;
use matchcov::graph::{cut_of, MultiGraph};
use matchcov::io;
use matchcov::matching::{self, enumerate_pms};

/// Random loopless multigraph on up to eight vertices.
fn arb_multigraph() -> impl Strategy<Value = MultiGraph> {
    (2usize..=8).prop_flat_map(|n| {
        let pair = (0..n, 0..n).prop_filter_map("loop", |(u, v)| (u != v).then_some((u, v)));
        proptest::collection::vec(pair, 1..=16)
            .prop_map(move |edges| MultiGraph::from_edges(n, &edges))
    })
}

/// Random even-order connected multigraph with a perfect matching: a random
/// graph overlaid with a perfect matching and a spanning path.
fn arb_matchable() -> impl Strategy<Value = MultiGraph> {
    (
        1usize..=4,
        proptest::collection::vec((0usize..8, 0usize..8), 0..10),
    )
        .prop_map(|(half, extra)| {
            let n = 2 * half;
            let mut edges: Vec<(usize, usize)> = (0..half).map(|i| (2 * i, 2 * i + 1)).collect();
            for i in 0..n - 1 {
                edges.push((i, i + 1));
            }
            for (u, v) in extra {
                if u < n && v < n && u != v {
                    edges.push((u, v));
                }
            }
            MultiGraph::from_edges(n, &edges)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cut_complement_symmetry(g in arb_multigraph(), mask in any::<u32>()) {
        let mut shore = BitVec::new(g.order());
        for v in 0..g.order() {
            if mask >> v & 1 == 1 {
                shore.set(v, true);
            }
        }
        let c = cut_of(&g, &shore);
        let cc = cut_of(&g, &shore.complement());
        prop_assert_eq!(&c.edge_ids, &cc.edge_ids);
        prop_assert_eq!(c.parity, cc.parity);
    }

    #[test]
    fn degree_parity_lemma(g in arb_multigraph(), mask in any::<u32>()) {
        // Shores of odd-degree vertices have cut size congruent to shore size.
        let odd: Vec<usize> = (0..g.order())
            .filter(|&v| g.degree(v) % 2 == 1 && mask >> v & 1 == 1)
            .collect();
        let shore = g.vertex_set(&odd);
        let c = cut_of(&g, &shore);
        prop_assert_eq!(c.edge_ids.len() % 2, shore.count() % 2);
    }

    #[test]
    fn matching_parity_lemma(g in arb_matchable(), mask in any::<u32>()) {
        let ms = enumerate_pms(&g).unwrap();
        let mut shore = BitVec::new(g.order());
        for v in 0..g.order() {
            if mask >> v & 1 == 1 {
                shore.set(v, true);
            }
        }
        let c = cut_of(&g, &shore);
        for m in ms.matchings() {
            let hits = c.edge_ids.iter().filter(|&&e| m.contains(e)).count();
            prop_assert_eq!(hits % 2, shore.count() % 2);
        }
    }

    #[test]
    fn canonical_form_matches_brute_force(g in arb_multigraph(), seed in any::<u64>()) {
        // A pseudorandom relabeling must not change the canonical form, and
        // inequality under the fast form must match the factorial oracle.
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = MultiGraph::from_edges(n, &edges);
        prop_assert_eq!(canon::canonical_form(&g).unwrap(), canon::canonical_form(&h).unwrap());
        prop_assert_eq!(common::brute_canonical(&g), common::brute_canonical(&h));
    }

    #[test]
    fn canonical_equality_iff_brute_equality(a in arb_multigraph(), b in arb_multigraph()) {
        let fast = canon::canonical_form(&a).unwrap() == canon::canonical_form(&b).unwrap();
        let brute = common::brute_isomorphic(&a, &b);
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn enumeration_count_matches_dp_oracle(g in arb_matchable()) {
        let ms = enumerate_pms(&g).unwrap();
        prop_assert_eq!(ms.pm_count() as u64, common::pm_count_dp(&g));
        // Incidence bookkeeping: total popcount equals matchings times n/2.
        let total: usize = (0..g.size()).map(|e| ms.degree(e)).sum();
        prop_assert_eq!(total, ms.pm_count() * g.order() / 2);
    }

    #[test]
    fn bond_flag_matches_minimality(g in arb_multigraph()) {
        // A nonempty cut is a bond iff no proper nonempty subset of it is a
        // cut.
        prop_assume!(g.size() <= 12 && g.is_connected());
        let all_cuts = common::all_cut_edge_sets(&g);
        for mask in 1u32..(1 << (g.order() - 1)) {
            let mut shore = BitVec::new(g.order());
            for v in 0..g.order() - 1 {
                if mask >> v & 1 == 1 {
                    shore.set(v, true);
                }
            }
            let c = cut_of(&g, &shore);
            if c.edge_ids.is_empty() {
                continue;
            }
            let minimal = !proper_nonempty_subsets(&c.edge_ids)
                .into_iter()
                .any(|s| all_cuts.contains(&s));
            prop_assert_eq!(c.is_bond, minimal);
        }
    }

    #[test]
    fn edgelist_round_trip(g in arb_multigraph()) {
        let text = io::write_edgelist(&g);
        let h = io::parse_edgelist(&text).unwrap();
        prop_assert!(h.same_labeled(&g));
        prop_assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn classes_partition_edges(g in arb_matchable()) {
        prop_assume!(matching::is_matching_covered(&g).unwrap().covered);
        let a = dependence::analyze(&g).unwrap();
        let mut seen = vec![false; g.size()];
        for c in &a.classes {
            prop_assert!(!c.is_empty());
            for &e in c {
                prop_assert!(!seen[e], "classes overlap");
                seen[e] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
        // Every matching is a union of whole classes.
        let ms = enumerate_pms(&g).unwrap();
        for m in ms.matchings() {
            for &e in m.edge_ids() {
                for &f in &a.classes[a.class_of[e]] {
                    prop_assert!(m.contains(f));
                }
            }
        }
        // Epsilon is bounded by half the order.
        prop_assert!(a.epsilon <= g.order() / 2);
    }

    #[test]
    fn solitary_iff_deletion_unique(g in arb_matchable()) {
        let ms = enumerate_pms(&g).unwrap();
        for e in 0..g.size() {
            let (u, v) = g.endpoints(e);
            let direct = ms.is_solitary(e);
            let oracle = ms.pm_count() > 0
                && matching::deletion_uniquely_matchable(&g, &[u, v])
                && ms.is_matchable(e);
            prop_assert_eq!(direct, oracle);
        }
    }
}

fn proper_nonempty_subsets(edges: &[usize]) -> Vec<Vec<usize>> {
    let k = edges.len();
    let mut out = Vec::new();
    for mask in 1u32..((1 << k) - 1) {
        out.push(
            (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| edges[i])
                .collect(),
        );
    }
    out
}

#[test]
fn corpus_generator_agrees_with_brute_force_up_to_six() {
    for n in [2usize, 4, 6] {
        let labeled = common::labeled_regular(n, 3);
        let brute: std::collections::HashSet<Vec<u8>> =
            labeled.iter().map(common::brute_canonical).collect();
        let generated: Vec<MultiGraph> = classify::exhaustive_small_corpus(n, 3)
            .unwrap()
            .into_iter()
            .filter(|g| g.order() == n)
            .collect();
        let gen_forms: std::collections::HashSet<Vec<u8>> =
            generated.iter().map(common::brute_canonical).collect();
        assert_eq!(gen_forms.len(), generated.len(), "duplicates at order {n}");
        assert_eq!(gen_forms, brute, "missed or invented classes at order {n}");
    }
}

#[test]
fn corpus_order_eight_is_pairwise_distinct() {
    let generated: Vec<MultiGraph> = classify::exhaustive_small_corpus(8, 3)
        .unwrap()
        .into_iter()
        .filter(|g| g.order() == 8)
        .collect();
    let forms: std::collections::HashSet<Vec<u8>> =
        generated.iter().map(common::brute_canonical).collect();
    assert_eq!(forms.len(), generated.len());
}

#[test]
fn corpus_contains_petersen_at_order_ten() {
    let corpus = classify::exhaustive_small_corpus(10, 3).unwrap();
    let target = canon::canonical_form(&families::petersen()).unwrap();
    assert!(corpus
        .iter()
        .any(|g| canon::canonical_form(g).unwrap() == target));
    // Class counts per order, frozen after the brute-force cross-checks.
    for (n, want) in [(2usize, 1usize), (4, 2), (6, 6), (8, 20), (10, 91)] {
        assert_eq!(corpus.iter().filter(|g| g.order() == n).count(), want);
    }
}

#[test]
fn named_pm_counts_match_dp_oracle() {
    for (name, g) in families::named_fixtures() {
        if g.order() % 2 != 0 {
            continue;
        }
        let ms = enumerate_pms(&g).unwrap();
        assert_eq!(ms.pm_count() as u64, common::pm_count_dp(&g), "{name}");
    }
    assert_eq!(common::pm_count_dp(&families::petersen()), 6);
}
