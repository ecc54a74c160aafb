//! Independent oracles shared by the integration suites. Everything here
//! deliberately avoids the library's own algorithms: canonicalization tries
//! all permutations, matching counts use subset dynamic programming, and cut
//! collections come from plain shore scans.

#![allow(dead_code)] // each integration suite uses its own subset

use std::collections::{HashMap, HashSet};

use matchcov::MultiGraph;

/// Minimum adjacency bytes over all vertex permutations.
pub fn brute_canonical(g: &MultiGraph) -> Vec<u8> {
    let n = g.order();
    assert!(n <= 9, "brute canonicalization is factorial");
    let mut mult = vec![vec![0u8; n]; n];
    for &(u, v) in g.edges() {
        mult[u][v] += 1;
        mult[v][u] += 1;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u8>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut bytes = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                bytes.push(mult[p[i]][p[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| &bytes < b) {
            best = Some(bytes);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn brute_isomorphic(g: &MultiGraph, h: &MultiGraph) -> bool {
    g.order() == h.order() && g.size() == h.size() && brute_canonical(g) == brute_canonical(h)
}

/// Perfect matching count by dynamic programming over covered-vertex masks.
pub fn pm_count_dp(g: &MultiGraph) -> u64 {
    let n = g.order();
    assert!(n <= 24, "mask oracle needs small orders");
    if !n.is_multiple_of(2) {
        return 0;
    }
    let mut memo: HashMap<u32, u64> = HashMap::new();
    fn rec(g: &MultiGraph, mask: u32, memo: &mut HashMap<u32, u64>) -> u64 {
        let n = g.order();
        if mask == (1u32 << n) - 1 {
            return 1;
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let u = (0..n).find(|&v| mask >> v & 1 == 0).unwrap();
        let mut total = 0;
        for &(w, _) in g.incident(u) {
            if mask >> w & 1 == 0 {
                total += rec(g, mask | 1 << u | 1 << w, memo);
            }
        }
        memo.insert(mask, total);
        total
    }
    rec(g, 0, &mut memo)
}

/// All edge sets that occur as cuts, found by scanning every shore.
pub fn all_cut_edge_sets(g: &MultiGraph) -> HashSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16);
    let mut out = HashSet::new();
    for mask in 1u32..(1 << (n - 1)) {
        let mut edges = Vec::new();
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            let cu = mask >> u & 1;
            let cv = mask >> v & 1;
            // Vertex n-1 is pinned outside the shore.
            let cu = if u == n - 1 { 0 } else { cu };
            let cv = if v == n - 1 { 0 } else { cv };
            if cu != cv {
                edges.push(id);
            }
        }
        out.insert(edges);
    }
    out
}

/// Unpruned labeled enumeration of connected r-regular multigraphs.
pub fn labeled_regular(n: usize, r: usize) -> Vec<MultiGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    fn rec(
        pairs: &[(usize, usize)],
        idx: usize,
        n: usize,
        r: usize,
        deg: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        out: &mut Vec<MultiGraph>,
    ) {
        if idx == pairs.len() {
            if deg.iter().all(|&d| d == r) {
                let g = MultiGraph::from_edges(n, edges);
                if g.is_connected() {
                    out.push(g);
                }
            }
            return;
        }
        let (i, j) = pairs[idx];
        if j == i + 1 && i > 0 && deg[i - 1] != r {
            return;
        }
        let ahead: usize = (j..n).map(|v| r - deg[v]).sum();
        if r - deg[i] > ahead {
            return;
        }
        for m in 0..=(r - deg[i]).min(r - deg[j]) {
            for _ in 0..m {
                edges.push((i, j));
            }
            deg[i] += m;
            deg[j] += m;
            rec(pairs, idx + 1, n, r, deg, edges, out);
            deg[i] -= m;
            deg[j] -= m;
            for _ in 0..m {
                edges.pop();
            }
        }
    }
    rec(&pairs, 0, n, r, &mut deg, &mut edges, &mut out);
    out
}
