//! Canonical labeling of small multigraphs by color refinement plus
//! backtracking over the remaining vertex orderings.
//!
//! Two graphs get equal canonical byte strings iff they are isomorphic as
//! multigraphs (multiplicities respected). The search explores every
//! individualization branch, so equality is exact, not heuristic; the price
//! is the [`CANON_BOUND`] order limit.

use std::collections::BTreeMap;

use crate::graph::{GraphError, MultiGraph};

/// Default order bound for [`canonical_form`].
pub const CANON_BOUND: usize = 16;

/// Canonical byte string of `g`; equal strings iff isomorphic multigraphs.
pub fn canonical_form(g: &MultiGraph) -> Result<Vec<u8>, GraphError> {
    canonical_form_bounded(g, CANON_BOUND)
}

/// [`canonical_form`] with an explicit order bound.
pub fn canonical_form_bounded(g: &MultiGraph, bound: usize) -> Result<Vec<u8>, GraphError> {
    let n = g.order();
    if n > bound {
        return Err(GraphError::TooLarge(n, bound));
    }
    let mult = multiplicity_matrix(g);
    let initial = refine(&mult, n, &vec![0usize; n]);
    let mut best: Option<Vec<u8>> = None;
    search(&mult, n, &initial, &mut best);
    let mut bytes = best.expect("search yields at least one labeling");
    let mut out = Vec::with_capacity(bytes.len() + 1);
    out.push(n as u8);
    out.append(&mut bytes);
    Ok(out)
}

/// Whether two multigraphs are isomorphic (order at most [`CANON_BOUND`]).
pub fn is_isomorphic(g: &MultiGraph, h: &MultiGraph) -> Result<bool, GraphError> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

fn multiplicity_matrix(g: &MultiGraph) -> Vec<Vec<u8>> {
    let n = g.order();
    let mut m = vec![vec![0u8; n]; n];
    for &(u, v) in g.edges() {
        m[u][v] += 1;
        m[v][u] += 1;
    }
    m
}

/// Vertex signature under refinement: own color plus the sorted multiset
/// of (neighbor color, edge multiplicity).
type Signature = (usize, Vec<(usize, u8)>);

/// Iterated color refinement: a vertex color is replaced by the rank of its
/// signature.
fn refine(mult: &[Vec<u8>], n: usize, colors: &[usize]) -> Vec<usize> {
    let mut colors = colors.to_vec();
    loop {
        let mut sigs: Vec<Signature> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbrs: Vec<(usize, u8)> = (0..n)
                .filter(|&w| mult[v][w] > 0)
                .map(|w| (colors[w], mult[v][w]))
                .collect();
            nbrs.sort_unstable();
            sigs.push((colors[v], nbrs));
        }
        // Dense colors ordered by signature.
        let mut ordered: Vec<&Signature> = sigs.iter().collect();
        ordered.sort();
        ordered.dedup();
        let lookup: BTreeMap<&Signature, usize> = ordered
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let new_colors: Vec<usize> = sigs.iter().map(|s| lookup[s]).collect();
        let old_count = distinct(&colors);
        let new_count = distinct(&new_colors);
        colors = new_colors;
        if new_count == old_count {
            return colors;
        }
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn search(mult: &[Vec<u8>], n: usize, colors: &[usize], best: &mut Option<Vec<u8>>) {
    if distinct(colors) == n {
        let bytes = bytes_for(mult, n, colors);
        if best.as_ref().is_none_or(|b| bytes < *b) {
            *best = Some(bytes);
        }
        return;
    }
    // Branch on the smallest non-singleton cell, ties by color; both keys
    // are isomorphism-invariant, which the search needs for exactness.
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &color) in colors.iter().enumerate() {
        cells.entry(color).or_default().push(v);
    }
    let cell = cells
        .iter()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(color, c)| (c.len(), **color))
        .map(|(_, c)| c.clone())
        .expect("non-discrete partition has a splittable cell");
    for &v in &cell {
        // Individualize v: give it a fresh color just below its old cell.
        let mut branched: Vec<usize> = colors.iter().map(|&c| 2 * c + 2).collect();
        branched[v] -= 1;
        let refined = refine(mult, n, &branched);
        search(mult, n, &refined, best);
    }
}

fn bytes_for(mult: &[Vec<u8>], n: usize, colors: &[usize]) -> Vec<u8> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut bytes = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            bytes.push(mult[order[i]][order[j]]);
        }
    }
    bytes
}
