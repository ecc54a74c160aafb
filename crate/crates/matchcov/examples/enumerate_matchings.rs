//! Perfect-matching enumeration and the matchability predicates.
//!
//! Run with: cargo run --example enumerate_matchings

use matchcov::families;
use matchcov::matching::{
    enumerate_pms, is_matching_covered, is_matching_double_covered, solitary_edges,
};

fn main() {
    let petersen = families::petersen();
    let ms = enumerate_pms(&petersen).unwrap();
    println!("Petersen graph: {} perfect matchings", ms.pm_count());
    for m in ms.matchings() {
        let pretty: Vec<String> = m
            .edge_ids()
            .iter()
            .map(|&e| {
                let (u, v) = petersen.endpoints(e);
                format!("{u}-{v}")
            })
            .collect();
        println!("  {{{}}}", pretty.join(", "));
    }
    println!(
        "matching covered: {}, matching double covered: {}",
        is_matching_covered(&petersen).unwrap().covered,
        is_matching_double_covered(&petersen).unwrap()
    );

    let r8 = families::r8();
    let solitary = solitary_edges(&r8).unwrap();
    println!("\nbicorn: {} solitary edges", solitary.len());
    for e in solitary {
        let (u, v) = r8.endpoints(e);
        println!("  edge {u}-{v} lies in exactly one perfect matching");
    }

    // Per-edge matching counts come from the incidence bit vectors.
    let ms = enumerate_pms(&r8).unwrap();
    let histogram: Vec<usize> = (0..r8.size()).map(|e| ms.degree(e)).collect();
    println!("per-edge matching counts: {histogram:?}");
}
