//! The structure around a solitary edge: its companion, the two associated
//! r-cuts, brick classification and near-bipartite witnesses.
//!
//! Run with: cargo run --example solitary_structure

use matchcov::cuts::{classify_brick_brace, near_bipartite_witness};
use matchcov::families;
use matchcov::matching::{companion_of, enumerate_pms, kotzig_1cut};

fn main() {
    let g = families::r8();
    let ms = enumerate_pms(&g).unwrap();
    println!("bicorn solitary edges and their companions:");
    for e in ms.solitary_edges() {
        let cert = companion_of(&g, e).unwrap();
        let (u, v) = g.endpoints(e);
        let (x, y) = g.endpoints(cert.companion);
        println!(
            "  edge {u}-{v}: companion {x}-{y}, associated cuts of sizes {} and {} (unique: {})",
            cert.cut_c.edge_ids.len(),
            cert.cut_d.edge_ids.len(),
            cert.unique
        );
    }

    // The companion is the odd 1-cut of the graph minus the edge ends.
    let e = ms.solitary_edges()[0];
    let (u, v) = g.endpoints(e);
    let (h, _, edge_map) = g.delete_vertices(&[u, v]);
    let f = kotzig_1cut(&h).unwrap();
    println!(
        "deleting the ends of the first solitary edge leaves a uniquely \
         matchable graph whose odd 1-cut is edge {:?}",
        g.endpoints(edge_map[f])
    );

    println!("\nbrick/brace verdicts:");
    for (name, g) in [
        ("bicorn", families::r8()),
        ("Petersen", families::petersen()),
        ("4-cycle", families::c4()),
    ] {
        println!("  {name}: {:?}", classify_brick_brace(&g).unwrap().kind);
    }

    let w = near_bipartite_witness(&families::c6bar()).unwrap().unwrap();
    println!(
        "\nprism is near-bipartite: removing edges {:?} and {:?} leaves color classes {:?} | {:?}",
        families::c6bar().endpoints(w.doubleton.0),
        families::c6bar().endpoints(w.doubleton.1),
        w.color_a,
        w.color_b
    );
}
