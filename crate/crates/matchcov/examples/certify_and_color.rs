//! r-graph certification, minimum odd cuts, edge coloring, and growing new
//! r-graphs by multiplying a perfect matching.
//!
//! Run with: cargo run --example certify_and_color

use matchcov::families;
use matchcov::matching::enumerate_pms;
use matchcov::rgraph::{certify_rgraph, multiply_matching, r_edge_coloring, RGraphVerdict};

fn show(name: &str, g: &matchcov::MultiGraph) {
    match certify_rgraph(g) {
        RGraphVerdict::Certified(c) => println!(
            "{name}: certified r-graph, r = {}, min odd cut = {}, 3-edge-connected = {}",
            c.r, c.min_odd_cut, c.is_3ec
        ),
        RGraphVerdict::Refused(r) => println!("{name}: refused ({r:?})"),
    }
}

fn main() {
    let petersen = families::petersen();
    show("Petersen", &petersen);
    match r_edge_coloring(&petersen, 3).unwrap() {
        Some(_) => println!("  3-edge-colorable"),
        None => println!("  not 3-edge-colorable"),
    }

    show("4-cycle", &families::c4());

    // Multiplying a perfect matching turns an r-graph into an (r+1)-graph.
    let ms = enumerate_pms(&petersen).unwrap();
    let doubled = multiply_matching(&petersen, &ms.matchings()[0], 2).unwrap();
    show("Petersen with one matching doubled", &doubled);

    // The prism is uniquely 3-edge-colorable; its classes are the three
    // solitary doubletons.
    let prism = families::c6bar();
    let coloring = r_edge_coloring(&prism, 3).unwrap().unwrap();
    println!("\nprism coloring classes:");
    for (i, class) in coloring.classes().iter().enumerate() {
        let pretty: Vec<String> = class
            .iter()
            .map(|&e| {
                let (u, v) = prism.endpoints(e);
                format!("{u}-{v}")
            })
            .collect();
        println!("  color {i}: {{{}}}", pretty.join(", "));
    }
}
