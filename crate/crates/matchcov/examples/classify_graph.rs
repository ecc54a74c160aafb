//! End-to-end classification: certification, pattern, characterization row,
//! family matches, and the 2-cut decomposition for graphs that are not
//! 3-edge-connected.
//!
//! Run with: cargo run --example classify_graph

use matchcov::classify::classify;
use matchcov::cuts::glue;
use matchcov::families;

fn show(name: &str, g: &matchcov::MultiGraph) {
    let report = classify(g);
    println!("{name}:");
    println!("  order {}, size {}", report.order, report.size);
    println!("  3-edge-connected: {}", report.three_ec);
    if let Some(a) = &report.analysis {
        println!("  solitary pattern: {}", a.pattern);
    }
    if let Some(row) = report.table_row {
        println!("  characterization row: {row}");
    }
    for spec in &report.family_matches {
        println!("  family match: {spec}");
    }
    if let Some(d) = &report.decomposition {
        println!(
            "  2-cut decomposition: {} pieces, derived solitary edges {:?}",
            d.tree.leaves().len(),
            d.derived_solitary
        );
    }
    println!();
}

fn main() {
    show("bicorn", &families::r8());
    show(
        "order-14 staircase",
        &families::gen_staircase1(14, 1).unwrap(),
    );
    show("order-10 double-triangle graph", &families::n10());
    show("Petersen", &families::petersen());
    let glued = glue(&families::k4(), 0, &families::c6bar(), 3).unwrap();
    show("two graphs glued at an edge", &glued.graph);
}
