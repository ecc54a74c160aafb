//! Dependence analysis of the order-ten staircase: equivalence classes,
//! minimal classes, the Hasse diagram of the class poset, and the solitary
//! pattern.
//!
//! Run with: cargo run --example analyze_dependence

use matchcov::dependence::{analyze, depends};
use matchcov::families;
use matchcov::matching::enumerate_pms;

fn main() {
    let g = families::r10();
    let ms = enumerate_pms(&g).unwrap();
    println!(
        "order {}, size {}, perfect matchings {}",
        g.order(),
        g.size(),
        ms.pm_count()
    );

    // Single-edge dependence queries.
    let e = |u: usize, v: usize| g.edge_between(u, v).unwrap();
    println!(
        "edge 4-5 depends on 2-3: {}",
        depends(&ms, e(4, 5), e(2, 3)).unwrap()
    );
    println!(
        "edge 2-3 depends on 4-5: {}",
        depends(&ms, e(2, 3), e(4, 5)).unwrap()
    );

    let a = analyze(&g).unwrap();
    println!("\n{} equivalence classes:", a.classes.len());
    for (i, class) in a.classes.iter().enumerate() {
        let pretty: Vec<String> = class
            .iter()
            .map(|&id| {
                let (u, v) = g.endpoints(id);
                format!("{u}{v}")
            })
            .collect();
        let mark = |list: &[usize], tag: &str| {
            if list.contains(&i) {
                format!(" [{tag}]")
            } else {
                String::new()
            }
        };
        println!(
            "  class {i}: {{{}}}{}{}{}",
            pretty.join(","),
            mark(&a.minimal, "minimal"),
            mark(&a.removable, "removable"),
            mark(&a.solitary, "solitary"),
        );
    }

    println!("\nHasse arrows (class -> class it depends on):");
    for &(i, j) in &a.hasse {
        println!("  {i} -> {j}");
    }
    println!("\nsolitary pattern: {}", a.pattern);
    println!(
        "largest class size: {} (class {})",
        a.epsilon, a.epsilon_witness
    );
}
