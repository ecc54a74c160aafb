//! Constructive generators for the characterized families and the
//! recognizer mapping graphs back to them.
//!
//! Run with: cargo run --example generate_families

use matchcov::dependence::solitary_pattern;
use matchcov::families::{
    self, gen_family_d, gen_family_l, gen_family_s, gen_multiplied, gen_staircase1, gen_staircase3,
    recognize, DTrace, LTrace, MultipliedBase,
};

fn report(name: &str, g: &matchcov::MultiGraph) {
    let pattern = solitary_pattern(g)
        .map(|p| p.to_string())
        .unwrap_or_else(|_| "-".into());
    println!(
        "{name}: order {}, size {}, pattern {}",
        g.order(),
        g.size(),
        pattern
    );
    if g.order() <= 16 {
        for spec in recognize(g).unwrap() {
            println!("  recognized as {spec}");
        }
    }
}

fn main() {
    report("staircase(10, 1)", &gen_staircase1(10, 1).unwrap());
    report("staircase(12, 2)", &gen_staircase1(12, 2).unwrap());
    report("3-staircase(4, 4, 1)", &gen_staircase3(4, 4, 1).unwrap());
    report(
        "triple edge doubled once",
        &gen_multiplied(MultipliedBase::Theta, &[2, 1, 1], 1).unwrap(),
    );
    report("sporadic member 1", &gen_family_s(1).unwrap());

    // Recursive pattern-(2) family: start from a 3-staircase of order at
    // least twelve and splice at eligible doubleton ends.
    let base = gen_staircase3(2, 6, 1).unwrap();
    let v0 = families::family_d_base_vertices(&base).unwrap()[0];
    let member = gen_family_d(&DTrace {
        ladder_a: 2,
        ladder_b: 6,
        base_vertex: v0,
        steps: vec![],
    })
    .unwrap();
    report("recursive pattern-(2) member", &member);

    // Half-order-class family: glue two plain 4-vertex complete graphs at
    // solitary doubleton edges.
    let k4 = || LTrace::K4 {
        pair_mults: [[1, 1], [1, 1], [1, 1]],
    };
    let glued = gen_family_l(&LTrace::Glue {
        left: Box::new(k4()),
        right: Box::new(k4()),
        left_edge: 0,
        right_edge: 0,
    })
    .unwrap();
    report("glued half-order-class member", &glued);
}
