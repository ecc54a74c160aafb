//! The verification harness: run structural checks over an exhaustive
//! multigraph corpus and the generated family members.
//!
//! Run with: cargo run --example verify_checks

use matchcov::classify::{default_family_corpus, exhaustive_small_corpus, verify, Check};

fn main() {
    let mut corpus = exhaustive_small_corpus(8, 3).unwrap();
    corpus.extend(default_family_corpus());
    println!("corpus: {} graphs\n", corpus.len());

    for check in [
        Check::SolitaryBounds,
        Check::HalfOrderExceptions,
        Check::StaircaseCount,
        Check::SolitaryDistance,
        Check::HalfOrderClass,
    ] {
        let report = verify(check, &corpus, 3);
        print!("{report}");
        assert!(
            report.ok(),
            "a violation would indicate an implementation bug"
        );
    }
}
