//! Exhaustive search at small orders: which NN(s) and NS(n) are empty.
//!
//! ```text
//! cargo run --release --example search_small_orders -- 12
//! ```

use nnseq::search::{enumerate_cases, search, ReportMode, SearchKind, SearchSpec};

fn main() {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for kind in [SearchKind::Nn, SearchKind::Ns] {
        for order in 1..=top {
            let out = search(&SearchSpec::new(kind, order).mode(ReportMode::Count)).expect("search");
            println!(
                "{kind}({order:2}) {:6} solutions  {:8} nodes  {:.1?}",
                out.count, out.stats.nodes, out.stats.elapsed
            );
        }
    }

    println!("\ncases for order {top}:");
    for case in enumerate_cases(top) {
        let out = search(
            &SearchSpec::new(SearchKind::Nn, top)
                .mode(ReportMode::Count)
                .cases(vec![case.id]),
        )
        .expect("search");
        println!("{case}  -> {}", out.count);
    }
}
