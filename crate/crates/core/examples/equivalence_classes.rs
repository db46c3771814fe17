//! Counts near-normal equivalence classes and compares them with the
//! published counts.
//!
//! ```text
//! cargo run --release --example equivalence_classes -- 12
//! ```

use nnseq::catalog::NN_CLASS_COUNTS;
use nnseq::codec::format_record;
use nnseq::search::{nn_orbit, search, SearchKind, SearchSpec};

fn main() {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for &(s, published) in NN_CLASS_COUNTS.iter().filter(|(s, _)| *s <= top) {
        let out = search(&SearchSpec::new(SearchKind::Nn, s).classes(true)).expect("search");
        let mark = if out.count as usize == published {
            ""
        } else {
            "  (differs)"
        };
        println!(
            "s={s:2}  classes {:3}  published {published:3}{mark}  {:.1?}",
            out.count, out.stats.elapsed
        );
        if s <= 6 {
            for q in &out.solutions {
                let size = nn_orbit(q).expect("member").len();
                println!("    {}  orbit {size}", format_record(q));
            }
        }
    }
}
