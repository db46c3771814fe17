//! Golay pairs: search, doubling, and the normal sequences they give.
//!
//! ```text
//! cargo run --release --example golay_normal
//! ```

use nnseq::codec::format_record;
use nnseq::construct::{golay_double, golay_search, golay_to_ns, is_golay_number};
use nnseq::verify_quadruple;

fn main() {
    for g in 1..=12 {
        let pairs = golay_search(g).expect("within limit");
        println!(
            "g={g:2}  golay number {:5}  pairs {}",
            is_golay_number(g as u64),
            pairs.len()
        );
    }

    let seed = golay_search(10).expect("search")[0].clone();
    println!("\nseed      {}", seed.plaintext());
    let ns = golay_to_ns(&seed);
    println!(
        "NS(10)    {}  {}",
        format_record(&ns),
        verify_quadruple(&ns).expect("shape")
    );

    let mut p = seed;
    for _ in 0..3 {
        p = golay_double(&p);
        let ns = golay_to_ns(&p);
        println!("NS({:3})   {}", p.len(), verify_quadruple(&ns).expect("shape"));
    }
}
