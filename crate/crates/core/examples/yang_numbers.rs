//! Existence status by order and the Yang numbers it implies.
//!
//! ```text
//! cargo run --example yang_numbers -- 101
//! ```

use nnseq::catalog::{is_yang_number, status, StatusKind};

fn main() {
    let top: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(73);
    println!("  n   s  NS(s)     NN(s)     yang");
    for n in (1..=top).step_by(2) {
        let s = ((n - 1) / 2) as usize;
        let ns = status(StatusKind::Ns, s);
        let nn = status(StatusKind::Nn, s);
        let yang = match is_yang_number(n) {
            Some(true) => "yes",
            Some(false) => "no",
            None => "?",
        };
        println!(
            "{n:3} {s:3}  {:<9} {:<9} {yang}",
            format!("{:?}", ns.status),
            format!("{:?}", nn.status)
        );
    }
}
