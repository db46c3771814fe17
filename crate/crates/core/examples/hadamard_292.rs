//! NN(36) -> TS(73) -> OD(292; 73,73,73,73) -> Hadamard matrix of order 292.
//!
//! ```text
//! cargo run --release --example hadamard_292 -- h292.txt
//! ```

use std::time::Instant;

use nnseq::catalog::table1_records;
use nnseq::construct::{bs_to_ts, hadamard_from_od, ts_to_od, verify_od};
use nnseq::verify_quadruple;

fn main() {
    let start = Instant::now();
    let nn = &table1_records()[5].quad;
    let ts = bs_to_ts(nn).expect("NN(36) is a base-sequence quadruple");
    println!("TS({}): {}", ts.shape().1, verify_quadruple(&ts).expect("shape"));

    let od = ts_to_od(&ts).expect("T-sequences");
    let sig: Vec<String> = od.signature.iter().map(|s| s.to_string()).collect();
    println!("OD({};{}): {}", od.order(), sig.join(","), verify_od(&od));

    let (h, report) = hadamard_from_od(&od, &[1, 1, 1, 1]).expect("no zero entries");
    println!("HHᵀ = {}·I: {report}", h.order);
    println!("elapsed {:.1?}", start.elapsed());

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, h.to_pm_text()).expect("write matrix");
        println!("wrote {path}");
    }
}
