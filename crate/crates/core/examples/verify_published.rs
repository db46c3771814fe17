//! Decodes the embedded NN(34) and NN(36) witnesses and checks each one.
//!
//! ```text
//! cargo run --example verify_published
//! ```

use nnseq::catalog::table1_records;
use nnseq::verify_quadruple;

fn main() {
    for rec in table1_records() {
        let (m, n) = rec.quad.shape();
        let report = verify_quadruple(&rec.quad).expect("well-formed");
        println!("{}", rec.record_line());
        println!("  shape ({m},{n})  sums {}  {report}", rec.sums);
    }

    // lag-by-lag view of the order-36 witness
    let q = &table1_records()[5].quad;
    let lags = q.lag_sums();
    println!("\nNN(36) lag sums 1..36: {:?}", &lags[1..]);
}
