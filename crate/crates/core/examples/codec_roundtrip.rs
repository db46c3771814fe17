//! Digit codes and plaintext: decode a record, print the sequences, encode
//! them back.
//!
//! ```text
//! cargo run --example codec_roundtrip -- "NN 36 0764841234846532153 165154775335162126"
//! ```

use nnseq::codec::{encode_quadruple, format_record, parse_record, QUAD_TABLE};
use nnseq::seqcore::to_plaintext;

fn main() {
    let line = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "NN 36 0764841234846532153 165154775335162126".to_string());
    let q = match parse_record(&line) {
        Ok(q) => q,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    for (name, seq) in ["A", "B", "C", "D"].iter().zip(q.seqs()) {
        println!("{name} = {}", to_plaintext(seq));
    }
    let (ab, cd) = encode_quadruple(&q).expect("encodable");
    println!("AB {ab}\nCD {cd}");
    assert_eq!(
        format_record(&q).split_whitespace().collect::<Vec<_>>(),
        line.split_whitespace().collect::<Vec<_>>()
    );

    println!("\ndigit  x_k y_k  x_mirror y_mirror");
    let pm = |v: i8| if v > 0 { '+' } else { '-' };
    for (d, quad) in QUAD_TABLE.iter().enumerate() {
        println!(
            "  {d}      {}   {}      {}   {}",
            pm(quad[0]),
            pm(quad[1]),
            pm(quad[2]),
            pm(quad[3])
        );
    }
}
