//! A budgeted search that stops, saves a checkpoint, and resumes until done.
//!
//! ```text
//! cargo run --release --example checkpoint_resume -- 10 2000
//! ```

use nnseq::search::{search, Checkpoint, ReportMode, SearchError, SearchKind, SearchSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let order: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let slice: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);

    let path = std::env::temp_dir().join(format!("nnseq-nn{order}.ckpt"));
    let base = SearchSpec::new(SearchKind::Nn, order).mode(ReportMode::Count);
    let mut spec = base.clone().max_nodes(slice);
    let out = loop {
        match search(&spec) {
            Ok(out) => break out,
            Err(SearchError::Budget { partial, checkpoint }) => {
                println!(
                    "paused at {} nodes, {} solutions so far",
                    partial.stats.nodes, partial.count
                );
                checkpoint.save(&path).expect("save checkpoint");
                // a fresh process would start here
                let cp = Checkpoint::load(&path).expect("load checkpoint");
                spec = base.clone().max_nodes(cp.stats.nodes + slice).resume(cp);
            }
            Err(e) => panic!("{e}"),
        }
    };
    let _ = std::fs::remove_file(&path);
    let direct = search(&base).expect("search");
    println!("resumed total {}  direct total {}", out.count, direct.count);
    assert_eq!(out.count, direct.count);
}
