//! Prints maximum code sizes for the canonical binary two-memory graphs as
//! JSON, in the layout of the pinned fixture `tests/fixtures/oracle_sizes.json`.
//!
//! `cargo run --release -p zecap --example oracle_table -- 12`

use std::collections::BTreeMap;
use std::time::Instant;

use zecap::construct::table1_binary_m2;
use zecap::oracle::{max_code_exact, SearchStatus, DEFAULT_BUDGET};
use zecap::{Alphabet, ChannelGraph};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    let report = table1_binary_m2().expect("table");
    let mut out: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for row in &report.rows {
        let pair = row.canonical.trim_start_matches("G(").trim_end_matches(')');
        let (u, v) = pair.split_once(',').expect("canonical form");
        let graph = ChannelGraph::single_edge(Alphabet::binary(), u.parse().unwrap(), v.parse().unwrap()).unwrap();
        let sizes = out.entry(row.canonical.clone()).or_default();
        for n in 1..=max_n {
            let start = Instant::now();
            let r = max_code_exact(&graph, n, DEFAULT_BUDGET).expect("search");
            assert_eq!(r.status, SearchStatus::Exact, "{} n={n}", row.canonical);
            eprintln!(
                "{} n={n}: {} ({} classes, {} nodes, {:.2?})",
                row.canonical, r.max_size, r.vertices, r.nodes_explored, start.elapsed()
            );
            sizes.push(r.max_size as u64);
        }
    }
    // one graph per line; entry i is the size at length i + 1
    let lines: Vec<String> = out
        .iter()
        .map(|(g, sizes)| format!("    \"{g}\": {}", serde_json::to_string(sizes).unwrap()))
        .collect();
    println!("{{\n  \"max_n\": {max_n},\n  \"sizes\": {{\n{}\n  }}\n}}", lines.join(",\n"));
}
