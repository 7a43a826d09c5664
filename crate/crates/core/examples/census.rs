//! Graphs up to isomorphism, and the ten connected graphs on seven vertices
//! with seventeen edges.
//!
//! Run with `cargo run --release --example census`.

use std::time::Instant;

use pineapple::{count_with_filter, encode_graph6, Census, CensusQuery};

fn main() -> pineapple::Result<()> {
    let census = Census::new();
    for n in 1..=8 {
        let t = Instant::now();
        let all = census.count(&CensusQuery::all(n))?;
        let connected = census.count(&CensusQuery::all(n).connected())?;
        println!(
            "n={n}: {all:>6} graphs, {connected:>6} connected  ({:?})",
            t.elapsed()
        );
    }

    let ten = census.enumerate(&CensusQuery::all(7).edges(17).connected())?;
    println!("connected, 7 vertices, 17 edges: {}", ten.len());
    for g in &ten {
        println!("  {}  triangles {}", encode_graph6(g)?, g.triangle_count());
    }
    println!(
        "with 20 triangles: {}",
        count_with_filter(7, Some(17), Some(20), true)?
    );
    Ok(())
}
