//! Square patterns of a tile-set: which ones are locally admissible, which
//! extend outward, and how many torus tilings the transfer graph counts.
//!
//! ```text
//! cargo run --example pattern_language -- [TILES_FILE]
//! ```

use tilings::io::load_tileset;
use tilings::lang::{admissible_squares, build_transfer_graph, count_admissible, count_torus, extensible_squares};

fn main() -> tilings::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/stripes.tiles").into());
    let ts = load_tileset(&path)?;
    let a = ts.alphabet();
    println!("{path}: {} states, {} shapes", a.len(), ts.shapes().len());

    for n in 1..=4 {
        let ext: Vec<usize> = (0..=2).map(|m| extensible_squares(&ts, n, m).map(|s| s.len())).collect::<Result<_, _>>()?;
        println!("n={n}: {} admissible, extensible by margin 0/1/2: {ext:?}", count_admissible(&ts, n)?);
    }
    let two: Vec<String> = admissible_squares(&ts, 2)?.iter().map(|p| p.render(a)).collect();
    println!("2x2 squares: {}", two.join("  "));

    for q in 1..=3 {
        let g = build_transfer_graph(&ts, q, true)?;
        println!("columns of height {q}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    }
    println!("torus tilings (rows p, columns q):");
    for p in 1..=4 {
        let row: Vec<String> = (1..=4).map(|q| count_torus(&ts, p, q).map(|c| c.to_string())).collect::<Result<_, _>>()?;
        println!("  p={p}: {}", row.join(" "));
    }
    Ok(())
}
