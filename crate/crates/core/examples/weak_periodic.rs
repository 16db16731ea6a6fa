//! A tiling with exactly one direction of periodicity, assembled from two
//! cycles of the column graph and a path between them.
//!
//! ```text
//! cargo run --example weak_periodic -- [TILES_FILE] [MAX_HEIGHT]
//! ```

use tilings::io::{emit_presentation, load_tileset};
use tilings::solver::find_weak_witness;
use tilings::tiles::Vec2;

fn main() -> tilings::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/stripes.tiles").into());
    let max_q: usize = args.next().map_or(3, |s| s.parse().expect("MAX_HEIGHT"));
    let ts = load_tileset(&path)?;
    let a = ts.alphabet();

    let Some(w) = find_weak_witness(&ts, max_q)? else {
        println!("no witness with columns of height at most {max_q}");
        return Ok(());
    };
    let col = |c: &Vec<u16>| c.iter().map(|&s| a.token(s)).collect::<Vec<_>>().join("");
    let cyc = |cs: &[Vec<u16>]| cs.iter().map(col).collect::<Vec<_>>().join(" ");
    println!("height {}, transposed: {}", w.height, w.transposed);
    println!("left cycle:  {}", cyc(&w.left_cycle));
    println!("bridge:      {}", cyc(&w.bridge));
    println!("right cycle: {}", cyc(&w.right_cycle));

    let g = &w.presentation;
    println!("valid: {}", g.is_valid(&ts)?);
    println!("periods generated by {:?}", g.period_lattice().generators());
    println!("\n{}", emit_presentation(g));
    for y in (-2..=2).rev() {
        let row: String = (-4..=4).map(|x| a.token(g.cell_at(Vec2::new(x, y)))).collect();
        println!("  {row}");
    }
    Ok(())
}
