//! Torus tilings up to translation, emptiness proofs, and classification
//! within a budget, for the bundled tile-sets and one that tiles nothing.

use tilings::io::{load_tileset, parse_tileset};
use tilings::solver::{classify, enumerate_torus, refute, ClassifyOutcome};
use tilings::tiles::TileSet;

fn describe(name: &str, ts: &TileSet) -> tilings::Result<()> {
    let a = ts.alphabet();
    let tori = enumerate_torus(ts, 3, 3)?;
    println!("{name}: {} torus classes up to 3x3", tori.len());
    for t in &tori {
        println!("  {}x{}  {}", t.p(), t.q(), t.render(a));
    }
    match classify(ts, 4)? {
        ClassifyOutcome::Empty(n) => println!("  tiles nothing: no admissible {n}x{n} square"),
        ClassifyOutcome::PeriodicFound(t) => println!("  periodic, first found {}x{} {}", t.p(), t.q(), t.render(a)),
        ClassifyOutcome::Unknown(n) => println!("  undecided within budget {n}"),
    }
    Ok(())
}

fn main() -> tilings::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples");
    describe("stripes", &load_tileset(format!("{dir}/stripes.tiles"))?)?;
    describe("checkerboard", &load_tileset(format!("{dir}/checkerboard.tiles"))?)?;

    // a must sit left of b and b left of a, but a row can only hold a then b.
    let stuck = parse_tileset("alphabet a b\nhpair a b\nvpair a a\nvpair a b\nvpair b a\nvpair b b\n")?;
    println!("one-way row: refuted at n=3: {}", refute(&stuck, 3)?);
    describe("one-way row", &stuck)?;
    Ok(())
}
