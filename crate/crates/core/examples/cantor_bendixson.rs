//! Cantor-Bendixson ranks of the stripes tilings: which members are isolated,
//! by which pattern, and the rank table after repeated derivatives.
//!
//! ```text
//! cargo run --release --example cantor_bendixson -- [WINDOW] [MAX_I]
//! ```

use tilings::cb::{derivative, isolating_pattern, ranks};
use tilings::order::TilingFamily;
use tilings::stripes;

fn main() -> tilings::Result<()> {
    let mut args = std::env::args().skip(1);
    let window: usize = args.next().map_or(6, |s| s.parse().expect("WINDOW"));
    let max_i: usize = args.next().map_or(6, |s| s.parse().expect("MAX_I"));

    let ts = stripes::tileset();
    let a = ts.alphabet();
    let f = TilingFamily::new(&ts, stripes::family(max_i), window)?;

    println!("isolating patterns at window {window}:");
    for i in 0..f.len() {
        if let Some(p) = isolating_pattern(&f, i, window) {
            println!("  {:<16} {}", f.name(i), p.render(a));
        }
    }
    let d = derivative(&f);
    println!("first derivative keeps {} of {} members", d.len(), f.len());

    let r = ranks(&f);
    for (name, rank) in &r.ranks {
        match rank {
            Some(k) => println!("  {name:<16} rank {k}"),
            None => println!("  {name:<16} unranked"),
        }
    }
    println!("family rank {}, residue [{}]", r.family_rank, r.residue.join(", "));
    Ok(())
}
