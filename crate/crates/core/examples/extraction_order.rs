//! The extraction order on the stripes tilings: equivalence classes, covering
//! edges, minimal and maximal classes, levels, and a Graphviz drawing.
//!
//! ```text
//! cargo run --release --example extraction_order -- [WINDOW] [MAX_I] [DOT_FILE]
//! ```

use tilings::order::{hasse, preceq_report, TilingFamily};
use tilings::stripes;

fn main() -> tilings::Result<()> {
    let mut args = std::env::args().skip(1);
    let window: usize = args.next().map_or(6, |s| s.parse().expect("WINDOW"));
    let max_i: usize = args.next().map_or(6, |s| s.parse().expect("MAX_I"));
    let dot = args.next();

    let ts = stripes::tileset();
    let f = TilingFamily::new(&ts, stripes::family(max_i), window)?;
    let h = hasse(&f);

    println!("{} members, {} classes at window {window}", f.len(), h.class_count());
    for c in 0..h.class_count() {
        let above: Vec<&str> = h.edges().iter().filter(|e| e.0 == c).map(|e| h.label(e.1)).collect();
        println!(
            "  level {}  {:<18} covered by {}",
            h.level(c),
            h.members(c).join(" = "),
            if above.is_empty() { "-".to_string() } else { above.join(", ") }
        );
    }
    let names = |cs: Vec<usize>| cs.into_iter().map(|c| h.label(c)).collect::<Vec<_>>().join(", ");
    println!("minimal: {}", names(h.minimal()));
    println!("maximal: {}", names(h.maximal()));
    println!("longest chain: {} classes", h.height());

    // Pairs whose answer would change one window size up.
    let mut unstable = Vec::new();
    for i in 0..f.len() {
        for j in 0..f.len() {
            let (_, stable) = preceq_report(f.member(i), f.member(j), window)?;
            if !stable {
                unstable.push(format!("{} <= {}", f.name(i), f.name(j)));
            }
        }
    }
    if unstable.is_empty() {
        println!("every comparison is already stable at window {window}");
    } else {
        println!("not yet stable at window {window}: {}", unstable.join("; "));
    }

    if let Some(path) = dot {
        std::fs::write(&path, h.to_dot())?;
        println!("wrote {path}");
    }
    Ok(())
}
