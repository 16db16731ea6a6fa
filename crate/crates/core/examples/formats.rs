//! Reads the stripes tile-set from its text file, writes every named stripes
//! tiling as a presentation file, and reads them back.
//!
//! ```text
//! cargo run --example formats -- [OUT_DIR] [MAX_I]
//! ```
//!
//! With no arguments it prints the files instead of writing them.

use std::path::PathBuf;

use tilings::io::{emit_presentation, emit_tileset, load_family_dir, load_tileset};
use tilings::stripes;

fn main() -> tilings::Result<()> {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let ts = load_tileset(manifest.join("examples/stripes.tiles"))?;
    assert_eq!(ts, stripes::tileset());
    println!("stripes.tiles, normalized:\n{}", emit_tileset(&ts));

    let mut args = std::env::args().skip(1);
    let out = args.next().map(PathBuf::from);
    let max_i = args.next().map_or(6, |s| s.parse().expect("MAX_I must be a number"));
    let mut family = stripes::family(max_i);
    family.push(("white_over_green".into(), stripes::white_over_green()));

    match out {
        None => {
            for (name, g) in &family {
                println!("== {name}.pres\n{}", emit_presentation(g));
            }
        }
        Some(dir) => {
            std::fs::create_dir_all(&dir)?;
            for (name, g) in &family {
                std::fs::write(dir.join(format!("{name}.pres")), emit_presentation(g))?;
            }
            let back = load_family_dir(&dir, ts.alphabet())?;
            for (name, g) in &back {
                let orig = &family.iter().find(|(n, _)| n == name).expect("written above").1;
                assert_eq!(g, orig, "{name} changed on the way through the file");
            }
            println!("wrote {} presentations to {}", back.len(), dir.display());
        }
    }
    Ok(())
}
