//! Reading cells, windows and occurrence counts off grid presentations, and
//! telling tilings apart by type and period lattice.

use tilings::io::load_presentation;
use tilings::presentation::{equal, TilingType};
use tilings::stripes;
use tilings::tiles::{Pattern, Vec2};

fn main() -> tilings::Result<()> {
    let ts = stripes::tileset();
    let a = ts.alphabet();
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");

    let g = load_presentation(format!("{dir}/a2.pres"), a)?;
    println!("a2 around the origin:");
    for y in (-2..=4).rev() {
        let row: String = (-3..=3).map(|x| a.token(g.cell_at(Vec2::new(x, y)))).collect();
        println!("  {row}");
    }
    println!("3x3 window at (-1,-1): {}", g.window_at(Vec2::new(-1, -1), 3)?.render(a));

    let s = |t: &str| a.state(t).unwrap();
    for (label, p) in [
        ("R", Pattern::from_rows(&[vec![s("R")]])?),
        ("RW", Pattern::from_rows(&[vec![s("R"), s("W")]])?),
        ("RG/RW", Pattern::from_rows(&[vec![s("R"), s("G")], vec![s("R"), s("W")]])?),
        ("GB", Pattern::from_rows(&[vec![s("G"), s("B")]])?),
    ] {
        println!("occurrences of {label}: {:?}", g.occurrences(&p));
    }

    for (name, g) in stripes::family(2) {
        let kind = match g.type_of() {
            TilingType::TypeA => "a".to_string(),
            TilingType::TypeB(p) => format!("b, unique {}", p.render(a)),
        };
        let l = g.period_lattice();
        println!("{name:<16} valid {:<5} type {kind:<24} periods {:?}", g.is_valid(&ts)?, l.generators());
    }

    let bad = load_presentation(format!("{dir}/invalid/white_over_green.pres"), a)?;
    println!("white over green valid: {}", bad.is_valid(&ts)?);
    let b1 = stripes::b(1);
    println!("b1 shifted by (5,0) equals b1: {}", equal(&b1, &b1.shift(Vec2::new(5, 0)))?);
    println!("b1 shifted by (0,1) equals b1: {}", equal(&b1, &b1.shift(Vec2::new(0, 1)))?);
    Ok(())
}
