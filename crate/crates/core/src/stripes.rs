//! The four-color stripes tile-set and its family of tilings.
//!
//! States are red, green, white and black (`R G W B`). Red only sits to the
//! left of red, and a red column is red all the way, so red fills a left
//! half-plane when present. Every other horizontal neighbor repeats its color,
//! and columns read green above white above black from top to bottom. The
//! tilings up to shift are:
//!
//! | name              | picture                                         |
//! |-------------------|-------------------------------------------------|
//! | `all_X`           | monochrome                                      |
//! | `red_X`           | red left half-plane, `X` on the right           |
//! | `green_white`     | green above, white below                        |
//! | `white_black`     | white above, black below                        |
//! | `red_green_white` | red left, green over white on the right         |
//! | `red_white_black` | red left, white over black on the right         |
//! | `b<i>`            | green over a white stripe of height `i` over black |
//! | `a<i>`            | red left, `b<i>` on the right                   |

use crate::presentation::{Block, GridPresentation};
use crate::tiles::{Alphabet, State, TileSet};

pub const STATES: [&str; 4] = ["R", "G", "W", "B"];

pub fn alphabet() -> Alphabet {
    Alphabet::new(STATES).expect("fixed alphabet")
}

pub fn tileset() -> TileSet {
    TileSet::dominoes(
        alphabet(),
        &[
            ("R", "R"),
            ("R", "W"),
            ("R", "G"),
            ("R", "B"),
            ("W", "W"),
            ("G", "G"),
            ("B", "B"),
        ],
        &[
            ("R", "R"),
            ("G", "G"),
            ("G", "W"),
            ("W", "W"),
            ("W", "B"),
            ("B", "B"),
        ],
    )
    .expect("fixed tile-set")
}

fn s(t: &str) -> State {
    alphabet().state(t).expect("known state")
}

fn c(t: &str) -> Block {
    Block::constant(s(t))
}

fn grid(xcuts: Vec<i64>, ycuts: Vec<i64>, regions: Vec<Vec<Block>>) -> GridPresentation {
    GridPresentation::new(alphabet(), xcuts, ycuts, regions).expect("well-formed presentation")
}

/// Column contents from bottom to top; `cuts` separate consecutive colors.
fn column(cuts: &[i64], colors: &[&str]) -> Vec<Block> {
    debug_assert_eq!(cuts.len() + 1, colors.len());
    colors.iter().map(|t| c(t)).collect()
}

pub fn monochrome(t: &str) -> GridPresentation {
    grid(vec![], vec![], vec![vec![c(t)]])
}

/// Red on `x < 0`, the columns `colors` (bottom to top, separated at
/// `ycuts`) on `x >= 0`. Without red, just the right part.
fn banded(red: bool, ycuts: Vec<i64>, colors: &[&str]) -> GridPresentation {
    let right = column(&ycuts, colors);
    if red {
        let left = vec![c("R"); ycuts.len() + 1];
        grid(vec![0], ycuts, vec![left, right])
    } else {
        grid(vec![], ycuts, vec![right])
    }
}

pub fn b(i: usize) -> GridPresentation {
    banded(false, vec![0, i as i64], &["B", "W", "G"])
}

pub fn a(i: usize) -> GridPresentation {
    banded(true, vec![0, i as i64], &["B", "W", "G"])
}

/// The named tilings, with `b<i>` and `a<i>` for `1 <= i <= max_i`.
pub fn family(max_i: usize) -> Vec<(String, GridPresentation)> {
    let mut out: Vec<(String, GridPresentation)> = vec![
        ("all_red".into(), monochrome("R")),
        ("all_green".into(), monochrome("G")),
        ("all_white".into(), monochrome("W")),
        ("all_black".into(), monochrome("B")),
        ("red_green".into(), banded(true, vec![], &["G"])),
        ("red_white".into(), banded(true, vec![], &["W"])),
        ("red_black".into(), banded(true, vec![], &["B"])),
        ("green_white".into(), banded(false, vec![0], &["W", "G"])),
        ("white_black".into(), banded(false, vec![0], &["B", "W"])),
        ("red_green_white".into(), banded(true, vec![0], &["W", "G"])),
        ("red_white_black".into(), banded(true, vec![0], &["B", "W"])),
    ];
    for i in 1..=max_i {
        out.push((format!("b{i}"), b(i)));
    }
    for i in 1..=max_i {
        out.push((format!("a{i}"), a(i)));
    }
    out
}

/// White directly above green: not a tiling of [`tileset`].
pub fn white_over_green() -> GridPresentation {
    banded(false, vec![0], &["G", "W"])
}
