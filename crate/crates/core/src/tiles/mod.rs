//! Alphabets, plane vectors, patterns, tile-sets and torus tilings.

mod alphabet;
mod pattern;
mod tileset;
mod torus;

pub use alphabet::{Alphabet, State};
pub use pattern::{appears_in, Pattern, Vec2};
pub use tileset::{Mode, Shape, TileSet, TileSetBuilder};
pub use torus::TorusTiling;
