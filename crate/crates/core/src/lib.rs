//! Two-dimensional tilings given by local rules.
//!
//! - [`tiles`]: alphabets, patterns, tile-sets, torus tilings
//! - [`lang`]: admissible and extensible squares, transfer graphs, torus counts
//! - [`solver`]: periodic search, refutation, weakly periodic witnesses
//! - [`presentation`]: grid presentations of infinite configurations
//! - [`order`]: the extraction preorder and its Hasse diagram
//! - [`cb`]: isolated members and Cantor-Bendixson ranks
//! - [`io`]: text formats
//! - [`stripes`]: a worked example tile-set and its tilings

mod csp;
pub mod cb;
pub mod error;
pub mod io;
pub mod lang;
pub mod order;
pub mod presentation;
pub mod solver;
pub mod stripes;
pub mod tiles;

pub use error::{Error, Result};
